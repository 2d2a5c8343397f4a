#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdint>

#include "reslab/exactlin.hpp"

using namespace reslab;
using namespace reslab::exactlin;

namespace {

RationalVector rv(std::vector<long long> xs) {
  std::vector<Rational> e;
  for (long long x : xs) e.emplace_back(x);
  return RationalVector(std::move(e));
}

// The 15 functionals of the F4 rank-minimizing complement at the short node,
// after the configuration scaling: -e1, -e1 +/- e_i, -e1 +/- e2 +/- e3 +/- e4.
std::vector<RationalVector> f4_functionals() {
  std::vector<RationalVector> f;
  f.push_back(rv({-1, 0, 0, 0}));
  for (std::size_t i = 1; i < 4; ++i)
    for (int s : {1, -1}) {
      auto v = rv({-1, 0, 0, 0});
      v[i] = Rational(s);
      f.push_back(v);
    }
  for (int s2 : {1, -1})
    for (int s3 : {1, -1})
      for (int s4 : {1, -1}) f.push_back(rv({-1, s2, s3, s4}));
  return f;
}

// Brute-force oracle: rank = largest k with a non-vanishing k x k minor,
// determinants by cofactor expansion.
Rational det_cofactor(const RationalMatrix& m) {
  if (m.rows == 1) return m.at(0, 0);
  Rational acc(0);
  int sign = 1;
  for (std::size_t c = 0; c < m.cols; ++c) {
    RationalMatrix sub(m.rows - 1, m.cols - 1);
    for (std::size_t i = 1; i < m.rows; ++i) {
      std::size_t cc = 0;
      for (std::size_t j = 0; j < m.cols; ++j) {
        if (j == c) continue;
        sub.at(i - 1, cc++) = m.at(i, j);
      }
    }
    acc += Rational(sign) * m.at(0, c) * det_cofactor(sub);
    sign = -sign;
  }
  return acc;
}

bool has_nonzero_minor(const RationalMatrix& m, std::size_t k, std::size_t row_from,
                       std::vector<std::size_t>& rows) {
  if (rows.size() == k) {
    std::vector<std::size_t> cols;
    std::function<bool(std::size_t)> pick_cols = [&](std::size_t col_from) {
      if (cols.size() == k) {
        RationalMatrix sub(k, k);
        for (std::size_t i = 0; i < k; ++i)
          for (std::size_t j = 0; j < k; ++j) sub.at(i, j) = m.at(rows[i], cols[j]);
        return !det_cofactor(sub).is_zero();
      }
      for (std::size_t c = col_from; c < m.cols; ++c) {
        cols.push_back(c);
        if (pick_cols(c + 1)) return true;
        cols.pop_back();
      }
      return false;
    };
    return pick_cols(0);
  }
  for (std::size_t r = row_from; r < m.rows; ++r) {
    rows.push_back(r);
    if (has_nonzero_minor(m, k, r + 1, rows)) return true;
    rows.pop_back();
  }
  return false;
}

std::size_t rank_oracle(const RationalMatrix& m) {
  for (std::size_t k = std::min(m.rows, m.cols); k >= 1; --k) {
    std::vector<std::size_t> rows;
    if (has_nonzero_minor(m, k, 0, rows)) return k;
  }
  return 0;
}

std::uint64_t splitmix(std::uint64_t& s) {
  std::uint64_t z = (s += 0x9E3779B97F4A7C15ULL);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

}  // namespace

TEST_CASE("rational arithmetic stays canonical") {
  Rational a(2, 4);
  CHECK(a.num() == 1);
  CHECK(a.den() == 2);
  CHECK(Rational(-3, -6) == Rational(1, 2));
  CHECK(Rational(3, -6) == Rational(-1, 2));
  CHECK((Rational(1, 3) + Rational(1, 6)) == Rational(1, 2));
  CHECK((Rational(1, 2) * Rational(2, 3)) == Rational(1, 3));
  CHECK((Rational(1, 2) - Rational(1, 2)).is_zero());
  CHECK(Rational(7, 2).str() == "7/2");
  CHECK(Rational(-4).str() == "-4");
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
  CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
}

TEST_CASE("rank: identity and dependent rows") {
  RationalMatrix id(3, 3);
  for (int i = 0; i < 3; ++i) id.at(i, i) = Rational(1);
  CHECK(rank(id) == 3);

  // third row is the average of the first two
  auto m = RationalMatrix::from_rows({rv({-1, 1}), rv({-1, -1}), rv({-1, 0})});
  CHECK(rank(m) == 2);
}

TEST_CASE("rank: F4 complement functionals span exactly 4 dimensions") {
  auto m = RationalMatrix::from_rows(f4_functionals());
  CHECK(rank(m) == 4);
  CHECK(rank_oracle(m) == 4);
}

TEST_CASE("rank equals rank of the transpose and matches the minor oracle") {
  std::uint64_t s = 20240817;
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t rows = 1 + splitmix(s) % 6;
    const std::size_t cols = 1 + splitmix(s) % 6;
    RationalMatrix m(rows, cols);
    for (auto& x : m.a) x = Rational(static_cast<long long>(splitmix(s) % 11) - 5);
    const std::size_t r = rank(m);
    CHECK(r == rank(m.transpose()));
    CHECK(r == rank_oracle(m));
  }
}

TEST_CASE("solve_affine_one: scalar, basis, and F4 cases") {
  auto scalar = solve_affine_one({rv({-1})});
  REQUIRE(scalar.has_value());
  CHECK(scalar->x == rv({1}));
  CHECK(scalar->unique);

  auto basis = solve_affine_one({rv({-1, 0}), rv({0, -1})});
  REQUIRE(basis.has_value());
  CHECK(basis->x == rv({1, 1}));
  CHECK(basis->unique);

  auto f4 = solve_affine_one(f4_functionals());
  REQUIRE(f4.has_value());
  CHECK(f4->x == rv({1, 0, 0, 0}));
  CHECK(f4->unique);
}

TEST_CASE("solve_affine_one: inconsistent and underdetermined systems") {
  CHECK_FALSE(solve_affine_one({rv({-1, 0}), rv({1, 0})}).has_value());
  CHECK_FALSE(solve_affine_one({rv({1, 1}), rv({2, 2})}).has_value());

  auto under = solve_affine_one({rv({-1, 0, 0})});
  REQUIRE(under.has_value());
  CHECK_FALSE(under->unique);
  CHECK(under->x.dot(rv({-1, 0, 0})) == Rational(-1));
}

TEST_CASE("solve_affine_one solutions verify by substitution") {
  std::uint64_t s = 99;
  int solved = 0;
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t r = 1 + splitmix(s) % 5;
    const std::size_t d = 1 + splitmix(s) % 5;
    std::vector<RationalVector> funcs;
    for (std::size_t i = 0; i < r; ++i) {
      RationalVector v(d);
      for (std::size_t j = 0; j < d; ++j)
        v[j] = Rational(static_cast<long long>(splitmix(s) % 7) - 3);
      funcs.push_back(v);
    }
    if (auto sol = solve_affine_one(funcs)) {
      ++solved;
      for (const auto& f : funcs) CHECK(f.dot(sol->x) == Rational(-1));
    }
  }
  CHECK(solved > 0);
}

TEST_CASE("in_open_cone2: golden membership cases") {
  // straddling pair around the center ray
  CHECK(in_open_cone2(rv({-1, 0}), rv({-1, 1}), rv({-1, -1})));
  // strict positivity: u collinear with v alone is rejected
  CHECK_FALSE(in_open_cone2(rv({-1, 0}), rv({-1, 0}), rv({-1, 1})));

  // wing pairs in 8 dimensions, center scaled
  auto u = rv({0, 0, 0, 0, 0, 0, -3, -3});  // -3*(e8 + e7)
  auto v = rv({1, 0, 0, 0, 0, 0, 0, -1});   // -e8 + e1
  auto w = rv({-1, 0, 0, 0, 0, 0, -1, 0});  // -e7 - e1
  CHECK(in_open_cone2(u, v, w));
}

TEST_CASE("in_open_cone2: degenerate collinear inputs follow the cone semantics") {
  // w = -v sweeps the whole line through v
  CHECK(in_open_cone2(rv({-2, 0}), rv({1, 0}), rv({-1, 0})));
  // w positively collinear with v: only the common ray is reachable
  CHECK(in_open_cone2(rv({2, 0}), rv({1, 0}), rv({3, 0})));
  CHECK_FALSE(in_open_cone2(rv({-2, 0}), rv({1, 0}), rv({3, 0})));
  // u outside the span
  CHECK_FALSE(in_open_cone2(rv({0, 1}), rv({1, 0}), rv({2, 0})));
  CHECK_THROWS_AS(in_open_cone2(rv({0, 0}), rv({1, 0}), rv({0, 1})), ZeroVectorError);
}

TEST_CASE("in_open_cone2 is symmetric in (v, w) and scale invariant") {
  std::uint64_t s = 4242;
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t d = 2 + splitmix(s) % 3;
    auto gen = [&] {
      RationalVector v(d);
      bool zero = true;
      for (std::size_t j = 0; j < d; ++j) {
        v[j] = Rational(static_cast<long long>(splitmix(s) % 7) - 3);
        zero = zero && v[j].is_zero();
      }
      if (zero) v[0] = Rational(1);
      return v;
    };
    auto u = gen(), v = gen(), w = gen();
    const bool base = in_open_cone2(u, v, w);
    CHECK(base == in_open_cone2(u, w, v));
    Rational su(1 + splitmix(s) % 5), sv(1 + splitmix(s) % 5, 1 + splitmix(s) % 3);
    CHECK(base == in_open_cone2(u.scaled(su), v.scaled(sv), w.scaled(Rational(3))));
  }
}

TEST_CASE("primitive_ray reduces to coprime integers preserving direction") {
  CHECK(primitive_ray(rv({-2, 4, -6})) == rv({-1, 2, -3}));
  auto half = RationalVector{Rational(-1, 2), Rational(-1, 2), Rational(1, 2)};
  CHECK(primitive_ray(half) == rv({-1, -1, 1}));
  CHECK(primitive_ray(rv({0, 5})) == rv({0, 1}));
  CHECK_THROWS(primitive_ray(rv({0, 0})));
}
