#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "reslab/json_io.hpp"
#include "reslab/rootsys.hpp"

using namespace reslab;
using namespace reslab::rootsys;

namespace {

RationalVector rv(std::vector<Rational> xs) { return RationalVector(std::move(xs)); }

RationalVector unit8(int i, int sign = 1) {
  RationalVector v(8);
  v[i] = Rational(sign);
  return v;
}

std::set<RationalVector> as_set(const std::vector<RationalVector>& vs) {
  return {vs.begin(), vs.end()};
}

// The F4 complement at j0 = 4: -e1 +/- e_i, -e1, (-e1 +/- e2 +/- e3 +/- e4)/2.
std::set<RationalVector> f4_j4_complement() {
  const Rational h(1, 2);
  std::set<RationalVector> s;
  s.insert(rv({-1, 0, 0, 0}));
  for (int i = 1; i < 4; ++i)
    for (int sg : {1, -1}) {
      RationalVector v(4);
      v[0] = Rational(-1);
      v[i] = Rational(sg);
      s.insert(v);
    }
  for (int s2 : {1, -1})
    for (int s3 : {1, -1})
      for (int s4 : {1, -1})
        s.insert(rv({-h, Rational(s2) * h, Rational(s3) * h, Rational(s4) * h}));
  return s;
}

// The F4 complement at j0 = 1: -e1, -e2, -e1-e2, -e1 +/- e3, -e1 +/- e4,
// -e2 +/- e3, -e2 +/- e4, (-e1-e2 +/- e3 +/- e4)/2.
std::set<RationalVector> f4_j1_complement() {
  const Rational h(1, 2);
  std::set<RationalVector> s;
  s.insert(rv({-1, 0, 0, 0}));
  s.insert(rv({0, -1, 0, 0}));
  s.insert(rv({-1, -1, 0, 0}));
  for (int fixed : {0, 1})
    for (int i : {2, 3})
      for (int sg : {1, -1}) {
        RationalVector v(4);
        v[fixed] = Rational(-1);
        v[i] = Rational(sg);
        s.insert(v);
      }
  for (int s3 : {1, -1})
    for (int s4 : {1, -1})
      s.insert(rv({-h, -h, Rational(s3) * h, Rational(s4) * h}));
  return s;
}

// The E8 complement at j0 = 1: (-e8-e7 + sum (-1)^{n_i} e_i)/2 with an even
// number of minus signs, -e8-e7, -e8 +/- e_i, -e7 +/- e_i for i <= 6.
std::set<RationalVector> e8_j1_complement() {
  const Rational h(1, 2);
  std::set<RationalVector> s;
  s.insert(unit8(7, -1) + unit8(6, -1));
  for (int i = 0; i < 6; ++i)
    for (int sg : {1, -1}) {
      s.insert(unit8(7, -1) + unit8(i, sg));
      s.insert(unit8(6, -1) + unit8(i, sg));
    }
  for (int mask = 0; mask < 64; ++mask) {
    if (__builtin_popcount(mask) % 2 != 0) continue;
    RationalVector v(8);
    v[7] = -h;
    v[6] = -h;
    for (int i = 0; i < 6; ++i) v[i] = (mask >> i) & 1 ? -h : h;
    s.insert(v);
  }
  return s;
}

// The E7 complement at j0 = 1: (-e8+e7-e6 + sum_{i<=5} (-1)^{n_i} e_i)/2 with
// an even number of minus signs, -e8+e7, -e6 +/- e_i for i <= 5.
std::set<RationalVector> e7_j1_complement() {
  const Rational h(1, 2);
  std::set<RationalVector> s;
  s.insert(unit8(7, -1) + unit8(6, 1));
  for (int i = 0; i < 5; ++i)
    for (int sg : {1, -1}) s.insert(unit8(5, -1) + unit8(i, sg));
  for (int mask = 0; mask < 32; ++mask) {
    if (__builtin_popcount(mask) % 2 != 0) continue;
    RationalVector v(8);
    v[7] = -h;
    v[6] = h;
    v[5] = -h;
    for (int i = 0; i < 5; ++i) v[i] = (mask >> i) & 1 ? -h : h;
    s.insert(v);
  }
  return s;
}

}  // namespace

TEST_CASE("type validation and parsing") {
  CHECK_THROWS_AS((RootSystemType{Family::E, 5}).validate(), InvalidTypeError);
  CHECK_THROWS_AS((RootSystemType{Family::F, 3}).validate(), InvalidTypeError);
  CHECK_THROWS_AS((RootSystemType{Family::G, 3}).validate(), InvalidTypeError);
  CHECK_THROWS_AS((RootSystemType{Family::D, 1}).validate(), InvalidTypeError);
  CHECK_THROWS_AS(parse_type("Z9"), InvalidTypeError);
  CHECK_THROWS_AS(parse_type("E"), InvalidTypeError);
  CHECK(parse_type("BC3") == (RootSystemType{Family::BC, 3}));
  CHECK(parse_type("F4") == (RootSystemType{Family::F, 4}));
  CHECK(parse_type("G2").label() == "G2");
  CHECK((RootSystemType{Family::BC, 5}).reduced() == (RootSystemType{Family::B, 5}));
}

TEST_CASE("root counts match the classification") {
  CHECK(build({Family::G, 2}).roots.size() == 12);
  CHECK(build({Family::F, 4}).roots.size() == 48);
  CHECK(build({Family::E, 6}).roots.size() == 72);
  CHECK(build({Family::E, 7}).roots.size() == 126);
  CHECK(build({Family::E, 8}).roots.size() == 240);
  for (int l = 2; l <= 8; ++l) {
    const std::size_t ll = l;
    CHECK(build({Family::A, l}).roots.size() == ll * ll + ll);
    CHECK(build({Family::B, l}).roots.size() == 2 * ll * ll);
    CHECK(build({Family::C, l}).roots.size() == 2 * ll * ll);
    CHECK(build({Family::BC, l}).roots.size() == 2 * ll * ll + 2 * ll);
    CHECK(build({Family::D, l}).roots.size() == 2 * ll * ll - 2 * ll);
  }
}

TEST_CASE("F4 splits into 24 long and 24 short roots") {
  auto rs = build({Family::F, 4});
  int short_roots = 0, long_roots = 0;
  for (const auto& r : rs.roots) {
    auto norm2 = r.dot(r);
    if (norm2 == Rational(1)) ++short_roots;
    else if (norm2 == Rational(2)) ++long_roots;
  }
  CHECK(short_roots == 24);
  CHECK(long_roots == 24);
}

TEST_CASE("built systems close under negation with sign-coherent expansions") {
  for (auto t : std::vector<RootSystemType>{{Family::A, 3},
                                            {Family::B, 4},
                                            {Family::C, 3},
                                            {Family::BC, 2},
                                            {Family::D, 4},
                                            {Family::G, 2},
                                            {Family::F, 4},
                                            {Family::E, 6},
                                            {Family::E, 7},
                                            {Family::E, 8}}) {
    auto rs = build(t);
    auto set = as_set(rs.roots);
    CHECK(set.size() == rs.roots.size());
    std::size_t positives = 0;
    for (std::size_t i = 0; i < rs.roots.size(); ++i) {
      CHECK(set.count(-rs.roots[i]) == 1);
      if (rs.is_positive(i)) ++positives;
    }
    CHECK(positives * 2 == rs.roots.size());
    CHECK(positive_roots(rs).size() == positives);
  }
}

TEST_CASE("positive root counts: A2, F4, E7") {
  CHECK(positive_roots(build({Family::A, 2})).size() == 3);
  CHECK(positive_roots(build({Family::F, 4})).size() == 24);
  CHECK(positive_roots(build({Family::E, 7})).size() == 63);
}

TEST_CASE("simple systems follow the fixed coordinate conventions") {
  auto f4 = build({Family::F, 4});
  CHECK(f4.simple[0] == rv({0, 1, -1, 0}));
  CHECK(f4.simple[1] == rv({0, 0, 1, -1}));
  CHECK(f4.simple[2] == rv({0, 0, 0, 1}));
  CHECK(f4.simple[3] ==
        rv({Rational(1, 2), Rational(-1, 2), Rational(-1, 2), Rational(-1, 2)}));

  auto e8 = build({Family::E, 8});
  CHECK(e8.simple[0] == unit8(6) - unit8(5));  // alpha_1 = e7 - e6
  CHECK(e8.simple[6] == unit8(1) + unit8(0));  // alpha_7 = e2 + e1
  RationalVector a8(8);
  a8[7] = Rational(1, 2);
  for (int i = 1; i <= 6; ++i) a8[i] = Rational(-1, 2);
  a8[0] = Rational(1, 2);
  CHECK(e8.simple[7] == a8);

  auto e7 = build({Family::E, 7});
  CHECK(e7.simple[0] == unit8(5) - unit8(4));  // alpha_1 = e6 - e5
  for (const auto& root : e7.roots)            // all roots orthogonal to e8 + e7
    CHECK(root.dot(unit8(7) + unit8(6)).is_zero());
}

TEST_CASE("golden complements: F4 j0=4 and j0=1") {
  auto rs = build({Family::F, 4});
  auto pc4 = parabolic_complement(rs, 4);
  CHECK(pc4.codim() == 15);
  CHECK(as_set(pc4.complement) == f4_j4_complement());
  auto pc1 = parabolic_complement(rs, 1);
  CHECK(pc1.codim() == 15);
  CHECK(as_set(pc1.complement) == f4_j1_complement());
}

TEST_CASE("golden complements: E8 j0=1 and E7 j0=1") {
  auto e8 = parabolic_complement(build({Family::E, 8}), 1);
  CHECK(e8.codim() == 57);
  CHECK(as_set(e8.complement) == e8_j1_complement());

  auto e7 = parabolic_complement(build({Family::E, 7}), 1);
  CHECK(e7.codim() == 27);
  CHECK(as_set(e7.complement) == e7_j1_complement());
}

TEST_CASE("complement members are negative roots; j0 bounds enforced") {
  auto rs = build({Family::E, 7});
  auto pos = as_set(positive_roots(rs));
  for (int j0 = 1; j0 <= 7; ++j0) {
    auto pc = parabolic_complement(rs, j0);
    for (const auto& root : pc.complement) CHECK(pos.count(root) == 0);
  }
  CHECK_THROWS_AS(parabolic_complement(rs, 0), IndexOutOfRangeError);
  CHECK_THROWS_AS(parabolic_complement(rs, 8), IndexOutOfRangeError);
}

TEST_CASE("codimension sum: each negative root counted once per carried node") {
  for (auto t : std::vector<RootSystemType>{{Family::F, 4}, {Family::B, 3},
                                            {Family::G, 2}, {Family::E, 6}}) {
    auto rs = build(t);
    std::size_t sum = 0;
    for (int j0 = 1; j0 <= t.rank; ++j0) sum += parabolic_complement(rs, j0).codim();
    std::size_t expected = 0;
    for (std::size_t i = 0; i < rs.roots.size(); ++i) {
      if (rs.is_positive(i)) continue;
      for (const auto& c : rs.simple_coords[i])
        if (!c.is_zero()) ++expected;
    }
    CHECK(sum == expected);
  }
}

TEST_CASE("minimal resonant codimension table") {
  for (int l = 2; l <= 8; ++l) {
    const std::size_t ll = l;
    CHECK(minimal_resonant_codim({Family::A, l}) == ll);
    CHECK(minimal_resonant_codim({Family::B, l}) == 2 * ll - 1);
    CHECK(minimal_resonant_codim({Family::C, l}) == 2 * ll - 1);
    CHECK(minimal_resonant_codim({Family::BC, l}) == 2 * ll - 1);
    // 2l-2 holds for the classified simple types D_l, l >= 4; the low-rank
    // aliases D2 = A1 x A1 and D3 = A3 have smaller parabolic minima
    if (l >= 4) CHECK(minimal_resonant_codim({Family::D, l}) == 2 * ll - 2);
  }
  CHECK(minimal_resonant_codim({Family::D, 2}) == 1);
  CHECK(minimal_resonant_codim({Family::D, 3}) == 3);
  CHECK(minimal_resonant_codim({Family::D, 3}) == minimal_resonant_codim({Family::A, 3}));
  CHECK(minimal_resonant_codim({Family::E, 6}) == 16);
  CHECK(minimal_resonant_codim({Family::E, 7}) == 27);
  CHECK(minimal_resonant_codim({Family::E, 8}) == 57);
  CHECK(minimal_resonant_codim({Family::F, 4}) == 15);
  CHECK(minimal_resonant_codim({Family::G, 2}) == 5);
}

TEST_CASE("minimal codim agrees with brute force over all j0") {
  for (auto t : std::vector<RootSystemType>{{Family::A, 5}, {Family::B, 6},
                                            {Family::C, 4}, {Family::D, 7},
                                            {Family::F, 4}, {Family::E, 8}}) {
    auto rs = build(t.reduced());
    std::size_t best = rs.roots.size();
    for (int j0 = 1; j0 <= t.rank; ++j0)
      best = std::min(best, parabolic_complement(rs, j0).codim());
    CHECK(minimal_resonant_codim(t) == best);
  }
}

TEST_CASE("minimizing j0 sets for the exceptional types") {
  CHECK(minimizing_j0({Family::F, 4}) == std::vector<int>{1, 4});
  CHECK(minimizing_j0({Family::E, 8}) == std::vector<int>{1});
  CHECK(minimizing_j0({Family::E, 7}) == std::vector<int>{1});
  CHECK(minimizing_j0({Family::G, 2}) == std::vector<int>{1, 2});
}

TEST_CASE("JSON round-trip is bit-exact") {
  for (auto t : std::vector<RootSystemType>{{Family::F, 4}, {Family::BC, 3},
                                            {Family::E, 7}}) {
    auto rs = build(t);
    auto doc = jsonio::encode(rs);
    const std::string once = doc.dump();
    auto back = jsonio::decode_root_system(doc);
    CHECK(jsonio::encode(back).dump() == once);
  }
  auto doc = jsonio::encode(build({Family::G, 2}));
  doc["roots"][0][0][0] = 7;  // corrupt one numerator
  CHECK_THROWS(jsonio::decode_root_system(doc));
}
