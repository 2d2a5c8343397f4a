#include "reslab/exactlin.hpp"

#include <algorithm>
#include <numeric>

namespace reslab {

RationalMatrix RationalMatrix::from_rows(const std::vector<RationalVector>& rs) {
  RationalMatrix m;
  m.rows = rs.size();
  m.cols = rs.empty() ? 0 : rs[0].dim();
  m.a.reserve(m.rows * m.cols);
  for (const auto& r : rs) {
    if (r.dim() != m.cols)
      throw std::invalid_argument("matrix rows must share one dimension");
    for (std::size_t c = 0; c < m.cols; ++c) m.a.push_back(r[c]);
  }
  return m;
}

RationalMatrix RationalMatrix::transpose() const {
  RationalMatrix t(cols, rows);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) t.at(c, r) = at(r, c);
  return t;
}

namespace exactlin {

namespace {

using I128 = __int128;

I128 gcd128(I128 a, I128 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    I128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

// Clears denominators row by row; scaling a row does not change the row
// space nor (for augmented systems) the solution set.
std::vector<std::vector<I128>> integer_rows(const RationalMatrix& m) {
  std::vector<std::vector<I128>> out(m.rows, std::vector<I128>(m.cols));
  for (std::size_t r = 0; r < m.rows; ++r) {
    I128 lcm = 1;
    for (std::size_t c = 0; c < m.cols; ++c) {
      I128 d = m.at(r, c).den();
      lcm = lcm / gcd128(lcm, d) * d;
    }
    for (std::size_t c = 0; c < m.cols; ++c) {
      const Rational& x = m.at(r, c);
      out[r][c] = I128(x.num()) * (lcm / x.den());
    }
  }
  return out;
}

struct Echelon {
  std::vector<std::vector<I128>> m;
  std::vector<std::size_t> pivot_cols;  // one per pivot row, ascending
};

// Fraction-free elimination (Bareiss): after each step entries are minors of
// the (row-scaled) input, so the division by the previous pivot is exact and
// intermediate growth stays polynomially bounded.
// Columns in [0, limit_cols) are eligible as pivots.
Echelon bareiss(std::vector<std::vector<I128>> m, std::size_t limit_cols) {
  Echelon e;
  const std::size_t rows = m.size();
  const std::size_t cols = rows ? m[0].size() : 0;
  std::size_t r = 0;
  I128 prev = 1;
  for (std::size_t c = 0; c < limit_cols && r < rows; ++c) {
    std::size_t piv = rows;
    for (std::size_t i = r; i < rows; ++i)
      if (m[i][c] != 0) {
        piv = i;
        break;
      }
    if (piv == rows) continue;
    std::swap(m[r], m[piv]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t k = c + 1; k < cols; ++k)
        m[i][k] = (m[i][k] * m[r][c] - m[i][c] * m[r][k]) / prev;
      m[i][c] = 0;
    }
    prev = m[r][c];
    e.pivot_cols.push_back(c);
    ++r;
  }
  e.m = std::move(m);
  return e;
}

Rational to_rational(I128 v) {
  constexpr I128 lo = std::numeric_limits<long long>::min();
  constexpr I128 hi = std::numeric_limits<long long>::max();
  if (v < lo || v > hi) throw std::overflow_error("exactlin: 64-bit overflow");
  return Rational(static_cast<long long>(v));
}

// Back-substitution for an augmented echelon system [A | b]; unknowns are
// the columns in [0, n_unknowns), the last column is the right-hand side.
// nullopt when inconsistent.
std::optional<std::vector<Rational>> back_substitute(const Echelon& e,
                                                     std::size_t n_unknowns) {
  const std::size_t rows = e.m.size();
  for (std::size_t i = e.pivot_cols.size(); i < rows; ++i)
    if (e.m[i][n_unknowns] != 0) return std::nullopt;
  std::vector<Rational> x(n_unknowns, Rational(0));
  for (std::size_t t = e.pivot_cols.size(); t-- > 0;) {
    const std::size_t pc = e.pivot_cols[t];
    Rational acc = to_rational(e.m[t][n_unknowns]);
    for (std::size_t k = pc + 1; k < n_unknowns; ++k)
      if (e.m[t][k] != 0) acc -= to_rational(e.m[t][k]) * x[k];
    x[pc] = acc / to_rational(e.m[t][pc]);
  }
  return x;
}

}  // namespace

std::size_t rank(const RationalMatrix& m) {
  if (m.rows == 0 || m.cols == 0) return 0;
  return bareiss(integer_rows(m), m.cols).pivot_cols.size();
}

std::optional<AffineSolution> solve_affine_one(
    const std::vector<RationalVector>& funcs) {
  if (funcs.empty()) throw std::invalid_argument("solve_affine_one: empty system");
  const std::size_t d = funcs[0].dim();
  RationalMatrix aug(funcs.size(), d + 1);
  for (std::size_t i = 0; i < funcs.size(); ++i) {
    if (funcs[i].dim() != d)
      throw std::invalid_argument("solve_affine_one: mixed dimensions");
    for (std::size_t c = 0; c < d; ++c) aug.at(i, c) = funcs[i][c];
    aug.at(i, d) = Rational(-1);
  }
  Echelon e = bareiss(integer_rows(aug), d);
  auto x = back_substitute(e, d);
  if (!x) return std::nullopt;
  return AffineSolution{RationalVector(std::move(*x)), e.pivot_cols.size() == d};
}

std::optional<std::vector<Rational>> solve_in_span(
    const std::vector<RationalVector>& gens, const RationalVector& target) {
  if (gens.empty()) throw std::invalid_argument("solve_in_span: no generators");
  const std::size_t d = target.dim();
  const std::size_t k = gens.size();
  RationalMatrix aug(d, k + 1);
  for (std::size_t g = 0; g < k; ++g) {
    if (gens[g].dim() != d)
      throw std::invalid_argument("solve_in_span: mixed dimensions");
    for (std::size_t r = 0; r < d; ++r) aug.at(r, g) = gens[g][r];
  }
  for (std::size_t r = 0; r < d; ++r) aug.at(r, k) = target[r];
  Echelon e = bareiss(integer_rows(aug), k);
  return back_substitute(e, k);
}

std::optional<Rational> proportionality_ratio(const RationalVector& v,
                                              const RationalVector& w) {
  std::size_t lead = v.dim();
  for (std::size_t i = 0; i < v.dim(); ++i)
    if (!v[i].is_zero()) {
      lead = i;
      break;
    }
  if (lead == v.dim()) return std::nullopt;  // v = 0 spans nothing
  Rational r = w[lead] / v[lead];
  for (std::size_t i = 0; i < v.dim(); ++i)
    if (w[i] != v[i] * r) return std::nullopt;
  return r;
}

bool in_open_cone2(const RationalVector& u, const RationalVector& v,
                   const RationalVector& w) {
  if (u.is_zero() || v.is_zero() || w.is_zero()) throw ZeroVectorError{};
  if (u.dim() != v.dim() || u.dim() != w.dim())
    throw std::invalid_argument("in_open_cone2: mixed dimensions");
  auto k = proportionality_ratio(v, w);
  if (!k) {
    // v, w independent: u = s v + t w has at most one solution.
    auto sol = solve_in_span({v, w}, u);
    if (!sol) return false;
    return (*sol)[0].sign() > 0 && (*sol)[1].sign() > 0;
  }
  // w = k v: the cone degenerates to a line or a ray.
  auto m = proportionality_ratio(v, u);
  if (!m) return false;
  if (k->sign() > 0) return m->sign() > 0;
  return true;  // k < 0: s + t k sweeps all of R
}

RationalVector primitive_ray(const RationalVector& v) {
  if (v.is_zero())
    throw std::invalid_argument("primitive_ray: zero vector has no ray");
  long long lcm = 1;
  for (std::size_t i = 0; i < v.dim(); ++i) {
    long long d = v[i].den();
    lcm = lcm / std::gcd(lcm, d) * d;
  }
  std::vector<Rational> out(v.dim());
  long long g = 0;
  std::vector<long long> scaled(v.dim());
  for (std::size_t i = 0; i < v.dim(); ++i) {
    scaled[i] = v[i].num() * (lcm / v[i].den());
    g = std::gcd(g, scaled[i]);
  }
  for (std::size_t i = 0; i < v.dim(); ++i) out[i] = Rational(scaled[i] / g);
  return RationalVector(std::move(out));
}

}  // namespace exactlin
}  // namespace reslab
