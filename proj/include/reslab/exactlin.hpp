#ifndef RESLAB_EXACTLIN_HPP
#define RESLAB_EXACTLIN_HPP

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <stdexcept>
#include <vector>

#include "reslab/rational.hpp"

namespace reslab {

/// Dense vector of exact rationals. Comparison is lexicographic.
class RationalVector {
 public:
  RationalVector() = default;
  explicit RationalVector(std::size_t dim) : e_(dim) {}
  RationalVector(std::initializer_list<Rational> init) : e_(init) {}
  explicit RationalVector(std::vector<Rational> entries) : e_(std::move(entries)) {}

  std::size_t dim() const { return e_.size(); }
  Rational& operator[](std::size_t i) { return e_[i]; }
  const Rational& operator[](std::size_t i) const { return e_[i]; }
  const std::vector<Rational>& entries() const { return e_; }

  bool is_zero() const {
    for (const auto& x : e_)
      if (!x.is_zero()) return false;
    return true;
  }
  bool is_integral() const {
    for (const auto& x : e_)
      if (!x.is_integer()) return false;
    return true;
  }

  RationalVector operator+(const RationalVector& o) const {
    RationalVector r(dim());
    for (std::size_t i = 0; i < dim(); ++i) r.e_[i] = e_[i] + o.e_[i];
    return r;
  }
  RationalVector operator-(const RationalVector& o) const {
    RationalVector r(dim());
    for (std::size_t i = 0; i < dim(); ++i) r.e_[i] = e_[i] - o.e_[i];
    return r;
  }
  RationalVector operator-() const {
    RationalVector r(dim());
    for (std::size_t i = 0; i < dim(); ++i) r.e_[i] = -e_[i];
    return r;
  }
  RationalVector scaled(const Rational& s) const {
    RationalVector r(dim());
    for (std::size_t i = 0; i < dim(); ++i) r.e_[i] = e_[i] * s;
    return r;
  }
  Rational dot(const RationalVector& o) const {
    Rational acc;
    for (std::size_t i = 0; i < dim(); ++i) acc += e_[i] * o.e_[i];
    return acc;
  }

  friend bool operator==(const RationalVector&, const RationalVector&) = default;
  friend auto operator<=>(const RationalVector& a, const RationalVector& b) {
    return a.e_ <=> b.e_;
  }

  std::string str() const {
    std::string s = "(";
    for (std::size_t i = 0; i < e_.size(); ++i) {
      if (i) s += ", ";
      s += e_[i].str();
    }
    return s + ")";
  }

 private:
  std::vector<Rational> e_;
};

/// Dense row-major matrix of exact rationals.
struct RationalMatrix {
  std::size_t rows{0};
  std::size_t cols{0};
  std::vector<Rational> a;

  RationalMatrix() = default;
  RationalMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c) {}

  static RationalMatrix from_rows(const std::vector<RationalVector>& rs);

  Rational& at(std::size_t r, std::size_t c) { return a[r * cols + c]; }
  const Rational& at(std::size_t r, std::size_t c) const { return a[r * cols + c]; }

  RationalMatrix transpose() const;
};

namespace exactlin {

struct ZeroVectorError : std::invalid_argument {
  ZeroVectorError() : std::invalid_argument("in_open_cone2: zero vector argument") {}
};

struct AffineSolution {
  RationalVector x;
  bool unique;  // kernel of the coefficient matrix is trivial
};

/// Row-space dimension, by fraction-free (Bareiss) elimination.
std::size_t rank(const RationalMatrix& m);

/// Solves <f, x> = -1 for every f in `funcs`. nullopt when inconsistent.
/// Free coordinates of a non-unique solution are set to zero.
std::optional<AffineSolution> solve_affine_one(const std::vector<RationalVector>& funcs);

/// True iff s*v + t*w is positively proportional to u for some rationals s,t > 0.
/// Strictly positive coefficients: u collinear with v alone is rejected.
bool in_open_cone2(const RationalVector& u, const RationalVector& v,
                   const RationalVector& w);

/// Coefficients c with sum(c_k * gens[k]) = target, when consistent.
/// Free coefficients are set to zero; unique when the gens are independent.
std::optional<std::vector<Rational>> solve_in_span(
    const std::vector<RationalVector>& gens, const RationalVector& target);

/// The ratio r with w = r*v, when v and w are collinear (v nonzero).
std::optional<Rational> proportionality_ratio(const RationalVector& v,
                                              const RationalVector& w);

/// Primitive integer representative of the ray R_{>0} * v.
RationalVector primitive_ray(const RationalVector& v);

}  // namespace exactlin
}  // namespace reslab

#endif
