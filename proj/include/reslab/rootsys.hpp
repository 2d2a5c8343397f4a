#ifndef RESLAB_ROOTSYS_HPP
#define RESLAB_ROOTSYS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "reslab/exactlin.hpp"

namespace reslab::rootsys {

struct InvalidTypeError : std::invalid_argument {
  explicit InvalidTypeError(const std::string& what) : std::invalid_argument(what) {}
};
struct IndexOutOfRangeError : std::out_of_range {
  explicit IndexOutOfRangeError(const std::string& what) : std::out_of_range(what) {}
};

enum class Family { A, B, C, D, BC, E, F, G };

std::string family_name(Family f);

struct RootSystemType {
  Family family{Family::A};
  int rank{1};

  void validate() const;  // throws InvalidTypeError
  std::string label() const;  // "F4", "BC3", ...
  bool is_exceptional() const {
    return family == Family::E || family == Family::F || family == Family::G;
  }
  /// BC_l computations route through the reduced system B_l.
  RootSystemType reduced() const {
    return family == Family::BC ? RootSystemType{Family::B, rank} : *this;
  }
  std::size_t expected_root_count() const;

  friend bool operator==(const RootSystemType&, const RootSystemType&) = default;
};

/// Parses "F4", "E7", "BC3", "A5"; throws InvalidTypeError.
RootSystemType parse_type(const std::string& s);

/// A restricted root system in explicit coordinates, with a chosen simple
/// system. Immutable after build(); roots are sorted lexicographically and
/// simple_coords[i] holds the (integer) expansion of roots[i] over `simple`.
struct RootSystem {
  RootSystemType type;
  std::size_t ambient_dim{0};
  std::vector<RationalVector> roots;
  std::vector<RationalVector> simple;  // alpha_1 .. alpha_rank
  std::vector<std::vector<Rational>> simple_coords;

  bool is_positive(std::size_t root_idx) const;
};

/// Negative roots whose expansion has a (necessarily negative) coefficient
/// on alpha_{j0}; the codimension of the maximal parabolic omitting alpha_{j0}.
struct ParabolicComplement {
  int j0{};
  std::vector<RationalVector> complement;
  std::size_t codim() const { return complement.size(); }
};

RootSystem build(RootSystemType t);

std::vector<RationalVector> positive_roots(const RootSystem& rs);

ParabolicComplement parabolic_complement(const RootSystem& rs, int j0);

/// min over j0 of the parabolic codimension, computed on the reduced type.
std::size_t minimal_resonant_codim(RootSystemType t);

/// All j0 attaining the minimum (on the reduced type), ascending.
std::vector<int> minimizing_j0(RootSystemType t);

}  // namespace reslab::rootsys

#endif
