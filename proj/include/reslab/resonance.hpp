#ifndef RESLAB_RESONANCE_HPP
#define RESLAB_RESONANCE_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "reslab/rootsys.hpp"

namespace reslab::resonance {

struct TooFewRaysError : std::invalid_argument {
  TooFewRaysError() : std::invalid_argument("find_centers needs at least 3 rays") {}
};
struct NotExceptionalError : std::invalid_argument {
  explicit NotExceptionalError(const std::string& what) : std::invalid_argument(what) {}
};
struct RankTooLowError : std::invalid_argument {
  explicit RankTooLowError(const std::string& what) : std::invalid_argument(what) {}
};

/// Half-lines stored through primitive integer representatives,
/// pairwise non-proportional under positive scaling.
class RaySet {
 public:
  explicit RaySet(const std::vector<RationalVector>& vectors);

  std::size_t size() const { return rays_.size(); }
  const RationalVector& ray(std::size_t i) const { return rays_[i]; }
  const std::vector<RationalVector>& rays() const { return rays_; }

 private:
  std::vector<RationalVector> rays_;
};

/// A family chi_1..chi_r with chi_i + chi_{r+1-i} = 2*chi_center = chi,
/// center at index (r+1)/2, normalized so the uniform direction (when it
/// exists) pairs to -1 with every functional.
struct Configuration {
  int r{};
  int center_index{};                          // 1-based
  std::vector<std::pair<int, int>> matching;   // {i, r+1-i}, center self-paired
  std::vector<Rational> scalings;              // chi_i = scalings[i-1] * source ray
  std::vector<RationalVector> functionals;     // chi_1 .. chi_r
  std::vector<std::size_t> ray_index;          // source ray per functional (0-based)
  RationalVector chi;                          // = 2 * chi_center
};

enum class ConfigFailure { NoPerfectMatching, AmbiguousMatching, ScalingInfeasible };

std::string to_string(ConfigFailure f);

struct ConfigurationOutcome {
  std::optional<Configuration> configuration;
  std::optional<ConfigFailure> failure;
  int matchings_found{};  // saturating at the enumeration cap
  std::string detail;
};

/// Indices u such that every other ray v admits a third ray w with
/// u strictly inside the open cone spanned by v and w.
std::vector<std::size_t> find_centers(const RaySet& rays);

/// Pairs the non-center rays, solves the positive scalings and normalizes.
/// Fails (in-band) when the pairing does not exist or is not unique.
ConfigurationOutcome build_configuration(const RaySet& rays, std::size_t center);

std::size_t span_dimension(const Configuration& c);

struct UniformDirection {
  RationalVector x;
  bool unique;  // unique iff the functionals span the ambient space
};

/// X with <chi_i, X> = -1 for all i; absent when the system is inconsistent.
std::optional<UniformDirection> uniform_direction(const Configuration& c);

enum class LimitCaseVerdict { NotApplicable, ConformallyFlat, Mixed, Infeasible };

std::string to_string(LimitCaseVerdict v);

struct J0Case {
  int j0{};
  std::size_t complement_size{};
  std::vector<RationalVector> centers;        // primitive center rays
  int admissible_count{};                     // (center, matching) pairs, capped
  bool admits_configuration{};
  bool admits_uniform_direction{};
  std::optional<Configuration> configuration;  // present iff admissible_count == 1
  std::optional<UniformDirection> uniform;     // for that unique configuration
  std::optional<ConfigFailure> failure;        // why no unique configuration
};

struct LimitCaseReport {
  rootsys::RootSystemType type;
  std::size_t r_g{};
  LimitCaseVerdict verdict{LimitCaseVerdict::NotApplicable};
  std::vector<J0Case> cases;
};

/// Runs the configuration search over every minimizing j0 of an exceptional
/// type. E6 never reaches the limit case and reports NotApplicable.
LimitCaseReport limit_case_report(rootsys::RootSystemType t);

struct BoundRecord {
  rootsys::RootSystemType type;
  std::size_t r_g{};
  int rank_bound{};       // rank - 1
  int resonance_bound{};  // ceil((r_g - 1) / 2)
  LimitCaseVerdict limit_case{LimitCaseVerdict::NotApplicable};
  int k_bound{};          // max(rank_bound, resonance_bound) + 1 if Infeasible
};

BoundRecord optimal_index_bound(rootsys::RootSystemType t);

}  // namespace reslab::resonance

#endif
