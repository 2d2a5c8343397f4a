#ifndef RESLAB_CONFSTRUCT_HPP
#define RESLAB_CONFSTRUCT_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "reslab/resonance.hpp"

namespace reslab::confstruct {

struct NoSeparatingWitnessError : std::runtime_error {
  NoSeparatingWitnessError()
      : std::runtime_error("spectrum functionals admit no separating witness") {}
};
struct MissingChiError : std::runtime_error {
  MissingChiError() : std::runtime_error("spectrum has no distortion functional chi") {}
};

/// One Oseledec block: growth functional, fiber dimension, and either an
/// explicit non-degenerate signature (neg, pos) or totally isotropic.
struct SpectrumBlock {
  RationalVector functional;
  int multiplicity{1};
  std::optional<std::pair<int, int>> signature;  // nullopt = totally isotropic

  bool isotropic() const { return !signature.has_value(); }
};

struct ConformalSpectrum {
  int p{};
  int q{};
  std::vector<SpectrumBlock> blocks;
  std::optional<RationalVector> chi;

  /// Normalizes to p <= q (swapping block signatures along) and checks the
  /// structural invariants; throws std::invalid_argument on malformed data.
  static ConformalSpectrum make(int p, int q, std::vector<SpectrumBlock> blocks,
                                std::optional<RationalVector> chi = std::nullopt);
};

struct Violation {
  std::string rule;  // "R1" .. "R6"
  std::string detail;
  std::vector<int> indices;  // 1-based positions in the declared block order
};

/// Checks the structural rules after the canonical reordering (ascending in
/// any separating witness, realized lexicographically):
///   R1 r <= 2p+1, and r <= 2p when r is even
///   R2 chi_i + chi_{r+1-i} = chi
///   R3 dim E_i = dim E_{r+1-i}
///   R4 r even: p = q and every block totally isotropic
///   R5 r odd: middle block non-degenerate, all others totally isotropic
///   R6 sum dim E_i * chi_i = (p+q) * chi / 2
/// Uses the declared chi, deriving it when absent.
std::vector<Violation> validate(const ConformalSpectrum& s);

/// chi = (2/n) * sum dim E_i * chi_i with n = p + q.
RationalVector derive_chi(const ConformalSpectrum& s);

/// All unordered pairs (i, j), i <= j, with chi_i + chi_j != chi — the pairs
/// forced orthogonal. Declared order, 1-based. Requires chi.
std::vector<std::pair<int, int>> orthogonality_obligations(const ConformalSpectrum& s);

/// Spectrum induced by a limit-case configuration: multiplicity-1 totally
/// isotropic blocks, the middle block carrying the remaining n - 2p
/// dimensions with a definite signature (0, n - 2p). Requires q > p.
ConformalSpectrum import_configuration(const resonance::Configuration& c, int q);

}  // namespace reslab::confstruct

#endif
