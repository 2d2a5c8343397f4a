#ifndef RESLAB_LYAPSIM_HPP
#define RESLAB_LYAPSIM_HPP

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace reslab::lyapsim {

struct NumericalOverflowError : std::runtime_error {
  NumericalOverflowError()
      : std::runtime_error(
            "frame entries overflowed; shorten the re-orthonormalization interval") {}
};
struct SingularMatrixError : std::runtime_error {
  SingularMatrixError() : std::runtime_error("matrix is singular or non-finite") {}
};

/// splitmix64 stream with explicitly coded uniform/normal draws, so sample
/// streams are identical across platforms for a given seed.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }
  double uniform01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }
  double normal(double mean, double sigma);  // Box-Muller, pair-cached

 private:
  std::uint64_t state_;
  bool have_spare_{false};
  double spare_{0.0};
};

/// Small dense square matrix of doubles, row-major.
struct Mat {
  int n{0};
  std::vector<double> a;

  Mat() = default;
  explicit Mat(int dim) : n(dim), a(static_cast<std::size_t>(dim) * dim, 0.0) {}
  static Mat identity(int dim);

  double& at(int i, int j) { return a[static_cast<std::size_t>(i) * n + j]; }
  double at(int i, int j) const { return a[static_cast<std::size_t>(i) * n + j]; }

  Mat mul(const Mat& o) const;
  Mat transpose() const;
  Mat scaled(double s) const;
  double max_abs() const;
  double log_abs_det() const;  // throws SingularMatrixError
  double log_op_norm() const;  // log of the operator 2-norm, under/overflow safe
};

/// Sampler for a one-parameter cocycle in R_{>0} x O(p,q): each step is
/// e^c * O with O a product of plane rotations (definite planes) and
/// hyperbolic boosts (mixed planes), angles/rapidities ~ N(0, scale).
struct CocycleModel {
  int p{0};
  int q{0};
  double boost_scale{0.3};
  double rotation_scale{1.0};
  double conformal_log_mean{-0.1};
  double conformal_log_spread{0.2};
  std::uint64_t seed{42};

  int n() const { return p + q; }
  void validate() const;
};

struct CocycleStep {
  Mat g;                // e^c * O
  double log_conformal; // c; the distortion of g is e^{2c}
};

CocycleStep sample_step(const CocycleModel& model, Rng& rng);

struct LyapunovEstimate {
  int p{0};
  int q{0};
  std::vector<double> exponents;  // ascending, length p+q
  double chi_hat{0.0};            // distortion exponent, from the sampled scalars
  long long steps{0};
  std::vector<std::vector<int>> grouping;  // blocks of exponent indices (ascending)
};

struct EstimateOptions {
  int ortho_interval{1};   // QR re-orthonormalization period, 1..20
  double group_tol{1e-3};  // gap-threshold input for the block grouping
};

/// Gap threshold dominating Monte-Carlo noise at desk scale.
double group_gap_threshold(double tol, long long steps);

/// Power-iterates an evolving frame through the sampled cocycle with periodic
/// QR re-orthonormalization; exponent j is the mean log of the j-th diagonal
/// scale. Deterministic given the model seed.
LyapunovEstimate estimate_exponents(const CocycleModel& model, long long steps,
                                    EstimateOptions opts = {});

/// Same driver over an arbitrary step source (step index is 1-based).
LyapunovEstimate run_cocycle(int p, int q, long long steps,
                             const std::function<CocycleStep(long long)>& step,
                             EstimateOptions opts = {});

struct PairingReport {
  double tol{0.0};
  int r{0};                         // number of exponent groups
  std::vector<double> group_means;  // ascending
  std::vector<int> group_sizes;
  std::vector<double> pair_residuals;  // |m_i + m_{r+1-i} - chi_hat|, i <= ceil(r/2)
  double sum_residual{0.0};            // |sum exponents - n*chi_hat/2|
  bool pairing_ok{false};
  bool sum_ok{false};
  bool count_ok{false};  // r <= 2p+1, and r <= 2p when there is no central block
  bool sizes_symmetric{false};
  bool pass() const { return pairing_ok && sum_ok && count_ok; }
};

/// Verifies the pairing structure on the estimate's block grouping: residuals
/// |m_i + m_{r+1-i} - chi_hat| within tol, the determinant-sum identity within
/// n*tol, and the block-count bound.
PairingReport check_pairing(const LyapunovEstimate& est, double tol);

struct MatrixSequence {
  std::vector<Mat> mats;
  std::vector<double> times;  // strictly increasing, positive

  void validate() const;
};

enum class Regularity { Uniform, NotUniform, Inconclusive };

std::string to_string(Regularity r);

struct RegularityVerdict {
  Regularity kind{Regularity::Inconclusive};
  double exponent{0.0};  // chi_det / n, meaningful when Uniform
  double chi_det{0.0};
  std::vector<double> det_rates;   // a_k = log|det g_k| / T_k
  std::vector<double> norm_rates;  // b_k = log||g_k|| / T_k
};

/// Uniform(chi_det/n) when the tail of a_k sits at chi_det and the tail of
/// b_k at chi_det/n, both within tol; NotUniform when the tail of b_k stays
/// more than 3*tol away from a_k/n; Inconclusive otherwise. The tail is the
/// second half of the sequence.
RegularityVerdict classify_uniform_regularity(const MatrixSequence& seq, double tol);

}  // namespace reslab::lyapsim

#endif
