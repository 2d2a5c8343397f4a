#include "reslab/lyapsim.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace reslab::lyapsim {

namespace {
constexpr double kPi = 3.14159265358979323846;
}

double Rng::normal(double mean, double sigma) {
  if (sigma <= 0.0) return mean;
  if (have_spare_) {
    have_spare_ = false;
    return mean + sigma * spare_;
  }
  double u1 = uniform01();
  while (u1 <= 0.0) u1 = uniform01();
  const double u2 = uniform01();
  const double radius = std::sqrt(-2.0 * std::log(u1));
  const double angle = 2.0 * kPi * u2;
  spare_ = radius * std::sin(angle);
  have_spare_ = true;
  return mean + sigma * radius * std::cos(angle);
}

Mat Mat::identity(int dim) {
  Mat m(dim);
  for (int i = 0; i < dim; ++i) m.at(i, i) = 1.0;
  return m;
}

Mat Mat::mul(const Mat& o) const {
  if (o.n != n) throw std::invalid_argument("Mat::mul: size mismatch");
  Mat r(n);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      const double v = at(i, k);
      if (v == 0.0) continue;
      for (int j = 0; j < n; ++j) r.at(i, j) += v * o.at(k, j);
    }
  return r;
}

Mat Mat::transpose() const {
  Mat r(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) r.at(j, i) = at(i, j);
  return r;
}

Mat Mat::scaled(double s) const {
  Mat r = *this;
  for (auto& x : r.a) x *= s;
  return r;
}

double Mat::max_abs() const {
  double m = 0.0;
  for (double x : a) m = std::max(m, std::abs(x));
  return m;
}

double Mat::log_abs_det() const {
  // LU with partial pivoting; the log of |pivots| accumulates without
  // under/overflow even when the determinant itself is not representable
  Mat lu = *this;
  double acc = 0.0;
  for (int c = 0; c < n; ++c) {
    int piv = c;
    for (int i = c + 1; i < n; ++i)
      if (std::abs(lu.at(i, c)) > std::abs(lu.at(piv, c))) piv = i;
    const double pval = lu.at(piv, c);
    if (pval == 0.0 || !std::isfinite(pval)) throw SingularMatrixError{};
    if (piv != c)
      for (int j = 0; j < n; ++j) std::swap(lu.at(piv, j), lu.at(c, j));
    acc += std::log(std::abs(pval));
    for (int i = c + 1; i < n; ++i) {
      const double f = lu.at(i, c) / pval;
      if (f == 0.0) continue;
      for (int j = c; j < n; ++j) lu.at(i, j) -= f * lu.at(c, j);
    }
  }
  return acc;
}

double Mat::log_op_norm() const {
  const double scale = max_abs();
  if (scale == 0.0 || !std::isfinite(scale)) throw SingularMatrixError{};
  const Mat b = scaled(1.0 / scale);
  const Mat bt = b.transpose();
  // power iteration on B^T B from a fixed start; deterministic
  std::vector<double> v(static_cast<std::size_t>(n), 1.0 / std::sqrt(double(n)));
  std::vector<double> tmp(static_cast<std::size_t>(n));
  double lambda = 0.0;
  for (int it = 0; it < 300; ++it) {
    for (int i = 0; i < n; ++i) {
      double s = 0.0;
      for (int j = 0; j < n; ++j) s += b.at(i, j) * v[j];
      tmp[i] = s;
    }
    double next = 0.0;
    for (int i = 0; i < n; ++i) {
      double s = 0.0;
      for (int j = 0; j < n; ++j) s += bt.at(i, j) * tmp[j];
      v[i] = s;
      next += s * s;
    }
    next = std::sqrt(next);
    if (next == 0.0) throw SingularMatrixError{};
    for (int i = 0; i < n; ++i) v[i] /= next;
    if (it > 4 && std::abs(next - lambda) <= 1e-15 * next) {
      lambda = next;
      break;
    }
    lambda = next;
  }
  return std::log(scale) + 0.5 * std::log(lambda);
}

void CocycleModel::validate() const {
  if (p < 0 || q < 0 || p + q < 1)
    throw std::invalid_argument("cocycle model: p+q must be at least 1");
  if (boost_scale < 0 || rotation_scale < 0 || conformal_log_spread < 0)
    throw std::invalid_argument("cocycle model: scales must be non-negative");
}

namespace {

void apply_rotation(Mat& m, int i, int j, double theta) {
  const double c = std::cos(theta), s = std::sin(theta);
  for (int k = 0; k < m.n; ++k) {
    const double ri = m.at(i, k), rj = m.at(j, k);
    m.at(i, k) = c * ri - s * rj;
    m.at(j, k) = s * ri + c * rj;
  }
}

void apply_boost(Mat& m, int i, int j, double rapidity) {
  const double ch = std::cosh(rapidity), sh = std::sinh(rapidity);
  for (int k = 0; k < m.n; ++k) {
    const double ri = m.at(i, k), rj = m.at(j, k);
    m.at(i, k) = ch * ri + sh * rj;
    m.at(j, k) = sh * ri + ch * rj;
  }
}

}  // namespace

CocycleStep sample_step(const CocycleModel& model, Rng& rng) {
  const int n = model.n(), p = model.p;
  Mat o = Mat::identity(n);
  // fixed plane order: rotations in the negative block, rotations in the
  // positive block, then boosts across the blocks
  for (int i = 0; i < p; ++i)
    for (int j = i + 1; j < p; ++j)
      apply_rotation(o, i, j, rng.normal(0.0, model.rotation_scale));
  for (int i = p; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      apply_rotation(o, i, j, rng.normal(0.0, model.rotation_scale));
  for (int i = 0; i < p; ++i)
    for (int j = p; j < n; ++j)
      apply_boost(o, i, j, rng.normal(0.0, model.boost_scale));
  const double c = rng.normal(model.conformal_log_mean, model.conformal_log_spread);
  return {o.scaled(std::exp(c)), c};
}

double group_gap_threshold(double tol, long long steps) {
  return std::max(10.0 * tol, 5.0 / std::sqrt(static_cast<double>(steps)));
}

namespace {

// modified Gram-Schmidt on columns; adds log of the diagonal scales into acc
void orthonormalize(Mat& q, std::vector<double>& acc) {
  const int n = q.n;
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      double dot = 0.0;
      for (int k = 0; k < n; ++k) dot += q.at(k, i) * q.at(k, j);
      for (int k = 0; k < n; ++k) q.at(k, j) -= dot * q.at(k, i);
    }
    double norm = 0.0;
    for (int k = 0; k < n; ++k) norm += q.at(k, j) * q.at(k, j);
    norm = std::sqrt(norm);
    if (norm == 0.0 || !std::isfinite(norm)) throw NumericalOverflowError{};
    acc[j] += std::log(norm);
    for (int k = 0; k < n; ++k) q.at(k, j) /= norm;
  }
}

std::vector<std::vector<int>> group_indices(const std::vector<double>& sorted_vals,
                                            double gap) {
  std::vector<std::vector<int>> groups;
  for (int i = 0; i < static_cast<int>(sorted_vals.size()); ++i) {
    if (groups.empty() || sorted_vals[i] - sorted_vals[i - 1] > gap)
      groups.emplace_back();
    groups.back().push_back(i);
  }
  return groups;
}

}  // namespace

LyapunovEstimate run_cocycle(int p, int q, long long steps,
                             const std::function<CocycleStep(long long)>& step,
                             EstimateOptions opts) {
  if (steps < 1) throw std::invalid_argument("estimate: steps must be >= 1");
  if (opts.ortho_interval < 1 || opts.ortho_interval > 20)
    throw std::invalid_argument("estimate: ortho_interval must be in 1..20");
  const int n = p + q;
  Mat frame = Mat::identity(n);
  std::vector<double> acc(static_cast<std::size_t>(n), 0.0);
  double chi_acc = 0.0;
  for (long long k = 1; k <= steps; ++k) {
    CocycleStep s = step(k);
    frame = s.g.mul(frame);
    chi_acc += 2.0 * s.log_conformal;
    if (k % opts.ortho_interval == 0 || k == steps) orthonormalize(frame, acc);
  }
  LyapunovEstimate est;
  est.p = p;
  est.q = q;
  est.steps = steps;
  est.chi_hat = chi_acc / static_cast<double>(steps);
  est.exponents.resize(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) est.exponents[j] = acc[j] / static_cast<double>(steps);
  std::sort(est.exponents.begin(), est.exponents.end());
  est.grouping = group_indices(est.exponents, group_gap_threshold(opts.group_tol, steps));
  return est;
}

LyapunovEstimate estimate_exponents(const CocycleModel& model, long long steps,
                                    EstimateOptions opts) {
  model.validate();
  Rng rng(model.seed);
  return run_cocycle(model.p, model.q, steps,
                     [&](long long) { return sample_step(model, rng); }, opts);
}

PairingReport check_pairing(const LyapunovEstimate& est, double tol) {
  if (tol <= 0) throw std::invalid_argument("check_pairing: tol must be positive");
  PairingReport rep;
  rep.tol = tol;
  const auto& groups = est.grouping;
  rep.r = static_cast<int>(groups.size());
  for (const auto& g : groups) {
    double mean = 0.0;
    for (int idx : g) mean += est.exponents[idx];
    rep.group_means.push_back(mean / static_cast<double>(g.size()));
    rep.group_sizes.push_back(static_cast<int>(g.size()));
  }

  rep.pairing_ok = true;
  for (int i = 0; i < (rep.r + 1) / 2; ++i) {
    const double res =
        std::abs(rep.group_means[i] + rep.group_means[rep.r - 1 - i] - est.chi_hat);
    rep.pair_residuals.push_back(res);
    rep.pairing_ok = rep.pairing_ok && res <= tol;
  }
  rep.sizes_symmetric = true;
  for (int i = 0; i < rep.r / 2; ++i)
    rep.sizes_symmetric =
        rep.sizes_symmetric && rep.group_sizes[i] == rep.group_sizes[rep.r - 1 - i];

  const int n = est.p + est.q;
  const double total = std::accumulate(est.exponents.begin(), est.exponents.end(), 0.0);
  rep.sum_residual = std::abs(total - n * est.chi_hat / 2.0);
  rep.sum_ok = rep.sum_residual <= n * tol;

  const int pmin = std::min(est.p, est.q);
  rep.count_ok = rep.r <= 2 * pmin + 1 && (rep.r % 2 == 1 || rep.r <= 2 * pmin);
  return rep;
}

void MatrixSequence::validate() const {
  if (mats.size() != times.size())
    throw std::invalid_argument("matrix sequence: mats/times size mismatch");
  double prev = 0.0;
  for (double t : times) {
    if (!(t > prev))
      throw std::invalid_argument("matrix sequence: times must be positive increasing");
    prev = t;
  }
  for (const auto& m : mats)
    if (m.n != mats.front().n)
      throw std::invalid_argument("matrix sequence: mixed matrix sizes");
}

std::string to_string(Regularity r) {
  switch (r) {
    case Regularity::Uniform: return "Uniform";
    case Regularity::NotUniform: return "NotUniform";
    case Regularity::Inconclusive: return "Inconclusive";
  }
  return "?";
}

RegularityVerdict classify_uniform_regularity(const MatrixSequence& seq, double tol) {
  seq.validate();
  const std::size_t count = seq.mats.size();
  if (count < 3)
    throw std::invalid_argument("classify_uniform_regularity: need at least 3 matrices");
  if (tol <= 0)
    throw std::invalid_argument("classify_uniform_regularity: tol must be positive");
  const int n = seq.mats.front().n;

  RegularityVerdict v;
  v.det_rates.reserve(count);
  v.norm_rates.reserve(count);
  for (std::size_t k = 0; k < count; ++k) {
    v.det_rates.push_back(seq.mats[k].log_abs_det() / seq.times[k]);
    v.norm_rates.push_back(seq.mats[k].log_op_norm() / seq.times[k]);
  }
  v.chi_det = v.det_rates.back();
  v.exponent = v.chi_det / n;

  const std::size_t tail_len = std::max<std::size_t>(2, count / 2);
  const std::size_t tail_from = count - tail_len;

  bool uniform = true;
  bool separated = true;
  for (std::size_t k = tail_from; k < count; ++k) {
    uniform = uniform && std::abs(v.det_rates[k] - v.chi_det) <= tol &&
              std::abs(v.norm_rates[k] - v.chi_det / n) <= tol;
    separated = separated && std::abs(v.norm_rates[k] - v.det_rates[k] / n) > 3.0 * tol;
  }
  v.kind = uniform ? Regularity::Uniform
                   : separated ? Regularity::NotUniform : Regularity::Inconclusive;
  return v;
}

}  // namespace reslab::lyapsim
