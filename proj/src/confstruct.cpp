#include "reslab/confstruct.hpp"

#include <algorithm>
#include <numeric>

namespace reslab::confstruct {

ConformalSpectrum ConformalSpectrum::make(int p, int q,
                                          std::vector<SpectrumBlock> blocks,
                                          std::optional<RationalVector> chi) {
  if (p < 0 || q < 0 || p + q < 1)
    throw std::invalid_argument("spectrum: bad signature");
  if (blocks.empty()) throw std::invalid_argument("spectrum: no blocks");
  if (p > q) {  // normalize the metric orientation
    std::swap(p, q);
    for (auto& b : blocks)
      if (b.signature) std::swap(b.signature->first, b.signature->second);
  }
  const std::size_t d = blocks.front().functional.dim();
  long long total = 0;
  for (const auto& b : blocks) {
    if (b.functional.dim() != d)
      throw std::invalid_argument("spectrum: mixed functional dimensions");
    if (b.multiplicity < 1) throw std::invalid_argument("spectrum: multiplicity < 1");
    if (b.signature) {
      auto [a, c] = *b.signature;
      if (a < 0 || c < 0 || a + c != b.multiplicity)
        throw std::invalid_argument("spectrum: signature does not match multiplicity");
      if (a + c == 0) throw std::invalid_argument("spectrum: empty signature");
    }
    total += b.multiplicity;
  }
  if (total != p + q)
    throw std::invalid_argument("spectrum: multiplicities must sum to p+q");
  for (std::size_t i = 0; i < blocks.size(); ++i)
    for (std::size_t j = i + 1; j < blocks.size(); ++j)
      if (blocks[i].functional == blocks[j].functional)
        throw std::invalid_argument("spectrum: duplicate functionals");
  if (chi && chi->dim() != d)
    throw std::invalid_argument("spectrum: chi dimension mismatch");
  ConformalSpectrum s;
  s.p = p;
  s.q = q;
  s.blocks = std::move(blocks);
  s.chi = std::move(chi);
  return s;
}

RationalVector derive_chi(const ConformalSpectrum& s) {
  RationalVector acc(s.blocks.front().functional.dim());
  for (const auto& b : s.blocks)
    acc = acc + b.functional.scaled(Rational(b.multiplicity));
  return acc.scaled(Rational(2, s.p + s.q));
}

namespace {

// Canonical order: ascending under a separating witness. The lexicographic
// order on the functionals is the order induced by the Vandermonde witness
// (1, eps, ..., eps^{d-1}) for every small enough eps > 0.
std::vector<std::size_t> canonical_order(const ConformalSpectrum& s) {
  std::vector<std::size_t> ord(s.blocks.size());
  std::iota(ord.begin(), ord.end(), 0);
  std::sort(ord.begin(), ord.end(), [&](std::size_t a, std::size_t b) {
    return s.blocks[a].functional < s.blocks[b].functional;
  });
  for (std::size_t k = 0; k + 1 < ord.size(); ++k)
    if (s.blocks[ord[k]].functional == s.blocks[ord[k + 1]].functional)
      throw NoSeparatingWitnessError{};
  return ord;
}

}  // namespace

std::vector<Violation> validate(const ConformalSpectrum& s) {
  const auto ord = canonical_order(s);
  const RationalVector chi = s.chi ? *s.chi : derive_chi(s);
  const int r = static_cast<int>(s.blocks.size());
  const int p = s.p;
  std::vector<Violation> out;

  auto pos = [&](int i) { return static_cast<int>(ord[i]) + 1; };  // 1-based declared index

  if (r > 2 * p + 1 || (r % 2 == 0 && r > 2 * p))
    out.push_back({"R1",
                   "r = " + std::to_string(r) + " exceeds the bound for p = " +
                       std::to_string(p),
                   {}});

  for (int i = 0; i < (r + 1) / 2; ++i) {
    const auto& lo = s.blocks[ord[i]];
    const auto& hi = s.blocks[ord[r - 1 - i]];
    if (lo.functional + hi.functional != chi)
      out.push_back({"R2",
                     "chi_" + std::to_string(i + 1) + " + chi_" + std::to_string(r - i) +
                         " != chi",
                     {pos(i), pos(r - 1 - i)}});
    if (lo.multiplicity != hi.multiplicity)
      out.push_back({"R3",
                     "dim E_" + std::to_string(i + 1) + " != dim E_" + std::to_string(r - i),
                     {pos(i), pos(r - 1 - i)}});
  }

  if (r % 2 == 0) {
    if (p != s.q)
      out.push_back({"R4", "r even requires split signature p = q", {}});
    for (int i = 0; i < r; ++i)
      if (!s.blocks[ord[i]].isotropic())
        out.push_back({"R4", "r even requires totally isotropic blocks", {pos(i)}});
  } else {
    const int mid = r / 2;
    if (s.blocks[ord[mid]].isotropic())
      out.push_back({"R5", "middle block must be non-degenerate", {pos(mid)}});
    for (int i = 0; i < r; ++i)
      if (i != mid && !s.blocks[ord[i]].isotropic())
        out.push_back(
            {"R5", "non-middle blocks must be totally isotropic", {pos(i)}});
  }

  {
    RationalVector weighted(s.blocks.front().functional.dim());
    for (const auto& b : s.blocks)
      weighted = weighted + b.functional.scaled(Rational(b.multiplicity));
    if (weighted != chi.scaled(Rational(s.p + s.q, 2)))
      out.push_back({"R6", "sum dim E_i * chi_i != (p+q) * chi / 2", {}});
  }
  return out;
}

std::vector<std::pair<int, int>> orthogonality_obligations(const ConformalSpectrum& s) {
  if (!s.chi) throw MissingChiError{};
  std::vector<std::pair<int, int>> out;
  const int r = static_cast<int>(s.blocks.size());
  for (int i = 0; i < r; ++i)
    for (int j = i; j < r; ++j)
      if (s.blocks[i].functional + s.blocks[j].functional != *s.chi)
        out.emplace_back(i + 1, j + 1);
  return out;
}

ConformalSpectrum import_configuration(const resonance::Configuration& c, int q) {
  const int p = (c.r - 1) / 2;
  if (q <= p)
    throw std::invalid_argument("import_configuration: needs q > p = " +
                                std::to_string(p));
  const int middle = p + q - 2 * p;  // unmatched dimensions live in the center block
  std::vector<SpectrumBlock> blocks;
  blocks.reserve(c.functionals.size());
  for (int i = 0; i < c.r; ++i) {
    SpectrumBlock b;
    b.functional = c.functionals[i];
    if (i + 1 == c.center_index) {
      b.multiplicity = middle;
      b.signature = std::make_pair(0, middle);
    } else {
      b.multiplicity = 1;
    }
    blocks.push_back(std::move(b));
  }
  return ConformalSpectrum::make(p, q, std::move(blocks), c.chi);
}

}  // namespace reslab::confstruct
