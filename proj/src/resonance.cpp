#include "reslab/resonance.hpp"

#include <algorithm>
#include <functional>

namespace reslab::resonance {

using exactlin::in_open_cone2;
using exactlin::primitive_ray;
using exactlin::solve_affine_one;
using exactlin::solve_in_span;

std::string to_string(ConfigFailure f) {
  switch (f) {
    case ConfigFailure::NoPerfectMatching: return "NoPerfectMatching";
    case ConfigFailure::AmbiguousMatching: return "AmbiguousMatching";
    case ConfigFailure::ScalingInfeasible: return "ScalingInfeasible";
  }
  return "?";
}

std::string to_string(LimitCaseVerdict v) {
  switch (v) {
    case LimitCaseVerdict::NotApplicable: return "NotApplicable";
    case LimitCaseVerdict::ConformallyFlat: return "ConformallyFlat";
    case LimitCaseVerdict::Mixed: return "Mixed";
    case LimitCaseVerdict::Infeasible: return "Infeasible";
  }
  return "?";
}

RaySet::RaySet(const std::vector<RationalVector>& vectors) {
  rays_.reserve(vectors.size());
  for (const auto& v : vectors) {
    if (v.is_zero()) throw std::invalid_argument("RaySet: zero vector");
    rays_.push_back(primitive_ray(v));
  }
  auto sorted = rays_;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw std::invalid_argument("RaySet: positively proportional rays");
}

std::vector<std::size_t> find_centers(const RaySet& rays) {
  const std::size_t n = rays.size();
  if (n < 3) throw TooFewRaysError{};
  std::vector<std::size_t> centers;
  for (std::size_t u = 0; u < n; ++u) {
    bool ok = true;
    for (std::size_t v = 0; v < n && ok; ++v) {
      if (v == u) continue;
      bool found = false;
      for (std::size_t w = 0; w < n && !found; ++w) {
        if (w == u || w == v) continue;
        found = in_open_cone2(rays.ray(u), rays.ray(v), rays.ray(w));
      }
      ok = found;
    }
    if (ok) centers.push_back(u);
  }
  return centers;
}

namespace {

using Matching = std::vector<std::pair<std::size_t, std::size_t>>;

// Pairs {i, j} admissible with the center: center strictly inside cone(r_i, r_j).
std::vector<std::vector<std::size_t>> admissible_partners(const RaySet& rays,
                                                          std::size_t center) {
  const std::size_t n = rays.size();
  std::vector<std::vector<std::size_t>> adj(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (i == center) continue;
    for (std::size_t j = i + 1; j < n; ++j) {
      if (j == center) continue;
      if (in_open_cone2(rays.ray(center), rays.ray(i), rays.ray(j))) {
        adj[i].push_back(j);
        adj[j].push_back(i);
      }
    }
  }
  return adj;
}

// Enumerates perfect matchings of the non-center rays along admissible pairs,
// stopping after `cap` of them. Visits matchings in a deterministic order.
int enumerate_matchings(const RaySet& rays, std::size_t center, int cap,
                        const std::function<void(const Matching&)>& visit) {
  const std::size_t n = rays.size();
  auto adj = admissible_partners(rays, center);
  std::vector<bool> used(n, false);
  used[center] = true;
  Matching current;
  int found = 0;
  std::function<void()> rec = [&] {
    if (found >= cap) return;
    std::size_t v = n;
    for (std::size_t i = 0; i < n; ++i)
      if (!used[i]) {
        v = i;
        break;
      }
    if (v == n) {
      ++found;
      visit(current);
      return;
    }
    used[v] = true;
    for (std::size_t w : adj[v]) {
      if (used[w]) continue;
      used[w] = true;
      current.emplace_back(v, w);
      rec();
      current.pop_back();
      used[w] = false;
      if (found >= cap) break;
    }
    used[v] = false;
  };
  rec();
  return found;
}

struct ScalingFailure {};

// Solves the positive scalings against the primitive center, fixes the
// homothety through the uniform direction and assembles the indexed family.
Configuration make_configuration(const RaySet& rays, std::size_t center,
                                 const Matching& match) {
  const RationalVector& c = rays.ray(center);
  const RationalVector target = c.scaled(Rational(2));

  struct Member {
    std::size_t ray;
    Rational s;
    RationalVector functional;
  };
  std::vector<std::pair<Member, Member>> pairs;
  pairs.reserve(match.size());
  for (auto [i, j] : match) {
    auto sol = solve_in_span({rays.ray(i), rays.ray(j)}, target);
    if (!sol || (*sol)[0].sign() <= 0 || (*sol)[1].sign() <= 0)
      throw ScalingFailure{};
    Member a{i, (*sol)[0], rays.ray(i).scaled((*sol)[0])};
    Member b{j, (*sol)[1], rays.ray(j).scaled((*sol)[1])};
    pairs.emplace_back(std::move(a), std::move(b));
  }

  std::vector<RationalVector> family;
  family.reserve(2 * pairs.size() + 1);
  for (const auto& [a, b] : pairs) {
    family.push_back(a.functional);
    family.push_back(b.functional);
  }
  family.push_back(c);

  // Homothety: scale so that <chi_i, X> = -1 against the primitive integer
  // generator X of the uniform-direction ray; identity when no direction exists.
  Rational h(1);
  if (auto aff = solve_affine_one(family)) {
    RationalVector x = primitive_ray(aff->x);
    h = Rational(-1) / c.dot(x);
  }

  Configuration cfg;
  const std::size_t p = pairs.size();
  cfg.r = static_cast<int>(2 * p + 1);
  cfg.center_index = static_cast<int>(p + 1);
  cfg.functionals.assign(2 * p + 1, RationalVector{});
  cfg.scalings.assign(2 * p + 1, Rational(0));
  cfg.ray_index.assign(2 * p + 1, 0);

  // deterministic indexing: within a pair the lexicographically smaller
  // functional goes to the first half; pairs sorted by that representative
  std::vector<std::pair<Member, Member>> ordered;
  ordered.reserve(p);
  for (auto& [a, b] : pairs) {
    auto fa = a.functional.scaled(h);
    auto fb = b.functional.scaled(h);
    Member ma{a.ray, a.s * h, std::move(fa)};
    Member mb{b.ray, b.s * h, std::move(fb)};
    if (mb.functional < ma.functional) std::swap(ma, mb);
    ordered.emplace_back(std::move(ma), std::move(mb));
  }
  std::sort(ordered.begin(), ordered.end(),
            [](const auto& x, const auto& y) { return x.first.functional < y.first.functional; });

  for (std::size_t t = 0; t < p; ++t) {
    const auto& [a, b] = ordered[t];
    cfg.functionals[t] = a.functional;
    cfg.scalings[t] = a.s;
    cfg.ray_index[t] = a.ray;
    cfg.functionals[2 * p - t] = b.functional;
    cfg.scalings[2 * p - t] = b.s;
    cfg.ray_index[2 * p - t] = b.ray;
    cfg.matching.emplace_back(static_cast<int>(t + 1), static_cast<int>(2 * p + 1 - t));
  }
  cfg.functionals[p] = c.scaled(h);
  cfg.scalings[p] = h;
  cfg.ray_index[p] = center;
  cfg.matching.emplace_back(static_cast<int>(p + 1), static_cast<int>(p + 1));
  cfg.chi = cfg.functionals[p].scaled(Rational(2));
  return cfg;
}

}  // namespace

ConfigurationOutcome build_configuration(const RaySet& rays, std::size_t center) {
  ConfigurationOutcome out;
  if (center >= rays.size())
    throw std::out_of_range("build_configuration: center index out of range");
  Matching first;
  out.matchings_found = enumerate_matchings(rays, center, 2, [&](const Matching& m) {
    if (first.empty()) first = m;
  });
  if (out.matchings_found == 0) {
    out.failure = ConfigFailure::NoPerfectMatching;
    out.detail = "no admissible perfect matching of the non-center rays";
    return out;
  }
  if (out.matchings_found > 1) {
    out.failure = ConfigFailure::AmbiguousMatching;
    out.detail = "more than one admissible perfect matching";
    return out;
  }
  try {
    out.configuration = make_configuration(rays, center, first);
  } catch (const ScalingFailure&) {
    out.failure = ConfigFailure::ScalingInfeasible;
    out.detail = "pair scaling system has no positive solution";
  }
  return out;
}

std::size_t span_dimension(const Configuration& c) {
  return exactlin::rank(RationalMatrix::from_rows(c.functionals));
}

std::optional<UniformDirection> uniform_direction(const Configuration& c) {
  auto aff = solve_affine_one(c.functionals);
  if (!aff) return std::nullopt;
  return UniformDirection{aff->x, aff->unique};
}

LimitCaseReport limit_case_report(rootsys::RootSystemType t) {
  t.validate();
  if (!t.is_exceptional())
    throw NotExceptionalError("limit case analysis requires an exceptional type, got " +
                              t.label());
  LimitCaseReport rep;
  rep.type = t;
  rep.r_g = rootsys::minimal_resonant_codim(t);
  if (t.family == rootsys::Family::E && t.rank == 6) {
    // r(e6) = 16 is even, so the odd limit count r = 2p+1 is never attained
    rep.verdict = LimitCaseVerdict::NotApplicable;
    return rep;
  }
  const rootsys::RootSystem rs = rootsys::build(t);
  constexpr int kMatchingCap = 64;
  for (int j0 : rootsys::minimizing_j0(t)) {
    J0Case jc;
    jc.j0 = j0;
    auto pc = rootsys::parabolic_complement(rs, j0);
    jc.complement_size = pc.codim();
    RaySet rays(pc.complement);
    auto centers = find_centers(rays);
    for (std::size_t c : centers) jc.centers.push_back(rays.ray(c));

    std::optional<Configuration> only;
    for (std::size_t c : centers) {
      enumerate_matchings(rays, c, kMatchingCap, [&](const Matching& m) {
        try {
          Configuration cfg = make_configuration(rays, c, m);
          bool has_x = uniform_direction(cfg).has_value();
          jc.admits_uniform_direction = jc.admits_uniform_direction || has_x;
          ++jc.admissible_count;
          if (jc.admissible_count == 1) only = std::move(cfg);
        } catch (const ScalingFailure&) {
          // admissible pair set guarantees positive scalings unless two rays
          // of a pair are collinear; such a pairing is not a configuration
        }
      });
    }
    jc.admits_configuration = jc.admissible_count >= 1;
    if (jc.admissible_count == 1) {
      jc.configuration = std::move(only);
      jc.uniform = uniform_direction(*jc.configuration);
    } else if (jc.admissible_count == 0) {
      jc.failure = ConfigFailure::NoPerfectMatching;
    } else {
      jc.failure = ConfigFailure::AmbiguousMatching;
    }
    rep.cases.push_back(std::move(jc));
  }

  bool all_uniform = true, any_config = false;
  for (const auto& jc : rep.cases) {
    all_uniform = all_uniform && jc.admits_uniform_direction;
    any_config = any_config || jc.admits_configuration;
  }
  if (!any_config)
    rep.verdict = LimitCaseVerdict::Infeasible;
  else if (all_uniform)
    rep.verdict = LimitCaseVerdict::ConformallyFlat;
  else
    rep.verdict = LimitCaseVerdict::Mixed;
  return rep;
}

BoundRecord optimal_index_bound(rootsys::RootSystemType t) {
  t.validate();
  if (t.rank < 2)
    throw RankTooLowError("optimal index bounds require rank >= 2, got " + t.label());
  BoundRecord rec;
  rec.type = t;
  rec.r_g = rootsys::minimal_resonant_codim(t);
  rec.rank_bound = t.rank - 1;
  rec.resonance_bound = static_cast<int>(rec.r_g / 2);  // = ceil((r_g - 1) / 2)
  rec.limit_case = t.is_exceptional() ? limit_case_report(t).verdict
                                      : LimitCaseVerdict::NotApplicable;
  rec.k_bound = std::max(rec.rank_bound, rec.resonance_bound) +
                (rec.limit_case == LimitCaseVerdict::Infeasible ? 1 : 0);
  return rec;
}

}  // namespace reslab::resonance
