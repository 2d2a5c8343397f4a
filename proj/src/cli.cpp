#include "reslab/cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <future>
#include <ostream>
#include <thread>

#include "reslab/json_io.hpp"

namespace reslab::cli {

namespace {

using jsonio::json;

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

rootsys::RootSystemType type_from(const std::string& type_str, int rank) {
  try {
    if (rank > 0 && !type_str.empty() &&
        !std::isdigit(static_cast<unsigned char>(type_str.back())))
      return rootsys::parse_type(type_str + std::to_string(rank));
    return rootsys::parse_type(type_str);
  } catch (const rootsys::InvalidTypeError& e) {
    throw UsageError(std::string(e.what()) +
                     "; expected --type in {A..D,BC,E6,E7,E8,F4,G2} with --rank "
                     "for classical families");
  }
}

unsigned thread_cap() {
  if (const char* env = std::getenv("RESONANCE_LAB_THREADS")) {
    const long v = std::atol(env);
    if (v >= 1) return static_cast<unsigned>(v);
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw ? hw : 1;
}

// Index-ordered fan-out with a bounded number of concurrent tasks.
template <typename T, typename Fn>
auto parallel_map(const std::vector<T>& items, Fn fn)
    -> std::vector<decltype(fn(items.front()))> {
  using R = decltype(fn(items.front()));
  const unsigned cap = std::min<unsigned>(thread_cap(), items.size() ? items.size() : 1);
  std::vector<R> out(items.size());
  if (cap <= 1) {
    for (std::size_t i = 0; i < items.size(); ++i) out[i] = fn(items[i]);
    return out;
  }
  std::size_t next = 0;
  while (next < items.size()) {
    const std::size_t batch = std::min<std::size_t>(cap, items.size() - next);
    std::vector<std::future<R>> futs;
    for (std::size_t k = 0; k < batch; ++k)
      futs.push_back(std::async(std::launch::async, fn, std::cref(items[next + k])));
    for (std::size_t k = 0; k < batch; ++k) out[next + k] = futs[k].get();
    next += batch;
  }
  return out;
}

json slurp_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  json j;
  in >> j;
  return j;
}

void emit(std::ostream& out, const json& j) { out << j.dump(2) << "\n"; }

// ---- subcommand bodies ------------------------------------------------

int cmd_roots(const rootsys::RootSystemType& t, bool as_json, std::ostream& out) {
  rootsys::RootSystem rs = rootsys::build(t);
  if (as_json) {
    emit(out, jsonio::encode(rs));
    return 0;
  }
  out << "root system " << t.label() << "\n";
  out << "  ambient dimension: " << rs.ambient_dim << "\n";
  out << "  roots: " << rs.roots.size() << " (positive: " << positive_roots(rs).size()
      << ")\n";
  out << "  simple system:\n";
  for (std::size_t i = 0; i < rs.simple.size(); ++i)
    out << "    alpha_" << i + 1 << " = " << rs.simple[i].str() << "\n";
  return 0;
}

int cmd_codim(const rootsys::RootSystemType& t, bool as_json, std::ostream& out) {
  const auto red = t.reduced();
  rootsys::RootSystem rs = rootsys::build(red);
  std::vector<std::pair<int, std::size_t>> rows;
  std::size_t min_codim = rs.roots.size();
  for (int j0 = 1; j0 <= red.rank; ++j0) {
    rows.emplace_back(j0, rootsys::parabolic_complement(rs, j0).codim());
    min_codim = std::min(min_codim, rows.back().second);
  }
  std::vector<int> argmin;
  for (auto [j0, c] : rows)
    if (c == min_codim) argmin.push_back(j0);

  if (as_json) {
    json j;
    j["schema_version"] = jsonio::kSchemaVersion;
    j["type"] = t.label();
    j["reduced_type"] = red.label();
    json table = json::array();
    for (auto [j0, c] : rows) table.push_back({{"j0", j0}, {"codim", c}});
    j["codims"] = table;
    j["min_codim"] = min_codim;
    j["minimizing_j0"] = argmin;
    emit(out, j);
    return 0;
  }
  out << "parabolic codimensions for " << t.label();
  if (red != t) out << " (computed on reduced type " << red.label() << ")";
  out << "\n";
  for (auto [j0, c] : rows) out << "  j0 = " << j0 << "  codim = " << c << "\n";
  out << "  minimum r(g) = " << min_codim << " at j0 in {";
  for (std::size_t i = 0; i < argmin.size(); ++i) out << (i ? ", " : "") << argmin[i];
  out << "}\n";
  return 0;
}

void print_configuration(const resonance::Configuration& c, std::ostream& out) {
  out << "    configuration (r = " << c.r << ", center index " << c.center_index
      << "):\n";
  for (int i = 0; i < c.r; ++i)
    out << "      chi_" << i + 1 << " = " << c.functionals[i].str() << "\n";
  out << "      chi = " << c.chi.str() << "\n";
}

int cmd_limit_case(const rootsys::RootSystemType& t, int only_j0, bool as_json,
                   std::ostream& out) {
  resonance::LimitCaseReport rep = resonance::limit_case_report(t);
  if (only_j0 > 0) {
    std::erase_if(rep.cases, [&](const auto& c) { return c.j0 != only_j0; });
    if (rep.cases.empty() && rep.verdict != resonance::LimitCaseVerdict::NotApplicable)
      throw std::invalid_argument("j0 = " + std::to_string(only_j0) +
                                  " does not minimize the codimension for " + t.label());
  }
  const int k = resonance::optimal_index_bound(t).k_bound;
  if (as_json) {
    emit(out, jsonio::encode(rep, k));
    return 0;
  }
  out << "limit case analysis for " << t.label() << " (r(g) = " << rep.r_g << ")\n";
  for (const auto& c : rep.cases) {
    out << "  j0 = " << c.j0 << ": complement size " << c.complement_size << "\n";
    out << "    centers:";
    if (c.centers.empty()) out << " none";
    for (const auto& v : c.centers) out << " " << v.str();
    out << "\n";
    out << "    admissible (center, matching) pairs: " << c.admissible_count << "\n";
    if (c.configuration) print_configuration(*c.configuration, out);
    if (c.uniform)
      out << "    uniform direction X = " << c.uniform->x.str()
          << (c.uniform->unique ? " (unique)" : "") << "\n";
    else if (c.failure)
      out << "    failure: " << resonance::to_string(*c.failure) << "\n";
  }
  out << "verdict: " << resonance::to_string(rep.verdict) << "\n";
  out << "k_bound: " << k << "\n";
  return 0;
}

std::vector<rootsys::RootSystemType> all_bound_types() {
  using rootsys::Family;
  std::vector<rootsys::RootSystemType> ts = {{Family::E, 6}, {Family::E, 7},
                                             {Family::E, 8}, {Family::F, 4},
                                             {Family::G, 2}};
  for (Family f : {Family::A, Family::B, Family::C, Family::D, Family::BC})
    for (int l = 2; l <= 8; ++l) ts.push_back({f, l});
  return ts;
}

int cmd_bounds(const std::string& type_str, int rank, bool all, bool as_json,
               std::ostream& out) {
  std::vector<rootsys::RootSystemType> types;
  if (all)
    types = all_bound_types();
  else if (!type_str.empty())
    types.push_back(type_from(type_str, rank));
  else
    throw UsageError("bounds: pass --type or --all");

  auto records = parallel_map(types, [](const rootsys::RootSystemType& t) {
    return resonance::optimal_index_bound(t);
  });

  if (as_json) {
    json j;
    j["schema_version"] = jsonio::kSchemaVersion;
    json arr = json::array();
    for (const auto& r : records) arr.push_back(jsonio::encode(r));
    j["records"] = arr;
    emit(out, j);
    return 0;
  }
  auto pad = [&out](const std::string& s, std::size_t w) {
    out << s;
    for (std::size_t i = s.size(); i < w; ++i) out << ' ';
  };
  pad("type", 6);
  pad("r(g)", 6);
  pad("rank_bound", 12);
  pad("resonance_bound", 17);
  pad("limit_case", 17);
  out << "k >=\n";
  for (const auto& r : records) {
    pad(r.type.label(), 6);
    pad(std::to_string(r.r_g), 6);
    pad(std::to_string(r.rank_bound), 12);
    pad(std::to_string(r.resonance_bound), 17);
    pad(resonance::to_string(r.limit_case), 17);
    out << r.k_bound << "\n";
  }
  return 0;
}

int cmd_validate_spectrum(const std::string& input, bool as_json, std::ostream& out) {
  confstruct::ConformalSpectrum s = jsonio::decode_spectrum(slurp_json(input));
  auto violations = confstruct::validate(s);
  if (as_json) {
    json j;
    j["schema_version"] = jsonio::kSchemaVersion;
    j["p"] = s.p;
    j["q"] = s.q;
    j["r"] = s.blocks.size();
    j["chi_used"] = s.chi ? jsonio::encode(*s.chi) : jsonio::encode(derive_chi(s));
    j["violations"] = jsonio::encode(violations);
    j["valid"] = violations.empty();
    emit(out, j);
    return 0;
  }
  out << "spectrum (p, q) = (" << s.p << ", " << s.q << "), r = " << s.blocks.size()
      << "\n";
  if (violations.empty()) {
    out << "no violations\n";
  } else {
    for (const auto& v : violations) {
      out << v.rule << ": " << v.detail;
      if (!v.indices.empty()) {
        out << " [blocks";
        for (int i : v.indices) out << " " << i;
        out << "]";
      }
      out << "\n";
    }
  }
  return 0;
}

int cmd_simulate(const lyapsim::CocycleModel& model, long long steps, double tol,
                 int interval, bool as_json, std::ostream& out) {
  lyapsim::EstimateOptions opts;
  opts.ortho_interval = interval;
  auto est = lyapsim::estimate_exponents(model, steps, opts);
  auto pairing = lyapsim::check_pairing(est, tol);
  if (as_json) {
    json j;
    j["schema_version"] = jsonio::kSchemaVersion;
    j["model"] = jsonio::encode(model);
    j["estimate"] = jsonio::encode(est);
    j["pairing"] = jsonio::encode(pairing);
    emit(out, j);
    return 0;
  }
  out << "CO(" << model.p << "," << model.q << ") cocycle, seed " << model.seed
      << ", " << steps << " steps\n";
  out << "  exponents (ascending):";
  for (double e : est.exponents) out << " " << e;
  out << "\n  chi_hat = " << est.chi_hat << "\n";
  out << "  groups r = " << pairing.r << ", pairing residuals:";
  for (double rres : pairing.pair_residuals) out << " " << rres;
  out << "\n  sum residual = " << pairing.sum_residual << "\n";
  out << "  pairing check: " << (pairing.pass() ? "pass" : "fail") << " (tol " << tol
      << ")\n";
  return 0;
}

int cmd_classify_seq(const std::string& input, double tol, bool as_json,
                     std::ostream& out) {
  auto seq = jsonio::decode_matrix_sequence(slurp_json(input));
  auto v = lyapsim::classify_uniform_regularity(seq, tol);
  if (as_json) {
    json j = jsonio::encode(v);
    j["schema_version"] = jsonio::kSchemaVersion;
    j["tol"] = tol;
    emit(out, j);
    return 0;
  }
  out << "verdict: " << lyapsim::to_string(v.kind);
  if (v.kind == lyapsim::Regularity::Uniform) out << " (exponent " << v.exponent << ")";
  out << "\n";
  out << "  chi_det = " << v.chi_det << "\n";
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact root-system combinatorics and a Lyapunov-spectrum laboratory "
               "for conformal cocycles"};
  app.name("reslab");
  app.require_subcommand(1);

  std::string type_str;
  int rank = 0;
  int j0 = 0;
  bool as_json = false;
  bool all = false;
  std::string input;
  std::string config_path;
  long long steps = 100000;
  double tol = 5e-2;
  int interval = 1;
  lyapsim::CocycleModel model;

  auto add_type = [&](CLI::App* cmd, bool required) {
    auto* opt = cmd->add_option("--type", type_str, "root system type, e.g. F4, E7, B3");
    if (required) opt->required();
    cmd->add_option("--rank", rank, "rank for classical families (A,B,C,D,BC)");
  };

  auto* roots = app.add_subcommand("roots", "build a restricted root system");
  add_type(roots, true);
  roots->add_flag("--json", as_json, "emit JSON");

  auto* codim = app.add_subcommand("codim", "parabolic codimension table per j0");
  add_type(codim, true);
  codim->add_flag("--json", as_json, "emit JSON");

  auto* limit = app.add_subcommand("limit-case",
                                   "limit-case configuration search (exceptional types)");
  add_type(limit, true);
  limit->add_option("--j0", j0, "restrict the report to one minimizing j0");
  limit->add_flag("--json", as_json, "emit JSON");

  auto* bounds = app.add_subcommand("bounds", "optimal-index lower bounds");
  add_type(bounds, false);
  bounds->add_flag("--all", all, "every exceptional type plus classical ranks 2..8");
  bounds->add_flag("--json", as_json, "emit JSON");

  auto* vspec = app.add_subcommand("validate-spectrum",
                                   "check a declared spectrum against the structure rules");
  vspec->add_option("--input", input, "spectrum JSON document")->required();
  vspec->add_flag("--json", as_json, "emit JSON");

  auto* sim = app.add_subcommand("simulate", "sample a CO(p,q) cocycle and estimate "
                                             "its Lyapunov exponents");
  sim->add_option("--p", model.p, "negative directions");
  sim->add_option("--q", model.q, "positive directions");
  sim->add_option("--steps", steps, "cocycle steps");
  sim->add_option("--seed", model.seed, "RNG seed");
  sim->add_option("--tol", tol, "pairing tolerance");
  sim->add_option("--boost-scale", model.boost_scale, "rapidity std-dev");
  sim->add_option("--rotation-scale", model.rotation_scale, "angle std-dev");
  sim->add_option("--conformal-log-mean", model.conformal_log_mean,
                  "mean of log conformal factor");
  sim->add_option("--conformal-log-spread", model.conformal_log_spread,
                  "std-dev of log conformal factor");
  sim->add_option("--ortho-interval", interval, "QR re-orthonormalization period");
  sim->add_option("--config", config_path, "model config JSON (overrides flags)");
  sim->add_flag("--json", as_json, "emit JSON");

  auto* cseq = app.add_subcommand("classify-seq",
                                  "uniform Lyapunov regularity of a matrix sequence");
  cseq->add_option("--input", input, "matrix sequence JSON document")->required();
  cseq->add_option("--tol", tol, "stabilization tolerance");
  cseq->add_flag("--json", as_json, "emit JSON");

  std::vector<const char*> argv;
  argv.push_back("reslab");
  for (const auto& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    auto parsed = app.get_subcommands();
    out << (parsed.empty() ? app.help() : parsed.front()->help());
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (roots->parsed()) return cmd_roots(type_from(type_str, rank), as_json, out);
    if (codim->parsed()) return cmd_codim(type_from(type_str, rank), as_json, out);
    if (limit->parsed())
      return cmd_limit_case(type_from(type_str, rank), j0, as_json, out);
    if (bounds->parsed()) return cmd_bounds(type_str, rank, all, as_json, out);
    if (vspec->parsed()) return cmd_validate_spectrum(input, as_json, out);
    if (sim->parsed()) {
      if (!config_path.empty()) {
        json cfg = slurp_json(config_path);
        model = jsonio::decode_model(cfg);
        if (cfg.contains("steps")) steps = cfg["steps"].get<long long>();
        if (cfg.contains("tol")) tol = cfg["tol"].get<double>();
      }
      return cmd_simulate(model, steps, tol, interval, as_json, out);
    }
    if (cseq->parsed()) return cmd_classify_seq(input, tol, as_json, out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  err << "usage error: no subcommand\n";
  return 2;
}

}  // namespace reslab::cli
