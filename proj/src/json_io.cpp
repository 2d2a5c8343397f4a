#include "reslab/json_io.hpp"

namespace reslab::jsonio {

json encode(const Rational& r) { return json::array({r.num(), r.den()}); }

json encode(const RationalVector& v) {
  json out = json::array();
  for (std::size_t i = 0; i < v.dim(); ++i) out.push_back(encode(v[i]));
  return out;
}

json encode_integer_vector(const RationalVector& v) {
  json out = json::array();
  for (std::size_t i = 0; i < v.dim(); ++i) {
    if (!v[i].is_integer())
      throw std::logic_error("encode_integer_vector: non-integral entry");
    out.push_back(v[i].num());
  }
  return out;
}

Rational decode_rational(const json& j) {
  if (j.is_number_integer()) return Rational(j.get<long long>());
  if (j.is_array() && j.size() == 2 && j[0].is_number_integer() &&
      j[1].is_number_integer())
    return Rational(j[0].get<long long>(), j[1].get<long long>());
  throw std::invalid_argument("expected integer or [num, den] pair: " + j.dump());
}

RationalVector decode_vector(const json& j) {
  if (!j.is_array()) throw std::invalid_argument("expected array of rationals");
  std::vector<Rational> out;
  out.reserve(j.size());
  for (const auto& e : j) out.push_back(decode_rational(e));
  return RationalVector(std::move(out));
}

namespace {
json encode_vectors(const std::vector<RationalVector>& vs) {
  json out = json::array();
  for (const auto& v : vs) out.push_back(encode(v));
  return out;
}
}  // namespace

json encode(const rootsys::RootSystem& rs) {
  json j;
  j["schema_version"] = kSchemaVersion;
  j["type"] = rs.type.label();
  j["family"] = rootsys::family_name(rs.type.family);
  j["rank"] = rs.type.rank;
  j["ambient_dim"] = rs.ambient_dim;
  j["simple"] = encode_vectors(rs.simple);
  j["roots"] = encode_vectors(rs.roots);
  return j;
}

rootsys::RootSystem decode_root_system(const json& j) {
  auto type = rootsys::parse_type(j.at("type").get<std::string>());
  rootsys::RootSystem rs = rootsys::build(type);
  // the build is canonical; verify the document matches it bit-exactly
  json expect = encode(rs);
  if (j.at("roots") != expect["roots"] || j.at("simple") != expect["simple"] ||
      j.at("ambient_dim") != expect["ambient_dim"])
    throw std::invalid_argument("root system document does not match canonical " +
                                type.label());
  return rs;
}

json encode(const resonance::Configuration& c) {
  json j;
  j["r"] = c.r;
  j["center_index"] = c.center_index;
  json match = json::array();
  for (auto [a, b] : c.matching) match.push_back(json::array({a, b}));
  j["matching"] = match;
  json scal = json::array();
  for (const auto& s : c.scalings) scal.push_back(encode(s));
  j["scalings"] = scal;
  j["functionals"] = encode_vectors(c.functionals);
  j["chi"] = encode(c.chi);
  return j;
}

json encode(const resonance::LimitCaseReport& rep, int k_bound) {
  json j;
  j["schema_version"] = kSchemaVersion;
  j["type"] = rep.type.label();
  j["r_g"] = rep.r_g;
  j["verdict"] = resonance::to_string(rep.verdict);
  j["k_bound"] = k_bound;
  j["refined_bound"] = k_bound;
  json cases = json::array();
  for (const auto& c : rep.cases) {
    json jc;
    jc["j0"] = c.j0;
    jc["complement_size"] = c.complement_size;
    json centers = json::array();
    for (const auto& v : c.centers) centers.push_back(encode_integer_vector(v));
    jc["centers"] = centers;
    jc["admissible_count"] = c.admissible_count;
    jc["admits_configuration"] = c.admits_configuration;
    jc["admits_uniform_direction"] = c.admits_uniform_direction;
    jc["configuration"] = c.configuration ? encode(*c.configuration) : json(nullptr);
    if (c.uniform) {
      jc["uniform_direction"] = c.uniform->x.is_integral()
                                    ? encode_integer_vector(c.uniform->x)
                                    : encode(c.uniform->x);
      jc["uniform_unique"] = c.uniform->unique;
    } else {
      jc["uniform_direction"] = nullptr;
    }
    if (c.failure) jc["failure"] = resonance::to_string(*c.failure);
    cases.push_back(std::move(jc));
  }
  j["j0_cases"] = cases;
  return j;
}

json encode(const resonance::BoundRecord& rec) {
  json j;
  j["type"] = rec.type.label();
  j["r_g"] = rec.r_g;
  j["rank_bound"] = rec.rank_bound;
  j["resonance_bound"] = rec.resonance_bound;
  j["limit_case"] = resonance::to_string(rec.limit_case);
  j["k_bound"] = rec.k_bound;
  return j;
}

json encode(const confstruct::ConformalSpectrum& s) {
  json j;
  j["schema_version"] = kSchemaVersion;
  j["p"] = s.p;
  j["q"] = s.q;
  j["chi"] = s.chi ? encode(*s.chi) : json(nullptr);
  json blocks = json::array();
  for (const auto& b : s.blocks) {
    json jb;
    jb["functional"] = encode(b.functional);
    jb["multiplicity"] = b.multiplicity;
    jb["signature"] = b.signature
                          ? json(json::array({b.signature->first, b.signature->second}))
                          : json("isotropic");
    blocks.push_back(std::move(jb));
  }
  j["blocks"] = blocks;
  return j;
}

confstruct::ConformalSpectrum decode_spectrum(const json& j) {
  std::vector<confstruct::SpectrumBlock> blocks;
  for (const auto& jb : j.at("blocks")) {
    confstruct::SpectrumBlock b;
    b.functional = decode_vector(jb.at("functional"));
    b.multiplicity = jb.value("multiplicity", 1);
    if (jb.contains("signature") && !jb["signature"].is_string())
      b.signature = std::make_pair(jb["signature"][0].get<int>(),
                                   jb["signature"][1].get<int>());
    blocks.push_back(std::move(b));
  }
  std::optional<RationalVector> chi;
  if (j.contains("chi") && !j["chi"].is_null()) chi = decode_vector(j["chi"]);
  return confstruct::ConformalSpectrum::make(j.at("p").get<int>(),
                                             j.at("q").get<int>(), std::move(blocks),
                                             std::move(chi));
}

json encode(const std::vector<confstruct::Violation>& vs) {
  json out = json::array();
  for (const auto& v : vs) {
    json j;
    j["rule"] = v.rule;
    j["detail"] = v.detail;
    j["indices"] = v.indices;
    out.push_back(std::move(j));
  }
  return out;
}

json encode(const lyapsim::CocycleModel& m) {
  json j;
  j["p"] = m.p;
  j["q"] = m.q;
  j["boost_scale"] = m.boost_scale;
  j["rotation_scale"] = m.rotation_scale;
  j["conformal_log_mean"] = m.conformal_log_mean;
  j["conformal_log_spread"] = m.conformal_log_spread;
  j["seed"] = m.seed;
  return j;
}

lyapsim::CocycleModel decode_model(const json& j) {
  lyapsim::CocycleModel m;
  m.p = j.at("p").get<int>();
  m.q = j.at("q").get<int>();
  m.boost_scale = j.value("boost_scale", m.boost_scale);
  m.rotation_scale = j.value("rotation_scale", m.rotation_scale);
  m.conformal_log_mean = j.value("conformal_log_mean", m.conformal_log_mean);
  m.conformal_log_spread = j.value("conformal_log_spread", m.conformal_log_spread);
  m.seed = j.value("seed", m.seed);
  m.validate();
  return m;
}

json encode(const lyapsim::LyapunovEstimate& est) {
  json j;
  j["p"] = est.p;
  j["q"] = est.q;
  j["steps"] = est.steps;
  j["exponents"] = est.exponents;
  j["chi_hat"] = est.chi_hat;
  j["grouping"] = est.grouping;
  return j;
}

json encode(const lyapsim::PairingReport& rep) {
  json j;
  j["tol"] = rep.tol;
  j["r"] = rep.r;
  j["group_means"] = rep.group_means;
  j["group_sizes"] = rep.group_sizes;
  j["pair_residuals"] = rep.pair_residuals;
  j["sum_residual"] = rep.sum_residual;
  j["rules"] = {{"pairing", rep.pairing_ok},
                {"sum", rep.sum_ok},
                {"count", rep.count_ok}};
  j["sizes_symmetric"] = rep.sizes_symmetric;
  j["pass"] = rep.pass();
  return j;
}

lyapsim::MatrixSequence decode_matrix_sequence(const json& j) {
  lyapsim::MatrixSequence seq;
  seq.times = j.at("times").get<std::vector<double>>();
  for (const auto& jm : j.at("mats")) {
    const int n = static_cast<int>(jm.size());
    lyapsim::Mat m(n);
    for (int r = 0; r < n; ++r) {
      if (static_cast<int>(jm[r].size()) != n)
        throw std::invalid_argument("matrix rows must be square");
      for (int c = 0; c < n; ++c) m.at(r, c) = jm[r][c].get<double>();
    }
    seq.mats.push_back(std::move(m));
  }
  seq.validate();
  return seq;
}

json encode(const lyapsim::RegularityVerdict& v) {
  json j;
  j["verdict"] = lyapsim::to_string(v.kind);
  if (v.kind == lyapsim::Regularity::Uniform) j["exponent"] = v.exponent;
  j["chi_det"] = v.chi_det;
  j["det_rates"] = v.det_rates;
  j["norm_rates"] = v.norm_rates;
  return j;
}

}  // namespace reslab::jsonio
