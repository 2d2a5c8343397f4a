#ifndef RESLAB_JSON_IO_HPP
#define RESLAB_JSON_IO_HPP

#include <json.hpp>

#include "reslab/confstruct.hpp"
#include "reslab/lyapsim.hpp"
#include "reslab/resonance.hpp"
#include "reslab/rootsys.hpp"

namespace reslab::jsonio {

using nlohmann::json;

inline constexpr int kSchemaVersion = 1;

// Exact values never serialize as floats: rationals are [num, den] pairs and
// integer-valued vectors are plain integer arrays.
json encode(const Rational& r);
json encode(const RationalVector& v);
json encode_integer_vector(const RationalVector& v);  // requires integral entries

Rational decode_rational(const json& j);
RationalVector decode_vector(const json& j);

json encode(const rootsys::RootSystem& rs);
rootsys::RootSystem decode_root_system(const json& j);

json encode(const resonance::Configuration& c);
json encode(const resonance::LimitCaseReport& rep, int k_bound);
json encode(const resonance::BoundRecord& rec);

json encode(const confstruct::ConformalSpectrum& s);
confstruct::ConformalSpectrum decode_spectrum(const json& j);
json encode(const std::vector<confstruct::Violation>& vs);

json encode(const lyapsim::CocycleModel& m);
lyapsim::CocycleModel decode_model(const json& j);
json encode(const lyapsim::LyapunovEstimate& est);
json encode(const lyapsim::PairingReport& rep);
lyapsim::MatrixSequence decode_matrix_sequence(const json& j);
json encode(const lyapsim::RegularityVerdict& v);

}  // namespace reslab::jsonio

#endif
