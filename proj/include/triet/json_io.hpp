#ifndef TRIET_JSON_IO_HPP
#define TRIET_JSON_IO_HPP

#include <json.hpp>

#include "triet/bridge.hpp"
#include "triet/wordstat.hpp"

namespace triet {

using Json = nlohmann::json; // std::map-backed: keys serialize sorted

/// {"exact": canonical literal, "decimal": 50 significant digits}
Json number_json(const QuadraticNumber& x);

Json interval_json(const Interval& I);
Json keane_json(const KeanePoints& K);
Json induction_json(const InductionResult& res);
Json induced_map_json(const InducedMap& m);
Json return_times_json(const ReturnTimeSet& rts);
Json gap_report_json(const GapReport& rep);
Json bispecial_json(const Bispecial& b);
Json morphism_json(const Morphism& m);
Json recovered_json(const RecoveredParameters& p);
Json invariance_json(const InvarianceReport& rep);
Json hks_json(const HksReport& rep);

std::string decimal_string(const QuadraticNumber& x, unsigned digits = 50);

} // namespace triet

#endif
