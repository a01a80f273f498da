#ifndef PADIC_JSON_IO_HPP
#define PADIC_JSON_IO_HPP

#include <json.hpp>

#include "padic/dynamics.hpp"
#include "padic/lubin.hpp"
#include "padic/newton.hpp"
#include "padic/ring.hpp"
#include "padic/series.hpp"

namespace padic {

using Json = nlohmann::json;

// integers: emitted as JSON numbers when they fit in 53 bits, decimal
// strings otherwise; both accepted on input
Json int_to_json(const Int& x);
Int int_from_json(const Json& j);

Json config_to_json(const RingConfig& cfg);
ConfigPtr config_from_json(const Json& j);

Json kscalar_to_json(const KScalar& x);  // {"shift":..,"prec":..,"val":[..]}
KScalar kscalar_from_json(const ConfigPtr& cfg, const Json& j);

Json series1_to_json(const TruncSeries1& s);
TruncSeries1 series1_from_json(const ConfigPtr& cfg, const Json& j);

Json series2_to_json(const TruncSeries2& s);
TruncSeries2 series2_from_json(const ConfigPtr& cfg, const Json& j);

Json pair_to_json(const DynPair& pair);
DynPair pair_from_json(const Json& j);

Json polygon_to_json(const NewtonPolygon& np);

Json logresult_to_json(const LogResult& lr);
LogResult logresult_from_json(const ConfigPtr& cfg, const Json& j);

Json report_to_json(const HypothesisReport& rep);
Json verdict_to_json(const ConjectureVerdict& v);

}  // namespace padic

#endif
