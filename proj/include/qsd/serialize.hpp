#ifndef QSD_SERIALIZE_HPP
#define QSD_SERIALIZE_HPP

#include <json.hpp>

#include "qsd/counterexamples.hpp"
#include "qsd/entropy.hpp"
#include "qsd/enumerate.hpp"

namespace qsd {

using Json = nlohmann::ordered_json;

// Operator format: {"window": "<bits>", "entries": [{"row","col","value"}]}
// listing only pairs with rank(row) ≤ rank(col); the lower triangle is
// implied by hermitian symmetry. Readers reject unknown keys, lower-triangle
// rows and non-real diagonals.
Json operatorToJson(const HermOp& op);
HermOp operatorFromJson(const Json& j);

// {"window": "<bits>", "amps": [{"index","value"}]}
Json vecToJson(const Vec& v);
Vec vecFromJson(const Json& j);

// {"kind", "table": [{"input","value","cost"}], "rule": {"name","params"}};
// input arrays: classical ["bits", k], pointwise ["w","v",k], matrix [k].
Machine machineFromJson(const Json& j);
Registry registryFromJson(const Json& j);

// {"rho": {"family","params"}, "sigma": {"family","params"}, "f": {"family","params"}}
// with the closed-form families: rho in {geometric-diagonal, scaled-projection,
// constant}, sigma in {geometric-diagonal-density, constant}, f in
// {affine-rank, fixed}.
ConjectureBundle bundleFromJson(const Json& j);

Json machineInputToJson(const MachineInput& input);
Json machineValueToJson(const MachineValue& value);
Json traceEventToJson(const TraceEvent& event, std::size_t machineIndex);
Json witnessReportToJson(const WitnessReport& report);
Json extRealToJson(const ExtReal& value);

Json loadJsonFile(const std::string& path);

// Config readers reject unrecognized keys.
void requireKeys(const Json& object, std::initializer_list<const char*> allowed,
                 const std::string& context);

}  // namespace qsd

#endif
