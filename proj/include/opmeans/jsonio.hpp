#pragma once

// JSON forms of the core objects. Matrices serialize as
// {dim, re: row-major, im: row-major}; map descriptors carry their variant
// tag and seeds (dense factors are regenerated, never stored).

#include "json.hpp"
#include "opmeans/checks.hpp"
#include "opmeans/hermitian.hpp"
#include "opmeans/maps.hpp"
#include "opmeans/means.hpp"

namespace opmeans {

nlohmann::ordered_json matrix_json(const HermitianMatrix& m);
HermitianMatrix matrix_from_json(const nlohmann::json& j);

nlohmann::ordered_json map_json(const maps::MapDescriptor& d);

// {kind, v} for the canonical means, {kind: "representing", v, label} for
// registry means.
nlohmann::ordered_json mean_json(const means::MeanDescriptor& d);

nlohmann::ordered_json params_json(const checks::CheckParams& p);
nlohmann::ordered_json witness_json(const checks::CheckResult& r);

}  // namespace opmeans
