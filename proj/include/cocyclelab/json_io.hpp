#pragma once

// JSON views of the report types, shared by the CLI and the test suites.
// Key order and number formatting come from nlohmann::json, so identical
// inputs serialize byte-identically.

#include <json.hpp>

#include "cocyclelab/cocycles.hpp"
#include "cocyclelab/cohomology.hpp"
#include "cocyclelab/weyl.hpp"

namespace cocyclelab {

nlohmann::json to_json(const LongestElementReport& rep);
nlohmann::json to_json(const InvariantDims& inv, const CohomologyTable& table);
nlohmann::json to_json(const SpectralPage& page);
nlohmann::json to_json(const std::vector<SpectralPage>& pages);
nlohmann::json to_json(const VerificationReport& rep);

}  // namespace cocyclelab
