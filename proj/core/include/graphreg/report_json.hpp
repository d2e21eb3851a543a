#pragma once

#include <json.hpp>

#include "graphreg/cameron.hpp"
#include "graphreg/incidence.hpp"
#include "graphreg/regularity.hpp"
#include "graphreg/transversal.hpp"

namespace graphreg {

// JSON report schema:
//   {subject, holds, constant, witness: {kappa1, kappa2, counts}, levels: [...]}
nlohmann::json to_json(const RegularityReport& r);
nlohmann::json to_json(const TypeTransversal& tv, bool include_members = true);
nlohmann::json to_json(const AxiomsReport& r);
nlohmann::json to_json(const CameronEvaluation& ev);
nlohmann::json to_json(const SrgParams& p);
nlohmann::json histogram_json(const std::map<long long, long long>& hist);

// Type JSON schema: {"theta": [[u,v], ...], "n": order, "base": [ids]}.
nlohmann::json type_to_json(const GraphType& t);
GraphType type_from_json(const nlohmann::json& j);

}  // namespace graphreg
