#pragma once

#include "packing/decomposition.hpp"
#include "packing/stability.hpp"
#include "packing/syzygy.hpp"

#include <json.hpp>

namespace packing {

nlohmann::json to_json(const Partition& p);
nlohmann::json to_json(const NPartition& l);

/// Canonical list form: [{"lambda": [[...],...], "mult": m}, ...], sorted.
nlohmann::json to_json(const Decomposition& dec);
Decomposition decomposition_from_json(const nlohmann::json& j, const Tuple& ambient);

/// {"p":..., "q":..., "d":..., "b":..., "entries":[...]}
nlohmann::json betti_entry_json(const SyzygyQuery& query, const Decomposition& dec);
nlohmann::json to_json(const BettiTable& table);

nlohmann::json homology_json(const Tuple& N, const Tuple& d, int k, const Decomposition& dec);

nlohmann::json to_json(const StabilityReport& report);
nlohmann::json to_json(const SyzygyStabilityReport& report);
nlohmann::json to_json(const LesReport& report);

}  // namespace packing
