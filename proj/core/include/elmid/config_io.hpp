#pragma once

#include <cstdint>
#include <string>

#include "elmid/experiment.hpp"

namespace elmid {

// Flat JSON schema (documented in the README). Parsing starts from
// default_config(plant) and overrides whatever keys are present; unknown
// keys are rejected. plant_override, when non-empty, wins over the file's
// own "plant" key and re-bases the defaults.
ExperimentConfig parse_config(const std::string& json_text,
                              const std::string& plant_override = "");
ExperimentConfig load_config(const std::string& path,
                             const std::string& plant_override = "");

// Canonical serialized form (sorted keys, shortest round-trip numbers).
std::string serialize_config(const ExperimentConfig& config);
void save_config(const ExperimentConfig& config, const std::string& path);

// FNV-1a (64-bit) over serialize_config(config).
std::uint64_t config_hash(const ExperimentConfig& config);

}  // namespace elmid
