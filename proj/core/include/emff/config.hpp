#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include "emff/energy.hpp"
#include "emff/geometry.hpp"
#include "emff/protocol.hpp"
#include "emff/selection.hpp"

namespace emff {

enum class DeploymentShape { Disk, Square };

struct Deployment {
  DeploymentShape shape{DeploymentShape::Disk};
  double size{20.0};  // disk radius or square side, meters

  friend bool operator==(const Deployment&, const Deployment&) = default;
};

struct SimulationConfig {
  std::uint32_t node_count{4000};
  Deployment deployment{};
  Point2D center{0.0, 0.0};  // central station position
  double tx_range{250.0};
  double initial_energy{200.0};
  std::uint32_t sector_count{6};
  FitnessWeights weights{};
  AttractionParams attraction{};
  RadioModel radio{};
  ChannelModel channel{};
  std::uint32_t buffer_packets{150};
  ChPolicy protocol{ChPolicy::EmFirefly};
  std::uint32_t horizon_rounds{180};
  double rounds_per_second{1.0};  // maps wall-clock scenario durations to rounds
  LoadMetric load_metric{LoadMetric::Cumulative};
  std::uint64_t rng_seed{1};

  void validate() const;  // throws ConfigError naming the field

  friend bool operator==(const SimulationConfig&, const SimulationConfig&) = default;
};

struct ParsedConfig {
  SimulationConfig config;
  std::vector<std::string> defaulted_fields;  // keys absent from the document
};

/// Validated config with defaults applied; rejects unknown keys and any
/// invariant breach with a ConfigError naming the field.
ParsedConfig parse_config(const nlohmann::json& document);

ParsedConfig load_config_file(const std::filesystem::path& path);

/// Canonical JSON rendering; parse_config(render_config(c)).config == c.
nlohmann::json render_config(const SimulationConfig& cfg);

/// FNV-1a 64 over the canonical rendering, as 16 hex digits.
std::string config_hash_hex(const SimulationConfig& cfg);

}  // namespace emff
