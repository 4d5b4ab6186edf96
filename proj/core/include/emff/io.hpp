#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "emff/config.hpp"
#include "emff/gso.hpp"
#include "emff/simulation.hpp"

namespace emff {

/// Shortest round-trip decimal rendering (std::to_chars); "nan" for NaN.
std::string format_double(double v);

std::uint64_t fnv1a64(std::string_view data);

std::string hex64(std::uint64_t v);

/// Per-round CSV: hash/seed/version header comments, a defaults line when any
/// field was defaulted, then
/// round,protocol,alive,deaths,total_residual_j,max_relative_load,ch_ids.
void write_run_csv(const std::filesystem::path& path,
                   const SimulationConfig& cfg,
                   std::span<const std::string> defaulted_fields,
                   std::span<const RoundRecord> records);

/// Run summary JSON: tool/version/seed/hash, the effective config, and the
/// lifetime report.
void write_run_json(const std::filesystem::path& path,
                    const SimulationConfig& cfg,
                    std::span<const std::string> defaulted_fields,
                    const SimulationSummary& summary);

nlohmann::json gso_config_json(const GsoConfig& cfg);

/// Kernel trace CSV: iteration,best_luciferin,mean_luciferin,mean_decision_radius.
void write_gso_trace_csv(const std::filesystem::path& path, const GsoConfig& cfg,
                         std::span<const GsoTraceRow> trace);

}  // namespace emff
