#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hnode/sim/config.hpp"
#include "hnode/sim/simulator.hpp"

namespace hnode::harness {

inline constexpr int kMetricsVersion = 1;

struct MetricsRow {
    std::uint64_t seed = 0;
    std::string strategy;
    std::uint64_t honest_length = 0;
    std::uint64_t retained = 0;
    std::uint64_t bytes = 0;
    std::uint64_t trim_point = 0;
    std::uint32_t mu_h = 0;
    std::uint64_t trims = 0;
    sim::Monitors monitors;
    bool replay_ok = true;
};

/// Serialized size of the node's chain: what the node actually stores.
std::uint64_t storage_size(const trim::TrimmedChain& P);

MetricsRow metrics_row(const sim::SimConfig& cfg, const sim::SimResult& r);

/// First line is a header carrying the schema version and the config.
std::string metrics_header(const std::string& experiment, const sim::SimConfig& cfg);
std::string metrics_line(const MetricsRow& row);
std::string metrics_jsonl(const std::string& experiment, const sim::SimConfig& cfg, const std::vector<MetricsRow>& rows);

}  // namespace hnode::harness
