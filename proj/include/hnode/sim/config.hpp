#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "hnode/trim/params.hpp"

namespace hnode::sim {

enum class Strategy { None, PrivateFork, ShortTailAlpha, StateForge };
enum class TraceLevel { Full, Summary };

struct SimConfig {
    double lambda_h = 1.0;
    double lambda_a = 0.0;
    double lambda_s = 0.0;
    trim::TrimParams params;
    std::uint64_t horizon_blocks = 1000;  // stop once the honest chain reaches this length
    double horizon_time = 0;              // 0 = no time limit
    std::uint64_t seed = 1;
    Strategy strategy = Strategy::None;
    std::vector<double> bootstrap_schedule;
    unsigned txs_per_block = 2;
    bool must_be_secure = false;
    bool check_theorem1 = false;
    bool allow_dishonest_majority = false;
    bool keep_archive = true;
    TraceLevel trace_level = TraceLevel::Full;
    std::vector<std::uint64_t> snapshot_lengths;
};

const char* to_string(Strategy s) noexcept;
Strategy strategy_from_string(std::string_view s);

/// key = value lines, '#' comments. Unknown keys are an error.
SimConfig parse_config(std::string_view text);
SimConfig load_config(const std::string& path);
std::string format_config(const SimConfig& cfg);
/// Throws ConfigInvalid.
void validate(const SimConfig& cfg);

/// Parameters satisfying every Theorem 1 inequality at lambda_a/lambda_h = 0.33.
SimConfig preset_secure();
/// Small parameters under which trimming actually happens at 10^3..10^5
/// blocks. Not Theorem 1 valid (a is far below 8/delta^2).
SimConfig preset_desk();

}  // namespace hnode::sim
