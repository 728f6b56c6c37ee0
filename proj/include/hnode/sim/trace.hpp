#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace hnode::sim {

struct Monitors {
    std::uint64_t trim_attacked = 0;
    double first_trim_attack_time = -1;
    std::uint64_t congruence_checks = 0;
    std::uint64_t congruence_violations = 0;
    std::uint64_t state_attacked = 0;
    double first_state_attack_time = -1;
    std::uint64_t bootstrap_joins = 0;
    std::uint64_t bootstrap_attacked = 0;
    std::uint64_t bootstrap_failures = 0;
    std::uint64_t perturbed_offers = 0;
    std::uint64_t perturbed_rejected = 0;
    std::uint64_t reorgs = 0;
    std::uint64_t attack_attempts = 0;

    [[nodiscard]] bool any_flag() const noexcept {
        return trim_attacked || congruence_violations || state_attacked || bootstrap_attacked || bootstrap_failures;
    }
};

struct RangeStat {
    std::uint32_t level = 0;
    std::uint64_t first = 0;
    std::uint64_t last = 0;
    std::uint64_t count = 0;
    std::uint64_t f = 0;
};

/// Storage picture of the honest node when its chain first reaches `length`.
struct Snapshot {
    std::uint64_t length = 0;
    std::uint64_t retained = 0;
    std::uint64_t bytes = 0;
    std::uint32_t mu_h = 0;
    std::uint64_t trim_point = 0;
    std::vector<RangeStat> ranges;
};

struct TraceSummary {
    std::uint64_t honest_events = 0;
    std::uint64_t adversary_events = 0;
    std::uint64_t forge_events = 0;
    std::uint64_t honest_length = 0;
    std::uint64_t retained = 0;
    std::uint64_t trim_point = 0;
    std::uint32_t mu_h = 0;
    std::uint64_t trims = 0;
    double end_time = 0;
};

/// Event log of one run. `lines` are already-rendered JSON records in
/// sequence order; the typed fields are what monitors and oracles read.
struct SimTrace {
    std::vector<std::string> lines;
    std::vector<double> honest_times;
    std::vector<double> adversary_times;
    std::vector<double> forge_times;
    Monitors monitors;
    TraceSummary summary;
    std::vector<Snapshot> snapshots;
    std::uint64_t seed = 0;
};

/// JSON lines: every event, then one summary record.
std::string render_trace(const SimTrace& t);
std::string summary_json(const SimTrace& t);

}  // namespace hnode::sim
