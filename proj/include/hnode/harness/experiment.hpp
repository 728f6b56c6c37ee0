#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "hnode/harness/metrics.hpp"
#include "hnode/sim/simulator.hpp"

namespace hnode::harness {

struct ExperimentSpec {
    std::string name;
    sim::SimConfig config;  // seed field is overwritten per run
    std::uint64_t seed_lo = 1;
    std::uint64_t seed_hi = 1;  // inclusive
    bool replay_check = true;   // needs config.keep_archive
    bool keep_traces = false;
};

struct RunOutcome {
    std::uint64_t seed = 0;
    MetricsRow row;
    sim::SimTrace trace;  // lines dropped unless keep_traces
    bool replay_checked = false;
    bool replay_ok = true;
    std::string replay_note;
};

/// Runs once per seed while the result is still in memory, e.g. to pull
/// extra numbers out of the final chain.
using RunHook = std::function<void(const sim::SimConfig&, const sim::SimResult&, RunOutcome&)>;

/// Worker count from HNODE_WORKERS (default 1).
unsigned worker_count();

/// Seeds run on a worker pool; outcomes come back in seed order, so the
/// output does not depend on the worker count.
std::vector<RunOutcome> run_experiment(const ExperimentSpec& spec, const RunHook& hook = {});

}  // namespace hnode::harness
