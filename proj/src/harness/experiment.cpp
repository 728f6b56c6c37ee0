#include "hnode/harness/experiment.hpp"

#include <atomic>
#include <cstdlib>
#include <exception>
#include <thread>

#include "hnode/oracle/oracle.hpp"

namespace hnode::harness {
namespace {

RunOutcome run_one(const ExperimentSpec& spec, std::uint64_t seed, const RunHook& hook) {
    sim::SimConfig cfg = spec.config;
    cfg.seed = seed;
    sim::SimResult r = sim::run_simulation(cfg);

    RunOutcome out;
    out.seed = seed;
    out.row = metrics_row(cfg, r);
    if (spec.replay_check && cfg.keep_archive) {
        out.replay_checked = true;
        ChainView full(r.archive);
        LedgerState tip = oracle::replay_state(full);
        LedgerState at_trim = oracle::replay_state(full.prefix(r.final_chain.trim_point() + 1));
        if (tip != r.tip_state) out.replay_note = "tip state differs from replay";
        else if (at_trim != r.trim_state) out.replay_note = "state at trim point differs from replay";
        out.replay_ok = out.replay_note.empty();
    }
    out.row.replay_ok = out.replay_ok;
    if (hook) hook(cfg, r, out);
    out.trace = std::move(r.trace);
    if (!spec.keep_traces) out.trace.lines.clear();
    return out;
}

}  // namespace

unsigned worker_count() {
    const char* env = std::getenv("HNODE_WORKERS");
    if (env == nullptr) return 1;
    int n = std::atoi(env);
    return n > 0 ? static_cast<unsigned>(n) : 1;
}

std::vector<RunOutcome> run_experiment(const ExperimentSpec& spec, const RunHook& hook) {
    if (spec.seed_hi < spec.seed_lo) return {};
    const std::size_t n = spec.seed_hi - spec.seed_lo + 1;
    std::vector<RunOutcome> out(n);
    std::vector<std::exception_ptr> errors(n);
    std::atomic<std::size_t> next{0};

    auto work = [&] {
        for (std::size_t i; (i = next.fetch_add(1)) < n;) {
            try {
                out[i] = run_one(spec, spec.seed_lo + i, hook);
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };
    unsigned w = std::min<std::size_t>(worker_count(), n);
    if (w <= 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < w; ++t) pool.emplace_back(work);
        for (auto& t : pool) t.join();
    }
    for (auto& e : errors) {
        if (e) std::rethrow_exception(e);
    }
    return out;
}

}  // namespace hnode::harness
