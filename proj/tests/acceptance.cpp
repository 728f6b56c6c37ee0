// Acceptance run: one PASS/FAIL line per criterion, tolerances pinned below.
// Usage: hnode_acceptance [--out DIR] [--only N]

#include <algorithm>
#include <bit>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "hnode/chain/mining.hpp"
#include "hnode/compare/comparator.hpp"
#include "hnode/harness/experiment.hpp"
#include "hnode/oracle/oracle.hpp"
#include "hnode/trim/goodness.hpp"
#include "support.hpp"

using namespace hnode;
namespace fs = std::filesystem;

namespace {

// Pinned tolerances.
constexpr int kForkPairs = 1000;
constexpr int kSeeds = 50;
constexpr std::uint64_t kSecureHorizon = 50'000;
constexpr double kRatioSecure = 0.33;
constexpr int kShortTailSeeds = 20;
constexpr int kShortTailNeeded = 15;
constexpr std::uint64_t kShortTailHorizon = 100'000;
constexpr double kShortTailC0 = 0.25;
constexpr double kShortTailRatio = 0.4;
constexpr double kMinCorrelation = 0.9;
constexpr int kAllowedOutliers = 1;  // of 50 seeds
constexpr std::uint64_t kForgeHorizon = 50'000;
constexpr int kForgeInversionNeeded = 45;
constexpr int kSmallChains = 500;
constexpr std::uint64_t kPoissonN = 1000;

struct Line {
    int id;
    bool pass;
    std::string text;
    double seconds;
};

fs::path out_dir = "acceptance-out";
std::vector<Line> lines;
std::vector<harness::RunOutcome> all_runs;  // for the replay and determinism checks
struct Rerun {
    std::string name;
    harness::ExperimentSpec spec;
    std::string trace;
    std::string metrics;
};
std::vector<Rerun> reruns;

void report(int id, bool pass, const std::string& text, double secs) {
    std::printf("criterion %2d %s  %s  [%.1fs]\n", id, pass ? "PASS" : "FAIL", text.c_str(), secs);
    std::fflush(stdout);
    lines.push_back({id, pass, text, secs});
}

std::string fmt(const char* f, auto... args) {
    char buf[512];
    std::snprintf(buf, sizeof buf, f, args...);
    return buf;
}

void write(const fs::path& p, const std::string& text) {
    std::ofstream f(p, std::ios::binary);
    f << text;
}

std::vector<harness::RunOutcome> run(const std::string& name, harness::ExperimentSpec spec, const harness::RunHook& hook = {}) {
    spec.name = name;
    spec.keep_traces = true;
    auto runs = harness::run_experiment(spec, hook);
    std::vector<harness::MetricsRow> rows;
    for (const auto& r : runs) rows.push_back(r.row);
    std::string metrics = harness::metrics_jsonl(name, spec.config, rows);
    write(out_dir / (name + ".metrics.jsonl"), metrics);
    // Keep the first seed's trace for the determinism rerun.
    harness::ExperimentSpec one = spec;
    one.seed_hi = one.seed_lo;
    reruns.push_back({name, one, sim::render_trace(runs.front().trace),
                      harness::metrics_jsonl(name, spec.config, {runs.front().row})});
    for (auto& r : runs) {
        harness::RunOutcome light;
        light.seed = r.seed;
        light.replay_checked = r.replay_checked;
        light.replay_ok = r.replay_ok;
        light.replay_note = r.replay_note;
        all_runs.push_back(std::move(light));
    }
    return runs;
}

double since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// 1. Untrimmed forks: compare must reduce to the longest-chain rule.
void criterion1() {
    auto t0 = std::chrono::steady_clock::now();
    std::mt19937_64 rng(1);
    MiningOracle m(MiningMode::Sim, 0, 1);
    auto grow = [&](ChainView v, std::size_t n) {
        for (std::size_t i = 0; i < n; ++i) v.push_back(std::make_shared<const Block>(m.mine_header(v.back(), Digest{}, Digest{})));
        return v;
    };
    ChainView genesis(std::vector<BlockPtr>{std::make_shared<const Block>(m.genesis(Digest{}))});
    trim::TrimParams p = sim::preset_secure().params;
    oracle::OracleReport rep;
    for (int i = 0; i < kForkPairs; ++i) {
        ChainView base = grow(genesis, 1 + rng() % 300);
        ChainView a = grow(base, rng() % 40);
        ChainView b = grow(base, rng() % 40);
        int want = oracle::full_compare(a, b);
        int got = compare::compare(trim::TrimmedChain(a), trim::TrimmedChain(b), p).winner;
        rep.record(want == got, {"pair " + std::to_string(i), std::to_string(want), std::to_string(got)});
    }
    report(1, rep.clean(),
           fmt("compare vs full_compare on %llu untrimmed fork pairs: %llu agree (need 100%%)",
               (unsigned long long)rep.checked, (unsigned long long)rep.agreements),
           since(t0));
}

// 2. Theorem-1-valid parameters, PrivateFork adversary at 0.33.
void criterion2() {
    auto t0 = std::chrono::steady_clock::now();
    harness::ExperimentSpec spec;
    spec.config = sim::preset_secure();
    spec.config.lambda_a = kRatioSecure;
    spec.config.strategy = sim::Strategy::PrivateFork;
    spec.config.horizon_blocks = kSecureHorizon;
    spec.config.trace_level = sim::TraceLevel::Summary;
    spec.seed_lo = 1;
    spec.seed_hi = kSeeds;
    auto runs = run("c2_congruence", spec);
    std::uint64_t viol = 0, attacked = 0, checks = 0, trims = 0, reorgs = 0;
    for (const auto& r : runs) {
        viol += r.row.monitors.congruence_violations;
        attacked += r.row.monitors.trim_attacked;
        checks += r.row.monitors.congruence_checks;
        trims += r.row.trims;
        reorgs += r.row.monitors.reorgs;
    }
    report(2, viol == 0 && attacked == 0,
           fmt("secure preset, %d seeds to B=%llu: congruence violations %llu, trim-attacked %llu (need 0, 0); "
               "%llu comparisons, %llu trims, %llu reorgs",
               kSeeds, (unsigned long long)kSecureHorizon, (unsigned long long)viol, (unsigned long long)attacked,
               (unsigned long long)checks, (unsigned long long)trims, (unsigned long long)reorgs),
           since(t0));
}

// 3. Logarithmic tail with a small constant loses to the alpha-sequence attack.
void criterion3() {
    auto t0 = std::chrono::steady_clock::now();
    harness::ExperimentSpec spec;
    spec.config = sim::preset_desk();
    spec.config.lambda_a = kShortTailRatio;
    spec.config.params.tail = {trim::TailOverride::Kind::Log, kShortTailC0};
    spec.config.strategy = sim::Strategy::ShortTailAlpha;
    spec.config.horizon_blocks = kShortTailHorizon;
    spec.config.trace_level = sim::TraceLevel::Summary;
    spec.seed_lo = 1;
    spec.seed_hi = kShortTailSeeds;
    auto runs = run("c3_short_tail", spec);
    int hit = 0;
    for (const auto& r : runs) hit += r.row.monitors.trim_attacked > 0;
    report(3, hit >= kShortTailNeeded,
           fmt("tail c0*ln(1+B), c0=%.2f, ratio %.1f, %d seeds to %llu: trim-attacked in %d seeds (need >= %d)",
               kShortTailC0, kShortTailRatio, kShortTailSeeds, (unsigned long long)kShortTailHorizon, hit, kShortTailNeeded),
           since(t0));
}

// 4. Succinctness of honest nodes.
void criterion4() {
    auto t0 = std::chrono::steady_clock::now();
    const std::vector<std::uint64_t> scales{1000, 10000, 100000};
    harness::ExperimentSpec spec;
    spec.config = sim::preset_desk();
    spec.config.lambda_a = 0;
    spec.config.horizon_blocks = scales.back();
    spec.config.snapshot_lengths = scales;
    spec.config.trace_level = sim::TraceLevel::Summary;
    spec.seed_lo = 1;
    spec.seed_hi = kSeeds;
    auto runs = run("c4_succinctness", spec);

    std::vector<double> xs, ys;
    int monotone = 0;
    std::vector<int> mu_ok(scales.size(), 0), range_ok(scales.size(), 0);
    for (const auto& r : runs) {
        const auto& snaps = r.trace.snapshots;
        if (snaps.size() != scales.size()) continue;
        bool dec = true;
        for (std::size_t i = 0; i < snaps.size(); ++i) {
            double B = static_cast<double>(snaps[i].length);
            xs.push_back(std::pow(std::log(B), 3));
            ys.push_back(static_cast<double>(snaps[i].retained));
            if (i > 0) {
                dec &= static_cast<double>(snaps[i].retained) / B <
                       static_cast<double>(snaps[i - 1].retained) / static_cast<double>(snaps[i - 1].length);
            }
            mu_ok[i] += snaps[i].mu_h <= static_cast<std::uint32_t>(std::ceil(std::log2(B)));
            bool ranges = std::all_of(snaps[i].ranges.begin(), snaps[i].ranges.end(),
                                      [](const sim::RangeStat& s) { return s.count <= 4 * s.f; });
            range_ok[i] += ranges;
        }
        monotone += dec;
    }
    double n = static_cast<double>(xs.size());
    double mx = 0, my = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) mx += xs[i] / n, my += ys[i] / n;
    double sxy = 0, sxx = 0, syy = 0, sx2 = 0, sxy0 = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        sxy += (xs[i] - mx) * (ys[i] - my);
        sxx += (xs[i] - mx) * (xs[i] - mx);
        syy += (ys[i] - my) * (ys[i] - my);
        sx2 += xs[i] * xs[i];
        sxy0 += xs[i] * ys[i];
    }
    double corr = sxy / std::sqrt(sxx * syy);
    double C = sxy0 / sx2;
    bool pass = corr >= kMinCorrelation && monotone == kSeeds;
    std::string per;
    for (std::size_t i = 0; i < scales.size(); ++i) {
        pass &= mu_ok[i] >= kSeeds - kAllowedOutliers && range_ok[i] >= kSeeds - kAllowedOutliers;
        per += fmt(" B=%llu: mu_h ok %d, ranges<=4f %d;", (unsigned long long)scales[i], mu_ok[i], range_ok[i]);
    }
    report(4, pass,
           fmt("retained ~ C ln^3 B with C=%.3f, correlation %.3f (need >= %.1f); retained/B decreasing in %d/%d seeds;%s"
               " (need >= %d/%d)",
               C, corr, kMinCorrelation, monotone, kSeeds, per.c_str(), kSeeds - kAllowedOutliers, kSeeds),
           since(t0));
}

// 5. State forgery: slow forger never catches up, fast forger does.
void criterion5() {
    auto t0 = std::chrono::steady_clock::now();
    harness::ExperimentSpec spec;
    spec.config = sim::preset_desk();
    spec.config.lambda_a = 0;
    spec.config.strategy = sim::Strategy::StateForge;
    spec.config.horizon_blocks = kForgeHorizon;
    spec.config.trace_level = sim::TraceLevel::Summary;
    spec.seed_lo = 1;
    spec.seed_hi = kSeeds;

    spec.config.lambda_s = 1e-3;
    auto slow = run("c5_forge_slow", spec);
    std::uint64_t slow_flags = 0;
    for (const auto& r : slow) slow_flags += r.row.monitors.state_attacked;

    spec.config.lambda_s = spec.config.lambda_h;
    auto fast = run("c5_forge_fast", spec);
    int fast_hit = 0;
    for (const auto& r : fast) fast_hit += r.row.monitors.state_attacked > 0;

    report(5, slow_flags == 0 && fast_hit >= kForgeInversionNeeded,
           fmt("lambda_s=1e-3: state-attacked %llu over %d seeds (need 0); lambda_s=lambda_h: flagged in %d seeds (need >= %d)",
               (unsigned long long)slow_flags, kSeeds, fast_hit, kForgeInversionNeeded),
           since(t0));
}

// 6. Joining nodes get the honest chain and state.
void criterion6() {
    auto t0 = std::chrono::steady_clock::now();
    harness::ExperimentSpec spec;
    spec.config = sim::preset_desk();
    spec.config.strategy = sim::Strategy::PrivateFork;
    spec.config.horizon_blocks = 4000;
    spec.config.bootstrap_schedule = {3000};
    spec.config.trace_level = sim::TraceLevel::Summary;
    spec.seed_lo = 1;
    spec.seed_hi = kSeeds;
    auto runs = run("c6_bootstrap", spec);
    std::uint64_t joins = 0, attacked = 0, failures = 0, offered = 0, rejected = 0;
    for (const auto& r : runs) {
        const auto& m = r.row.monitors;
        joins += m.bootstrap_joins;
        attacked += m.bootstrap_attacked;
        failures += m.bootstrap_failures;
        offered += m.perturbed_offers;
        rejected += r.trace.monitors.perturbed_rejected;
    }
    report(6, joins == kSeeds && attacked == 0 && failures == 0 && rejected == offered && offered == joins,
           fmt("%llu joins: bootstrap-attacked %llu, failed %llu (need 0, 0); perturbed states rejected %llu/%llu (need all)",
               (unsigned long long)joins, (unsigned long long)attacked, (unsigned long long)failures,
               (unsigned long long)rejected, (unsigned long long)offered),
           since(t0));
}

// 7. The practical goodness predicate never accepts a non-dominant chain.
void criterion7() {
    auto t0 = std::chrono::steady_clock::now();
    std::mt19937_64 rng(7);
    oracle::OracleReport rep;
    int accepted = 0, combos = 0, rejected = 0;
    for (int t = 0; t < kSmallChains; ++t) {
        std::size_t n = 6 + rng() % 15;  // 6..20 blocks after genesis
        std::vector<std::uint32_t> lv;
        for (std::size_t i = 0; i < n; ++i) lv.push_back(static_cast<std::uint32_t>(std::countr_zero(rng() | (1ULL << 4))));
        ChainView c = testutil::chain_with_levels(lv, 100 + t);
        for (std::uint32_t mu = 1; mu <= 3; ++mu) {
            ChainView up = c.slice_by_index(1, std::nullopt).upchain(mu);
            if (up.empty()) continue;
            ChainView down = downchain(up, c);
            if (down.size() > 20) down = down.slice(-20, std::nullopt);
            for (std::uint64_t g = 1; g <= 4; ++g) {
                bool ok = oracle::dominant_bruteforce(down, mu, g, 0.3);
                ++combos;
                rejected += !ok;
                if (!trim::goodness_check(up, c, mu, 0.3, g)) continue;
                ++accepted;
                rep.record(ok, {fmt("chain %d mu %u g %llu", t, mu, (unsigned long long)g), "dominant", "not dominant"});
            }
        }
    }
    report(7, rep.clean() && accepted > 0,
           fmt("%d random chains, %d (chain, mu, g) cases, brute force rejects %d; practical predicate accepts %d, "
               "%zu of them not dominant (need 0)",
               kSmallChains, combos, rejected, accepted, rep.counterexamples.size()),
           since(t0));
}

// 9. Poisson fidelity: adversary events per 10^3 honest events.
void criterion9() {
    auto t0 = std::chrono::steady_clock::now();
    harness::ExperimentSpec spec;
    spec.config = sim::preset_desk();
    spec.config.lambda_h = 1.0;
    spec.config.lambda_a = 0.5;
    spec.config.strategy = sim::Strategy::PrivateFork;
    spec.config.horizon_blocks = 0;
    spec.config.horizon_time = 1500;
    spec.config.trace_level = sim::TraceLevel::Summary;
    spec.seed_lo = 1;
    spec.seed_hi = kSeeds;
    auto runs = run("c9_poisson", spec);
    int violated = 0;
    std::uint64_t other_checks = 0, other_fail = 0;
    for (const auto& r : runs) {
        bool enough = r.trace.honest_times.size() >= kPoissonN;
        if (!enough || !oracle::adversary_count_bound(r.trace, spec.config, kPoissonN)) ++violated;
        auto rep = oracle::poisson_validators(r.trace, spec.config);
        other_checks += rep.checked;
        other_fail += rep.counterexamples.size();
    }
    report(9, violated <= kAllowedOutliers,
           fmt("adversary events <= 1.3^2 * 0.5 * %llu violated in %d/%d seeds (need <= %d); "
               "other tail checks: %llu/%llu outside 0.3",
               (unsigned long long)kPoissonN, violated, kSeeds, kAllowedOutliers, (unsigned long long)other_fail,
               (unsigned long long)other_checks),
           since(t0));
}

// 8. Every simulation above was replayed by the oracle.
void criterion8() {
    std::size_t checked = 0, bad = 0;
    std::string first;
    for (const auto& r : all_runs) {
        if (!r.replay_checked) continue;
        ++checked;
        if (!r.replay_ok) {
            ++bad;
            if (first.empty()) first = " first: seed " + std::to_string(r.seed) + " " + r.replay_note;
        }
    }
    report(8, checked > 0 && bad == 0 && checked == all_runs.size(),
           fmt("incremental state vs replay_state at tip and trim point: %zu/%zu runs checked, %zu mismatches (need 0)%s",
               checked, all_runs.size(), bad, first.c_str()),
           0);
}

// 10. Rerun the first seed of every experiment and compare bytes.
void criterion10() {
    auto t0 = std::chrono::steady_clock::now();
    int same = 0;
    std::string diff;
    for (const auto& r : reruns) {
        harness::ExperimentSpec spec = r.spec;
        spec.keep_traces = true;
        auto again = harness::run_experiment(spec);
        std::string trace = sim::render_trace(again.front().trace);
        std::string metrics = harness::metrics_jsonl(r.name, spec.config, {again.front().row});
        write(out_dir / (r.name + ".seed1.a.trace.jsonl"), r.trace);
        write(out_dir / (r.name + ".seed1.b.trace.jsonl"), trace);
        bool ok = trace == r.trace && metrics == r.metrics;
        same += ok;
        if (!ok) diff += " " + r.name;
    }
    report(10, same == static_cast<int>(reruns.size()) && same > 0,
           fmt("%d/%zu reruns byte-identical in trace and metrics%s%s", same, reruns.size(), diff.empty() ? "" : "; differ:",
               diff.c_str()),
           since(t0));
}

}  // namespace

int main(int argc, char** argv) {
    int only = 0;
    for (int i = 1; i < argc; ++i) {
        std::string a = argv[i];
        if (a == "--out" && i + 1 < argc) out_dir = argv[++i];
        else if (a == "--only" && i + 1 < argc) only = std::stoi(argv[++i]);
        else {
            std::fprintf(stderr, "usage: hnode_acceptance [--out DIR] [--only N]\n");
            return 2;
        }
    }
    fs::create_directories(out_dir);

    const std::vector<std::pair<int, std::function<void()>>> steps{
        {1, criterion1}, {2, criterion2}, {3, criterion3}, {4, criterion4}, {5, criterion5},
        {6, criterion6}, {7, criterion7}, {9, criterion9}, {8, criterion8}, {10, criterion10},
    };
    for (const auto& [id, fn] : steps) {
        if (only != 0 && only != id) continue;
        try {
            fn();
        } catch (const std::exception& e) {
            report(id, false, std::string("aborted: ") + e.what(), 0);
        }
    }
    int failed = 0;
    for (const auto& l : lines) failed += !l.pass;
    std::printf("%zu criteria run, %d failed\n", lines.size(), failed);
    return failed == 0 ? 0 : 1;
}
