// hnode: command-line front end for the simulator, trimmer and oracles.
// Exit status: 0 success, 1 a check failed or an attack flag was raised,
// 2 bad usage, bad config or unreadable input.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "hnode/chain/serialize.hpp"
#include "hnode/compare/comparator.hpp"
#include "hnode/error.hpp"
#include "hnode/harness/experiment.hpp"
#include "hnode/oracle/oracle.hpp"
#include "hnode/state/snapshot.hpp"
#include "hnode/state/state_verify.hpp"
#include "hnode/trim/serialize.hpp"
#include "hnode/trim/trimmer.hpp"

using namespace hnode;
using json = nlohmann::ordered_json;

namespace {

struct Common {
    std::string chain_out;
    std::string state_out;
    std::string config;
    std::string preset;
    std::optional<std::uint64_t> seed;
    std::string seeds;
    std::string out;
};

sim::SimConfig load(const Common& c) {
    sim::SimConfig cfg;
    if (c.preset == "secure") cfg = sim::preset_secure();
    else if (c.preset == "desk") cfg = sim::preset_desk();
    else if (!c.preset.empty()) throw Error(ErrorCode::ConfigInvalid, "unknown preset " + c.preset);
    if (!c.config.empty()) cfg = sim::load_config(c.config);
    if (c.seed) cfg.seed = *c.seed;
    return cfg;
}

std::pair<std::uint64_t, std::uint64_t> seed_range(const Common& c, const sim::SimConfig& cfg) {
    if (c.seeds.empty()) return {cfg.seed, cfg.seed};
    auto dots = c.seeds.find("..");
    if (dots == std::string::npos) throw Error(ErrorCode::ConfigInvalid, "--seeds expects a..b");
    return {std::stoull(c.seeds.substr(0, dots)), std::stoull(c.seeds.substr(dots + 2))};
}

void emit(const Common& c, const std::string& text) {
    if (c.out.empty() || c.out == "-") {
        std::cout << text;
        return;
    }
    std::ofstream f(c.out, std::ios::binary);
    if (!f) throw Error(ErrorCode::Serialization, "cannot write " + c.out);
    f << text;
}

trim::TrimmedChain load_chain(const std::string& path) {
    Bytes raw = read_file(path);
    if (raw.size() >= 4 && std::string(raw.begin(), raw.begin() + 4) == "HNTC") return trim::decode_trimmed(raw);
    return trim::TrimmedChain(decode_chain(raw));
}

void add_common(CLI::App* app, Common& c, bool seeds) {
    app->add_option("--config", c.config, "config file (key = value)");
    app->add_option("--preset", c.preset, "secure or desk");
    app->add_option("--seed", c.seed, "seed override");
    if (seeds) app->add_option("--seeds", c.seeds, "inclusive seed range a..b");
    app->add_option("--out", c.out, "output path (default stdout)");
}

int cmd_simulate(const Common& c) {
    sim::SimConfig cfg = load(c);
    sim::SimResult r = sim::run_simulation(cfg);
    emit(c, sim::render_trace(r.trace));
    if (!c.chain_out.empty()) write_file(c.chain_out, trim::encode_trimmed(r.final_chain));
    if (!c.state_out.empty()) write_file(c.state_out, encode_state(r.trim_state));
    std::cerr << sim::summary_json(r.trace) << "\n";
    return r.trace.monitors.any_flag() ? 1 : 0;
}

int cmd_attack(const Common& c) {
    sim::SimConfig cfg = load(c);
    if (cfg.strategy == sim::Strategy::None) throw Error(ErrorCode::ConfigInvalid, "attack needs a strategy in the config");
    harness::ExperimentSpec spec;
    spec.name = std::string("attack-") + sim::to_string(cfg.strategy);
    spec.config = cfg;
    std::tie(spec.seed_lo, spec.seed_hi) = seed_range(c, cfg);
    auto runs = harness::run_experiment(spec);
    std::vector<harness::MetricsRow> rows;
    bool flagged = false;
    for (auto& o : runs) {
        rows.push_back(o.row);
        flagged |= o.row.monitors.any_flag() || !o.replay_ok;
    }
    emit(c, harness::metrics_jsonl(spec.name, cfg, rows));
    return flagged ? 1 : 0;
}

int cmd_bench(const Common& c, const std::vector<std::uint64_t>& lengths) {
    sim::SimConfig cfg = load(c);
    if (!lengths.empty()) cfg.snapshot_lengths = lengths;
    if (cfg.snapshot_lengths.empty()) cfg.snapshot_lengths = {1000, 10000};
    cfg.horizon_blocks = std::max(cfg.horizon_blocks, cfg.snapshot_lengths.back());
    cfg.strategy = sim::Strategy::None;
    cfg.trace_level = sim::TraceLevel::Summary;
    cfg.keep_archive = false;
    sim::SimResult r = sim::run_simulation(cfg);
    std::string out;
    for (const auto& s : r.trace.snapshots) {
        json j;
        j["length"] = s.length;
        j["retained"] = s.retained;
        j["bytes"] = s.bytes;
        j["mu_h"] = s.mu_h;
        j["trim_point"] = s.trim_point;
        j["ranges"] = s.ranges.size();
        out += j.dump() + "\n";
    }
    emit(c, out);
    return 0;
}

int cmd_trim(const Common& c, const std::string& in) {
    sim::SimConfig cfg = load(c);
    trim::TrimmedChain P = load_chain(in);
    trim::TrimReport rep;
    trim::TrimmedChain next = trim::try_trim(P, cfg.params, &rep);
    json j;
    j["success"] = rep.success;
    j["level"] = rep.level;
    j["from"] = rep.old_trim_point;
    j["to"] = rep.new_trim_point;
    j["before"] = rep.blocks_before;
    j["after"] = rep.blocks_after;
    std::cerr << j.dump() << "\n";
    if (!c.out.empty()) write_file(c.out, trim::encode_trimmed(next));
    return 0;
}

int cmd_compare(const Common& c, const std::string& a, const std::string& b) {
    sim::SimConfig cfg = load(c);
    auto v = compare::compare(load_chain(a), load_chain(b), cfg.params);
    json j;
    j["winner"] = v.winner;
    j["w1"] = v.w1;
    j["w2"] = v.w2;
    j["lca"] = v.lca_index;
    j["lca_before_trim_point"] = v.lca_before_trim_point;
    emit(c, j.dump() + "\n");
    return 0;
}

int cmd_verify_state(const std::string& chain, const std::string& state) {
    trim::TrimmedChain P = load_chain(chain);
    LedgerState S = decode_state(read_file(state));
    bool ok = state_verify(P.view(), P.trim_point(), S);
    std::cout << (ok ? "ok" : "rejected") << "\n";
    return ok ? 0 : 1;
}

int cmd_oracle(const std::string& what, const std::string& chain, std::uint32_t mu, std::uint64_t g, double delta) {
    trim::TrimmedChain P = load_chain(chain);
    if (what == "replay") {
        LedgerState s = oracle::replay_state(P.view());
        json j;
        j["height"] = s.height;
        for (const auto& [k, v] : s.accounts) j["accounts"][k.hex()] = v;
        std::cout << j.dump() << "\n";
        return 0;
    }
    if (what == "dominance") {
        bool ok = oracle::dominant_bruteforce(P.view(), mu, g, delta);
        std::cout << (ok ? "dominant" : "not dominant") << "\n";
        return ok ? 0 : 1;
    }
    throw Error(ErrorCode::ConfigInvalid, "oracle kind must be replay or dominance");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"hybrid-node chain simulator and tools"};
    app.require_subcommand(1);
    Common c;

    auto* simulate = app.add_subcommand("simulate", "run one simulation and write its trace");
    add_common(simulate, c, false);
    simulate->add_option("--chain-out", c.chain_out, "save the node's trimmed chain");
    simulate->add_option("--state-out", c.state_out, "save the node's state at its trimming point");

    auto* attack = app.add_subcommand("attack", "run an adversary strategy over seeds, write metrics JSONL");
    add_common(attack, c, true);

    std::vector<std::uint64_t> lengths;
    auto* bench = app.add_subcommand("bench-storage", "storage of an honest node at given chain lengths");
    add_common(bench, c, false);
    bench->add_option("--lengths", lengths, "chain lengths to snapshot")->delimiter(',');

    std::string in, other, state_path;
    auto* trim_cmd = app.add_subcommand("trim", "one trimming attempt on a saved chain");
    add_common(trim_cmd, c, false);
    trim_cmd->add_option("--in", in, "chain file")->required();

    auto* cmp = app.add_subcommand("compare", "compare two saved chains");
    add_common(cmp, c, false);
    cmp->add_option("a", in, "incumbent chain")->required();
    cmp->add_option("b", other, "challenger chain")->required();

    auto* verify = app.add_subcommand("verify-state", "check a state snapshot against a chain");
    verify->add_option("--chain", in, "chain file")->required();
    verify->add_option("--state", state_path, "state snapshot")->required();

    std::string kind;
    std::uint32_t mu = 1;
    std::uint64_t g = 1;
    double delta = 0.3;
    auto* orc = app.add_subcommand("oracle", "reference checks on a saved chain");
    orc->add_option("kind", kind, "replay or dominance")->required();
    orc->add_option("--chain", in, "chain file")->required();
    orc->add_option("--mu", mu);
    orc->add_option("--g", g);
    orc->add_option("--delta", delta);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (*simulate) return cmd_simulate(c);
        if (*attack) return cmd_attack(c);
        if (*bench) return cmd_bench(c, lengths);
        if (*trim_cmd) return cmd_trim(c, in);
        if (*cmp) return cmd_compare(c, in, other);
        if (*verify) return cmd_verify_state(in, state_path);
        if (*orc) return cmd_oracle(kind, in, mu, g, delta);
    } catch (const Error& e) {
        std::cerr << "error (" << to_string(e.code()) << "): " << e.what() << "\n";
        return e.code() == ErrorCode::VerificationFailed ? 1 : 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
