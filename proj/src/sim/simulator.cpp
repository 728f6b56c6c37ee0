#include "hnode/sim/simulator.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include <json.hpp>

#include "hnode/chain/mining.hpp"
#include "hnode/compare/comparator.hpp"
#include "hnode/error.hpp"
#include "hnode/sim/adversary.hpp"
#include "hnode/sim/bootstrap.hpp"
#include "hnode/sim/world.hpp"
#include "hnode/state/ledger.hpp"
#include "hnode/state/workload.hpp"
#include "hnode/trim/serialize.hpp"
#include "hnode/trim/trimmer.hpp"

namespace hnode::sim {
namespace {

using json = nlohmann::ordered_json;

std::uint64_t splitmix(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

std::uint64_t substream(std::uint64_t seed, std::uint64_t k) { return splitmix(splitmix(seed) ^ k); }

// Explicit 53-bit uniform so draws do not depend on the library's distributions.
double uniform01(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

double exp_draw(std::mt19937_64& rng, double rate) { return -std::log1p(-uniform01(rng)) / rate; }

class Simulation {
public:
    explicit Simulation(const SimConfig& cfg);
    SimResult run();

private:
    const SimConfig& cfg_;
    const trim::TrimParams& params_;
    MiningOracle oracle_;
    Workload honest_work_;
    Workload adv_work_;
    std::mt19937_64 sched_;
    AccountKey honest_miner_ = account_key(0);
    AccountKey adv_miner_ = account_key(1);

    trim::TrimmedChain P_;
    LedgerState s_tip_;   // S(B)
    LedgerState s_trim_;  // S(B')
    std::uint64_t since_attempt_ = 0;
    Archive archive_{true};
    LedgerState cursor_;  // adversary's running replay of the archive

    SecretFork fork_;
    std::uint64_t fork_attempts_ = 0;
    AlphaSchedule alpha_;
    ForgeState forge_;

    SimTrace trace_;
    double now_ = 0;
    std::uint64_t seq_ = 0;
    std::size_t next_join_ = 0;
    std::size_t next_snapshot_ = 0;

    void emit(json j, bool per_block = false);
    BlockPtr mine_on(const Block& prev, LedgerState& state, Workload& w, const AccountKey& miner);
    const LedgerState& state_at(std::uint64_t idx);

    void on_honest();
    void on_adversary();
    void on_forge();
    void after_growth(std::uint64_t grown);
    void maybe_trim();
    compare::CompareVerdict judge(const trim::TrimmedChain& other);
    void adopt(const compare::CompareVerdict& v);

    void private_fork_refresh();
    void short_tail_step();
    void join(double t);
    void take_snapshot(std::uint64_t length);
};

Simulation::Simulation(const SimConfig& cfg)
    : cfg_(cfg),
      params_(cfg.params),
      oracle_(MiningMode::Sim, 0, substream(cfg.seed, 1)),
      honest_work_(substream(cfg.seed, 3), cfg.txs_per_block),
      adv_work_(substream(cfg.seed, 4), cfg.txs_per_block),
      sched_(substream(cfg.seed, 2)) {
    LedgerState g = genesis_state();
    auto gb = std::make_shared<const Block>(oracle_.genesis(state_commitment(g)));
    P_ = trim::TrimmedChain(ChainView(std::vector<BlockPtr>{gb}));
    archive_.append(gb);
    s_tip_ = g;
    s_trim_ = g;
    cursor_ = g;
    trace_.seed = cfg.seed;
}

void Simulation::emit(json j, bool per_block) {
    std::uint64_t seq = seq_++;
    if (per_block && cfg_.trace_level != TraceLevel::Full) return;
    json e;
    e["seq"] = seq;
    e["t"] = now_;
    for (auto& [k, v] : j.items()) e[k] = v;
    trace_.lines.push_back(e.dump());
}

BlockPtr Simulation::mine_on(const Block& prev, LedgerState& state, Workload& w, const AccountKey& miner) {
    auto body = w.make_body(state, miner);
    Block probe;
    probe.index = prev.index + 1;
    probe.body = body;
    apply_block_in_place(state, probe);
    return std::make_shared<const Block>(oracle_.mine(prev, std::move(body), state_commitment(state)));
}

const LedgerState& Simulation::state_at(std::uint64_t idx) {
    if (idx < cursor_.height) cursor_ = genesis_state();
    const auto& a = archive_.blocks();
    while (cursor_.height < idx) apply_block_in_place(cursor_, *a[cursor_.height + 1]);
    return cursor_;
}

compare::CompareVerdict Simulation::judge(const trim::TrimmedChain& other) {
    auto v = compare::compare(P_, other, params_);
    auto& m = trace_.monitors;
    ++m.congruence_checks;
    std::uint64_t n1 = P_.underlying_length(), n2 = other.underlying_length();
    if ((n1 > n2 && v.w2 > v.w1) || (n2 > n1 && v.w1 > v.w2)) {
        ++m.congruence_violations;
        emit({{"ev", "congruence_violation"}, {"len1", n1}, {"len2", n2}, {"w1", v.w1}, {"w2", v.w2}});
    }
    return v;
}

void Simulation::take_snapshot(std::uint64_t length) {
    Snapshot s;
    s.length = length;
    s.retained = P_.view().size();
    s.bytes = trim::encode_trimmed(P_).size();
    s.mu_h = P_.mu_h();
    s.trim_point = P_.trim_point();
    for (const auto& r : P_.ranges()) {
        s.ranges.push_back({r.level, r.first, r.last, r.count, trim::param_f(P_, r.level, params_)});
    }
    json rs = json::array();
    for (const auto& r : s.ranges) rs.push_back({r.level, r.first, r.last, r.count, r.f});
    emit({{"ev", "snapshot"}, {"length", length}, {"retained", s.retained}, {"bytes", s.bytes}, {"mu_h", s.mu_h},
          {"trim_point", s.trim_point}, {"ranges", rs}});
    trace_.snapshots.push_back(std::move(s));
}

void Simulation::maybe_trim() {
    if (!params_.tail.active() && since_attempt_ < params_.Q) return;
    since_attempt_ = 0;
    trim::TrimReport rep;
    trim::TrimmedChain next = trim::try_trim(P_, params_, &rep);
    if (!rep.success || rep.new_trim_point <= P_.trim_point()) return;

    // Walk S(B') forward over the pre-trim tail, which still has the bodies.
    const ChainView& v = P_.view();
    for (std::size_t i = v.lower_bound(P_.trim_point() + 1); i < v.size() && v[i].index <= rep.new_trim_point; ++i) {
        apply_block_in_place(s_trim_, v[i]);
    }
    P_ = std::move(next);
    ++trace_.summary.trims;
    emit({{"ev", "trim"},
          {"level", rep.level},
          {"from", rep.old_trim_point},
          {"to", rep.new_trim_point},
          {"before", rep.blocks_before},
          {"after", rep.blocks_after}},
         params_.tail.active());
}

void Simulation::after_growth(std::uint64_t grown) {
    since_attempt_ += grown;
    maybe_trim();
    const auto& L = cfg_.snapshot_lengths;
    while (next_snapshot_ < L.size() && P_.tip_index() >= L[next_snapshot_]) take_snapshot(L[next_snapshot_++]);
}

void Simulation::adopt(const compare::CompareVerdict& v) {
    std::uint64_t old_tip = P_.tip_index();
    std::uint64_t old_trim = P_.trim_point();
    std::uint64_t F = fork_.fork_point;
    auto& m = trace_.monitors;
    if (v.lca_before_trim_point) {
        if (m.trim_attacked == 0) m.first_trim_attack_time = now_;
        ++m.trim_attacked;
        emit({{"ev", "trim_attack"}, {"lca", v.lca_index}, {"trim_point", old_trim}});
    }
    archive_.reorg(F, fork_.secret_blocks());
    P_ = fork_.chain;
    s_tip_ = fork_.tip_state();
    // The fork carries its own B', which may sit below ours.
    if (P_.trim_point() == F + 1 && !fork_.states.empty()) s_trim_ = fork_.states.front();
    else if (P_.trim_point() != old_trim) s_trim_ = state_at(P_.trim_point());
    ++m.reorgs;
    emit({{"ev", "reorg"}, {"fork_point", F}, {"old_tip", old_tip}, {"new_tip", P_.tip_index()}, {"w1", v.w1}, {"w2", v.w2}});
    fork_.active = false;
    after_growth(P_.tip_index() > old_tip ? P_.tip_index() - old_tip : 0);
}

// Fork from just before B' (the last retained block there) or, with
// nothing trimmed yet, from the tip. Re-fork whenever that leaves a
// smaller deficit to make up.
void Simulation::private_fork_refresh() {
    std::uint64_t F;
    if (P_.trim_point() > 0) {
        const ChainView& v = P_.view();
        F = v[v.lower_bound(P_.trim_point()) - 1].index;
    } else {
        F = P_.tip_index();
    }
    if (fork_.active) {
        bool stale = P_.trim_point() > 0 && fork_.fork_point >= P_.trim_point();
        std::uint64_t have = fork_.tip().index;
        std::uint64_t deficit_now = P_.tip_index() >= have ? P_.tip_index() - have : 0;
        std::uint64_t deficit_new = P_.tip_index() - F;
        if (!stale && deficit_new >= deficit_now) return;
    }
    LedgerState sF = F == P_.tip_index() ? s_tip_ : state_at(F);
    fork_ = start_fork(P_, F, std::move(sF), ++fork_attempts_);
    ++trace_.monitors.attack_attempts;
    emit({{"ev", "fork_start"}, {"fork_point", F}, {"attempt", fork_.attempt}}, true);
}

void Simulation::short_tail_step() {
    if (alpha_.running && P_.tip_index() >= alpha_.sum_before + alpha_.alpha) {
        bool publish = fork_.active && fork_.secret_length() >= alpha_.alpha + 1;
        emit({{"ev", "alpha_decision"}, {"attempt", alpha_.index}, {"alpha", alpha_.alpha}, {"secret", fork_.secret_length()},
              {"publish", publish}});
        alpha_.running = false;
        alpha_.sum_before += alpha_.alpha;
        ++alpha_.index;
        if (publish) {
            auto v = judge(fork_.chain);
            if (v.winner == 2) adopt(v);
        }
        fork_.active = false;
    }
    if (!alpha_.running && P_.tip_index() >= alpha_.sum_before) {
        alpha_.alpha = alpha_next(params_.tail.value, alpha_.index, alpha_.sum_before);
        alpha_.running = true;
        fork_ = start_fork(P_, P_.tip_index(), s_tip_, alpha_.index);
        ++trace_.monitors.attack_attempts;
        emit({{"ev", "alpha_start"}, {"attempt", alpha_.index}, {"alpha", alpha_.alpha}, {"fork_point", P_.tip_index()}},
             true);
    }
}

void Simulation::on_honest() {
    ++trace_.summary.honest_events;
    trace_.honest_times.push_back(now_);
    auto b = mine_on(P_.view().back(), s_tip_, honest_work_, honest_miner_);
    P_.append(b);
    archive_.append(b);
    emit({{"ev", "honest_block"}, {"index", b->index}, {"level", b->level}}, true);
    after_growth(1);
    if (cfg_.strategy == Strategy::ShortTailAlpha) short_tail_step();
}

void Simulation::on_adversary() {
    ++trace_.summary.adversary_events;
    trace_.adversary_times.push_back(now_);
    if (cfg_.strategy == Strategy::PrivateFork) {
        private_fork_refresh();
    } else if (cfg_.strategy == Strategy::ShortTailAlpha) {
        short_tail_step();
        if (!fork_.active) return;
    } else {
        return;
    }
    LedgerState s = fork_.tip_state();
    auto b = mine_on(fork_.tip(), s, adv_work_, adv_miner_);
    fork_.chain.append(b);
    fork_.states.push_back(std::move(s));
    emit({{"ev", "adversary_block"}, {"index", b->index}, {"level", b->level}, {"attempt", fork_.attempt}}, true);
    if (cfg_.strategy == Strategy::PrivateFork) {
        auto v = judge(fork_.chain);
        if (v.winner == 2) {
            emit({{"ev", "publish"}, {"attempt", fork_.attempt}, {"lca", v.lca_index}});
            adopt(v);
        }
    }
}

void Simulation::on_forge() {
    ++trace_.summary.forge_events;
    trace_.forge_times.push_back(now_);
    std::uint64_t Bp = P_.trim_point();
    if (Bp == 0) return;  // S(0) is fixed by genesis
    std::uint64_t reach = forge_.target + std::max<std::uint64_t>(forge_.matched, 1);
    if (!forge_.active || Bp >= reach) {
        forge_ = ForgeState{true, Bp, 0, false};
    }
    ++forge_.matched;
    std::uint64_t covered_end = forge_.target + forge_.matched;
    emit({{"ev", "forge_step"}, {"target", forge_.target}, {"covered_end", covered_end}}, true);
    if (forge_.flagged || covered_end <= P_.tip_index()) return;

    LedgerState fake = s_trim_;
    fake.accounts[adv_miner_] += 1;
    ForgedSequence seq(P_.view(), Bp, covered_end, state_commitment(fake));
    if (!verify_state_sequence(P_.view(), Bp, seq)) return;
    forge_.flagged = true;
    auto& m = trace_.monitors;
    if (m.state_attacked == 0) m.first_state_attack_time = now_;
    ++m.state_attacked;
    emit({{"ev", "state_attack"}, {"target", forge_.target}, {"trim_point", Bp}, {"tip", P_.tip_index()}});
}

void Simulation::join(double t) {
    auto& m = trace_.monitors;
    ++m.bootstrap_joins;
    std::vector<Offer> offers;
    if (cfg_.strategy == Strategy::PrivateFork) {
        private_fork_refresh();
        offers.push_back({"adversary", fork_.chain, fork_.state_at_trim_point(s_trim_)});
    }
    LedgerState perturbed = s_trim_;
    perturbed.accounts[honest_miner_] += 1;
    offers.push_back({"perturbed", P_, perturbed});
    offers.push_back({"honest", P_, s_trim_});

    json ev{{"ev", "bootstrap"}, {"join_time", t}};
    try {
        auto out = bootstrap_node(offers, params_);
        const Offer& got = offers[out.adopted];
        bool attacked = got.chain.view().back().id != P_.view().back().id || got.state != s_trim_;
        if (attacked) ++m.bootstrap_attacked;
        for (std::size_t i = 0; i < offers.size(); ++i) {
            if (offers[i].source == "perturbed") {
                ++m.perturbed_offers;
                if (!out.state_ok[i]) ++m.perturbed_rejected;
            }
        }
        ev["adopted"] = got.source;
        ev["attacked"] = attacked;
        json ok = json::array();
        for (bool b : out.state_ok) ok.push_back(b);
        ev["state_ok"] = ok;
    } catch (const Error& e) {
        if (e.code() != ErrorCode::VerificationFailed) throw;
        ++m.bootstrap_failures;
        ev["adopted"] = nullptr;
        ev["error"] = e.what();
    }
    emit(std::move(ev));
}

SimResult Simulation::run() {
    const double lh = cfg_.lambda_h;
    const double la = cfg_.strategy == Strategy::PrivateFork || cfg_.strategy == Strategy::ShortTailAlpha ? cfg_.lambda_a : 0;
    const double ls = cfg_.strategy == Strategy::StateForge ? cfg_.lambda_s : 0;
    const double total = lh + la + ls;
    std::vector<double> joins = cfg_.bootstrap_schedule;
    std::sort(joins.begin(), joins.end());

    emit({{"ev", "start"}, {"seed", cfg_.seed}, {"strategy", to_string(cfg_.strategy)}});
    if (cfg_.strategy == Strategy::ShortTailAlpha) short_tail_step();
    const auto& L = cfg_.snapshot_lengths;
    while (next_snapshot_ < L.size() && L[next_snapshot_] == 0) take_snapshot(L[next_snapshot_++]);

    while (cfg_.horizon_blocks == 0 || P_.tip_index() < cfg_.horizon_blocks) {
        double next = now_ + exp_draw(sched_, total);
        if (cfg_.horizon_time > 0 && next > cfg_.horizon_time) break;
        while (next_join_ < joins.size() && joins[next_join_] <= next) {
            now_ = std::max(now_, joins[next_join_]);
            join(joins[next_join_++]);
        }
        now_ = next;
        double u = uniform01(sched_) * total;
        if (u < lh) on_honest();
        else if (u < lh + la) on_adversary();
        else on_forge();
    }

    auto& s = trace_.summary;
    s.honest_length = P_.tip_index();
    s.retained = P_.view().size();
    s.trim_point = P_.trim_point();
    s.mu_h = P_.mu_h();
    s.end_time = now_;

    SimResult r;
    r.final_chain = P_;
    r.tip_state = s_tip_;
    r.trim_state = s_trim_;
    if (cfg_.keep_archive) r.archive = archive_.blocks();
    r.trace = std::move(trace_);
    return r;
}

}  // namespace

SimResult run_simulation(const SimConfig& cfg) {
    validate(cfg);
    Simulation sim(cfg);
    return sim.run();
}

}  // namespace hnode::sim
