#include <doctest.h>

#include "hnode/error.hpp"
#include "hnode/sim/adversary.hpp"
#include "hnode/sim/bootstrap.hpp"
#include "hnode/sim/simulator.hpp"
#include "hnode/state/ledger.hpp"
#include "support.hpp"

using namespace hnode;
using namespace hnode::sim;

TEST_CASE("alpha sequence") {
    // alpha_i = max(1, ceil(2 c0 ln(1 + sum_{j<i} alpha_j))), computed in Python.
    CHECK(alpha_sequence(0.25, 12) == std::vector<std::uint64_t>{1, 1, 1, 1, 1, 1, 1, 2, 2, 2, 2, 2});
    CHECK(alpha_sequence(2, 8) == std::vector<std::uint64_t>{1, 3, 7, 10, 13, 15, 16, 17});
}

TEST_CASE("config text round trip") {
    SimConfig cfg = preset_desk();
    cfg.strategy = Strategy::PrivateFork;
    cfg.bootstrap_schedule = {10, 20.5};
    cfg.snapshot_lengths = {100, 1000};
    cfg.params.tail = {trim::TailOverride::Kind::Log, 0.25};
    SimConfig back = parse_config(format_config(cfg));
    CHECK(format_config(back) == format_config(cfg));
    CHECK(back.params.tail.kind == trim::TailOverride::Kind::Log);
    CHECK(back.bootstrap_schedule.size() == 2);
}

TEST_CASE("config errors") {
    CHECK_THROWS_AS(parse_config("nonsense = 1"), Error);
    CHECK_THROWS_AS(parse_config("k"), Error);
    CHECK_THROWS_AS(parse_config("delta = abc"), Error);

    SimConfig cfg = preset_desk();
    cfg.lambda_a = 1.5;
    CHECK_THROWS_AS(validate(cfg), Error);
    cfg.allow_dishonest_majority = true;
    CHECK_NOTHROW(validate(cfg));

    SimConfig s = preset_secure();
    CHECK_NOTHROW(validate(s));
    SimConfig d = preset_desk();
    d.check_theorem1 = true;
    CHECK_THROWS_AS(validate(d), Error);

    SimConfig st = preset_desk();
    st.strategy = Strategy::ShortTailAlpha;
    CHECK_THROWS_AS(validate(st), Error);
}

TEST_CASE("same seed, same trace") {
    SimConfig cfg = preset_desk();
    cfg.strategy = Strategy::PrivateFork;
    cfg.horizon_blocks = 800;
    cfg.bootstrap_schedule = {300};
    auto a = run_simulation(cfg);
    auto b = run_simulation(cfg);
    CHECK(render_trace(a.trace) == render_trace(b.trace));
    cfg.seed = 2;
    auto c = run_simulation(cfg);
    CHECK(render_trace(a.trace) != render_trace(c.trace));
}

TEST_CASE("honest run: node state matches its chain") {
    SimConfig cfg = preset_desk();
    cfg.horizon_blocks = 1500;
    auto r = run_simulation(cfg);
    CHECK(r.final_chain.tip_index() == 1500);
    CHECK(r.trace.summary.trims > 0);
    CHECK(r.tip_state.height == 1500);
    CHECK(r.trim_state.height == r.final_chain.trim_point());
    CHECK(state_commitment(r.tip_state) == r.final_chain.view().back().state_commitment);
    CHECK_NOTHROW(r.final_chain.check_invariants());
    CHECK_FALSE(r.trace.monitors.any_flag());
}

TEST_CASE("forged sequence verifies only when it reaches the tip") {
    auto lc = testutil::ledger_chain(40, 6);
    Digest junk = sha256_pair(Digest{}, Digest{});
    ForgedSequence short_seq(lc.chain, 20, 35, junk);
    CHECK_FALSE(verify_state_sequence(lc.chain, 20, short_seq));
    ForgedSequence full_seq(lc.chain, 20, 41, junk);
    CHECK(verify_state_sequence(lc.chain, 20, full_seq));
}

TEST_CASE("bootstrap adopts the honest chain and rejects a perturbed state") {
    auto lc = testutil::ledger_chain(30, 12);
    trim::TrimmedChain P(lc.chain);
    trim::TrimParams p = preset_desk().params;
    LedgerState bad = lc.states[0];
    bad.accounts[account_key(0)] += 1;

    std::vector<Offer> offers{{"perturbed", P, bad}, {"honest", P, lc.states[0]}};
    auto out = bootstrap_node(offers, p);
    CHECK(out.adopted == 1);
    CHECK(out.state_ok == std::vector<bool>{false, true});

    std::vector<Offer> only_bad{{"perturbed", P, bad}};
    CHECK_THROWS_AS(bootstrap_node(only_bad, p), Error);
}

TEST_CASE("state forgery at the honest rate succeeds") {
    SimConfig cfg = preset_desk();
    cfg.strategy = Strategy::StateForge;
    cfg.lambda_s = 1.0;
    cfg.horizon_blocks = 3000;
    auto r = run_simulation(cfg);
    CHECK(r.trace.monitors.state_attacked > 0);
}
