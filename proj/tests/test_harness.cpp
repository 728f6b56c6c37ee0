#include <doctest.h>

#include <cstdlib>

#include "hnode/harness/experiment.hpp"

using namespace hnode;

TEST_CASE("experiment output does not depend on the worker count") {
    harness::ExperimentSpec spec;
    spec.name = "t";
    spec.config = sim::preset_desk();
    spec.config.strategy = sim::Strategy::PrivateFork;
    spec.config.horizon_blocks = 600;
    spec.seed_lo = 1;
    spec.seed_hi = 5;

    setenv("HNODE_WORKERS", "1", 1);
    auto one = harness::run_experiment(spec);
    setenv("HNODE_WORKERS", "3", 1);
    auto three = harness::run_experiment(spec);
    unsetenv("HNODE_WORKERS");

    REQUIRE(one.size() == 5);
    REQUIRE(three.size() == 5);
    for (std::size_t i = 0; i < one.size(); ++i) {
        CHECK(one[i].seed == spec.seed_lo + i);
        CHECK(harness::metrics_line(one[i].row) == harness::metrics_line(three[i].row));
        CHECK(one[i].replay_checked);
        CHECK(one[i].replay_ok);
    }
}

TEST_CASE("metrics file layout") {
    sim::SimConfig cfg = sim::preset_desk();
    harness::MetricsRow row;
    row.seed = 7;
    std::string text = harness::metrics_jsonl("x", cfg, {row});
    auto nl = text.find('\n');
    REQUIRE(nl != std::string::npos);
    CHECK(text.substr(0, nl).find("\"version\":1") != std::string::npos);
    CHECK(text.find("\"seed\":7") != std::string::npos);
}
