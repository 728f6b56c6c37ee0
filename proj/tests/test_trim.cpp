#include <doctest.h>

#include <bit>
#include <cmath>

#include "hnode/error.hpp"
#include "hnode/trim/goodness.hpp"
#include "hnode/trim/serialize.hpp"
#include "hnode/trim/trimmer.hpp"
#include "support.hpp"

using namespace hnode;
using namespace hnode::trim;

namespace {

TrimParams desk() {
    TrimParams p;
    p.k = 30;
    p.k_prime = 28;
    p.a = 1;
    p.c = 2;
    p.c_prime = 1.5;
    p.delta = 0.3;
    p.Q = 100;
    return p;
}

// Level of block i is the number of trailing zeros of i: every 2^mu-th
// block is a mu-superblock, the idealised mean chain.
ChainView ruler_chain(std::size_t n) {
    std::vector<std::uint32_t> levels;
    for (std::size_t i = 1; i <= n; ++i) levels.push_back(static_cast<std::uint32_t>(std::countr_zero(i)));
    return testutil::chain_with_levels(levels);
}

ChainView mined_chain(std::size_t n, std::uint64_t seed) {
    MiningOracle m(MiningMode::Sim, 0, seed);
    ChainView v(std::vector<BlockPtr>{std::make_shared<const Block>(m.genesis(Digest{}))});
    for (std::size_t i = 0; i < n; ++i) v.push_back(std::make_shared<const Block>(m.mine(v.back(), {}, Digest{})));
    return v;
}

}  // namespace

TEST_CASE("theorem 1 checks on the shipped presets") {
    TrimParams secure;
    auto checks = theorem1_checks(secure, 1.0, 0.33);
    for (const auto& c : checks) CHECK_MESSAGE(c.ok, c.name);
    // Values from evaluating the inequalities in Python.
    CHECK(checks[2].lhs == doctest::Approx(1.046804).epsilon(1e-6));
    CHECK(checks[3].lhs == doctest::Approx(1.277333).epsilon(1e-6));
    CHECK(k_prime_for(733, 356, 0.15) == doctest::Approx(0.972079).epsilon(1e-6));

    try {
        validate_theorem1(desk(), 1.0, 0.33);
        FAIL("desk preset should not pass");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::ConfigInvalid);
        CHECK(std::string(e.what()) == "\"a ≥ 8/δ²\" violated (1 < 88.9)");
    }
    CHECK_THROWS_AS(validate_theorem1(secure, 1.0, 1.0), Error);
}

TEST_CASE("basic parameter validation") {
    TrimParams p;
    p.delta = 1.0;
    CHECK_THROWS_AS(validate_basic(p), Error);
    p = TrimParams{};
    p.Q = 0;
    CHECK_THROWS_AS(validate_basic(p), Error);
}

TEST_CASE("tail override values") {
    TailOverride t{TailOverride::Kind::Log, 0.25};
    CHECK(t.eval(1000) == 2);  // ceil(0.25 ln 1001)
    TailOverride c{TailOverride::Kind::Constant, 5};
    CHECK(c.eval(123456) == 5);
}

TEST_CASE("level range function conventions") {
    LevelRangeFns f({{3, 0, 99, 0}, {2, 100, 199, 0}}, 200);
    CHECK(f.mu_h() == 3);
    CHECK(f.mu_l() == 2);
    CHECK(f.L_f(5) == 0);
    CHECK(f.L_l(5) == 0);
    CHECK(f.L_f(2) == 100);
    CHECK(f.L_l(3) == 99);
    CHECK(f.L_f(0) == 199);
    CHECK(f.L_l(1) == 199);
    CHECK(f.level_containing(150) == 2u);
    CHECK_FALSE(f.level_containing(250).has_value());
}

TEST_CASE("superquality on the ruler chain and on a sparse chain") {
    ChainView c = ruler_chain(256);
    ChainView up = c.slice_by_index(1, std::nullopt).upchain(2);
    CHECK(superquality_check(up, c, 2, 0.3, 4));
    CHECK(goodness_check(up, c, 2, 0.3, 4));

    // One 1-superblock every 4 blocks: a suffix of g' superblocks spans
    // about 4g' blocks and 2^-1 * 0.7 * 4g' > g'.
    std::vector<std::uint32_t> sparse;
    for (int i = 1; i <= 200; ++i) sparse.push_back(i % 4 == 0 ? 1 : 0);
    ChainView s = testutil::chain_with_levels(sparse);
    ChainView sup = s.slice_by_index(1, std::nullopt).upchain(1);
    CHECK_FALSE(superquality_check(sup, s, 1, 0.3, 4));
}

TEST_CASE("dominance rejects a long heavy gap") {
    // Dense level-2 superblocks, then a run of 40 level-1 blocks, then more
    // level-2 blocks. The run weighs 80 >= 2^2 * g for g = 10.
    std::vector<std::uint32_t> lv;
    for (int i = 0; i < 30; ++i) lv.push_back(2);
    for (int i = 0; i < 40; ++i) lv.push_back(1);
    for (int i = 0; i < 30; ++i) lv.push_back(2);
    ChainView c = testutil::chain_with_levels(lv);
    ChainView up = c.slice_by_index(1, std::nullopt).upchain(2);
    CHECK_FALSE(dominance_check(up, c, 2, 0.3, 10));
    CHECK(dominance_check(up, c, 2, 0.3, 25));
}

TEST_CASE("trimming a mined chain keeps the structural invariants") {
    TrimParams p = desk();
    ChainView full = mined_chain(6000, 3);
    TrimmedChain P(full.prefix(1));
    unsigned successes = 0;
    for (std::size_t i = 1; i < full.size(); ++i) {
        P.append(full.ptr(i));
        if (i % p.Q != 0) continue;
        TrimReport rep;
        TrimmedChain next = try_trim(P, p, &rep);
        if (!rep.success) continue;
        ++successes;
        REQUIRE_NOTHROW(next.check_invariants());
        CHECK(next.trim_point() > P.trim_point());
        CHECK(next.tail_length() >= param_delta(next, p));
        CHECK(next.mu_h() <= static_cast<std::uint32_t>(std::ceil(std::log2(static_cast<double>(i)))));
        P = std::move(next);
    }
    CHECK(successes > 10);
    CHECK(P.view().size() < full.size() / 4);
    CHECK(P.tip_index() == full.tip_index());
    for (const auto& r : P.ranges()) CHECK(r.count <= 4 * param_f(P, r.level, p));

    TrimmedChain back = decode_trimmed(encode_trimmed(P));
    CHECK(back.view() == P.view());
    CHECK(back.ranges() == P.ranges());
    CHECK(back.trim_point() == P.trim_point());

    TrimmedChain cut = P.truncated(P.trim_point() - 1);
    CHECK(cut.tip_index() <= P.trim_point() - 1);
    CHECK(cut.trim_point() <= P.trim_point());
}

TEST_CASE("W and S follow the level ranges") {
    ChainView c = ruler_chain(64);
    // Level 2 over [0, 31] holds genesis and 4, 8, ..., 28; level 1 over
    // [32, 47] holds 32, 34, ..., 46.
    std::vector<BlockPtr> kept;
    for (std::size_t i = 0; i < c.size(); ++i) {
        std::uint64_t idx = c[i].index;
        bool keep = idx >= 48 || (idx < 32 && c[i].level >= 2) || (idx >= 32 && c[i].level >= 1);
        if (keep) kept.push_back(c.ptr(i));
    }
    TrimmedChain P(ChainView(kept), {{2, 0, 31, 0}, {1, 32, 47, 0}}, 48);
    REQUIRE_NOTHROW(P.check_invariants());
    CHECK(P.weight_W(2) == 4.0 * 8);
    CHECK(P.weight_W(1) == 2.0 * 8);
    CHECK(P.weight_W(0) == 0.0);
    CHECK(P.cumulative_S(0) == 48.0);
    CHECK(P.cumulative_S(2) == 32.0);
    CHECK(P.tail_length() == 17);
}

TEST_CASE("tail override trims pointers only") {
    TrimParams p = desk();
    p.tail = {TailOverride::Kind::Constant, 5};
    TrimmedChain P(ruler_chain(100));
    TrimReport rep;
    TrimmedChain next = try_trim(P, p, &rep);
    CHECK(rep.success);
    CHECK(next.trim_point() == 95);
    CHECK(next.view().size() == 101);
    REQUIRE(next.ranges().size() == 1);
    CHECK(next.ranges()[0].level == 0);
    CHECK(next.ranges()[0].last == 94);
}

TEST_CASE("short chains are not trimmed") {
    TrimmedChain P(ruler_chain(20));
    TrimReport rep;
    TrimmedChain next = try_trim(P, desk(), &rep);
    CHECK_FALSE(rep.success);
    CHECK(next.view() == P.view());
}
