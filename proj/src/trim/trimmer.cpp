#include "hnode/trim/trimmer.hpp"

#include <algorithm>
#include <memory>
#include <vector>

#include "hnode/trim/goodness.hpp"

namespace hnode::trim {

namespace {

ChainView view_of(const ChainView& v, const std::vector<std::size_t>& pos) {
    std::vector<BlockPtr> out;
    out.reserve(pos.size());
    for (std::size_t p : pos) out.push_back(v.ptr(p));
    return ChainView(std::move(out));
}

std::vector<std::size_t> supers_from(const ChainView& v, std::size_t from, std::size_t to, std::uint32_t mu) {
    std::vector<std::size_t> out;
    for (std::size_t i = from; i < to; ++i) {
        if (v[i].level >= mu) out.push_back(i);
    }
    return out;
}

}  // namespace

std::uint64_t range_start(const TrimmedChain& D, std::uint32_t mu) {
    if (!D.has_ranges() || mu > D.mu_h()) return 0;
    if (const auto* r = D.range_fns().find(mu)) return r->first;
    return D.trim_point();
}

TrimResult trim_to_level(const TrimmedChain& D, std::uint64_t trim_point, std::uint32_t mu, std::uint64_t g,
                         std::uint64_t f, double delta) {
    f = std::max<std::uint64_t>(f, 1);
    const ChainView& v = D.view();
    const std::uint64_t lo = range_start(D, mu);
    const std::size_t plo = v.lower_bound(lo);
    const std::size_t pB = v.lower_bound(trim_point);
    if (trim_point <= D.trim_point() || !v.find_index(trim_point)) return {D, false};

    std::vector<char> keep(pB - plo, 0);
    auto mark = [&](const std::vector<std::size_t>& pos) {
        for (std::size_t p : pos) keep[p - plo] = 1;
    };

    std::vector<std::size_t> E = supers_from(v, plo, pB, mu);
    if (E.size() < f) return {D, false};
    mark(E);

    std::vector<std::size_t> alpha = E;
    std::uint32_t alpha_level = mu;
    std::uint64_t A = v[E[E.size() - f]].index;
    for (std::uint32_t m = mu; m-- > 0;) {
        alpha = supers_from(v, v.lower_bound(A), pB, m);
        alpha_level = m;
        mark(alpha);
        if (alpha.size() >= f && goodness_check(view_of(v, alpha), v, m, delta, g)) {
            A = v[alpha[alpha.size() - f]].index;
        }
    }
    // Success hinges on the level-0 segment the descent ends with.
    if (alpha.size() < f || !goodness_check(view_of(v, alpha), v, alpha_level, delta, g)) return {D, false};

    std::vector<BlockPtr> blocks;
    blocks.reserve(plo + (pB - plo) / 4 + (v.size() - pB));
    for (std::size_t i = 0; i < plo; ++i) blocks.push_back(v.ptr(i));
    for (std::size_t i = plo; i < pB; ++i) {
        if (!keep[i - plo]) continue;
        const BlockPtr& b = v.ptr(i);
        blocks.push_back(b->has_body() ? std::make_shared<const Block>(b->header_only()) : b);
    }
    for (std::size_t i = pB; i < v.size(); ++i) blocks.push_back(v.ptr(i));

    std::vector<LevelRange> ranges;
    for (const auto& r : D.ranges()) {
        if (r.level > mu) ranges.push_back(r);
    }
    std::uint32_t above = ranges.empty() ? mu + 1 : ranges.back().level;
    for (std::uint32_t m = above; m-- > mu + 1;) ranges.push_back({m, lo, lo - 1, 0});
    ranges.push_back({mu, lo, trim_point - 1, 0});
    return {TrimmedChain(ChainView(std::move(blocks)), std::move(ranges), trim_point), true};
}

TrimmedChain try_trim(const TrimmedChain& P, const TrimParams& p, TrimReport* report) {
    TrimReport local;
    TrimReport& rep = report ? *report : local;
    rep = TrimReport{};
    rep.old_trim_point = rep.new_trim_point = P.trim_point();
    rep.blocks_before = rep.blocks_after = P.view().size();

    const std::uint64_t tip = P.tip_index();
    std::uint64_t delta_len = param_delta(P, p);
    if (tip <= delta_len) return P;
    std::uint64_t Bp = tip - delta_len;

    if (p.tail.active()) {
        if (Bp <= P.trim_point()) return P;
        TrimmedChain out = P;
        out.set_pointer_trim(Bp);
        rep.success = true;
        rep.new_trim_point = Bp;
        return out;
    }

    // A successful trim can raise S(P,0) enough that the tail falls short of
    // the new Delta; pull B' back by the shortfall and try again.
    for (unsigned attempt = 0; attempt < 5; ++attempt) {
        if (Bp <= P.trim_point()) return P;
        std::uint32_t top = P.has_ranges() ? P.mu_h() + 1 : 1;
        for (std::uint32_t mu = top; mu >= 1; --mu) {
            std::uint64_t g = param_g(P, mu, p);
            std::uint64_t f = param_f(P, mu, p);
            ChainView up = P.view().slice_by_index(range_start(P, mu), Bp).upchain(mu);
            if (up.size() < std::max<std::uint64_t>(f, 1) || !goodness_check(up, P.view(), mu, p.delta, g)) continue;
            TrimResult r = trim_to_level(P, Bp, mu, g, f, p.delta);
            if (!r.success) continue;
            std::uint64_t need = param_delta(r.chain, p);
            std::uint64_t have = r.chain.tail_length();
            if (have >= need) {
                rep.success = true;
                rep.level = mu;
                rep.new_trim_point = Bp;
                rep.blocks_after = r.chain.view().size();
                return std::move(r.chain);
            }
            ++rep.tail_retries;
            Bp -= std::min(Bp, need - have);
            break;
        }
        if (rep.tail_retries == attempt) return P;  // no level succeeded at this B'
    }
    return P;
}

}  // namespace hnode::trim
