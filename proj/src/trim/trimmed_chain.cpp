#include "hnode/trim/trimmed_chain.hpp"

#include <cmath>
#include <string>

#include "hnode/error.hpp"

namespace hnode::trim {

TrimmedChain::TrimmedChain(ChainView full) : view_(std::move(full)) {}

TrimmedChain::TrimmedChain(ChainView view, std::vector<LevelRange> ranges, std::uint64_t trim_point)
    : view_(std::move(view)), trim_point_(trim_point) {
    for (auto& r : ranges) r.count = r.empty() ? 0 : count_supers(view_, r.first, r.last + 1, r.level);
    fns_ = LevelRangeFns(std::move(ranges), trim_point_);
}

double TrimmedChain::weight_W(std::uint32_t mu) const {
    const auto* r = fns_.find(mu);
    return r ? std::ldexp(static_cast<double>(r->count), static_cast<int>(mu)) : 0.0;
}

double TrimmedChain::cumulative_S(std::uint32_t mu) const {
    double s = 0;
    for (const auto& r : fns_.ranges()) {
        if (r.level >= mu) s += std::ldexp(static_cast<double>(r.count), static_cast<int>(r.level));
    }
    return s;
}

void TrimmedChain::set_pointer_trim(std::uint64_t trim_point) {
    trim_point_ = trim_point;
    if (trim_point == 0) {
        fns_ = LevelRangeFns();
        return;
    }
    LevelRange r{0, 0, trim_point - 1, view_.count_in(0, trim_point)};
    fns_ = LevelRangeFns({r}, trim_point);
}

TrimmedChain TrimmedChain::truncated(std::uint64_t F) const {
    TrimmedChain out;
    out.view_ = view_.prefix(view_.lower_bound(F + 1));
    out.trim_point_ = std::min(trim_point_, F + 1);
    std::vector<LevelRange> clipped;
    for (auto r : fns_.ranges()) {
        if (r.first > F) continue;
        if (r.last > F) {
            r.last = F;
            r.count = count_supers(out.view_, r.first, r.last + 1, r.level);
        }
        clipped.push_back(r);
    }
    out.fns_ = LevelRangeFns(std::move(clipped), out.trim_point_);
    return out;
}

void TrimmedChain::check_invariants() const {
    auto fail = [](const std::string& m) { throw Error(ErrorCode::InvalidBlock, "trimmed chain invariant: " + m); };
    if (view_.empty() || !view_.front().is_genesis()) fail("first block must be genesis");
    if (trim_point_ > view_.tip_index()) fail("trim point beyond tip");
    if (trim_point_ > 0 && !view_.find_index(trim_point_)) fail("trim point block not retained");
    // Tail is the full suffix, bodies included.
    std::size_t p = view_.lower_bound(trim_point_);
    for (std::size_t i = p; i < view_.size(); ++i) {
        if (view_[i].index != trim_point_ + (i - p)) fail("gap in untrimmed tail");
        if (!view_[i].has_body()) fail("tail block without body");
    }
    const auto& rs = fns_.ranges();
    if (trim_point_ > 0 && rs.empty()) fail("trimmed chain without level ranges");
    if (rs.empty()) return;
    if (rs.front().first != 0) fail("highest range must start at genesis");
    if (rs.back().last + 1 != trim_point_) fail("lowest range must end at B'-1");
    for (std::size_t i = 0; i < rs.size(); ++i) {
        if (i > 0) {
            if (rs[i].level >= rs[i - 1].level) fail("range levels must strictly decrease");
            if (rs[i - 1].last + 1 != rs[i].first) fail("ranges must be contiguous");
        }
        if (rs[i].first > rs[i].last + 1) fail("range with first > last + 1");
        std::uint64_t c = rs[i].empty() ? 0 : count_supers(view_, rs[i].first, rs[i].last + 1, rs[i].level);
        if (c != rs[i].count) fail("cached range count is stale");
    }
}

std::uint64_t param_delta(const TrimmedChain& P, const TrimParams& p) {
    if (p.tail.active()) return p.tail.eval(P.tip_index());
    double v = p.k_prime + p.a * ln_plus(P.cumulative_S(0) + static_cast<double>(P.tail_length()));
    return v <= 0 ? 0 : static_cast<std::uint64_t>(std::ceil(v));
}

std::uint64_t param_g(const TrimmedChain& P, std::uint32_t mu, const TrimParams& p) {
    double v = p.k + p.a * ln_plus(P.cumulative_S(mu));
    return v <= 0 ? 0 : static_cast<std::uint64_t>(std::ceil(v));
}

std::uint64_t param_f(const TrimmedChain& P, std::uint32_t mu, const TrimParams& p) {
    return static_cast<std::uint64_t>(std::ceil(p.c * static_cast<double>(param_g(P, mu, p))));
}

}  // namespace hnode::trim
