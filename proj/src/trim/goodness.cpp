#include "hnode/trim/goodness.hpp"

#include <cmath>
#include <optional>
#include <vector>

#include "hnode/error.hpp"

namespace hnode::trim {

namespace {

/// Index of the block preceding up[0] in under↑mu; nullopt when up starts at genesis.
std::optional<std::uint64_t> upchain_predecessor(const ChainView& up, const ChainView& under, std::uint32_t mu) {
    const Block& first = up.front();
    if (first.is_genesis()) return std::nullopt;
    std::size_t p = under.lower_bound(first.index);
    while (p > 0) {
        --p;
        if (under[p].level >= mu) return under[p].index;
    }
    throw Error(ErrorCode::NotASuperchain, "no upchain predecessor in underlying chain");
}

}  // namespace

bool superquality_check(const ChainView& up, const ChainView& under, std::uint32_t mu, double delta, std::uint64_t g) {
    const std::size_t n = up.size();
    if (n == 0 || n < g) return true;
    const std::uint64_t last = up.back().index;
    const auto pred0 = upchain_predecessor(up, under, mu);
    const double scale = (1 - delta) * std::ldexp(1.0, -static_cast<int>(mu));
    for (std::size_t gp = std::max<std::uint64_t>(g, 1); gp <= n; ++gp) {
        std::size_t s = n - gp;
        std::optional<std::uint64_t> pred = s > 0 ? std::optional<std::uint64_t>(up[s - 1].index) : pred0;
        double len = pred ? static_cast<double>(last - *pred - 1) : static_cast<double>(last);
        if (static_cast<double>(gp) < scale * len) return false;
    }
    return true;
}

bool dominance_check(const ChainView& up, const ChainView& under, std::uint32_t mu, double delta, std::uint64_t g) {
    const std::size_t n = up.size();
    if (mu == 0 || n == 0) return true;
    const std::uint64_t last = up.back().index;
    const auto pred0 = upchain_predecessor(up, under, mu);
    const double cap = std::ldexp(static_cast<double>(g), static_cast<int>(mu));
    const double lhs_unit = std::ldexp(1.0, static_cast<int>(mu));

    std::vector<std::uint64_t> cnt(mu, 0);
    auto suffix_ok = [&](std::size_t gp) {
        if (gp < g) return true;
        for (std::uint32_t m = 0; m < mu; ++m) {
            if (lhs_unit * static_cast<double>(gp) < (1 - delta) * std::ldexp(static_cast<double>(cnt[m]), static_cast<int>(m))) {
                return false;
            }
        }
        return true;
    };

    // Walk the downchain backwards; when the walk reaches up[s-1], the counts
    // cover exactly downchain(up[s:]).
    std::size_t hi = under.lower_bound(last);
    std::size_t lo = pred0 ? under.lower_bound(*pred0 + 1) : 0;
    std::size_t s = n - 1;
    double gap = 0;
    for (std::size_t i = hi; i-- > lo;) {
        const Block& b = under[i];
        if (s > 0 && b.index == up[s - 1].index) {
            if (!suffix_ok(n - s)) return false;
            --s;
        }
        std::uint32_t top = b.level >= mu ? mu : b.level + 1;
        for (std::uint32_t m = 0; m < top; ++m) ++cnt[m];
        if (b.level >= mu) {
            gap = 0;
        } else {
            gap += std::ldexp(1.0, static_cast<int>(b.level));
            if (gap >= cap) return false;
        }
    }
    return suffix_ok(n - s);
}

bool goodness_check(const ChainView& up, const ChainView& under, std::uint32_t mu, double delta, std::uint64_t g) {
    return superquality_check(up, under, mu, delta, g) && dominance_check(up, under, mu, delta, g);
}

}  // namespace hnode::trim
