#include "hnode/compare/comparator.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "hnode/error.hpp"

namespace hnode::compare {

using trim::TrimmedChain;

double weight_of(const TrimmedChain& P, std::uint64_t b, const trim::TrimParams& p) {
    const ChainView& v = P.view();
    auto pos = v.find_index(b);
    if (!pos) throw Error(ErrorCode::BlockNotInChain, "block " + std::to_string(b) + " not retained");

    const std::uint64_t Bp = P.trim_point();
    const double tail = static_cast<double>(P.tail_length());
    if (Bp > 0 && P.tail_length() < trim::param_delta(P, p)) return 0;
    if (b >= Bp) return static_cast<double>(v.size() - *pos - 1);

    auto mu_hat = P.range_fns().level_containing(b);
    if (!mu_hat) throw Error(ErrorCode::BlockNotInChain, "block " + std::to_string(b) + " outside every level range");
    const std::uint64_t end = P.L_l(*mu_hat);
    const std::uint32_t mu_h = P.mu_h();

    // Per-level counts of retained blocks in (b, L_l(mu_hat)].
    std::vector<std::uint64_t> cnt(mu_h + 1, 0);
    for (std::size_t i = *pos + 1; i < v.size() && v[i].index <= end; ++i) {
        std::uint32_t top = std::min(v[i].level, mu_h);
        for (std::uint32_t m = 0; m <= top; ++m) ++cnt[m];
    }
    const double f_hat = static_cast<double>(trim::param_f(P, *mu_hat, p));
    double W = static_cast<double>(cnt[0]);
    for (std::uint32_t m = 1; m <= mu_h; ++m) {
        if (static_cast<double>(cnt[m]) >= f_hat) W = std::max(W, std::ldexp(static_cast<double>(cnt[m]), static_cast<int>(m)));
    }
    for (const auto& r : P.ranges()) {
        if (r.level >= *mu_hat || r.empty()) continue;
        if (static_cast<double>(r.count) >= static_cast<double>(trim::param_f(P, r.level, p))) {
            W += std::ldexp(static_cast<double>(r.count), static_cast<int>(r.level));
        }
    }
    return W + tail;
}

CompareVerdict compare(const TrimmedChain& P1, const TrimmedChain& P2, const trim::TrimParams& p) {
    CompareVerdict v;
    v.lca_index = lca(P1.view(), P2.view());
    v.w1 = weight_of(P1, v.lca_index, p);
    v.w2 = weight_of(P2, v.lca_index, p);
    v.winner = v.w2 > v.w1 ? 2 : 1;
    v.lca_before_trim_point = v.lca_index < P1.trim_point();
    return v;
}

}  // namespace hnode::compare
