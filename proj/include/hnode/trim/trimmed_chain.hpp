#pragma once

#include <cstdint>
#include <vector>

#include "hnode/chain/chain_view.hpp"
#include "hnode/trim/level_ranges.hpp"
#include "hnode/trim/params.hpp"

namespace hnode::trim {

/// Retained blocks + level ranges + trimming point B'. Blocks at index >= B'
/// form the untrimmed tail and keep their bodies. Mutated only by its
/// owner (append / assignment); readers take copies, which are cheap.
class TrimmedChain {
public:
    TrimmedChain() = default;
    /// An untrimmed chain: no ranges, B' = 0.
    explicit TrimmedChain(ChainView full);
    /// Counts in `ranges` are recomputed from `view`.
    TrimmedChain(ChainView view, std::vector<LevelRange> ranges, std::uint64_t trim_point);

    [[nodiscard]] const ChainView& view() const noexcept { return view_; }
    [[nodiscard]] const std::vector<LevelRange>& ranges() const noexcept { return fns_.ranges(); }
    [[nodiscard]] const LevelRangeFns& range_fns() const noexcept { return fns_; }
    [[nodiscard]] std::uint64_t trim_point() const noexcept { return trim_point_; }
    [[nodiscard]] bool has_ranges() const noexcept { return fns_.any(); }
    [[nodiscard]] std::uint32_t mu_h() const noexcept { return fns_.mu_h(); }
    [[nodiscard]] std::uint32_t mu_l() const noexcept { return fns_.mu_l(); }
    [[nodiscard]] std::uint64_t L_f(std::uint32_t mu) const { return fns_.L_f(mu); }
    [[nodiscard]] std::uint64_t L_l(std::uint32_t mu) const { return fns_.L_l(mu); }

    [[nodiscard]] std::uint64_t tip_index() const { return view_.tip_index(); }
    /// Underlying chain length implied by the tip: B + 1 blocks incl. genesis.
    [[nodiscard]] std::uint64_t underlying_length() const { return view_.tip_index() + 1; }
    /// |P{B':}|
    [[nodiscard]] std::uint64_t tail_length() const { return view_.size() - view_.lower_bound(trim_point_); }

    /// W(P, mu); zero for a level with no active range.
    [[nodiscard]] double weight_W(std::uint32_t mu) const;
    /// S(P, mu) = sum of W over active levels >= mu.
    [[nodiscard]] double cumulative_S(std::uint32_t mu) const;

    void append(BlockPtr b) { view_.push_back(std::move(b)); }
    /// Pointer-only trimming: keep every block and make [0, B'-1] one level-0 range.
    void set_pointer_trim(std::uint64_t trim_point);
    /// Adversary's view of a fork from F: retained blocks up to F, ranges
    /// clipped at F, B' = min(B', F + 1).
    [[nodiscard]] TrimmedChain truncated(std::uint64_t F) const;

    /// Throws InvalidBlock describing the first broken structural invariant.
    void check_invariants() const;

private:
    ChainView view_;
    LevelRangeFns fns_;
    std::uint64_t trim_point_ = 0;
};

std::uint64_t param_delta(const TrimmedChain& P, const TrimParams& p);
std::uint64_t param_g(const TrimmedChain& P, std::uint32_t mu, const TrimParams& p);
std::uint64_t param_f(const TrimmedChain& P, std::uint32_t mu, const TrimParams& p);

}  // namespace hnode::trim
