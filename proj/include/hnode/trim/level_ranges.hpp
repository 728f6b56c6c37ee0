#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "hnode/chain/chain_view.hpp"

namespace hnode::trim {

/// One level range [first, last] by block index. first == last + 1 encodes
/// an empty range. `count` caches |P{first:last+1}↑level| over retained blocks.
struct LevelRange {
    std::uint32_t level = 0;
    std::uint64_t first = 0;
    std::uint64_t last = 0;
    std::uint64_t count = 0;

    [[nodiscard]] bool empty() const noexcept { return first > last; }
    [[nodiscard]] bool contains(std::uint64_t idx) const noexcept { return !empty() && first <= idx && idx <= last; }
    bool operator==(const LevelRange&) const = default;
};

/// Retained blocks with level >= mu and lo <= index < hi.
std::uint64_t count_supers(const ChainView& v, std::uint64_t lo, std::uint64_t hi, std::uint32_t mu);

/// L_f/L_l as functions over all levels, per the conventions for levels
/// above the highest and below the lowest active range.
class LevelRangeFns {
public:
    LevelRangeFns() = default;
    LevelRangeFns(std::vector<LevelRange> ranges, std::uint64_t trim_point);

    [[nodiscard]] const std::vector<LevelRange>& ranges() const noexcept { return ranges_; }
    [[nodiscard]] bool any() const noexcept { return !ranges_.empty(); }
    [[nodiscard]] std::uint32_t mu_h() const noexcept { return ranges_.empty() ? 0 : ranges_.front().level; }
    [[nodiscard]] std::uint32_t mu_l() const noexcept { return ranges_.empty() ? 0 : ranges_.back().level; }
    [[nodiscard]] const LevelRange* find(std::uint32_t mu) const;
    [[nodiscard]] std::uint64_t L_f(std::uint32_t mu) const;
    [[nodiscard]] std::uint64_t L_l(std::uint32_t mu) const;
    /// Level of the non-empty range holding block index idx.
    [[nodiscard]] std::optional<std::uint32_t> level_containing(std::uint64_t idx) const;

private:
    std::vector<LevelRange> ranges_;  // strictly decreasing level, genesis side first
    std::uint64_t trim_point_ = 0;
};

}  // namespace hnode::trim
