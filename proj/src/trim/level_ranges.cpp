#include "hnode/trim/level_ranges.hpp"

namespace hnode::trim {

std::uint64_t count_supers(const ChainView& v, std::uint64_t lo, std::uint64_t hi, std::uint32_t mu) {
    if (hi <= lo) return 0;
    std::size_t b = v.lower_bound(lo), e = v.lower_bound(hi);
    if (mu == 0) return e - b;
    std::uint64_t n = 0;
    for (std::size_t i = b; i < e; ++i) n += v[i].level >= mu;
    return n;
}

LevelRangeFns::LevelRangeFns(std::vector<LevelRange> ranges, std::uint64_t trim_point)
    : ranges_(std::move(ranges)), trim_point_(trim_point) {}

const LevelRange* LevelRangeFns::find(std::uint32_t mu) const {
    for (const auto& r : ranges_) {
        if (r.level == mu) return &r;
    }
    return nullptr;
}

std::uint64_t LevelRangeFns::L_f(std::uint32_t mu) const {
    if (ranges_.empty() || mu > mu_h()) return 0;
    if (const auto* r = find(mu)) return r->first;
    return trim_point_ == 0 ? 0 : trim_point_ - 1;
}

std::uint64_t LevelRangeFns::L_l(std::uint32_t mu) const {
    if (ranges_.empty() || mu > mu_h()) return 0;
    if (const auto* r = find(mu)) return r->last;
    return trim_point_ == 0 ? 0 : trim_point_ - 1;
}

std::optional<std::uint32_t> LevelRangeFns::level_containing(std::uint64_t idx) const {
    for (const auto& r : ranges_) {
        if (r.contains(idx)) return r.level;
    }
    return std::nullopt;
}

}  // namespace hnode::trim
