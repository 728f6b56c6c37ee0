#include <cmath>
#include <functional>

#include "hnode/error.hpp"
#include "hnode/oracle/oracle.hpp"

namespace hnode::oracle {

// Enumerates trimmed subchains P' of C: a covered interval [s, e]
// split into consecutive level ranges with strictly decreasing levels
// <= mu, a start block l inside the range of level mu' and a weighing
// level mu1 <= mu'. A range of level lambda must keep every
// lambda-superblock it spans (the interlink at that level runs through
// them); any other block may or may not be kept. Extra blocks can only
// raise the premise weight and are never mu-superblocks, so for each
// assignment the all-kept subchain is the hardest case and stands in for
// the 2^n subsets.
bool dominant_bruteforce(const ChainView& C, std::uint32_t mu, std::uint64_t g, double /*delta*/) {
    const std::size_t n = C.size();
    if (n > 20) throw Error(ErrorCode::TooLarge, "brute force is capped at 20 blocks");
    if (n == 0) return true;
    std::vector<std::uint32_t> lv(n);
    for (std::size_t i = 0; i < n; ++i) lv[i] = C[i].level;
    const double threshold = std::ldexp(1.0, static_cast<int>(mu)) * static_cast<double>(g);

    auto kept = [&](std::size_t lo, std::size_t hi, std::uint32_t level) {  // [lo, hi]
        std::uint64_t c = 0;
        for (std::size_t i = lo; i <= hi; ++i) c += lv[i] >= level;
        return c;
    };

    struct Range {
        std::size_t lo, hi;
        std::uint32_t level;
    };
    std::vector<Range> ranges;
    bool ok = true;

    // Premise check for one complete assignment.
    auto evaluate = [&]() {
        for (std::size_t r = 0; r < ranges.size(); ++r) {
            double lower = 0;
            for (std::size_t q = r + 1; q < ranges.size(); ++q) {
                lower += std::ldexp(1.0, static_cast<int>(ranges[q].level)) *
                         static_cast<double>(kept(ranges[q].lo, ranges[q].hi, ranges[q].level));
            }
            for (std::size_t l = ranges[r].lo; l <= ranges[r].hi; ++l) {
                for (std::uint32_t mu1 = 0; mu1 <= ranges[r].level; ++mu1) {
                    double w = std::ldexp(1.0, static_cast<int>(mu1)) * static_cast<double>(kept(l, ranges[r].hi, mu1)) + lower;
                    if (w >= threshold) ok = false;
                }
            }
        }
    };

    std::function<void(std::size_t, std::size_t, std::uint32_t)> split = [&](std::size_t from, std::size_t e, std::uint32_t cap) {
        if (!ok) return;
        if (from > e) {
            evaluate();
            return;
        }
        for (std::size_t hi = from; hi <= e; ++hi) {
            for (std::uint32_t level = 0; level <= cap; ++level) {
                ranges.push_back({from, hi, level});
                if (hi == e) evaluate();
                else if (level > 0) split(hi + 1, e, level - 1);
                ranges.pop_back();
                if (!ok) return;
            }
        }
    };

    for (std::size_t s = 0; s < n && ok; ++s) {
        for (std::size_t e = s; e < n && ok; ++e) {
            // Every range level is <= mu, so any mu-superblock in [s, e] is kept
            // and the conclusion |P' up mu| >= 1 holds outright.
            bool has_super = false;
            for (std::size_t i = s; i <= e; ++i) has_super |= lv[i] >= mu;
            if (has_super) continue;
            split(s, e, mu);
        }
    }
    return ok;
}

}  // namespace hnode::oracle
