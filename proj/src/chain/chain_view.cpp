#include "hnode/chain/chain_view.hpp"

#include <algorithm>

#include "hnode/error.hpp"

namespace hnode {

namespace {
constexpr std::size_t kCompactThreshold = 1024;
}

ChainView::ChainView(std::vector<BlockPtr> blocks) {
    for (std::size_t i = 1; i < blocks.size(); ++i) {
        if (blocks[i]->index <= blocks[i - 1]->index) {
            throw Error(ErrorCode::InvalidBlock, "chain view indices must strictly increase");
        }
    }
    base_len_ = blocks.size();
    base_ = std::make_shared<const std::vector<BlockPtr>>(std::move(blocks));
}

const Block& ChainView::at(std::ptrdiff_t pos) const {
    auto n = static_cast<std::ptrdiff_t>(size());
    if (pos < 0) pos += n;
    if (pos < 0 || pos >= n) throw std::out_of_range("chain position out of range");
    return *ptr(static_cast<std::size_t>(pos));
}

void ChainView::push_back(BlockPtr b) {
    if (!empty() && b->index <= back().index) {
        throw Error(ErrorCode::InvalidBlock, "appended block index must exceed tip");
    }
    own_.push_back(std::move(b));
    if (own_.size() >= kCompactThreshold) compact();
}

void ChainView::compact() {
    auto all = std::make_shared<std::vector<BlockPtr>>();
    all->reserve(size());
    for (std::size_t i = 0; i < size(); ++i) all->push_back(ptr(i));
    base_len_ = all->size();
    base_ = std::move(all);
    own_.clear();
}

ChainView ChainView::prefix(std::size_t n) const {
    n = std::min(n, size());
    ChainView out;
    out.base_ = base_;
    if (n <= base_len_) {
        out.base_len_ = n;
    } else {
        out.base_len_ = base_len_;
        out.own_.assign(own_.begin(), own_.begin() + static_cast<std::ptrdiff_t>(n - base_len_));
    }
    return out;
}

ChainView ChainView::slice(std::optional<std::ptrdiff_t> begin, std::optional<std::ptrdiff_t> end) const {
    auto n = static_cast<std::ptrdiff_t>(size());
    auto clamp = [n](std::ptrdiff_t p) {
        if (p < 0) p += n;
        return std::clamp<std::ptrdiff_t>(p, 0, n);
    };
    std::ptrdiff_t b = begin ? clamp(*begin) : 0;
    std::ptrdiff_t e = end ? clamp(*end) : n;
    std::vector<BlockPtr> out;
    for (std::ptrdiff_t i = b; i < e; ++i) out.push_back(ptr(static_cast<std::size_t>(i)));
    return ChainView(std::move(out));
}

std::size_t ChainView::lower_bound(std::uint64_t idx) const {
    std::size_t lo = 0, hi = size();
    while (lo < hi) {
        std::size_t mid = (lo + hi) / 2;
        if (ptr(mid)->index < idx) lo = mid + 1;
        else hi = mid;
    }
    return lo;
}

ChainView ChainView::slice_by_index(std::optional<std::uint64_t> lo, std::optional<std::uint64_t> hi) const {
    std::size_t b = lo ? lower_bound(*lo) : 0;
    std::size_t e = hi ? lower_bound(*hi) : size();
    std::vector<BlockPtr> out;
    for (std::size_t i = b; i < e; ++i) out.push_back(ptr(i));
    return ChainView(std::move(out));
}

std::optional<std::size_t> ChainView::find_index(std::uint64_t idx) const {
    std::size_t p = lower_bound(idx);
    if (p < size() && ptr(p)->index == idx) return p;
    return std::nullopt;
}

bool ChainView::contains(const Block& b) const {
    auto p = find_index(b.index);
    return p && ptr(*p)->id == b.id;
}

std::size_t ChainView::count_in(std::uint64_t lo, std::uint64_t hi) const {
    if (hi <= lo) return 0;
    return lower_bound(hi) - lower_bound(lo);
}

ChainView ChainView::upchain(std::uint32_t mu) const {
    std::vector<BlockPtr> out;
    for (std::size_t i = 0; i < size(); ++i) {
        if (ptr(i)->level >= mu) out.push_back(ptr(i));
    }
    return ChainView(std::move(out));
}

std::vector<BlockPtr> ChainView::to_vector() const {
    std::vector<BlockPtr> out;
    out.reserve(size());
    for (std::size_t i = 0; i < size(); ++i) out.push_back(ptr(i));
    return out;
}

bool operator==(const ChainView& a, const ChainView& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a.ptr(i)->id != b.ptr(i)->id) return false;
    }
    return true;
}

ChainView upchain(const ChainView& view, std::uint32_t mu) { return view.upchain(mu); }

ChainView downchain(const ChainView& superchain, const ChainView& underlying) {
    if (superchain.empty()) throw Error(ErrorCode::NotASuperchain, "empty superchain");
    std::uint32_t mu = GENESIS_INF;
    for (const auto& b : superchain) {
        if (!underlying.contains(*b)) throw Error(ErrorCode::NotASuperchain, "superchain block missing from underlying chain");
        mu = std::min(mu, b->level);
    }
    const Block& first = superchain.front();
    const Block& last = superchain.back();
    if (first.is_genesis()) return underlying.slice_by_index(std::nullopt, last.index);
    // Predecessor of first in underlying's mu-upchain.
    std::size_t p = underlying.lower_bound(first.index);
    while (p > 0) {
        --p;
        if (underlying[p].level >= mu) return underlying.slice_by_index(underlying[p].index + 1, last.index);
    }
    throw Error(ErrorCode::NotASuperchain, "no upchain predecessor in underlying chain");
}

std::uint64_t lca(const ChainView& a, const ChainView& b) {
    if (a.empty() || b.empty() || a.front().id != b.front().id) {
        throw Error(ErrorCode::NoCommonAncestor, "chains do not share genesis");
    }
    std::size_t i = a.size() - 1, j = b.size() - 1;
    for (;;) {
        const Block& x = a[i];
        const Block& y = b[j];
        if (x.index > y.index) { --i; continue; }
        if (y.index > x.index) { --j; continue; }
        if (x.id == y.id) return x.index;
        --i;
        --j;
    }
}

}  // namespace hnode
