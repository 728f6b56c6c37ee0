#pragma once

#include <cstddef>
#include <cstdint>
#include <iterator>
#include <memory>
#include <optional>
#include <vector>

#include "hnode/chain/block.hpp"

namespace hnode {

/// Ordered block sequence, genesis first, strictly increasing block index.
///
/// Storage is a shared immutable prefix plus an owned suffix, so taking a
/// prefix of a long chain or appending to it never copies the whole thing.
/// Two slicing flavours: slice() is positional (the paper's square
/// brackets), slice_by_index() selects by block index (curly braces).
class ChainView {
public:
    class const_iterator {
    public:
        using iterator_category = std::random_access_iterator_tag;
        using value_type = BlockPtr;
        using difference_type = std::ptrdiff_t;
        using pointer = const BlockPtr*;
        using reference = const BlockPtr&;

        const_iterator() = default;
        const_iterator(const ChainView* v, std::size_t pos) : v_(v), pos_(pos) {}

        reference operator*() const { return v_->ptr(pos_); }
        pointer operator->() const { return &v_->ptr(pos_); }
        const_iterator& operator++() { ++pos_; return *this; }
        const_iterator operator++(int) { auto t = *this; ++pos_; return t; }
        const_iterator& operator--() { --pos_; return *this; }
        const_iterator& operator+=(difference_type n) { pos_ += n; return *this; }
        const_iterator operator+(difference_type n) const { return {v_, pos_ + n}; }
        const_iterator operator-(difference_type n) const { return {v_, pos_ - n}; }
        difference_type operator-(const const_iterator& o) const {
            return static_cast<difference_type>(pos_) - static_cast<difference_type>(o.pos_);
        }
        reference operator[](difference_type n) const { return v_->ptr(pos_ + n); }
        bool operator==(const const_iterator& o) const { return pos_ == o.pos_; }
        auto operator<=>(const const_iterator& o) const { return pos_ <=> o.pos_; }

    private:
        const ChainView* v_ = nullptr;
        std::size_t pos_ = 0;
    };

    ChainView() = default;
    explicit ChainView(std::vector<BlockPtr> blocks);

    [[nodiscard]] std::size_t size() const noexcept { return base_len_ + own_.size(); }
    [[nodiscard]] bool empty() const noexcept { return size() == 0; }

    [[nodiscard]] const BlockPtr& ptr(std::size_t pos) const {
        return pos < base_len_ ? (*base_)[pos] : own_[pos - base_len_];
    }
    const Block& operator[](std::size_t pos) const { return *ptr(pos); }
    /// Python-style position; negative counts from the end.
    [[nodiscard]] const Block& at(std::ptrdiff_t pos) const;
    [[nodiscard]] const Block& front() const { return *ptr(0); }
    [[nodiscard]] const Block& back() const { return *ptr(size() - 1); }
    [[nodiscard]] std::uint64_t tip_index() const { return back().index; }

    const_iterator begin() const { return {this, 0}; }
    const_iterator end() const { return {this, size()}; }

    void push_back(BlockPtr b);
    /// Keep only the first n positions (O(1) when n falls inside the shared part).
    [[nodiscard]] ChainView prefix(std::size_t n) const;

    [[nodiscard]] ChainView slice(std::optional<std::ptrdiff_t> begin, std::optional<std::ptrdiff_t> end) const;
    /// Blocks with lo <= index < hi.
    [[nodiscard]] ChainView slice_by_index(std::optional<std::uint64_t> lo, std::optional<std::uint64_t> hi) const;

    /// First position whose block index is >= idx.
    [[nodiscard]] std::size_t lower_bound(std::uint64_t idx) const;
    [[nodiscard]] std::optional<std::size_t> find_index(std::uint64_t idx) const;
    [[nodiscard]] bool contains(const Block& b) const;
    /// Number of retained blocks with lo <= index < hi.
    [[nodiscard]] std::size_t count_in(std::uint64_t lo, std::uint64_t hi) const;

    [[nodiscard]] ChainView upchain(std::uint32_t mu) const;
    [[nodiscard]] std::vector<BlockPtr> to_vector() const;

    friend bool operator==(const ChainView& a, const ChainView& b);

private:
    std::shared_ptr<const std::vector<BlockPtr>> base_;
    std::size_t base_len_ = 0;
    std::vector<BlockPtr> own_;

    void compact();
};

ChainView upchain(const ChainView& view, std::uint32_t mu);
/// Eq. 2: the stretch of `underlying` that `superchain` spans, selected by
/// block index so it also works when `underlying` is itself trimmed.
ChainView downchain(const ChainView& superchain, const ChainView& underlying);
/// Largest block index whose id appears in both views.
std::uint64_t lca(const ChainView& a, const ChainView& b);

}  // namespace hnode
