#pragma once

#include <cstdint>
#include <vector>

#include "hnode/chain/chain_view.hpp"

namespace hnode::sim {

/// The full underlying chain the honest system agrees on, with bodies.
/// Only kept for auditing (state replay); the hybrid node never reads it.
class Archive {
public:
    explicit Archive(bool enabled = true) : enabled_(enabled) {}

    [[nodiscard]] bool enabled() const noexcept { return enabled_; }
    void append(BlockPtr b);
    /// Keep blocks up to index F and continue with `tail`.
    void reorg(std::uint64_t F, const std::vector<BlockPtr>& tail);
    [[nodiscard]] const std::vector<BlockPtr>& blocks() const noexcept { return blocks_; }
    [[nodiscard]] std::size_t size() const noexcept { return blocks_.size(); }

private:
    bool enabled_;
    std::vector<BlockPtr> blocks_;
};

}  // namespace hnode::sim
