#include "hnode/sim/world.hpp"

namespace hnode::sim {

void Archive::append(BlockPtr b) {
    if (enabled_) blocks_.push_back(std::move(b));
}

void Archive::reorg(std::uint64_t F, const std::vector<BlockPtr>& tail) {
    if (!enabled_) return;
    blocks_.resize(F + 1);
    blocks_.insert(blocks_.end(), tail.begin(), tail.end());
}

}  // namespace hnode::sim
