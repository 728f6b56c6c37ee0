#include "hnode/chain/merkle.hpp"

namespace hnode {

Digest merkle_root(std::vector<Digest> leaves) {
    if (leaves.empty()) return sha256({});
    while (leaves.size() > 1) {
        if (leaves.size() % 2 == 1) leaves.push_back(leaves.back());
        std::vector<Digest> next;
        next.reserve(leaves.size() / 2);
        for (std::size_t i = 0; i < leaves.size(); i += 2) next.push_back(sha256_pair(leaves[i], leaves[i + 1]));
        leaves = std::move(next);
    }
    return leaves.front();
}

}  // namespace hnode
