#pragma once

#include <vector>

#include "hnode/chain/digest.hpp"

namespace hnode {

/// Binary Merkle root. An odd node at any layer is paired with itself.
/// The empty tree hashes to SHA-256 of the empty string.
Digest merkle_root(std::vector<Digest> leaves);

}  // namespace hnode
