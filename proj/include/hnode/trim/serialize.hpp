#pragma once

#include <span>

#include "hnode/chain/serialize.hpp"
#include "hnode/trim/trimmed_chain.hpp"

namespace hnode::trim {

/// "HNTC", version, B', ranges (level, first, last), then the block list.
Bytes encode_trimmed(const TrimmedChain& P);
TrimmedChain decode_trimmed(std::span<const std::uint8_t> in);

}  // namespace hnode::trim
