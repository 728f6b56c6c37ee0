#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace hnode {

enum class ErrorCode {
    InvalidBlock,
    NotASuperchain,
    NoCommonAncestor,
    InvalidTransaction,
    MissingBody,
    BlockNotInChain,
    ConfigInvalid,
    TooLarge,
    VerificationFailed,
    Serialization,
    IdCollision,
};

const char* to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}

    [[nodiscard]] ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

/// Raised by apply_block; carries where the bad transaction sits.
class InvalidTransaction : public Error {
public:
    InvalidTransaction(std::uint64_t block_index, std::size_t tx_position, const std::string& what)
        : Error(ErrorCode::InvalidTransaction, what), block_index_(block_index), tx_position_(tx_position) {}

    [[nodiscard]] std::uint64_t block_index() const noexcept { return block_index_; }
    [[nodiscard]] std::size_t tx_position() const noexcept { return tx_position_; }

private:
    std::uint64_t block_index_;
    std::size_t tx_position_;
};

inline const char* to_string(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::InvalidBlock: return "InvalidBlock";
        case ErrorCode::NotASuperchain: return "NotASuperchain";
        case ErrorCode::NoCommonAncestor: return "NoCommonAncestor";
        case ErrorCode::InvalidTransaction: return "InvalidTransaction";
        case ErrorCode::MissingBody: return "MissingBody";
        case ErrorCode::BlockNotInChain: return "BlockNotInChain";
        case ErrorCode::ConfigInvalid: return "ConfigInvalid";
        case ErrorCode::TooLarge: return "TooLarge";
        case ErrorCode::VerificationFailed: return "VerificationFailed";
        case ErrorCode::Serialization: return "Serialization";
        case ErrorCode::IdCollision: return "IdCollision";
    }
    return "Unknown";
}

}  // namespace hnode
