#include <map>
#include <string>

#include "hnode/error.hpp"
#include "hnode/oracle/oracle.hpp"

namespace hnode::oracle {
namespace {

constexpr std::uint64_t kMint = 50;

std::map<AccountKey, std::uint64_t> initial_accounts() {
    std::map<AccountKey, std::uint64_t> m;
    for (int i = 0; i < 8; ++i) {
        std::string s = "acct" + std::to_string(i);
        m[sha256({reinterpret_cast<const std::uint8_t*>(s.data()), s.size()})] = 1000;
    }
    return m;
}

}  // namespace

LedgerState replay_state(const ChainView& C) {
    const AccountKey mint{};
    std::map<AccountKey, std::uint64_t> bal = initial_accounts();
    std::uint64_t height = 0;
    for (std::size_t pos = 1; pos < C.size(); ++pos) {
        const Block& b = C[pos];
        if (b.index != pos) throw InvalidTransaction(b.index, 0, "chain is not contiguous");
        if (!b.body) throw Error(ErrorCode::MissingBody, "replay needs every body");
        const auto& txs = *b.body;
        for (std::size_t i = 0; i < txs.size(); ++i) {
            const Transaction& tx = txs[i];
            if (i == 0) {
                if (tx.from != mint || tx.amount != kMint) throw InvalidTransaction(b.index, 0, "bad coinbase");
                bal[tx.to] += kMint;
                continue;
            }
            if (tx.from == mint || tx.amount == 0) throw InvalidTransaction(b.index, i, "bad transfer");
            auto it = bal.find(tx.from);
            if (it == bal.end() || it->second < tx.amount) throw InvalidTransaction(b.index, i, "insufficient funds");
            it->second -= tx.amount;
            bal[tx.to] += tx.amount;
        }
        if (txs.empty()) throw InvalidTransaction(b.index, 0, "bad coinbase");
        height = b.index;
    }
    LedgerState out;
    out.accounts = std::move(bal);
    out.height = height;
    return out;
}

}  // namespace hnode::oracle
