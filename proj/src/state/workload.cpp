#include "hnode/state/workload.hpp"

#include <algorithm>

#include "hnode/state/ledger.hpp"

namespace hnode {

Workload::Workload(std::uint64_t seed, unsigned txs_per_block) : rng_(seed), txs_per_block_(txs_per_block) {}

std::vector<Transaction> Workload::make_body(const LedgerState& state, const AccountKey& miner) {
    std::vector<Transaction> txs;
    txs.push_back(make_coinbase(miner, state.height + 1));

    std::vector<std::pair<AccountKey, std::uint64_t>> bal(state.accounts.begin(), state.accounts.end());
    auto credit = [&](const AccountKey& k, std::uint64_t v) {
        auto it = std::find_if(bal.begin(), bal.end(), [&](const auto& p) { return p.first == k; });
        if (it == bal.end()) bal.emplace_back(k, v);
        else it->second += v;
    };
    credit(miner, kCoinbaseMint);

    for (unsigned t = 0; t < txs_per_block_ && bal.size() >= 2; ++t) {
        std::size_t from = rng_() % bal.size();
        if (bal[from].second == 0) continue;
        std::size_t to = rng_() % (bal.size() - 1);
        if (to >= from) ++to;
        std::uint64_t cap = std::min<std::uint64_t>(bal[from].second, 100);
        Transaction tx;
        tx.from = bal[from].first;
        tx.to = bal[to].first;
        tx.amount = 1 + rng_() % cap;
        Hasher h;
        h.update_u64(counter_++);
        tx.sig_stub = h.finish();
        bal[from].second -= tx.amount;
        bal[to].second += tx.amount;
        txs.push_back(tx);
    }
    return txs;
}

}  // namespace hnode
