#include "hnode/error.hpp"
#include "hnode/oracle/oracle.hpp"

namespace hnode::oracle {

void OracleReport::record(bool ok, Counterexample c) {
    ++checked;
    if (ok) ++agreements;
    else counterexamples.push_back(std::move(c));
}

int full_compare(const ChainView& C1, const ChainView& C2) {
    if (C1.empty() || C2.empty() || C1[0].id != C2[0].id) {
        throw Error(ErrorCode::NoCommonAncestor, "chains do not share genesis");
    }
    return C2.size() > C1.size() ? 2 : 1;
}

}  // namespace hnode::oracle
