#include "monic/order.hpp"

#include "monic/errors.hpp"

#include <algorithm>

namespace monic {

MonomialOrder::MonomialOrder(OrderKind kind_, std::vector<int> rank_)
    : kind(kind_), rank(std::move(rank_)) {
    std::vector<bool> seen(rank.size(), false);
    for (int r : rank) {
        if (r < 0 || r >= static_cast<int>(rank.size()) || seen[r])
            throw Error("order ranks must form a permutation of the generators");
        seen[r] = true;
    }
}

MonomialOrder MonomialOrder::from_precedence(OrderKind kind, const std::vector<int>& small_to_large, int n) {
    if (static_cast<int>(small_to_large.size()) != n)
        throw Error("order permutation must list every generator exactly once");
    std::vector<int> rank(n, -1);
    for (int pos = 0; pos < n; ++pos) {
        int g = small_to_large[pos];
        if (g < 0 || g >= n || rank[g] != -1)
            throw Error("order permutation must list every generator exactly once");
        rank[g] = pos;
    }
    return MonomialOrder(kind, std::move(rank));
}

Cmp compare(const Word& u, const Word& v, const MonomialOrder& ord) {
    if (u.degree() != v.degree()) return u.degree() < v.degree() ? Cmp::LT : Cmp::GT;
    const auto& a = u.letters();
    const auto& b = v.letters();
    std::size_t m = std::min(a.size(), b.size());
    if (ord.kind == OrderKind::Deglex) {
        for (std::size_t i = 0; i < m; ++i) {
            int ra = ord.rank[a[i]], rb = ord.rank[b[i]];
            if (ra != rb) return ra < rb ? Cmp::LT : Cmp::GT;
        }
    } else {
        for (std::size_t i = 0; i < m; ++i) {
            int ra = ord.rank[a[a.size() - 1 - i]], rb = ord.rank[b[b.size() - 1 - i]];
            if (ra != rb) return ra > rb ? Cmp::LT : Cmp::GT;
        }
    }
    // equal degree and one a prefix/suffix of the other forces equality,
    // since every letter has weight >= 1
    return a.size() == b.size() ? Cmp::EQ : (a.size() < b.size() ? Cmp::LT : Cmp::GT);
}

Context::Context(Alphabet a, MonomialOrder o) : alphabet(std::move(a)), order(std::move(o)) {
    if (static_cast<int>(order.rank.size()) != alphabet.size())
        throw Error("order rank size must match alphabet size");
}

ContextPtr make_context(Alphabet a, MonomialOrder o) {
    return std::make_shared<const Context>(std::move(a), std::move(o));
}

}  // namespace monic
