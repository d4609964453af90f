#ifndef MONIC_ORDER_HPP
#define MONIC_ORDER_HPP

#include "monic/word.hpp"

#include <memory>
#include <vector>

namespace monic {

enum class Cmp { LT, EQ, GT };

enum class OrderKind { Deglex, Degrevlex };

// A graded monomial order on words: compare weighted degrees first, then
// break ties letter by letter (deglex scans from the left, degrevlex scans
// from the right with the letter comparison reversed). rank[i] gives the
// precedence of generator i; rank 0 is the smallest generator.
struct MonomialOrder {
    OrderKind kind;
    std::vector<int> rank;

    MonomialOrder(OrderKind kind_, std::vector<int> rank_);

    // Order listing generator indices from smallest to largest.
    static MonomialOrder from_precedence(OrderKind kind, const std::vector<int>& small_to_large, int n);
};

Cmp compare(const Word& u, const Word& v, const MonomialOrder& ord);

// The ambient free algebra: alphabet plus monomial order. Shared immutably
// by every word-level and polynomial-level object built over it.
struct Context {
    Alphabet alphabet;
    MonomialOrder order;

    Context(Alphabet a, MonomialOrder o);

    Cmp cmp(const Word& u, const Word& v) const { return compare(u, v, order); }
    bool less(const Word& u, const Word& v) const { return cmp(u, v) == Cmp::LT; }

    Word word(std::vector<std::int32_t> letters) const { return Word(std::move(letters), alphabet); }
};

using ContextPtr = std::shared_ptr<const Context>;

ContextPtr make_context(Alphabet a, MonomialOrder o);

}  // namespace monic

#endif
