#ifndef MONIC_DIVISION_HPP
#define MONIC_DIVISION_HPP

#include "monic/monic_set.hpp"
#include "monic/poly.hpp"

#include <span>
#include <vector>

namespace monic {

// One rewrite of the division algorithm: the term coef*reduced was replaced
// using generator gen, with reduced = left * LM(g_gen) * right.
template <typename C>
struct RewriteStep {
    C coef;
    Word left;
    int gen;
    Word right;
    Word reduced;
};

// f = sum over trace of coef * left * g_gen * right  +  remainder,
// with LM(left * g * right) <= LM(f) at every step and the remainder
// normal mod the divisor set. The trace is the ordered rewrite log; its
// entries are the quotient terms.
template <typename C>
struct DivisionResult {
    std::vector<RewriteStep<C>> trace;
    Poly<C> remainder;

    const std::vector<RewriteStep<C>>& quotients() const { return trace; }
};

namespace detail {

// Core loop, shared by MonicSet division and the ad-hoc divisor lists used
// during completion. Strategy: reduce the largest reducible monomial of the
// current polynomial; among generators whose LM divides it take the lowest
// index; among occurrences take the leftmost.
template <typename C>
DivisionResult<C> divide_core(const Poly<C>& f, const ContextPtr& ctx,
                              std::span<const Poly<C>> gens, const FactorAutomaton& aut) {
    DivisionResult<C> res{{}, f};
    Poly<C> cur = f;
    std::size_t checked = 0;  // terms [0, checked) are known normal
    while (true) {
        const auto& terms = cur.terms();
        std::size_t idx = checked;
        while (idx < terms.size() && aut.is_normal(terms[idx].word)) ++idx;
        if (idx == terms.size()) break;
        checked = idx;

        const Word w = terms[idx].word;
        const C c = terms[idx].coef;
        int gen = -1;
        std::size_t pos = 0;
        for (std::size_t j = 0; j < gens.size(); ++j) {
            if (auto p = find_factor(gens[j].lm(), w)) {
                gen = static_cast<int>(j);
                pos = *p;
                break;
            }
        }
        if (gen < 0) throw Error("automaton/divisor mismatch in division");

        const Word& glm = gens[gen].lm();
        Word left = w.sub(0, pos, ctx->alphabet);
        Word right = w.sub(pos + glm.length(), w.length() - pos - glm.length(), ctx->alphabet);
        cur = cur - gens[gen].sandwiched(left, right, c);
        res.trace.push_back(RewriteStep<C>{c, std::move(left), gen, std::move(right), w});
    }
    res.remainder = std::move(cur);
    return res;
}

template <typename C>
DivisionResult<C> divide_by_list(const Poly<C>& f, const ContextPtr& ctx,
                                 std::span<const Poly<C>> gens) {
    std::vector<Word> lms;
    lms.reserve(gens.size());
    for (const auto& g : gens) lms.push_back(g.lm());
    FactorAutomaton aut(ctx->alphabet.size(), lms);
    return divide_core(f, ctx, gens, aut);
}

}  // namespace detail

template <typename C>
DivisionResult<C> divide(const Poly<C>& f, const MonicSet<C>& G) {
    if (f.context() != G.context()) throw Error("polynomial and divisor set contexts differ");
    return detail::divide_core(f, G.context(), std::span<const Poly<C>>(G.elements()), G.automaton());
}

template <typename C>
Poly<C> normal_form(const Poly<C>& f, const MonicSet<C>& G) {
    return divide(f, G).remainder;
}

// Reassembles sum coef * left * g_gen * right from a trace.
template <typename C>
Poly<C> quotient_sum(const MonicSet<C>& G, std::span<const RewriteStep<C>> trace) {
    Poly<C> acc(G.context());
    for (const auto& s : trace) acc = acc + G[s.gen].sandwiched(s.left, s.right, s.coef);
    return acc;
}

}  // namespace monic

#endif
