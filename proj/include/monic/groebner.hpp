#ifndef MONIC_GROEBNER_HPP
#define MONIC_GROEBNER_HPP

#include "monic/division.hpp"
#include "monic/monic_set.hpp"
#include "monic/padic.hpp"
#include "monic/rational.hpp"

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

namespace monic {

// Overlap of two relations: LM(g_i)*u = v*LM(g_j) with LM(g_i) not dividing
// v and LM(g_j) not dividing u. value = g_i*u - v*g_j, whose leading
// monomial is strictly below the superposition word LM(g_i)*u.
template <typename C>
struct OverlapElement {
    int i;
    int j;
    Word u;
    Word v;
    Poly<C> value;
    Word superposition;
};

template <typename C>
std::vector<OverlapElement<C>> overlaps(const MonicSet<C>& G) {
    const ContextPtr& ctx = G.context();
    std::vector<OverlapElement<C>> out;
    for (std::size_t i = 0; i < G.size(); ++i) {
        const Word& li = G[i].lm();
        for (std::size_t j = 0; j < G.size(); ++j) {
            const Word& lj = G[j].lm();
            std::size_t kmax = std::min(li.length(), lj.length());
            // overlap length strictly below both lengths: the boundary cases
            // are either pure containments (impossible, the set is
            // LM-reduced) or the trivial self-overlap g*1 - 1*g = 0
            for (std::size_t k = 1; k < kmax; ++k) {
                bool match = true;
                for (std::size_t t = 0; t < k && match; ++t)
                    match = li.letters()[li.length() - k + t] == lj.letters()[t];
                if (!match) continue;
                Word u = lj.sub(k, lj.length() - k, ctx->alphabet);
                Word v = li.sub(0, li.length() - k, ctx->alphabet);
                Poly<C> value = G[i].sandwiched(Word(), u, G[i].lc()) -
                                G[j].sandwiched(v, Word(), G[j].lc());
                Word sup = Word::concat(li, u);
                out.push_back(OverlapElement<C>{static_cast<int>(i), static_cast<int>(j),
                                                std::move(u), std::move(v), std::move(value),
                                                std::move(sup)});
            }
        }
    }
    std::sort(out.begin(), out.end(), [](const OverlapElement<C>& a, const OverlapElement<C>& b) {
        if (a.i != b.i) return a.i < b.i;
        if (a.j != b.j) return a.j < b.j;
        return a.u.length() < b.u.length();
    });
    return out;
}

template <typename C>
struct GroebnerReport {
    bool passed = true;
    std::size_t overlap_count = 0;
    std::vector<std::pair<OverlapElement<C>, Poly<C>>> failures;
};

// Termination-theorem check: G is a Groebner basis iff every overlap
// element divides to remainder zero.
template <typename C>
GroebnerReport<C> is_groebner(const MonicSet<C>& G) {
    GroebnerReport<C> report;
    auto sites = overlaps(G);
    report.overlap_count = sites.size();
    for (auto& o : sites) {
        Poly<C> r = normal_form(o.value, G);
        if (!r.is_zero()) {
            report.passed = false;
            report.failures.emplace_back(std::move(o), std::move(r));
        }
    }
    return report;
}

// Membership in the two-sided ideal generated by G. Meaningful when G is a
// verified Groebner basis; the caller is responsible for checking.
template <typename C>
bool is_member(const Poly<C>& f, const MonicSet<C>& G) {
    return normal_form(f, G).is_zero();
}

template <typename C>
NormalWords normal_words(const MonicSet<C>& G, std::int64_t max_deg, bool collect_words = true) {
    return enumerate_normal_words(G.automaton(), *G.context(), max_deg, collect_words);
}

template <typename C>
struct CompletionResult {
    MonicSet<C> basis;
    bool complete = false;
    int rounds = 0;
    std::vector<std::string> log;
};

namespace detail {

// Replace each element by its normal form with respect to the others until
// nothing changes; drops elements that reduce to zero. Elements stay monic.
template <typename C>
void inter_reduce(std::vector<Poly<C>>& basis, const ContextPtr& ctx,
                  std::vector<std::string>& log) {
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < basis.size(); ++i) {
            std::vector<Poly<C>> others;
            others.reserve(basis.size() - 1);
            for (std::size_t j = 0; j < basis.size(); ++j)
                if (j != i) others.push_back(basis[j]);
            Poly<C> r = others.empty()
                            ? basis[i]
                            : divide_by_list(basis[i], ctx, std::span<const Poly<C>>(others)).remainder;
            if (r == basis[i]) continue;
            changed = true;
            if (r.is_zero()) {
                log.push_back("inter-reduction dropped element with leading monomial " +
                              basis[i].lm().str(ctx->alphabet));
                basis.erase(basis.begin() + i);
                --i;
                continue;
            }
            if (r.lm().empty())
                throw HypothesisError("completion discovered a unit in the ideal; the quotient is zero");
            if (!r.lc().is_one()) r = r.scaled(r.lc().inverse());
            basis[i] = std::move(r);
        }
    }
}

}  // namespace detail

// Degree-bounded best-effort completion over a field. Repeatedly reduces
// all overlap elements against the current basis (in ascending order of the
// superposition word), adjoins the monicized nonzero remainders of degree
// <= max_deg, and inter-reduces. complete = true means no nonzero overlap
// remainder of any degree is left; complete = false means the run was
// truncated by the degree bound. The result is monic and LM-reduced either
// way.
template <typename C>
CompletionResult<C> complete(const MonicSet<C>& G0, std::int64_t max_deg) {
    static_assert(C::is_field,
                  "completion requires a field: adjoined remainders must have invertible "
                  "leading coefficients");
    const ContextPtr& ctx = G0.context();
    if (max_deg < G0.max_degree())
        throw Error("max degree " + std::to_string(max_deg) +
                    " is below the largest relation degree " + std::to_string(G0.max_degree()));

    std::vector<Poly<C>> basis = G0.elements();
    std::vector<std::string> log;
    int rounds = 0;
    bool complete_flag = false;
    while (true) {
        ++rounds;
        MonicSet<C> current(ctx, basis);
        auto sites = overlaps(current);
        std::sort(sites.begin(), sites.end(),
                  [&](const OverlapElement<C>& a, const OverlapElement<C>& b) {
                      return ctx->less(a.superposition, b.superposition);
                  });

        bool adjoined = false;
        bool truncated = false;
        for (const auto& site : sites) {
            Poly<C> r = normal_form(site.value, current);
            if (r.is_zero()) continue;
            // re-reduce against the grown basis before deciding
            r = detail::divide_by_list(r, ctx, std::span<const Poly<C>>(basis)).remainder;
            if (r.is_zero()) continue;
            if (r.lm().empty())
                throw HypothesisError("completion discovered a unit in the ideal; the quotient is zero");
            if (r.degree() > max_deg) {
                truncated = true;
                continue;
            }
            if (!r.lc().is_one()) r = r.scaled(r.lc().inverse());
            log.push_back("adjoined element with leading monomial " + r.lm().str(ctx->alphabet) +
                          " from overlap at " + site.superposition.str(ctx->alphabet));
            basis.push_back(std::move(r));
            detail::inter_reduce(basis, ctx, log);
            adjoined = true;
        }
        if (!adjoined) {
            complete_flag = !truncated;
            break;
        }
    }
    return CompletionResult<C>{MonicSet<C>(ctx, std::move(basis)), complete_flag, rounds,
                               std::move(log)};
}

// ---------------------------------------------------------------------------
// Base change between Q and its valuation ring Z_(p)

struct IntegralityViolation {
    std::size_t state;  // index of the intermediate polynomial (0 = input)
    Rational coef;
    Word word;
};

struct IntegralDivision {
    DivisionResult<Rational> division;
    bool integral = true;
    std::optional<IntegralityViolation> violation;
};

// Division over Q re-played with every intermediate coefficient checked for
// membership in O_v. A violation is reported, not thrown.
inline IntegralDivision divide_integral(const Poly<Rational>& f, const MonicSet<Rational>& G,
                                        const PadicValuation& val) {
    IntegralDivision out{divide(f, G), true, std::nullopt};
    Poly<Rational> cur = f;
    std::size_t state = 0;
    auto check = [&](const Poly<Rational>& g) {
        if (!out.integral) return;
        for (const auto& t : g.terms()) {
            if (!val.in_Ov(t.coef)) {
                out.integral = false;
                out.violation = IntegralityViolation{state, t.coef, t.word};
                return;
            }
        }
    };
    check(cur);
    for (const auto& s : out.division.trace) {
        cur = cur - G[s.gen].sandwiched(s.left, s.right, s.coef);
        ++state;
        check(cur);
        if (!out.integral) break;
    }
    return out;
}

struct BaseChangeReport {
    GroebnerReport<Rational> rational;
    bool constrained_passed = true;
    std::vector<std::string> integrality_notes;
    bool agree = true;
};

// Verifies that the Groebner verdict over Q coincides with the verdict when
// all division arithmetic is constrained to O_v (any intermediate
// coefficient outside O_v counts as a constrained failure). Requires every
// coefficient of G integral at p.
inline BaseChangeReport check_base_change(const MonicSet<Rational>& G, const PadicValuation& val) {
    for (std::size_t i = 0; i < G.size(); ++i)
        for (const auto& t : G[i].terms())
            if (!val.in_Ov(t.coef))
                throw HypothesisError("G is not contained in O_v<X>: coefficient " + t.coef.str() +
                                      " of relation " + std::to_string(i + 1) +
                                      " has negative valuation at p = " +
                                      std::to_string(val.prime()));

    BaseChangeReport report{is_groebner(G), true, {}, true};
    for (const auto& o : overlaps(G)) {
        IntegralDivision d = divide_integral(o.value, G, val);
        if (!d.division.remainder.is_zero()) report.constrained_passed = false;
        if (!d.integral) {
            report.constrained_passed = false;
            report.integrality_notes.push_back(
                "overlap at " + o.superposition.str(G.context()->alphabet) +
                " produced non-integral coefficient " + d.violation->coef.str());
        }
    }
    report.agree = report.rational.passed == report.constrained_passed;
    return report;
}

}  // namespace monic

#endif
