// Test-only oracles: independent routes to the values the library computes.
// Everything here deliberately avoids the library's division/automaton code
// paths; only Poly construction and arithmetic are reused.
#ifndef MONIC_TESTS_ORACLES_HPP
#define MONIC_TESTS_ORACLES_HPP

#include "monic/groebner.hpp"
#include "monic/presentation.hpp"
#include "monic/rng.hpp"

#include <algorithm>
#include <string>
#include <vector>

namespace oracle {

using namespace monic;

// ---- fixtures -------------------------------------------------------------

inline std::string commutative_pres(int n, const std::string& coef = "Q") {
    std::vector<std::string> names;
    for (int i = 1; i <= n; ++i) names.push_back("X" + std::to_string(i));
    std::string text = "generators:";
    for (const auto& s : names) text += " " + s;
    text += "\norder: deglex";
    for (const auto& s : names) text += " " + s;
    text += "\ncoefficients: " + coef + "\nrelations:\n";
    for (int j = 1; j <= n; ++j)
        for (int i = 1; i < j; ++i)
            text += "  X" + std::to_string(j) + "*X" + std::to_string(i) + " - X" +
                    std::to_string(i) + "*X" + std::to_string(j) + "\n";
    return text;
}

inline std::string weyl_pres(const std::string& coef = "Q") {
    return "generators: X Y\norder: deglex X Y\ncoefficients: " + coef +
           "\nrelations:\n  Y*X - X*Y - 1\n";
}

inline std::string jordan_pres(const std::string& coef = "Q") {
    return "generators: X Y\norder: deglex X Y\ncoefficients: " + coef +
           "\nrelations:\n  Y*Y - Y*X + X*Y\n";
}

inline std::string qplane_pres(long q, const std::string& coef = "Q") {
    return "generators: X Y\norder: deglex X Y\ncoefficients: " + coef +
           "\nrelations:\n  Y*X - " + std::to_string(q) + "*X*Y\n";
}

inline Presentation load(const std::string& text) {
    return parse_presentation_text(text, "<test>");
}

// ---- commutative normal form ----------------------------------------------

// In the commutative fixture the normal form of a word just sorts its
// letters; the normal form of a polynomial sorts every word and combines.
template <typename C>
Poly<C> commutative_normal_form(const Poly<C>& f) {
    std::vector<Term<C>> terms;
    for (const auto& t : f.terms()) {
        std::vector<std::int32_t> letters = t.word.letters();
        std::sort(letters.begin(), letters.end());
        terms.push_back(Term<C>{t.coef, Word(std::move(letters), f.context()->alphabet)});
    }
    return Poly<C>::from_terms(f.context(), std::move(terms));
}

// ---- naive substring / enumeration ----------------------------------------

inline bool naive_contains(const std::vector<std::int32_t>& text,
                           const std::vector<std::int32_t>& pat) {
    if (pat.empty()) return true;
    if (pat.size() > text.size()) return false;
    for (std::size_t s = 0; s + pat.size() <= text.size(); ++s) {
        bool ok = true;
        for (std::size_t i = 0; i < pat.size() && ok; ++i) ok = text[s + i] == pat[i];
        if (ok) return true;
    }
    return false;
}

inline void all_words_rec(const Context& ctx, std::int64_t max_deg,
                          std::vector<std::int32_t>& cur, std::int64_t deg,
                          std::vector<Word>& out) {
    out.push_back(Word(cur, ctx.alphabet));
    for (int c = 0; c < ctx.alphabet.size(); ++c) {
        std::int64_t d = deg + ctx.alphabet.weights[c];
        if (d > max_deg) continue;
        cur.push_back(c);
        all_words_rec(ctx, max_deg, cur, d, out);
        cur.pop_back();
    }
}

// Every word of weighted degree <= max_deg.
inline std::vector<Word> all_words(const Context& ctx, std::int64_t max_deg) {
    std::vector<std::int32_t> cur;
    std::vector<Word> out;
    all_words_rec(ctx, max_deg, cur, 0, out);
    return out;
}

// Exhaustive normal-word scan: filter all words by naive substring check.
inline std::vector<Word> brute_force_normal_words(const Context& ctx,
                                                  const std::vector<Word>& lms,
                                                  std::int64_t max_deg) {
    std::vector<Word> out;
    for (const auto& w : all_words(ctx, max_deg)) {
        bool normal = true;
        for (const auto& lm : lms)
            if (naive_contains(w.letters(), lm.letters())) {
                normal = false;
                break;
            }
        if (normal) out.push_back(w);
    }
    return out;
}

// ---- naive rewriting ---------------------------------------------------

// Rewrites until no leading monomial occurs as a factor, with choices
// opposite to the library's division strategy: terms are scanned from the
// smallest, generators from the highest index, occurrences from the right.
template <typename C>
Poly<C> naive_rewrite(const Poly<C>& f, const std::vector<Poly<C>>& gens, int max_steps = 100000) {
    const ContextPtr& ctx = f.context();
    Poly<C> cur = f;
    for (int step = 0; step < max_steps; ++step) {
        bool rewritten = false;
        const auto& terms = cur.terms();
        for (std::size_t ti = terms.size(); ti-- > 0 && !rewritten;) {
            const Word& w = terms[ti].word;
            for (std::size_t gi = gens.size(); gi-- > 0 && !rewritten;) {
                const Word& lm = gens[gi].lm();
                if (lm.length() > w.length()) continue;
                for (std::size_t pos = w.length() - lm.length() + 1; pos-- > 0 && !rewritten;) {
                    bool match = true;
                    for (std::size_t k = 0; k < lm.length() && match; ++k)
                        match = w.letters()[pos + k] == lm.letters()[k];
                    if (!match) continue;
                    Word left = w.sub(0, pos, ctx->alphabet);
                    Word right =
                        w.sub(pos + lm.length(), w.length() - pos - lm.length(), ctx->alphabet);
                    cur = cur - gens[gi].sandwiched(left, right, terms[ti].coef);
                    rewritten = true;
                }
            }
        }
        if (!rewritten) return cur;
    }
    throw std::runtime_error("naive_rewrite did not terminate");
}

// ---- naive completion ------------------------------------------------------

// Brute-force degree-bounded completion: enumerate superpositions directly,
// reduce with naive_rewrite, adjoin monicized remainders, no inter-reduction.
template <typename C>
struct NaiveCompletion {
    std::vector<Poly<C>> basis;
    bool complete;
};

template <typename C>
NaiveCompletion<C> naive_complete(std::vector<Poly<C>> basis, std::int64_t max_deg,
                                  int max_rounds = 64) {
    const ContextPtr& ctx = basis.at(0).context();
    for (int round = 0; round < max_rounds; ++round) {
        bool adjoined = false;
        bool truncated = false;
        std::size_t m = basis.size();
        for (std::size_t i = 0; i < m; ++i) {
            for (std::size_t j = 0; j < m; ++j) {
                const Word& li = basis[i].lm();
                const Word& lj = basis[j].lm();
                for (std::size_t k = 1; k < std::min(li.length(), lj.length()); ++k) {
                    bool match = true;
                    for (std::size_t t = 0; t < k && match; ++t)
                        match = li.letters()[li.length() - k + t] == lj.letters()[t];
                    if (!match) continue;
                    Word u = lj.sub(k, lj.length() - k, ctx->alphabet);
                    Word v = li.sub(0, li.length() - k, ctx->alphabet);
                    Poly<C> o = basis[i].sandwiched(Word(), u, basis[i].lc()) -
                                basis[j].sandwiched(v, Word(), basis[j].lc());
                    Poly<C> r = naive_rewrite(o, basis);
                    if (r.is_zero()) continue;
                    if (r.lm().degree() > max_deg) {
                        truncated = true;
                        continue;
                    }
                    basis.push_back(r.scaled(r.lc().inverse()));
                    adjoined = true;
                }
            }
            if (adjoined) break;
        }
        if (!adjoined) return NaiveCompletion<C>{std::move(basis), !truncated};
    }
    throw std::runtime_error("naive_complete did not stabilize");
}

// ---- Weyl normal ordering ----------------------------------------------

// In the Weyl algebra with yx = xy + 1 and normal words x^a y^b:
//   (x^a1 y^b1)(x^a2 y^b2) = sum_k k! C(b1,k) C(a2,k) x^(a1+a2-k) y^(b1+b2-k).
inline Poly<Rational> weyl_product_formula(const ContextPtr& ctx, int a1, int b1, int a2, int b2) {
    auto xy_word = [&](int a, int b) {
        std::vector<std::int32_t> letters;
        for (int i = 0; i < a; ++i) letters.push_back(0);
        for (int i = 0; i < b; ++i) letters.push_back(1);
        return ctx->word(std::move(letters));
    };
    auto binom = [](int n, int k) {
        mpz_class r;
        mpz_bin_uiui(r.get_mpz_t(), n, k);
        return r;
    };
    std::vector<Term<Rational>> terms;
    for (int k = 0; k <= std::min(b1, a2); ++k) {
        mpz_class fact;
        mpz_fac_ui(fact.get_mpz_t(), k);
        mpz_class c = fact * binom(b1, k) * binom(a2, k);
        terms.push_back(Term<Rational>{Rational(c), xy_word(a1 + a2 - k, b1 + b2 - k)});
    }
    return Poly<Rational>::from_terms(ctx, std::move(terms));
}

// ---- random data ------------------------------------------------------------

inline Word random_word(SeededRng& rng, const ContextPtr& ctx, int max_len) {
    std::vector<std::int32_t> letters;
    std::int64_t len = rng.uniform(0, max_len);
    for (std::int64_t i = 0; i < len; ++i)
        letters.push_back(static_cast<std::int32_t>(rng.uniform(0, ctx->alphabet.size() - 1)));
    return ctx->word(std::move(letters));
}

inline Rational random_rational(SeededRng& rng) {
    std::int64_t num = rng.uniform(1, 9);
    std::int64_t den = rng.uniform(1, 9);
    Rational r(static_cast<long>(num), static_cast<long>(den));
    return rng.coin() ? -r : r;
}

inline Poly<Rational> random_poly(SeededRng& rng, const ContextPtr& ctx, int max_terms,
                                  int max_len) {
    std::vector<Term<Rational>> terms;
    std::int64_t n = rng.uniform(0, max_terms);
    for (std::int64_t i = 0; i < n; ++i)
        terms.push_back(Term<Rational>{random_rational(rng), random_word(rng, ctx, max_len)});
    return Poly<Rational>::from_terms(ctx, std::move(terms));
}

inline Poly<Fp> random_fp_poly(SeededRng& rng, const ContextPtr& ctx, std::int64_t p,
                               int max_terms, int max_len) {
    std::vector<Term<Fp>> terms;
    std::int64_t n = rng.uniform(0, max_terms);
    for (std::int64_t i = 0; i < n; ++i)
        terms.push_back(Term<Fp>{Fp(rng.uniform(1, p - 1), p), random_word(rng, ctx, max_len)});
    return Poly<Fp>::from_terms(ctx, std::move(terms));
}

// Random element of the ideal: sum of lambda * u * g * v over the relations.
template <typename C>
Poly<C> random_ideal_element(SeededRng& rng, const MonicSet<C>& G,
                             const std::vector<C>& scalars, int max_terms, int max_len) {
    const ContextPtr& ctx = G.context();
    Poly<C> f(ctx);
    std::int64_t n = rng.uniform(1, max_terms);
    for (std::int64_t i = 0; i < n; ++i) {
        const Poly<C>& g = G[rng.uniform(0, static_cast<std::int64_t>(G.size()) - 1)];
        const C& lam = scalars[rng.uniform(0, static_cast<std::int64_t>(scalars.size()) - 1)];
        f = f + g.sandwiched(random_word(rng, ctx, max_len), random_word(rng, ctx, max_len), lam);
    }
    return f;
}

}  // namespace oracle

#endif
