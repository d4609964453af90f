#include "monic/valuation.hpp"

#include <algorithm>

namespace monic {

namespace {

constexpr int kMaxStoredViolations = 8;

Rational pow_int(const Rational& base, std::int64_t e) {
    Rational acc(1);
    Rational b = e < 0 ? base.inverse() : base;
    for (std::int64_t k = 0; k < (e < 0 ? -e : e); ++k) acc *= b;
    return acc;
}

}  // namespace

ValuedAlgebra::ValuedAlgebra(QuotientAlgebra<Rational> algebra, PadicValuation val)
    : algebra_(std::move(algebra)), val_(val), g_not_in_mv_(false) {
    const auto& G = algebra_.presentation();
    for (std::size_t i = 0; i < G.size(); ++i) {
        for (const auto& t : G[i].terms()) {
            if (!val_.in_Ov(t.coef))
                throw HypothesisError(
                    "G is not contained in O_v<X>: coefficient " + t.coef.str() +
                    " of relation " + std::to_string(i + 1) + " has negative valuation at p = " +
                    std::to_string(val_.prime()));
            if (!val_.in_mv(t.coef)) g_not_in_mv_ = true;
        }
    }
}

FiltrationReport ValuedAlgebra::valuation_of(const QuotientElement<Rational>& a) const {
    if (a.is_zero())
        return FiltrationReport{ValuationValue::infinity(), ValuationValue::neg_infinity(),
                                std::nullopt};
    std::optional<ValuationValue> best;
    std::optional<std::pair<Word, Rational>> witness;
    for (const auto& t : a.repr.terms()) {
        ValuationValue v = val_.v(t.coef);
        if (!best || v < *best) {
            best = v;
            witness = std::make_pair(t.word, t.coef);
        }
    }
    return FiltrationReport{*best, ValuationValue::finite(-best->finite_value()), witness};
}

std::vector<Word> ValuedAlgebra::normal_word_pool(std::int64_t max_deg) const {
    NormalWords pool = enumerate_normal_words(algebra_.presentation().automaton(),
                                              *algebra_.context(), max_deg, true);
    std::vector<Word> words;
    for (auto& bucket : pool.by_degree)
        for (auto& w : bucket) words.push_back(std::move(w));
    return words;
}

QuotientElement<Rational> ValuedAlgebra::random_element(SeededRng& rng,
                                                        std::int64_t max_deg) const {
    return random_element_from(rng, normal_word_pool(max_deg));
}

QuotientElement<Rational> ValuedAlgebra::random_element_from(
    SeededRng& rng, const std::vector<Word>& words) const {
    const ContextPtr& ctx = algebra_.context();
    std::int64_t terms = rng.uniform(1, std::min<std::int64_t>(3, words.size()));
    std::vector<Term<Rational>> picked;
    for (std::int64_t k = 0; k < terms; ++k) {
        const Word& w = words[rng.uniform(0, static_cast<std::int64_t>(words.size()) - 1)];
        std::int64_t e = rng.uniform(-3, 3);
        std::int64_t p = val_.prime();
        // a/b with both prime to p, scaled by p^e
        std::int64_t num = rng.uniform(1, 3 * p);
        while (num % p == 0) ++num;
        std::int64_t den = rng.uniform(1, 3 * p);
        while (den % p == 0) ++den;
        Rational c = Rational(num, den) * pow_int(Rational(static_cast<long>(p)), e);
        if (rng.coin()) c = -c;
        picked.push_back(Term<Rational>{c, w});
    }
    // duplicates merge; the element may have fewer terms than requested
    return QuotientElement<Rational>{Poly<Rational>::from_terms(ctx, std::move(picked))};
}

AxiomReport ValuedAlgebra::check_axioms(int samples, std::int64_t max_deg,
                                        std::uint64_t seed) const {
    AxiomReport report;
    report.samples = samples;
    report.max_deg = max_deg;
    report.seed = seed;
    SeededRng rng(seed);
    std::vector<Word> pool = normal_word_pool(max_deg);
    for (int s = 0; s < samples; ++s) {
        QuotientElement<Rational> a = random_element_from(rng, pool);
        QuotientElement<Rational> b = random_element_from(rng, pool);
        ValuationValue va = valuation_of(a).valuation;
        ValuationValue vb = valuation_of(b).valuation;

        ValuationValue vsum = valuation_of(algebra_.add(a, b)).valuation;
        if (!(vsum >= min(va, vb))) {
            report.v3_holds = false;
            ++report.v3_violation_count;
            if (static_cast<int>(report.v3_violations.size()) < kMaxStoredViolations)
                report.v3_violations.push_back(AxiomViolation{a, b, va, vb, vsum});
        }

        ValuationValue vprod = valuation_of(algebra_.mul(a, b)).valuation;
        if (vprod != va + vb) {
            report.v2_holds = false;
            ++report.v2_violation_count;
            if (static_cast<int>(report.v2_violations.size()) < kMaxStoredViolations)
                report.v2_violations.push_back(AxiomViolation{a, b, va, vb, vprod});
        }
    }
    return report;
}

ScalingReport ValuedAlgebra::scaling_invariants(const QuotientElement<Rational>& a) const {
    if (a.is_zero()) throw HypothesisError("scaling invariants require a != 0");
    Rational p(static_cast<long>(val_.prime()));
    ValuationValue va = valuation_of(a).valuation;
    ValuationValue vpa = valuation_of(algebra_.scale(p, a)).valuation;
    ValuationValue vqa = valuation_of(algebra_.scale(p.inverse(), a)).valuation;
    bool ok = vpa == va + ValuationValue::finite(1) && vqa == va - ValuationValue::finite(1);
    return ScalingReport{va, vpa, vqa, ok};
}

GoodReductionReport ValuedAlgebra::good_reduction_check(int samples, std::uint64_t seed) const {
    GoodReductionReport report;
    report.samples = samples;
    report.seed = seed;
    SeededRng rng(seed);
    const auto& G = algebra_.presentation();
    const ContextPtr& ctx = algebra_.context();
    std::int64_t p = val_.prime();
    Rational rp(static_cast<long>(p));

    auto random_word = [&](std::int64_t max_len) {
        std::vector<std::int32_t> letters;
        std::int64_t len = rng.uniform(0, max_len);
        for (std::int64_t i = 0; i < len; ++i)
            letters.push_back(static_cast<std::int32_t>(rng.uniform(0, ctx->alphabet.size() - 1)));
        return ctx->word(std::move(letters));
    };
    auto random_product = [&]() {
        const Poly<Rational>& g = G[rng.uniform(0, static_cast<std::int64_t>(G.size()) - 1)];
        return g.sandwiched(random_word(2), random_word(2), Rational(1));
    };
    auto integral_scalar = [&]() {
        std::int64_t num = rng.uniform(1, 2 * p);
        std::int64_t e = rng.uniform(0, 2);
        Rational c = Rational(num, 1) * pow_int(rp, e);
        return rng.coin() ? -c : c;
    };

    for (int s = 0; s < samples; ++s) {
        Poly<Rational> f(ctx);
        int kind = static_cast<int>(rng.uniform(0, 2));
        if (kind == 0) {
            // plain O_v-combination
            std::int64_t terms = rng.uniform(1, 4);
            for (std::int64_t t = 0; t < terms; ++t)
                f = f + random_product().scaled(integral_scalar());
        } else if (kind == 1) {
            // c/p^k + (p^k - c)/p^k on the same product: both scalars are
            // outside O_v, but the sum is the integral combination 1 * ugv
            ++report.adversarial_count;
            std::int64_t k = rng.uniform(1, 2);
            Rational pk = pow_int(rp, k);
            std::int64_t c = rng.uniform(1, p - 1 < 1 ? 1 : p - 1);
            Poly<Rational> prod = random_product();
            Rational lam1 = Rational(c, 1) / pk;
            Rational lam2 = (pk - Rational(c, 1)) / pk;
            f = prod.scaled(lam1) + prod.scaled(lam2);
            if (rng.coin()) f = f + random_product().scaled(integral_scalar());
        } else {
            // exact cancellation of a non-integral part
            ++report.adversarial_count;
            Poly<Rational> prod = random_product();
            Rational lam = Rational(static_cast<long>(rng.uniform(1, 2 * p)), 1) / rp;
            f = prod.scaled(lam) - prod.scaled(lam);
            std::int64_t terms = rng.uniform(0, 2);
            for (std::int64_t t = 0; t < terms; ++t)
                f = f + random_product().scaled(integral_scalar());
        }

        bool all_integral = std::all_of(f.terms().begin(), f.terms().end(),
                                        [&](const Term<Rational>& t) { return val_.in_Ov(t.coef); });
        if (!all_integral) {
            report.passed = false;
            ++report.failure_count;
            if (static_cast<int>(report.failures.size()) < kMaxStoredViolations)
                report.failures.push_back(
                    GoodReductionFailure{f, "constructed element escaped O_v<X>"});
            continue;
        }
        IntegralDivision d = divide_integral(f, G, val_);
        if (!d.division.remainder.is_zero()) {
            report.passed = false;
            ++report.failure_count;
            if (static_cast<int>(report.failures.size()) < kMaxStoredViolations)
                report.failures.push_back(GoodReductionFailure{
                    f, "nonzero remainder " + d.division.remainder.str()});
        } else if (!d.integral) {
            report.passed = false;
            ++report.failure_count;
            if (static_cast<int>(report.failures.size()) < kMaxStoredViolations)
                report.failures.push_back(GoodReductionFailure{
                    f, "non-integral intermediate coefficient " + d.violation->coef.str()});
        }
    }
    return report;
}

ResidueAlgebra ValuedAlgebra::residue_algebra() const {
    if (!g_not_in_mv_)
        throw HypothesisError(
            "G is contained in m_v O_v<X>: the residue presentation would vanish");
    const auto& G = algebra_.presentation();
    std::vector<Poly<Fp>> reduced;
    reduced.reserve(G.size());
    for (std::size_t i = 0; i < G.size(); ++i) {
        Poly<Fp> g = to_fp(G[i], val_);
        // monic relations keep their leading monomial mod p
        if (g.is_zero() || g.lm() != G[i].lm())
            throw Error("residue map altered a leading monomial");
        reduced.push_back(std::move(g));
    }
    MonicSet<Fp> set(algebra_.context(), std::move(reduced));
    GroebnerReport<Fp> rep = is_groebner(set);
    return ResidueAlgebra{std::move(set), std::move(rep)};
}

ValuationValue ValuedAlgebra::fraction_valuation(const QuotientElement<Rational>& a,
                                                 const QuotientElement<Rational>& b) const {
    if (b.is_zero()) throw HypothesisError("fraction valuation requires b != 0");
    return valuation_of(a).valuation - valuation_of(b).valuation;
}

ZeroDivisorReport zero_divisor_scan(const ResidueAlgebra& R, std::int64_t max_deg) {
    if (!R.verified())
        throw HypothesisError("zero-divisor scan requires a verified residue Groebner basis");
    QuotientAlgebra<Fp> A(R.presentation);
    const ContextPtr& ctx = A.context();
    std::int64_t p = 2;
    if (!R.presentation.elements().empty()) p = R.presentation[0].lc().modulus();

    NormalWords pool = enumerate_normal_words(R.presentation.automaton(), *ctx, max_deg, true);
    std::vector<Word> words;
    for (auto& bucket : pool.by_degree)
        for (auto& w : bucket) words.push_back(std::move(w));

    ZeroDivisorReport report;
    report.max_deg = max_deg;

    auto single = [&](const Word& w) {
        return QuotientElement<Fp>{Poly<Fp>::monomial(ctx, Fp(1, p), w)};
    };

    // stage 1: pairs of single normal words
    std::size_t n = words.size();
    std::vector<std::vector<QuotientElement<Fp>>> prod(n);
    for (std::size_t i = 0; i < n; ++i) {
        prod[i].reserve(n);
        for (std::size_t j = 0; j < n; ++j) {
            prod[i].push_back(A.project(Poly<Fp>::monomial(ctx, Fp(1, p), Word::concat(words[i], words[j]))));
            ++report.pairs_checked;
            if (prod[i][j].is_zero() && !words[i].empty() && !words[j].empty()) {
                report.witness = std::make_pair(single(words[i]), single(words[j]));
                return report;
            }
        }
    }

    // stage 2: pairs of unit-coefficient binomials w_a + c*w_b, first
    // coefficient normalized to 1
    struct Binomial {
        std::size_t a, b;
        std::int64_t c;
    };
    std::vector<Binomial> binomials;
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b)
            for (std::int64_t c = 1; c < p; ++c) binomials.push_back(Binomial{a, b, c});

    auto make_binomial = [&](const Binomial& bi) {
        std::vector<Term<Fp>> ts;
        ts.push_back(Term<Fp>{Fp(1, p), words[bi.a]});
        ts.push_back(Term<Fp>{Fp(bi.c, p), words[bi.b]});
        return QuotientElement<Fp>{Poly<Fp>::from_terms(ctx, std::move(ts))};
    };

    for (const auto& x : binomials) {
        for (const auto& y : binomials) {
            ++report.pairs_checked;
            // combine the four cached word products
            QuotientElement<Fp> acc = A.zero();
            acc = A.add(acc, prod[x.a][y.a]);
            acc = A.add(acc, A.scale(Fp(y.c, p), prod[x.a][y.b]));
            acc = A.add(acc, A.scale(Fp(x.c, p), prod[x.b][y.a]));
            acc = A.add(acc, A.scale(Fp(x.c, p) * Fp(y.c, p), prod[x.b][y.b]));
            if (acc.is_zero()) {
                report.witness = std::make_pair(make_binomial(x), make_binomial(y));
                return report;
            }
        }
    }
    return report;
}

}  // namespace monic
