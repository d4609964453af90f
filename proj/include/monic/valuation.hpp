#ifndef MONIC_VALUATION_HPP
#define MONIC_VALUATION_HPP

#include "monic/convert.hpp"
#include "monic/quotient.hpp"
#include "monic/rng.hpp"

#include <optional>
#include <utility>

namespace monic {

// Valuation and degree of one element of A, with the coefficient attaining
// the minimum. v(a) = -d(a) for a != 0; v(0) = Infinity, d(0) = -Infinity.
struct FiltrationReport {
    ValuationValue valuation;
    ValuationValue degree;
    std::optional<std::pair<Word, Rational>> witness;
};

struct AxiomViolation {
    QuotientElement<Rational> a;
    QuotientElement<Rational> b;
    ValuationValue va;
    ValuationValue vb;
    ValuationValue v_result;  // v(ab) for V2, v(a+b) for V3
};

struct AxiomReport {
    int samples = 0;
    std::int64_t max_deg = 0;
    std::uint64_t seed = 0;
    bool v2_holds = true;  // v(ab) = v(a) + v(b)
    bool v3_holds = true;  // v(a+b) >= min(v(a), v(b))
    int v2_violation_count = 0;
    int v3_violation_count = 0;
    std::vector<AxiomViolation> v2_violations;  // first few
    std::vector<AxiomViolation> v3_violations;
};

struct ScalingReport {
    ValuationValue v_a;
    ValuationValue v_pa;       // must equal v_a + 1
    ValuationValue v_pinv_a;   // must equal v_a - 1
    bool ok = false;
};

struct GoodReductionFailure {
    Poly<Rational> element;
    std::string reason;
};

struct GoodReductionReport {
    int samples = 0;
    std::uint64_t seed = 0;
    int adversarial_count = 0;
    bool passed = true;
    std::vector<GoodReductionFailure> failures;  // first few
    int failure_count = 0;
};

// The presentation reduced mod m_v, with its Groebner verification over F_p.
struct ResidueAlgebra {
    MonicSet<Fp> presentation;
    GroebnerReport<Fp> report;

    bool verified() const { return report.passed; }
};

struct ZeroDivisorReport {
    std::int64_t max_deg = 0;
    std::uint64_t pairs_checked = 0;
    std::optional<std::pair<QuotientElement<Fp>, QuotientElement<Fp>>> witness;
};

// A = Q<X>/<G> with the p-adic valuation extended from Q through the
// canonical free basis of normal words: v(a) is the least coefficient
// valuation in the canonical representation. Requires G integral at p.
class ValuedAlgebra {
public:
    ValuedAlgebra(QuotientAlgebra<Rational> algebra, PadicValuation val);

    const QuotientAlgebra<Rational>& algebra() const { return algebra_; }
    const PadicValuation& valuation() const { return val_; }
    bool g_integral() const { return true; }  // enforced at construction
    bool g_not_in_mv() const { return g_not_in_mv_; }

    FiltrationReport valuation_of(const QuotientElement<Rational>& a) const;

    // Seeded randomized check of V3 and V2 on element pairs; a V2 violation
    // is evidence that the residue algebra has zero divisors, not a bug.
    AxiomReport check_axioms(int samples, std::int64_t max_deg, std::uint64_t seed) const;

    // v(p*a) = v(a) + 1 and v(p^-1*a) = v(a) - 1. Requires a != 0.
    ScalingReport scaling_invariants(const QuotientElement<Rational>& a) const;

    // Samples elements of I intersect O_v<X> (plain integral combinations
    // and adversarial K-combinations whose non-integral parts cancel) and
    // verifies each reduces to zero with every intermediate coefficient
    // integral.
    GoodReductionReport good_reduction_check(int samples, std::uint64_t seed) const;

    // Maps each relation through the residue O_v -> F_p and re-verifies the
    // Groebner property over F_p.
    ResidueAlgebra residue_algebra() const;

    // v(a b^-1) = v(a) - v(b) on pairs; rejects b = 0. Only meaningful when
    // the valuation axioms hold for this algebra.
    ValuationValue fraction_valuation(const QuotientElement<Rational>& a,
                                      const QuotientElement<Rational>& b) const;

    // Deterministic pseudo-random element in the canonical basis with
    // coefficient valuations in [-3, 3] and words of degree <= max_deg.
    QuotientElement<Rational> random_element(SeededRng& rng, std::int64_t max_deg) const;

private:
    std::vector<Word> normal_word_pool(std::int64_t max_deg) const;
    QuotientElement<Rational> random_element_from(SeededRng& rng,
                                                  const std::vector<Word>& pool) const;

    QuotientAlgebra<Rational> algebra_;
    PadicValuation val_;
    bool g_not_in_mv_;
};

// Searches for nonzero a, b of degree <= max_deg over F_p with a*b = 0:
// single normal words first, then pairs of unit-coefficient binomials.
// Finding no witness is not a proof that the algebra is a domain.
ZeroDivisorReport zero_divisor_scan(const ResidueAlgebra& R, std::int64_t max_deg);

}  // namespace monic

#endif
