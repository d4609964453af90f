#ifndef MONIC_CONVERT_HPP
#define MONIC_CONVERT_HPP

#include "monic/bigint.hpp"
#include "monic/padic.hpp"
#include "monic/poly.hpp"
#include "monic/rational.hpp"

namespace monic {

// Coefficient-wise residue map O_v<X> -> F_p<X>. Terms whose coefficient
// vanishes mod p are dropped. Requires every coefficient integral at p.
inline Poly<Fp> to_fp(const Poly<Rational>& f, const PadicValuation& val) {
    std::vector<Term<Fp>> terms;
    terms.reserve(f.term_count());
    for (const auto& t : f.terms()) {
        Fp c = val.residue(t.coef);
        if (!c.is_zero()) terms.push_back(Term<Fp>{c, t.word});
    }
    return Poly<Fp>::from_terms(f.context(), std::move(terms));
}

// Reinterprets an integer-coefficient polynomial over Z.
inline Poly<BigInt> to_bigint(const Poly<Rational>& f) {
    std::vector<Term<BigInt>> terms;
    terms.reserve(f.term_count());
    for (const auto& t : f.terms()) {
        if (!t.coef.is_integer())
            throw Error("coefficient " + t.coef.str() + " is not an integer");
        terms.push_back(Term<BigInt>{BigInt(t.coef.num()), t.word});
    }
    return Poly<BigInt>::from_terms(f.context(), std::move(terms));
}

inline Poly<Rational> to_rational(const Poly<BigInt>& f) {
    std::vector<Term<Rational>> terms;
    terms.reserve(f.term_count());
    for (const auto& t : f.terms()) terms.push_back(Term<Rational>{Rational(t.coef.raw()), t.word});
    return Poly<Rational>::from_terms(f.context(), std::move(terms));
}

}  // namespace monic

#endif
