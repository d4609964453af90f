#ifndef MONIC_QUOTIENT_HPP
#define MONIC_QUOTIENT_HPP

#include "monic/groebner.hpp"

namespace monic {

// Element of A = R<X>/<G> in the canonical representation: supported on
// normal words only, which form a free R-basis of A.
template <typename C>
struct QuotientElement {
    Poly<C> repr;

    bool is_zero() const { return repr.is_zero(); }
    bool operator==(const QuotientElement& o) const { return repr == o.repr; }
    bool operator!=(const QuotientElement& o) const { return repr != o.repr; }
    std::string str() const { return repr.str(); }
};

// The quotient algebra presented by a verified Groebner basis. All
// operations re-reduce eagerly so elements always sit in the canonical
// basis. Immutable and shareable.
template <typename C>
class QuotientAlgebra {
public:
    explicit QuotientAlgebra(MonicSet<C> gb) : gb_(std::move(gb)), report_(is_groebner(gb_)) {
        if (!report_.passed)
            throw HypothesisError(
                "presentation is not a Groebner basis: " +
                std::to_string(report_.failures.size()) + " of " +
                std::to_string(report_.overlap_count) + " overlap elements do not reduce to zero");
    }

    const MonicSet<C>& presentation() const { return gb_; }
    const GroebnerReport<C>& report() const { return report_; }
    const ContextPtr& context() const { return gb_.context(); }

    QuotientElement<C> project(const Poly<C>& f) const {
        return QuotientElement<C>{normal_form(f, gb_)};
    }

    QuotientElement<C> mul(const QuotientElement<C>& a, const QuotientElement<C>& b) const {
        return project(a.repr * b.repr);
    }

    QuotientElement<C> add(const QuotientElement<C>& a, const QuotientElement<C>& b) const {
        return QuotientElement<C>{a.repr + b.repr};
    }

    QuotientElement<C> sub(const QuotientElement<C>& a, const QuotientElement<C>& b) const {
        return QuotientElement<C>{a.repr - b.repr};
    }

    QuotientElement<C> scale(const C& c, const QuotientElement<C>& a) const {
        return QuotientElement<C>{a.repr.scaled(c)};
    }

    QuotientElement<C> zero() const { return QuotientElement<C>{Poly<C>::zero(context())}; }

private:
    MonicSet<C> gb_;
    GroebnerReport<C> report_;
};

}  // namespace monic

#endif
