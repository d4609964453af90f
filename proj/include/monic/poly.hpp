#ifndef MONIC_POLY_HPP
#define MONIC_POLY_HPP

#include "monic/errors.hpp"
#include "monic/order.hpp"

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

namespace monic {

template <typename C>
struct Term {
    C coef;
    Word word;
};

// Element of the free algebra over coefficient ring C: a finite sum of
// (coefficient, word) terms, kept normalized — no zero coefficients, no
// duplicate words, sorted strictly descending under the context's order.
// LM/LC are read off the first term.
template <typename C>
class Poly {
public:
    explicit Poly(ContextPtr ctx) : ctx_(std::move(ctx)) {}

    static Poly zero(ContextPtr ctx) { return Poly(std::move(ctx)); }

    static Poly from_terms(ContextPtr ctx, std::vector<Term<C>> terms) {
        Poly f(std::move(ctx));
        std::stable_sort(terms.begin(), terms.end(), [&](const Term<C>& a, const Term<C>& b) {
            return f.ctx_->cmp(a.word, b.word) == Cmp::GT;
        });
        for (auto& t : terms) {
            if (!f.terms_.empty() && f.terms_.back().word == t.word)
                f.terms_.back().coef += t.coef;
            else
                f.terms_.push_back(std::move(t));
            if (!f.terms_.empty() && f.terms_.back().coef.is_zero()) f.terms_.pop_back();
        }
        return f;
    }

    static Poly monomial(ContextPtr ctx, C coef, Word w) {
        Poly f(std::move(ctx));
        if (!coef.is_zero()) f.terms_.push_back(Term<C>{std::move(coef), std::move(w)});
        return f;
    }

    const ContextPtr& context() const { return ctx_; }
    const std::vector<Term<C>>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    const Word& lm() const {
        if (is_zero()) throw Error("leading monomial of zero");
        return terms_.front().word;
    }
    const C& lc() const {
        if (is_zero()) throw Error("leading coefficient of zero");
        return terms_.front().coef;
    }
    std::int64_t degree() const { return lm().degree(); }

    Poly operator+(const Poly& o) const { return merged(o, false); }
    Poly operator-(const Poly& o) const { return merged(o, true); }

    Poly operator-() const {
        Poly f(ctx_);
        f.terms_.reserve(terms_.size());
        for (const auto& t : terms_) f.terms_.push_back(Term<C>{-t.coef, t.word});
        return f;
    }

    Poly scaled(const C& c) const {
        Poly f(ctx_);
        if (c.is_zero()) return f;
        f.terms_.reserve(terms_.size());
        for (const auto& t : terms_) {
            C p = t.coef * c;
            if (!p.is_zero()) f.terms_.push_back(Term<C>{std::move(p), t.word});
        }
        return f;
    }

    Poly operator*(const Poly& o) const {
        check_context(o);
        std::vector<Term<C>> prods;
        prods.reserve(terms_.size() * o.terms_.size());
        for (const auto& s : terms_)
            for (const auto& t : o.terms_) {
                C c = s.coef * t.coef;
                if (!c.is_zero()) prods.push_back(Term<C>{std::move(c), Word::concat(s.word, t.word)});
            }
        return from_terms(ctx_, std::move(prods));
    }

    // Multiply by a monomial on both sides: left * this * right.
    Poly sandwiched(const Word& left, const Word& right, const C& c) const {
        Poly f(ctx_);
        if (c.is_zero()) return f;
        f.terms_.reserve(terms_.size());
        for (const auto& t : terms_) {
            C p = t.coef * c;
            if (!p.is_zero())
                f.terms_.push_back(Term<C>{std::move(p), Word::concat(Word::concat(left, t.word), right)});
        }
        // sandwiching preserves the strict descending order (M1)
        return f;
    }

    bool operator==(const Poly& o) const {
        if (terms_.size() != o.terms_.size()) return false;
        for (std::size_t i = 0; i < terms_.size(); ++i)
            if (terms_[i].word != o.terms_[i].word || !(terms_[i].coef == o.terms_[i].coef))
                return false;
        return true;
    }
    bool operator!=(const Poly& o) const { return !(*this == o); }

    // Printed with terms descending, explicit '*' between letters:
    // "3/2*X*X + 1", "Y*X - X*Y", "0".
    std::string str() const {
        if (is_zero()) return "0";
        std::string out;
        for (std::size_t i = 0; i < terms_.size(); ++i) {
            std::string c = terms_[i].coef.str();
            bool neg = !c.empty() && c[0] == '-';
            if (i == 0) {
                if (neg) out += "-", c = c.substr(1);
            } else {
                out += neg ? " - " : " + ";
                if (neg) c = c.substr(1);
            }
            const Word& w = terms_[i].word;
            if (w.empty())
                out += c;
            else if (c == "1")
                out += w.str(ctx_->alphabet);
            else
                out += c + "*" + w.str(ctx_->alphabet);
        }
        return out;
    }

private:
    void check_context(const Poly& o) const {
        if (ctx_ != o.ctx_) throw Error("mixed contexts in polynomial arithmetic");
    }

    Poly merged(const Poly& o, bool subtract) const {
        check_context(o);
        Poly f(ctx_);
        f.terms_.reserve(terms_.size() + o.terms_.size());
        std::size_t i = 0, j = 0;
        while (i < terms_.size() && j < o.terms_.size()) {
            Cmp c = ctx_->cmp(terms_[i].word, o.terms_[j].word);
            if (c == Cmp::GT) {
                f.terms_.push_back(terms_[i++]);
            } else if (c == Cmp::LT) {
                const auto& t = o.terms_[j++];
                f.terms_.push_back(Term<C>{subtract ? -t.coef : t.coef, t.word});
            } else {
                C s = subtract ? terms_[i].coef - o.terms_[j].coef : terms_[i].coef + o.terms_[j].coef;
                if (!s.is_zero()) f.terms_.push_back(Term<C>{std::move(s), terms_[i].word});
                ++i, ++j;
            }
        }
        for (; i < terms_.size(); ++i) f.terms_.push_back(terms_[i]);
        for (; j < o.terms_.size(); ++j) {
            const auto& t = o.terms_[j];
            f.terms_.push_back(Term<C>{subtract ? -t.coef : t.coef, t.word});
        }
        return f;
    }

    ContextPtr ctx_;
    std::vector<Term<C>> terms_;
};

}  // namespace monic

#endif
