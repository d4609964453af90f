#ifndef MONIC_VALUATION_VALUE_HPP
#define MONIC_VALUATION_VALUE_HPP

#include "monic/errors.hpp"

#include <cstdint>
#include <string>

namespace monic {

// Value of a valuation or degree function: a finite integer, Infinity
// (the value of v at 0) or NegInfinity (the value of d at 0).
//
// Arithmetic conventions: gamma < Infinity for all finite gamma,
// Infinity + gamma = Infinity, Infinity + Infinity = Infinity, and
// Infinity - Infinity = 0.
class ValuationValue {
public:
    static ValuationValue finite(std::int64_t g) { return ValuationValue(Kind::Finite, g); }
    static ValuationValue infinity() { return ValuationValue(Kind::Infinity, 0); }
    static ValuationValue neg_infinity() { return ValuationValue(Kind::NegInfinity, 0); }

    bool is_finite() const { return kind_ == Kind::Finite; }
    bool is_infinity() const { return kind_ == Kind::Infinity; }
    bool is_neg_infinity() const { return kind_ == Kind::NegInfinity; }

    std::int64_t finite_value() const {
        if (!is_finite()) throw Error("valuation value is not finite");
        return value_;
    }

    bool operator==(const ValuationValue& o) const {
        return kind_ == o.kind_ && (kind_ != Kind::Finite || value_ == o.value_);
    }
    bool operator!=(const ValuationValue& o) const { return !(*this == o); }
    bool operator<(const ValuationValue& o) const {
        if (kind_ != o.kind_) return rank() < o.rank();
        return kind_ == Kind::Finite && value_ < o.value_;
    }
    bool operator<=(const ValuationValue& o) const { return *this < o || *this == o; }
    bool operator>(const ValuationValue& o) const { return o < *this; }
    bool operator>=(const ValuationValue& o) const { return o <= *this; }

    ValuationValue operator+(const ValuationValue& o) const {
        if (is_infinity() || o.is_infinity()) {
            if (is_neg_infinity() || o.is_neg_infinity())
                throw Error("Infinity + NegInfinity is undefined");
            return infinity();
        }
        if (is_neg_infinity() || o.is_neg_infinity()) return neg_infinity();
        return finite(value_ + o.value_);
    }

    ValuationValue operator-(const ValuationValue& o) const {
        if (is_infinity() && o.is_infinity()) return finite(0);
        if (is_infinity()) return infinity();
        if (o.is_infinity()) throw Error("finite - Infinity is undefined");
        if (is_neg_infinity() || o.is_neg_infinity())
            throw Error("subtraction with NegInfinity is undefined");
        return finite(value_ - o.value_);
    }

    std::string str() const {
        switch (kind_) {
            case Kind::Infinity: return "Infinity";
            case Kind::NegInfinity: return "-Infinity";
            default: return std::to_string(value_);
        }
    }

private:
    enum class Kind { NegInfinity, Finite, Infinity };

    ValuationValue(Kind k, std::int64_t v) : kind_(k), value_(v) {}

    int rank() const {
        switch (kind_) {
            case Kind::NegInfinity: return 0;
            case Kind::Finite: return 1;
            default: return 2;
        }
    }

    Kind kind_;
    std::int64_t value_;
};

inline ValuationValue min(const ValuationValue& a, const ValuationValue& b) {
    return a < b ? a : b;
}

}  // namespace monic

#endif
