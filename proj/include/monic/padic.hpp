#ifndef MONIC_PADIC_HPP
#define MONIC_PADIC_HPP

#include "monic/rational.hpp"
#include "monic/valuation_value.hpp"

#include <cstdint>
#include <string>

namespace monic {

// Element of the prime field F_p, stored as the canonical representative
// in [0, p). Each value carries its modulus; mixing moduli is an error.
class Fp {
public:
    static constexpr bool is_field = true;

    Fp(std::int64_t value, std::int64_t p);

    std::int64_t value() const { return v_; }
    std::int64_t modulus() const { return p_; }

    bool is_zero() const { return v_ == 0; }
    bool is_one() const { return v_ == 1; }
    bool is_unit() const { return v_ != 0; }
    Fp inverse() const;

    Fp operator-() const { return Fp(v_ == 0 ? 0 : p_ - v_, p_, Raw{}); }
    Fp operator+(const Fp& o) const;
    Fp operator-(const Fp& o) const;
    Fp operator*(const Fp& o) const;
    Fp operator/(const Fp& o) const { return *this * o.inverse(); }
    Fp& operator+=(const Fp& o) { return *this = *this + o; }
    Fp& operator-=(const Fp& o) { return *this = *this - o; }
    Fp& operator*=(const Fp& o) { return *this = *this * o; }

    bool operator==(const Fp& o) const { return p_ == o.p_ && v_ == o.v_; }
    bool operator!=(const Fp& o) const { return !(*this == o); }

    std::string str() const { return std::to_string(v_); }

private:
    struct Raw {};
    Fp(std::int64_t v, std::int64_t p, Raw) : v_(v), p_(p) {}

    std::int64_t check_same(const Fp& o) const;

    std::int64_t v_;
    std::int64_t p_;
};

// The p-adic valuation v = v_p on Q for a fixed prime p, together with the
// valuation ring O_v = Z_(p), its maximal ideal m_v and the residue field
// F_p. Immutable; safe to share between threads.
class PadicValuation {
public:
    // Verifies primality by deterministic trial division.
    explicit PadicValuation(std::int64_t p);

    std::int64_t prime() const { return p_; }

    // Exponent of p in x; Infinity iff x = 0.
    ValuationValue v(const Rational& x) const;

    // in_Ov <=> v(x) >= 0; in_mv <=> v(x) > 0. Both hold for x = 0.
    bool in_Ov(const Rational& x) const { return x.is_zero() || v(x) >= ValuationValue::finite(0); }
    bool in_mv(const Rational& x) const { return x.is_zero() || v(x) > ValuationValue::finite(0); }

    // x mod p, computed as num * den^-1 mod p. Requires in_Ov(x).
    Fp residue(const Rational& x) const;

private:
    std::int64_t p_;
};

}  // namespace monic

#endif
