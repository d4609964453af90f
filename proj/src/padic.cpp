#include "monic/padic.hpp"

#include "monic/errors.hpp"

namespace monic {

namespace {

std::int64_t euclid_mod(std::int64_t a, std::int64_t p) {
    std::int64_t r = a % p;
    return r < 0 ? r + p : r;
}

std::int64_t mulmod(std::int64_t a, std::int64_t b, std::int64_t p) {
    return static_cast<std::int64_t>(
        static_cast<__int128>(a) * static_cast<__int128>(b) % static_cast<__int128>(p));
}

std::int64_t invmod(std::int64_t a, std::int64_t p) {
    // extended Euclid; a in (0, p), p prime
    std::int64_t old_r = a, r = p;
    std::int64_t old_s = 1, s = 0;
    while (r != 0) {
        std::int64_t q = old_r / r;
        std::int64_t tmp = old_r - q * r;
        old_r = r;
        r = tmp;
        tmp = old_s - q * s;
        old_s = s;
        s = tmp;
    }
    if (old_r != 1) throw Error("not invertible mod p");
    return euclid_mod(old_s, p);
}

bool is_prime_trial_division(std::int64_t p) {
    if (p < 2) return false;
    if (p % 2 == 0) return p == 2;
    for (std::int64_t d = 3; d <= p / d; d += 2)
        if (p % d == 0) return false;
    return true;
}

}  // namespace

Fp::Fp(std::int64_t value, std::int64_t p) : p_(p) {
    if (p < 2) throw Error("Fp modulus must be >= 2");
    v_ = euclid_mod(value, p);
}

std::int64_t Fp::check_same(const Fp& o) const {
    if (p_ != o.p_) throw Error("mixed moduli in Fp arithmetic");
    return p_;
}

Fp Fp::operator+(const Fp& o) const {
    check_same(o);
    std::int64_t s = v_ + o.v_;
    if (s >= p_) s -= p_;
    return Fp(s, p_, Raw{});
}

Fp Fp::operator-(const Fp& o) const {
    check_same(o);
    std::int64_t s = v_ - o.v_;
    if (s < 0) s += p_;
    return Fp(s, p_, Raw{});
}

Fp Fp::operator*(const Fp& o) const {
    check_same(o);
    return Fp(mulmod(v_, o.v_, p_), p_, Raw{});
}

Fp Fp::inverse() const {
    if (v_ == 0) throw Error("inverse of zero in F_p");
    return Fp(invmod(v_, p_), p_, Raw{});
}

PadicValuation::PadicValuation(std::int64_t p) : p_(p) {
    if (!is_prime_trial_division(p))
        throw Error("p = " + std::to_string(p) + " is not prime");
}

ValuationValue PadicValuation::v(const Rational& x) const {
    if (x.is_zero()) return ValuationValue::infinity();
    mpz_class p(static_cast<long>(p_));
    mpz_class tmp;
    // exponent of p in the numerator minus exponent in the denominator;
    // the two cannot both be positive since x is reduced
    mp_bitcnt_t en = mpz_remove(tmp.get_mpz_t(), x.num().get_mpz_t(), p.get_mpz_t());
    mp_bitcnt_t ed = mpz_remove(tmp.get_mpz_t(), x.den().get_mpz_t(), p.get_mpz_t());
    return ValuationValue::finite(static_cast<std::int64_t>(en) - static_cast<std::int64_t>(ed));
}

Fp PadicValuation::residue(const Rational& x) const {
    if (!in_Ov(x)) throw HypothesisError("not integral at p: " + x.str());
    mpz_class p(static_cast<long>(p_));
    mpz_class n, d;
    mpz_fdiv_r(n.get_mpz_t(), x.num().get_mpz_t(), p.get_mpz_t());
    mpz_fdiv_r(d.get_mpz_t(), x.den().get_mpz_t(), p.get_mpz_t());
    std::int64_t nv = n.get_si();
    std::int64_t dv = d.get_si();
    // d != 0 mod p: otherwise v(x) < 0 since x is reduced
    return Fp(nv, p_) * Fp(dv, p_).inverse();
}

}  // namespace monic
