#ifndef MONIC_BIGINT_HPP
#define MONIC_BIGINT_HPP

#include "monic/errors.hpp"

#include <gmpxx.h>

#include <string>

namespace monic {

// Arbitrary-precision integer coefficient. The only units are +-1.
class BigInt {
public:
    static constexpr bool is_field = false;

    BigInt() : z_(0) {}
    BigInt(long n) : z_(n) {}
    explicit BigInt(mpz_class z) : z_(std::move(z)) {}

    const mpz_class& raw() const { return z_; }

    bool is_zero() const { return sgn(z_) == 0; }
    bool is_one() const { return z_ == 1; }
    bool is_unit() const { return z_ == 1 || z_ == -1; }
    BigInt inverse() const {
        if (!is_unit()) throw Error("non-unit integer has no inverse: " + str());
        return *this;
    }

    BigInt operator-() const { return BigInt(mpz_class(-z_)); }
    BigInt operator+(const BigInt& o) const { return BigInt(mpz_class(z_ + o.z_)); }
    BigInt operator-(const BigInt& o) const { return BigInt(mpz_class(z_ - o.z_)); }
    BigInt operator*(const BigInt& o) const { return BigInt(mpz_class(z_ * o.z_)); }
    BigInt& operator+=(const BigInt& o) { z_ += o.z_; return *this; }
    BigInt& operator-=(const BigInt& o) { z_ -= o.z_; return *this; }
    BigInt& operator*=(const BigInt& o) { z_ *= o.z_; return *this; }

    bool operator==(const BigInt& o) const { return z_ == o.z_; }
    bool operator!=(const BigInt& o) const { return z_ != o.z_; }

    std::string str() const { return z_.get_str(); }

private:
    mpz_class z_;
};

}  // namespace monic

#endif
