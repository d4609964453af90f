#include "monic/rational.hpp"

#include "monic/errors.hpp"

#include <cctype>

namespace monic {

Rational::Rational(long num, long den) : q_(num, den) {
    if (den == 0) throw Error("rational with zero denominator");
    q_.canonicalize();
}

Rational::Rational(mpq_class q) : q_(std::move(q)) {
    q_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
    if (text.empty()) throw Error("malformed rational: empty string");
    std::size_t i = 0;
    bool neg = false;
    if (text[i] == '-') {
        neg = true;
        ++i;
    }
    auto read_digits = [&](std::string& out) {
        std::size_t start = i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) out += text[i++];
        if (i == start) throw Error("malformed rational: '" + std::string(text) + "'");
    };
    std::string num_digits, den_digits;
    read_digits(num_digits);
    mpz_class num(num_digits), den(1);
    if (i < text.size() && text[i] == '/') {
        ++i;
        read_digits(den_digits);
        den = mpz_class(den_digits);
        if (den == 0) throw Error("malformed rational: zero denominator in '" + std::string(text) + "'");
    }
    if (i != text.size()) throw Error("malformed rational: '" + std::string(text) + "'");
    mpq_class q(num, den);
    q.canonicalize();
    if (neg) q = -q;
    return Rational(std::move(q));
}

Rational Rational::inverse() const {
    if (is_zero()) throw Error("inverse of zero");
    return Rational(mpq_class(1 / q_));
}

Rational Rational::operator/(const Rational& o) const {
    if (o.is_zero()) throw Error("division by zero");
    return Rational(mpq_class(q_ / o.q_));
}

std::string Rational::str() const {
    return q_.get_str();
}

}  // namespace monic
