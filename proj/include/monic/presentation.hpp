#ifndef MONIC_PRESENTATION_HPP
#define MONIC_PRESENTATION_HPP

#include "monic/convert.hpp"
#include "monic/monic_set.hpp"
#include "monic/parse.hpp"

#include <string>
#include <vector>

namespace monic {

enum class CoefKind { Q, Fp, Zp };

struct CoefTag {
    CoefKind kind = CoefKind::Q;
    std::int64_t p = 0;  // for Fp and Zp

    std::string str() const;
};

// Parsed presentation file: generators with optional weights, a monomial
// order, a coefficient-ring tag and a nonempty list of relations.
//
// Line-oriented key/value format ('#' starts a comment):
//   generators: X Y:2 Z
//   order: deglex X Y Z          # generators listed smallest to largest
//   coefficients: Q              # or: Fp 5, Zp 3
//   relations:
//     Y*X - X*Y
//     Z*X - X*Z                  # one expression per indented line
struct Presentation {
    ContextPtr ctx;
    CoefTag coef;
    std::vector<std::string> relation_sources;
    std::vector<Poly<Rational>> relations;  // parsed over Q

    // Relations normalized into a monic set over the requested ring.
    MonicSet<Rational> rational_monic_set() const;
    MonicSet<Fp> fp_monic_set() const;  // requires coefficients: Fp p
};

Presentation parse_presentation_text(std::string_view text, const std::string& source_name);
Presentation parse_presentation_file(const std::string& path);

}  // namespace monic

#endif
