#ifndef MONIC_ERRORS_HPP
#define MONIC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace monic {

// Base class for everything this library throws on bad input.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed text input (expressions, presentation files). Carries a location.
class ParseError : public Error {
public:
    ParseError(const std::string& msg, int line, int col)
        : Error(msg + " (line " + std::to_string(line) + ", column " + std::to_string(col) + ")"),
          line_(line), col_(col) {}

    int line() const { return line_; }
    int col() const { return col_; }

private:
    int line_;
    int col_;
};

// A mathematical hypothesis required by an operation does not hold
// (e.g. coefficients not integral at p, presentation not a Groebner basis).
class HypothesisError : public Error {
public:
    explicit HypothesisError(const std::string& msg) : Error(msg) {}
};

}  // namespace monic

#endif
