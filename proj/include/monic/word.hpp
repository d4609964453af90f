#ifndef MONIC_WORD_HPP
#define MONIC_WORD_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace monic {

// The generators of a free algebra: distinct identifier names, each with a
// positive weight contributing to the degree of a word.
struct Alphabet {
    std::vector<std::string> names;
    std::vector<std::int64_t> weights;

    Alphabet(std::vector<std::string> names_, std::vector<std::int64_t> weights_);
    static Alphabet with_unit_weights(std::vector<std::string> names_);

    int size() const { return static_cast<int>(names.size()); }
    int index_of(std::string_view name) const;  // -1 if absent
};

// A monomial of the free algebra: a finite sequence of generator indices.
// The empty word is the multiplicative identity 1. The weighted degree is
// cached at construction.
class Word {
public:
    Word() = default;  // the empty word

    Word(std::vector<std::int32_t> letters, const Alphabet& a);

    static Word concat(const Word& u, const Word& v);

    const std::vector<std::int32_t>& letters() const { return letters_; }
    std::int64_t degree() const { return degree_; }
    std::size_t length() const { return letters_.size(); }
    bool empty() const { return letters_.empty(); }

    Word sub(std::size_t pos, std::size_t len, const Alphabet& a) const;

    bool operator==(const Word& o) const { return letters_ == o.letters_; }
    bool operator!=(const Word& o) const { return letters_ != o.letters_; }

    // "X*Y*X"; "1" for the empty word.
    std::string str(const Alphabet& a) const;

private:
    std::vector<std::int32_t> letters_;
    std::int64_t degree_ = 0;
};

// Leftmost start position of v as a contiguous factor of u; nullopt if none.
// The empty word occurs at position 0.
std::optional<std::size_t> find_factor(const Word& v, const Word& u);

// Leftmost factorization u = left * v * right, if v divides u.
std::optional<std::pair<Word, Word>> divides(const Word& v, const Word& u, const Alphabet& a);

}  // namespace monic

#endif
