#include "monic/word.hpp"

#include "monic/errors.hpp"

#include <algorithm>
#include <cctype>
#include <unordered_set>

namespace monic {

namespace {

bool valid_name(const std::string& s) {
    if (s.empty()) return false;
    if (!std::isalpha(static_cast<unsigned char>(s[0]))) return false;
    return std::all_of(s.begin() + 1, s.end(), [](char c) {
        return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
    });
}

}  // namespace

Alphabet::Alphabet(std::vector<std::string> names_, std::vector<std::int64_t> weights_)
    : names(std::move(names_)), weights(std::move(weights_)) {
    if (names.empty()) throw Error("alphabet needs at least one generator");
    if (names.size() != weights.size()) throw Error("alphabet names/weights size mismatch");
    std::unordered_set<std::string> seen;
    for (const auto& n : names) {
        if (!valid_name(n)) throw Error("invalid generator name '" + n + "'");
        if (!seen.insert(n).second) throw Error("duplicate generator name '" + n + "'");
    }
    for (auto w : weights)
        if (w < 1) throw Error("generator weights must be >= 1");
}

Alphabet Alphabet::with_unit_weights(std::vector<std::string> names_) {
    std::vector<std::int64_t> w(names_.size(), 1);
    return Alphabet(std::move(names_), std::move(w));
}

int Alphabet::index_of(std::string_view name) const {
    for (int i = 0; i < size(); ++i)
        if (names[i] == name) return i;
    return -1;
}

Word::Word(std::vector<std::int32_t> letters, const Alphabet& a) : letters_(std::move(letters)) {
    for (auto c : letters_) {
        if (c < 0 || c >= a.size()) throw Error("letter index out of range");
        degree_ += a.weights[c];
    }
}

Word Word::concat(const Word& u, const Word& v) {
    Word w;
    w.letters_.reserve(u.length() + v.length());
    w.letters_.insert(w.letters_.end(), u.letters_.begin(), u.letters_.end());
    w.letters_.insert(w.letters_.end(), v.letters_.begin(), v.letters_.end());
    w.degree_ = u.degree_ + v.degree_;
    return w;
}

Word Word::sub(std::size_t pos, std::size_t len, const Alphabet& a) const {
    if (pos + len > letters_.size()) throw Error("word slice out of range");
    std::vector<std::int32_t> sl(letters_.begin() + pos, letters_.begin() + pos + len);
    return Word(std::move(sl), a);
}

std::string Word::str(const Alphabet& a) const {
    if (letters_.empty()) return "1";
    std::string out;
    for (std::size_t i = 0; i < letters_.size(); ++i) {
        if (i) out += '*';
        out += a.names[letters_[i]];
    }
    return out;
}

std::optional<std::size_t> find_factor(const Word& v, const Word& u) {
    if (v.length() > u.length()) return std::nullopt;
    const auto& pat = v.letters();
    const auto& txt = u.letters();
    auto it = std::search(txt.begin(), txt.end(), pat.begin(), pat.end());
    if (it == txt.end() && !pat.empty()) return std::nullopt;
    return static_cast<std::size_t>(it - txt.begin());
}

std::optional<std::pair<Word, Word>> divides(const Word& v, const Word& u, const Alphabet& a) {
    auto pos = find_factor(v, u);
    if (!pos) return std::nullopt;
    Word left = u.sub(0, *pos, a);
    Word right = u.sub(*pos + v.length(), u.length() - *pos - v.length(), a);
    return std::make_pair(std::move(left), std::move(right));
}

}  // namespace monic
