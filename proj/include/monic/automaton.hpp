#ifndef MONIC_AUTOMATON_HPP
#define MONIC_AUTOMATON_HPP

#include "monic/order.hpp"
#include "monic/word.hpp"

#include <gmpxx.h>

#include <span>
#include <vector>

namespace monic {

// Failure-link (Aho-Corasick) automaton over a set of nonempty pattern
// words. A word is NORMAL iff no pattern occurs in it as a contiguous
// factor, i.e. its walk never touches an accepting state.
class FactorAutomaton {
public:
    FactorAutomaton(int n_letters, std::span<const Word> patterns);

    int n_letters() const { return n_letters_; }
    int state_count() const { return static_cast<int>(next_.size()) / n_letters_; }

    int start() const { return 0; }
    int step(int state, int letter) const { return next_[state * n_letters_ + letter]; }
    bool accepting(int state) const { return accept_[state]; }

    bool is_normal(const Word& w) const;

private:
    int n_letters_;
    std::vector<int> next_;  // dense goto with failure links folded in
    std::vector<bool> accept_;
};

struct NormalWords {
    // Indexed by weighted degree 0..max_deg; by_degree may be empty when
    // only counts were requested. Words within a degree are sorted
    // ascending under the context's order.
    std::vector<std::vector<Word>> by_degree;
    std::vector<mpz_class> counts;
};

NormalWords enumerate_normal_words(const FactorAutomaton& aut, const Context& ctx,
                                   std::int64_t max_deg, bool collect_words);

}  // namespace monic

#endif
