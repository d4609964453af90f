#ifndef MONIC_MONIC_SET_HPP
#define MONIC_MONIC_SET_HPP

#include "monic/automaton.hpp"
#include "monic/poly.hpp"

#include <memory>
#include <string>
#include <vector>

namespace monic {

// A monic, LM-reduced set of relations, the divisor object of the division
// algorithm. Construction normalizes the input:
//   - zero relations are dropped;
//   - invertible leading coefficients are divided through (monic form);
//   - a non-invertible leading coefficient is an error;
//   - a relation with leading monomial 1 is an error;
//   - g_j is discarded when LM(g_i) | LM(g_j) for some i != j.
// Everything dropped or rescaled is recorded in log().
template <typename C>
class MonicSet {
public:
    MonicSet(ContextPtr ctx, std::vector<Poly<C>> gens) : ctx_(std::move(ctx)) {
        std::vector<Poly<C>> monic;
        for (std::size_t i = 0; i < gens.size(); ++i) {
            Poly<C>& g = gens[i];
            if (g.context() != ctx_) throw Error("relation built over a different context");
            if (g.is_zero()) {
                log_.push_back("dropped zero relation #" + std::to_string(i + 1));
                continue;
            }
            if (g.lm().empty())
                throw Error("relation #" + std::to_string(i + 1) +
                            " has leading monomial 1; the ideal contains a unit");
            if (!g.lc().is_one()) {
                if (!g.lc().is_unit())
                    throw Error("relation #" + std::to_string(i + 1) +
                                " has non-invertible leading coefficient " + g.lc().str());
                log_.push_back("rescaled relation #" + std::to_string(i + 1) +
                               " by 1/(" + g.lc().str() + ")");
                g = g.scaled(g.lc().inverse());
            }
            monic.push_back(std::move(g));
        }

        // LM-reduction: keep g_j unless some other LM divides LM(g_j)
        // (for equal leading monomials the earlier relation wins)
        std::vector<bool> drop(monic.size(), false);
        for (std::size_t j = 0; j < monic.size(); ++j) {
            for (std::size_t i = 0; i < monic.size(); ++i) {
                if (i == j) continue;
                const Word& li = monic[i].lm();
                const Word& lj = monic[j].lm();
                bool proper = li.length() < lj.length() && find_factor(li, lj).has_value();
                bool equal_earlier = li == lj && i < j;
                if (proper || equal_earlier) {
                    drop[j] = true;
                    log_.push_back("discarded relation with leading monomial " +
                                   lj.str(ctx_->alphabet) + " (divisible by " +
                                   li.str(ctx_->alphabet) + ")");
                    break;
                }
            }
        }
        for (std::size_t j = 0; j < monic.size(); ++j)
            if (!drop[j]) elems_.push_back(std::move(monic[j]));

        std::vector<Word> lms;
        lms.reserve(elems_.size());
        for (const auto& g : elems_) lms.push_back(g.lm());
        aut_ = std::make_shared<const FactorAutomaton>(ctx_->alphabet.size(), lms);
    }

    const ContextPtr& context() const { return ctx_; }
    const std::vector<Poly<C>>& elements() const { return elems_; }
    std::size_t size() const { return elems_.size(); }
    const Poly<C>& operator[](std::size_t i) const { return elems_[i]; }
    const FactorAutomaton& automaton() const { return *aut_; }
    const std::vector<std::string>& log() const { return log_; }

    // Largest weighted degree among the relations; 0 when empty.
    std::int64_t max_degree() const {
        std::int64_t d = 0;
        for (const auto& g : elems_) d = std::max(d, g.degree());
        return d;
    }

private:
    ContextPtr ctx_;
    std::vector<Poly<C>> elems_;
    std::shared_ptr<const FactorAutomaton> aut_;
    std::vector<std::string> log_;
};

}  // namespace monic

#endif
