#include "monic/automaton.hpp"

#include "monic/errors.hpp"

#include <algorithm>
#include <deque>

namespace monic {

FactorAutomaton::FactorAutomaton(int n_letters, std::span<const Word> patterns)
    : n_letters_(n_letters) {
    if (n_letters < 1) throw Error("automaton needs at least one letter");

    // trie
    std::vector<std::vector<int>> children(1, std::vector<int>(n_letters, -1));
    std::vector<bool> terminal(1, false);
    for (const Word& p : patterns) {
        if (p.empty()) throw Error("empty pattern word");
        int s = 0;
        for (int c : p.letters()) {
            if (children[s][c] < 0) {
                children[s][c] = static_cast<int>(children.size());
                children.emplace_back(n_letters, -1);
                terminal.push_back(false);
            }
            s = children[s][c];
        }
        terminal[s] = true;
    }

    // breadth-first failure links; fold them into a dense transition table
    int m = static_cast<int>(children.size());
    std::vector<int> fail(m, 0);
    accept_.assign(m, false);
    next_.assign(static_cast<std::size_t>(m) * n_letters, 0);
    std::deque<int> queue;
    for (int c = 0; c < n_letters; ++c) {
        int t = children[0][c];
        if (t >= 0) {
            fail[t] = 0;
            accept_[t] = terminal[t];
            next_[c] = t;
            queue.push_back(t);
        } else {
            next_[c] = 0;
        }
    }
    accept_[0] = terminal[0];
    while (!queue.empty()) {
        int s = queue.front();
        queue.pop_front();
        for (int c = 0; c < n_letters; ++c) {
            int t = children[s][c];
            int via_fail = next_[fail[s] * n_letters + c];
            if (t >= 0) {
                fail[t] = via_fail;
                accept_[t] = terminal[t] || accept_[via_fail];
                next_[s * n_letters + c] = t;
                queue.push_back(t);
            } else {
                next_[s * n_letters + c] = via_fail;
            }
        }
    }
}

bool FactorAutomaton::is_normal(const Word& w) const {
    int s = 0;
    for (int c : w.letters()) {
        s = step(s, c);
        if (accept_[s]) return false;
    }
    return true;
}

namespace {

void enumerate_rec(const FactorAutomaton& aut, const Context& ctx, std::int64_t max_deg,
                   int state, std::vector<std::int32_t>& stack, std::int64_t deg,
                   std::vector<std::vector<Word>>& out) {
    out[deg].push_back(ctx.word(stack));
    for (int c = 0; c < aut.n_letters(); ++c) {
        std::int64_t d = deg + ctx.alphabet.weights[c];
        if (d > max_deg) continue;
        int t = aut.step(state, c);
        if (aut.accepting(t)) continue;
        stack.push_back(c);
        enumerate_rec(aut, ctx, max_deg, t, stack, d, out);
        stack.pop_back();
    }
}

}  // namespace

NormalWords enumerate_normal_words(const FactorAutomaton& aut, const Context& ctx,
                                   std::int64_t max_deg, bool collect_words) {
    if (max_deg < 0) throw Error("max degree must be >= 0");
    NormalWords result;
    std::size_t buckets = static_cast<std::size_t>(max_deg) + 1;

    // counts by dynamic programming over automaton states
    int m = aut.state_count();
    std::vector<std::vector<mpz_class>> live(buckets, std::vector<mpz_class>(m, 0));
    if (!aut.accepting(aut.start())) live[0][aut.start()] = 1;
    result.counts.assign(buckets, 0);
    for (std::int64_t d = 0; d <= max_deg; ++d) {
        for (int s = 0; s < m; ++s) {
            const mpz_class& n = live[d][s];
            if (n == 0) continue;
            result.counts[d] += n;
            for (int c = 0; c < aut.n_letters(); ++c) {
                std::int64_t nd = d + ctx.alphabet.weights[c];
                if (nd > max_deg) continue;
                int t = aut.step(s, c);
                if (!aut.accepting(t)) live[nd][t] += n;
            }
        }
    }

    if (collect_words) {
        result.by_degree.assign(buckets, {});
        if (!aut.accepting(aut.start())) {
            std::vector<std::int32_t> stack;
            enumerate_rec(aut, ctx, max_deg, aut.start(), stack, 0, result.by_degree);
        }
        for (auto& bucket : result.by_degree)
            std::sort(bucket.begin(), bucket.end(),
                      [&](const Word& a, const Word& b) { return ctx.less(a, b); });
    }
    return result;
}

}  // namespace monic
