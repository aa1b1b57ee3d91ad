#pragma once

// Test-only oracle: bounded-horizon minimax over configurations, memoized on
// (cop, robber, budget). Finite pursuit games are determined within a number
// of cop moves bounded by the configuration count, so budget n*n+1 decides
// the game. Deliberately a different algorithm from the library's
// least-fixpoint solvers.

#include <vector>

#include "copwin/game.hpp"
#include "copwin/graph.hpp"

namespace testutil {

class MinimaxOracle {
public:
    MinimaxOracle(const copwin::Graph& g, const copwin::GameSpec& spec) : g_(g), spec_(spec) {
        n_ = g.vertex_count();
        budget_cap_ = n_ * n_ + 1;
        memo_.assign(static_cast<size_t>(n_) * n_ * (budget_cap_ + 1), -1);
    }

    bool cop_wins_verdict() {
        for (int c0 = 0; c0 < n_; ++c0) {
            bool all = true;
            for (int r0 = 0; r0 < n_ && all; ++r0)
                if (r0 != c0 && !cop_wins(c0, r0, budget_cap_)) all = false;
            if (all) return true;
        }
        return n_ == 1;
    }

private:
    const copwin::Graph& g_;
    copwin::GameSpec spec_;
    int n_ = 0;
    int budget_cap_ = 0;
    std::vector<signed char> memo_;

    bool immediate(int c, int r) const {
        if (spec_.variant == copwin::Variant::CaptureRadius)
            return g_.distance(c, r) <= spec_.capture_radius + 1;
        return spec_.cop_speed.admits(g_.distance(c, r));
    }

    bool cop_wins(int c, int r, int budget) {
        if (immediate(c, r)) return true;
        if (budget == 0) return false;
        size_t key = (static_cast<size_t>(c) * n_ + r) * (budget_cap_ + 1) + budget;
        if (memo_[key] >= 0) return memo_[key] == 1;

        copwin::Radius step = spec_.variant == copwin::Variant::CaptureRadius
                                  ? copwin::Radius(1)
                                  : spec_.cop_speed;
        bool win = false;
        for (int c2 : copwin::ball(g_, c, step)) {
            bool all = true;
            for (int r2 : copwin::robber_replies(g_, spec_, c2, r)) {
                if (!cop_wins(c2, r2, budget - 1)) {
                    all = false;
                    break;
                }
            }
            if (all) {
                win = true;
                break;
            }
        }
        memo_[key] = win ? 1 : 0;
        return win;
    }
};

inline bool oracle_cop_wins(const copwin::Graph& g, const copwin::GameSpec& spec) {
    return MinimaxOracle(g, spec).cop_wins_verdict();
}

}  // namespace testutil
