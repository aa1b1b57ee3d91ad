#include "copwin/game.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <unordered_map>

#include "bits.hpp"

namespace copwin {

namespace {

using detail::DynBits;

constexpr int kRobberWinScore = std::numeric_limits<int>::max() / 2;

void require_connected(const Graph& g) {
    if (!is_connected(g)) throw DisconnectedError("game solvers require a connected graph");
}

void finish_verdict(GameValue& v) {
    const int n = v.n;
    v.verdict = Player::Robber;
    v.best_start = -1;
    for (int c = 0; c < n && v.best_start < 0; ++c) {
        bool all = true;
        for (int r = 0; r < n; ++r) {
            if (r != c && v.winner_at(c, r) == Player::Robber) {
                all = false;
                break;
            }
        }
        if (all) {
            v.verdict = Player::Cop;
            v.best_start = c;
        }
    }
}

// Shared least-fixpoint engine for the two alternating-move games. A
// configuration (c,r) with the cop to move is an immediate cop win iff
// d(c,r) <= immediate. Otherwise the cop relocates within ball(c, cop_step)
// and the robber answers inside punctured_ball(r, robber_speed, c').
GameValue solve_alternating(const Graph& g, GameSpec spec, Radius immediate, Radius cop_step,
                            Radius robber_speed) {
    require_connected(g);
    const int n = g.vertex_count();
    if (n > 1024) throw ParamError("alternating-game solver limited to 1024 vertices");

    GameValue v;
    v.spec = spec;
    v.n = n;
    v.winner.assign(static_cast<size_t>(n) * n, Player::Robber);
    v.label.assign(static_cast<size_t>(n) * n, -1);

    std::vector<std::vector<int>> cop_moves(n);
    for (int c = 0; c < n; ++c) cop_moves[c] = ball(g, c, cop_step);

    // replies[r*n + c'] = robber answers once the cop stands at c'
    std::vector<DynBits> replies(static_cast<size_t>(n) * n);
    for (int r = 0; r < n; ++r) {
        for (int c2 = 0; c2 < n; ++c2) {
            if (r == c2) continue;
            DynBits bits(n);
            for (int x : punctured_ball(g, r, robber_speed, c2)) bits.set(x);
            replies[static_cast<size_t>(r) * n + c2] = std::move(bits);
        }
    }

    std::vector<DynBits> won_rows(n, DynBits(n));  // per cop position, winning robber spots
    for (int c = 0; c < n; ++c) {
        for (int r = 0; r < n; ++r) {
            if (immediate.admits(g.distance(c, r))) {
                v.winner[static_cast<size_t>(c) * n + r] = Player::Cop;
                v.label[static_cast<size_t>(c) * n + r] = 0;
                won_rows[c].set(r);
            }
        }
    }

    std::vector<std::pair<int, int>> added;
    for (int round = 1;; ++round) {
        added.clear();
        for (int c = 0; c < n; ++c) {
            for (int r = 0; r < n; ++r) {
                if (v.winner_at(c, r) == Player::Cop) continue;
                for (int c2 : cop_moves[c]) {
                    if (replies[static_cast<size_t>(r) * n + c2].subset_of(won_rows[c2])) {
                        added.emplace_back(c, r);
                        break;
                    }
                }
            }
        }
        if (added.empty()) break;
        for (auto [c, r] : added) {
            v.winner[static_cast<size_t>(c) * n + r] = Player::Cop;
            v.label[static_cast<size_t>(c) * n + r] = round;
            won_rows[c].set(r);
        }
    }

    finish_verdict(v);
    return v;
}

}  // namespace

GameValue solve_visible(const Graph& g, Radius s, Radius s_prime) {
    return solve_alternating(g, GameSpec::visible(s, s_prime), s_prime, s_prime, s);
}

GameValue solve_capture(const Graph& g, int radius) {
    if (radius < 0) throw ParamError("capture radius must be non-negative");
    return solve_alternating(g, GameSpec::capture(radius), Radius(radius + 1), Radius(1),
                             Radius(1));
}

namespace {

using Mask = uint32_t;

struct WitnessTables {
    int n = 0;
    int k = 0;
    std::vector<std::vector<int>> step_moves;  // ball(c,1) per vertex, ascending
    std::vector<Mask> reach;                   // reach[p*n + c] = punctured_ball(p, s, c)

    Mask reach_of(int p, int c) const { return reach[static_cast<size_t>(p) * n + c]; }
};

WitnessTables witness_tables(const Graph& g, int k, Radius s) {
    WitnessTables t;
    t.n = g.vertex_count();
    t.k = k;
    t.step_moves.resize(t.n);
    t.reach.assign(static_cast<size_t>(t.n) * t.n, 0);
    for (int c = 0; c < t.n; ++c) t.step_moves[c] = ball(g, c, Radius(1));
    for (int p = 0; p < t.n; ++p) {
        for (int c = 0; c < t.n; ++c) {
            if (p == c) continue;
            Mask m = 0;
            for (int x : punctured_ball(g, p, s, c)) m |= Mask{1} << x;
            t.reach[static_cast<size_t>(p) * t.n + c] = m;
        }
    }
    return t;
}

// Depth-first plan search, memoized on (step, cop vertex, reachable set).
// A state wins when the robber set empties mid-phase or every phase-end
// configuration (c_k, r') is already marked.
struct PlanSearch {
    const WitnessTables& t;
    const std::vector<Mask>& won_rows;
    std::unordered_map<uint64_t, bool> memo;

    bool wins(int step, int pos, Mask set) {
        if (set == 0) return true;
        if (step == t.k) return (set & ~won_rows[pos]) == 0;
        uint64_t key = (static_cast<uint64_t>(step) << 56) | (static_cast<uint64_t>(pos) << 48) |
                       set;
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;
        bool ok = false;
        for (int c2 : t.step_moves[pos]) {
            Mask survivors = set & ~(Mask{1} << c2);
            Mask next = 0;
            for (Mask rest = survivors; rest;) {
                int p = std::countr_zero(rest);
                rest &= rest - 1;
                next |= t.reach_of(p, c2);
            }
            if (wins(step + 1, c2, next)) {
                ok = true;
                break;
            }
        }
        memo.emplace(key, ok);
        return ok;
    }
};

}  // namespace

GameValue solve_witness(const Graph& g, int k, Radius s, bool force_large_k) {
    require_connected(g);
    if (k < 1) throw ParamError("witness phase length must be positive");
    if (k > 8 && !force_large_k) throw ParamError("witness phase length above 8 (pass force)");
    const int n = g.vertex_count();
    if (n > 24) throw ParamError("witness solver limited to 24 vertices");

    GameValue v;
    v.spec = GameSpec::witness(k, s);
    v.n = n;
    v.winner.assign(static_cast<size_t>(n) * n, Player::Robber);
    v.label.assign(static_cast<size_t>(n) * n, -1);

    WitnessTables tables = witness_tables(g, k, s);
    std::vector<Mask> won_rows(n, 0);
    for (int c = 0; c < n; ++c) {
        for (int r = 0; r < n; ++r) {
            if (g.distance(c, r) <= 1) {
                v.winner[static_cast<size_t>(c) * n + r] = Player::Cop;
                v.label[static_cast<size_t>(c) * n + r] = 0;
                won_rows[c] |= Mask{1} << r;
            }
        }
    }

    std::vector<std::pair<int, int>> added;
    for (int round = 1;; ++round) {
        added.clear();
        PlanSearch search{tables, won_rows, {}};
        for (int c = 0; c < n; ++c) {
            for (int r = 0; r < n; ++r) {
                if (v.winner_at(c, r) == Player::Cop) continue;
                if (search.wins(0, c, Mask{1} << r)) added.emplace_back(c, r);
            }
        }
        if (added.empty()) break;
        for (auto [c, r] : added) {
            v.winner[static_cast<size_t>(c) * n + r] = Player::Cop;
            v.label[static_cast<size_t>(c) * n + r] = round;
            won_rows[c] |= Mask{1} << r;
        }
    }

    finish_verdict(v);
    return v;
}

std::vector<int> robber_replies(const Graph& g, const GameSpec& spec, int cop_pos, int r) {
    Radius speed = spec.variant == Variant::CaptureRadius ? Radius(1) : spec.robber_speed;
    if (cop_pos == r) return {};
    return punctured_ball(g, r, speed, cop_pos);
}

OptimalPolicies::OptimalPolicies(const Graph& g, const GameValue& value)
    : graph_(g), value_(value) {}

OptimalPolicies extract_optimal_policies(const GameValue& value, const Graph& g) {
    return OptimalPolicies(g, value);
}

int OptimalPolicies::cop_move(int c, int r) const {
    const GameSpec& spec = value_.spec;
    if (spec.variant == Variant::Witness) throw ParamError("cop_move on a witness game");
    if (spec.variant == Variant::Visible) {
        if (spec.cop_speed.admits(graph_.distance(c, r))) return r;
    } else {
        if (graph_.distance(c, r) <= spec.capture_radius + 1) {
            for (int u : ball(graph_, c, Radius(1)))
                if (graph_.distance(u, r) <= spec.capture_radius) return u;
        }
    }
    Radius step = spec.variant == Variant::Visible ? spec.cop_speed : Radius(1);
    int best = -1;
    int best_worst = std::numeric_limits<int>::max();
    for (int c2 : ball(graph_, c, step)) {
        int worst = -1;
        for (int r2 : robber_replies(graph_, spec, c2, r)) {
            int sc = value_.winner_at(c2, r2) == Player::Robber ? kRobberWinScore
                                                                : value_.label_at(c2, r2);
            worst = std::max(worst, sc);
        }
        if (worst < best_worst) {
            best_worst = worst;
            best = c2;
        }
    }
    return best;
}

namespace {

// Minimal achievable worst successor label over plan continuations.
struct PlanScore {
    const WitnessTables& t;
    const GameValue& v;
    std::unordered_map<uint64_t, int> memo;

    int final_score(int pos, Mask set) const {
        int worst = -1;
        for (Mask rest = set; rest;) {
            int r2 = std::countr_zero(rest);
            rest &= rest - 1;
            int sc = v.winner_at(pos, r2) == Player::Robber ? kRobberWinScore
                                                            : v.label_at(pos, r2);
            worst = std::max(worst, sc);
        }
        return worst;
    }

    Mask advance(Mask set, int c2) const {
        Mask survivors = set & ~(Mask{1} << c2);
        Mask next = 0;
        for (Mask rest = survivors; rest;) {
            int p = std::countr_zero(rest);
            rest &= rest - 1;
            next |= t.reach_of(p, c2);
        }
        return next;
    }

    int best(int step, int pos, Mask set) {
        if (set == 0) return -1;
        if (step == t.k) return final_score(pos, set);
        uint64_t key = (static_cast<uint64_t>(step) << 56) | (static_cast<uint64_t>(pos) << 48) |
                       set;
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;
        int out = std::numeric_limits<int>::max();
        for (int c2 : t.step_moves[pos]) out = std::min(out, best(step + 1, c2, advance(set, c2)));
        memo.emplace(key, out);
        return out;
    }
};

}  // namespace

std::vector<int> OptimalPolicies::cop_plan(int c, int r) const {
    const GameSpec& spec = value_.spec;
    if (spec.variant != Variant::Witness) throw ParamError("cop_plan on a non-witness game");
    const int k = spec.witness_phase;
    if (graph_.distance(c, r) <= 1) return std::vector<int>(k, r);

    WitnessTables tables = witness_tables(graph_, k, spec.robber_speed);
    PlanScore scorer{tables, value_, {}};
    std::vector<int> plan;
    int pos = c;
    Mask set = Mask{1} << r;
    for (int step = 0; step < k; ++step) {
        int target = scorer.best(step, pos, set);
        for (int c2 : tables.step_moves[pos]) {
            if (scorer.best(step + 1, c2, scorer.advance(set, c2)) == target) {
                set = scorer.advance(set, c2);
                pos = c2;
                plan.push_back(c2);
                break;
            }
        }
    }
    return plan;
}

int OptimalPolicies::rank_reply(int c_pos, int candidate) const {
    // Lower rank preferred: robber-winning first, then larger labels.
    if (value_.winner_at(c_pos, candidate) == Player::Robber) return -1;
    return kRobberWinScore - value_.label_at(c_pos, candidate);
}

int OptimalPolicies::robber_initial(int cop_start) const {
    int best = -1;
    int best_rank = std::numeric_limits<int>::max();
    for (int r = 0; r < value_.n; ++r) {
        if (r == cop_start) continue;
        int rk = rank_reply(cop_start, r);
        if (rk < best_rank) {
            best_rank = rk;
            best = r;
        }
    }
    if (best < 0) throw ParamError("robber has no legal starting vertex");
    return best;
}

int OptimalPolicies::robber_reply(int cop_pos, int r) const {
    int best = -1;
    int best_rank = std::numeric_limits<int>::max();
    for (int r2 : robber_replies(graph_, value_.spec, cop_pos, r)) {
        int rk = rank_reply(cop_pos, r2);
        if (rk < best_rank) {
            best_rank = rk;
            best = r2;
        }
    }
    if (best < 0) throw ParamError("robber has no legal reply");
    return best;
}

std::vector<int> OptimalPolicies::robber_phase(const std::vector<int>& plan, int r) const {
    const GameSpec& spec = value_.spec;
    if (spec.variant != Variant::Witness) throw ParamError("robber_phase on a non-witness game");
    const int k = spec.witness_phase;
    if (static_cast<int>(plan.size()) != k) throw MalformedError("plan length differs from k");

    // Forward reachable sets; A[i] holds positions after the robber's i-th move.
    std::vector<std::vector<bool>> reach(k + 1, std::vector<bool>(value_.n, false));
    reach[0][r] = true;
    int last = 0;
    for (int i = 1; i <= k; ++i) {
        bool any = false;
        for (int p = 0; p < value_.n; ++p) {
            if (!reach[i - 1][p] || p == plan[i - 1]) continue;
            for (int q : punctured_ball(graph_, p, spec.robber_speed, plan[i - 1])) {
                reach[i][q] = true;
                any = true;
            }
        }
        if (!any) break;
        last = i;
    }

    // Choose the end position: survive the phase with the best outcome, or
    // hold out as long as possible when capture is forced.
    int end_pos = -1;
    if (last == k) {
        int best_rank = std::numeric_limits<int>::max();
        for (int q = 0; q < value_.n; ++q) {
            if (!reach[k][q]) continue;
            int rk = rank_reply(plan[k - 1], q);
            if (rk < best_rank) {
                best_rank = rk;
                end_pos = q;
            }
        }
    } else {
        for (int q = 0; q < value_.n && end_pos < 0; ++q)
            if (reach[last][q]) end_pos = q;
    }

    std::vector<int> seq(last >= 1 ? last : 0, -1);
    int cur = end_pos;
    for (int i = last; i >= 1; --i) {
        seq[i - 1] = cur;
        if (i == 1) break;
        for (int p = 0; p < value_.n; ++p) {
            if (!reach[i - 1][p] || p == plan[i - 1]) continue;
            auto opts = punctured_ball(graph_, p, spec.robber_speed, plan[i - 1]);
            if (std::binary_search(opts.begin(), opts.end(), cur)) {
                cur = p;
                break;
            }
        }
    }
    return seq;
}

}  // namespace copwin
