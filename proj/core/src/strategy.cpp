#include "copwin/strategy.hpp"

#include <algorithm>
#include <random>
#include <unordered_map>

namespace copwin {

bool MarkTable::complete() const {
    for (int c : x_set)
        for (int r : x_set)
            if (c != r && label_at(c, r) < 0) return false;
    return true;
}

StrategyTable shadow_strategy(const Graph& g, const EliminationCertificate& cert) {
    if (cert.family != CertificateFamily::SsDismantle)
        throw MalformedError("shadow_strategy needs an (s,s') elimination certificate");
    if (!verify_certificate(g, cert)) throw MalformedError("certificate does not verify");

    const int n = g.vertex_count();
    StrategyTable t;
    t.game = GameSpec::visible(cert.s, cert.s_prime);
    t.n = n;
    t.start = cert.order.back();
    t.move.assign(static_cast<size_t>(n) * n, -1);

    auto entry = [&](int c, int r) -> int& { return t.move[static_cast<size_t>(c) * n + r]; };

    // Fold each eliminated vertex onto its eliminator, back to front.
    for (int i = n - 2; i >= 0; --i) {
        int v = cert.order[i];
        int y = cert.elim_y[i];
        for (int j = i + 1; j < n; ++j) {
            int r = cert.order[j];
            entry(v, r) = cert.s_prime.admits(g.distance(v, r)) ? r : y;
        }
        for (int j = i + 1; j < n; ++j) {
            int c = cert.order[j];
            entry(c, v) = cert.s_prime.admits(g.distance(c, v)) ? v : entry(c, y);
        }
    }
    return t;
}

MarkTable mark_procedure(const Graph& g, const VertexSet& x_set, int k) {
    if (k < 1) throw ParamError("mark_procedure needs k >= 1");
    const int n = g.vertex_count();
    for (int v : x_set)
        if (v < 0 || v >= n) throw ParamError("position set vertex out of range");

    MarkTable t;
    t.x_set = x_set;
    t.k = k;
    t.n = n;
    t.label.assign(static_cast<size_t>(n) * n, -1);
    t.x_of.assign(static_cast<size_t>(n) * n, -1);
    t.y_of.assign(static_cast<size_t>(n) * n, -1);

    std::vector<bool> in_x(n, false);
    for (int v : x_set) in_x[v] = true;

    auto idx = [&](int c, int r) { return static_cast<size_t>(c) * n + r; };

    for (int c : x_set)
        for (int r : x_set)
            if (c != r && g.distance(c, r) <= 1) t.label[idx(c, r)] = 1;

    // Phase successors under an oscillating pair, cached per (r, x, y).
    std::unordered_map<uint64_t, VertexSet> reach_cache;
    auto successors = [&](int r, int x, int y) -> const VertexSet& {
        uint64_t key = (static_cast<uint64_t>(r) * n + x) * n + y;
        auto it = reach_cache.find(key);
        if (it != reach_cache.end()) return it->second;
        VertexSet zs;
        for (int z : punctured_ball2(g, r, Radius(k), x, y))
            if (in_x[z]) zs.push_back(z);
        return reach_cache.emplace(key, std::move(zs)).first->second;
    };

    for (int level = 2;; ++level) {
        std::vector<std::tuple<int, int, int, int>> added;  // c, r, y, x
        for (int c : x_set) {
            for (int r : x_set) {
                if (c == r || t.label[idx(c, r)] >= 0) continue;
                bool found = false;
                for (int y : x_set) {
                    if (g.distance(c, y) > 1) continue;
                    for (int x : x_set) {
                        if (x == r || g.distance(y, x) > 1) continue;
                        bool all_marked = true;
                        for (int z : successors(r, x, y)) {
                            int lz = t.label[idx(y, z)];
                            if (lz < 1 || lz >= level) {
                                all_marked = false;
                                break;
                            }
                        }
                        if (all_marked) {
                            added.emplace_back(c, r, y, x);
                            found = true;
                            break;
                        }
                    }
                    if (found) break;
                }
            }
        }
        if (added.empty()) break;
        for (auto [c, r, y, x] : added) {
            t.label[idx(c, r)] = level;
            t.y_of[idx(c, r)] = y;
            t.x_of[idx(c, r)] = x;
        }
    }
    return t;
}

StrategyTable mark_strategy(const Graph& g, const MarkTable& table) {
    if (table.k % 2 == 0) throw ParamError("mark strategy requires odd k");
    if (!table.complete()) throw ParamError("mark table does not mark every configuration");

    const int n = g.vertex_count();
    StrategyTable t;
    t.game = GameSpec::witness(table.k, Radius(1));
    t.n = n;
    t.start = table.x_set.empty() ? -1 : table.x_set.front();
    t.plans.assign(static_cast<size_t>(n) * n, {});

    for (int c : table.x_set) {
        for (int r : table.x_set) {
            if (c == r) continue;
            auto& plan = t.plans[static_cast<size_t>(c) * n + r];
            if (g.distance(c, r) <= 1) {
                plan.assign(table.k, r);
            } else {
                int y = table.y_of[static_cast<size_t>(c) * n + r];
                int x = table.x_of[static_cast<size_t>(c) * n + r];
                for (int i = 0; i < table.k; ++i) plan.push_back(i % 2 == 0 ? y : x);
            }
        }
    }
    return t;
}

StrategyTable bb_strategy(const Graph& g, const Decomposition& d) {
    if (d.kind != DecompositionKind::BigBrother)
        throw MalformedError("bb_strategy needs a big-brother decomposition");
    const int n = g.vertex_count();

    StrategyTable t;
    t.game = GameSpec::visible(Radius::unbounded(), Radius(1));
    t.n = n;
    t.start = d.big_brother.empty() ? 0 : d.big_brother[0];
    t.move.assign(static_cast<size_t>(n) * n, -1);

    for (int c = 0; c < n; ++c) {
        for (int r = 0; r < n; ++r) {
            if (c == r) continue;
            int best = -1;
            for (int u : g.neighbors(c))
                if (best < 0 || g.distance(u, r) < g.distance(best, r)) best = u;
            t.move[static_cast<size_t>(c) * n + r] = best;
        }
    }
    return t;
}

namespace {

// Phase plan descending the decomposition tree from cop vertex c toward the
// visible robber at r; empty when (c,r) is off the strategy's invariant.
// The cop's station is the deepest piece on the robber's root path whose big
// brother he occupies; failing that, the deepest whose small brother he
// occupies (a mid-descent position), which he settles by finishing that
// piece's own plan.
std::vector<int> btb_plan(const Graph& g, const Decomposition& d,
                          const std::vector<int>& depth, int k, int c, int r) {
    if (g.distance(c, r) <= 1) return std::vector<int>(k, r);

    auto in_piece = [&](int i, int v) {
        return std::binary_search(d.pieces[i].begin(), d.pieces[i].end(), v);
    };

    int piece_r = -1;
    for (size_t i = 0; i < d.pieces.size(); ++i) {
        if (in_piece(static_cast<int>(i), r) &&
            (piece_r < 0 || depth[i] < depth[piece_r]))
            piece_r = static_cast<int>(i);
    }
    if (piece_r < 0) return {};

    std::vector<int> path;
    for (int p = piece_r; p >= 0; p = d.parent[p]) path.push_back(p);
    std::reverse(path.begin(), path.end());

    int child = -1;
    for (size_t i = path.size(); i-- > 0;) {
        if (c == d.big_brother[path[i]]) {
            if (i + 1 >= path.size()) return {};  // same piece: capture handled above
            child = path[i + 1];
            break;
        }
    }
    if (child < 0) {
        for (size_t i = path.size(); i-- > 0;) {
            if (path[i] != 0 && c == d.small_brother[path[i]]) {
                child = path[i];
                break;
            }
        }
    }
    if (child < 0) return {};

    int x = d.small_brother[child];
    int y = d.big_brother[child];
    int parent = d.parent[child];

    std::vector<int> plan;
    if (x == y || !in_piece(parent, y)) {
        // Single-vertex attachment: hold x, finish on the child's big brother.
        if (k == 1) return {c == x ? y : x};
        plan.assign(k - 1, x);
        plan.push_back(y);
    } else {
        // Edge attachment: oscillate so the phase ends on y.
        for (int i = 0; i < k; ++i) plan.push_back((k - i) % 2 == 1 ? y : x);
    }
    return plan;
}

}  // namespace

StrategyTable btb_witness_strategy(const Graph& g, const Decomposition& d, int k) {
    if (d.kind != DecompositionKind::BigTwoBrother)
        throw MalformedError("btb_witness_strategy needs a big-two-brother decomposition");
    if (k < 1) throw ParamError("witness phase length must be positive");
    const int n = g.vertex_count();

    std::vector<int> depth(d.pieces.size(), 0);
    for (size_t i = 1; i < d.pieces.size(); ++i) depth[i] = depth[d.parent[i]] + 1;

    StrategyTable t;
    t.game = GameSpec::witness(k, Radius(1));
    t.n = n;
    t.start = d.big_brother.empty() ? 0 : d.big_brother[0];
    t.plans.assign(static_cast<size_t>(n) * n, {});
    t.memory_bits.assign(static_cast<size_t>(n) * n, 0);

    VertexSet cop_spots;
    for (size_t i = 0; i < d.pieces.size(); ++i) {
        cop_spots.push_back(d.big_brother[i]);
        cop_spots.push_back(d.small_brother[i]);
    }
    std::sort(cop_spots.begin(), cop_spots.end());
    cop_spots.erase(std::unique(cop_spots.begin(), cop_spots.end()), cop_spots.end());

    for (int c : cop_spots) {
        for (int r = 0; r < n; ++r) {
            if (c == r) continue;
            auto plan = btb_plan(g, d, depth, k, c, r);
            // Parity bookkeeping: phase opens away from its end vertex.
            if (plan.size() >= 2 && plan.front() != plan.back())
                t.memory_bits[static_cast<size_t>(c) * n + r] = 1;
            t.plans[static_cast<size_t>(c) * n + r] = std::move(plan);
        }
    }
    return t;
}

int default_step_cap(const Graph& g, const GameSpec& spec) {
    int n = g.vertex_count();
    int k_eff = spec.variant == Variant::Witness ? spec.witness_phase : 1;
    return 4 * n * n * k_eff;
}

namespace {

struct RobberDriver {
    const Graph& g;
    const GameSpec& spec;
    const RobberAgent& agent;
    std::mt19937_64 rng;
    size_t script_pos = 0;

    explicit RobberDriver(const Graph& graph, const GameSpec& sp, const RobberAgent& a)
        : g(graph), spec(sp), agent(a), rng(a.seed) {}

    int pick(const std::vector<int>& options) {
        if (options.empty()) throw MalformedError("robber has no legal move");
        switch (agent.kind) {
            case RobberAgent::Kind::Random:
                return options[rng() % options.size()];
            case RobberAgent::Kind::Scripted: {
                if (script_pos >= agent.script.size())
                    throw MalformedError("robber script exhausted");
                int v = agent.script[script_pos++];
                if (!std::binary_search(options.begin(), options.end(), v))
                    throw MalformedError("scripted robber move is illegal");
                return v;
            }
            case RobberAgent::Kind::Optimal:
                throw MalformedError("optimal robber driven elsewhere");
        }
        throw MalformedError("unknown robber kind");
    }

    int initial(int cop_start) {
        if (agent.kind == RobberAgent::Kind::Optimal) {
            if (!agent.optimal) throw MalformedError("optimal robber needs solved policies");
            return agent.optimal->robber_initial(cop_start);
        }
        std::vector<int> options;
        for (int v = 0; v < g.vertex_count(); ++v)
            if (v != cop_start) options.push_back(v);
        return pick(options);
    }
};

int cop_start_vertex(const Graph& g, const CopAgent& cop) {
    if (cop.start) return *cop.start;
    if (cop.table && cop.table->start >= 0) return cop.table->start;
    if (cop.optimal && cop.optimal->value().best_start >= 0)
        return cop.optimal->value().best_start;
    return 0;
}

void check_walk(const Graph& g, int from, const std::vector<int>& plan, int k) {
    if (static_cast<int>(plan.size()) != k) throw MalformedError("plan is not a k-walk");
    int prev = from;
    for (int v : plan) {
        if (v < 0 || v >= g.vertex_count() || g.distance(prev, v) > 1)
            throw MalformedError("plan step is not a move along an edge");
        prev = v;
    }
}

}  // namespace

Trace simulate(const Graph& g, const GameSpec& spec, const CopAgent& cop,
               const RobberAgent& robber, int cap) {
    if ((cop.table == nullptr) == (cop.optimal == nullptr))
        throw ParamError("exactly one cop agent must be supplied");
    if (!is_connected(g)) throw DisconnectedError("simulate requires a connected graph");
    if (cop.table && cop.table->game.variant != spec.variant)
        throw ParamError("cop strategy variant does not match the game");
    if (cop.table && spec.variant == Variant::Witness &&
        cop.table->game.witness_phase != spec.witness_phase)
        throw ParamError("cop strategy phase length does not match the game");

    const int n = g.vertex_count();
    Trace trace;
    trace.game = spec;
    trace.cap = cap;

    int c = cop_start_vertex(g, cop);
    trace.cop_positions.push_back(c);
    if (n == 1) {
        trace.robber_positions.push_back(c);
        trace.captured = true;
        trace.capture_step = 0;
        return trace;
    }

    RobberDriver driver(g, spec, robber);
    int r = driver.initial(c);
    trace.robber_positions.push_back(r);

    auto table_move = [&](int cc, int rr) {
        int dest = cop.table->move[static_cast<size_t>(cc) * n + rr];
        if (dest < 0) throw MalformedError("cop strategy has no move for this configuration");
        return dest;
    };
    auto table_plan = [&](int cc, int rr) {
        auto plan = cop.table->plans[static_cast<size_t>(cc) * n + rr];
        if (plan.empty()) throw MalformedError("cop strategy has no plan for this configuration");
        return plan;
    };

    int steps = 0;
    if (spec.variant == Variant::Witness) {
        const int k = spec.witness_phase;
        while (steps < cap) {
            std::vector<int> plan = cop.table ? table_plan(c, r) : cop.optimal->cop_plan(c, r);
            check_walk(g, c, plan, k);

            std::vector<int> opt_seq;
            if (robber.kind == RobberAgent::Kind::Optimal) {
                if (!robber.optimal) throw MalformedError("optimal robber needs solved policies");
                opt_seq = robber.optimal->robber_phase(plan, r);
            }
            for (int i = 0; i < k && steps < cap; ++i) {
                c = plan[i];
                trace.cop_positions.push_back(c);
                ++steps;
                if (c == r) {
                    trace.captured = true;
                    trace.capture_step = steps;
                    return trace;
                }
                int next;
                if (robber.kind == RobberAgent::Kind::Optimal) {
                    if (static_cast<size_t>(i) >= opt_seq.size())
                        throw MalformedError("optimal robber sequence ended before capture");
                    next = opt_seq[i];
                    auto legal = robber_replies(g, spec, c, r);
                    if (!std::binary_search(legal.begin(), legal.end(), next))
                        throw MalformedError("optimal robber move is illegal");
                } else {
                    next = driver.pick(robber_replies(g, spec, c, r));
                }
                r = next;
                trace.robber_positions.push_back(r);
            }
        }
    } else {
        while (steps < cap) {
            int dest = cop.table ? table_move(c, r) : cop.optimal->cop_move(c, r);
            Radius step_radius =
                spec.variant == Variant::Visible ? spec.cop_speed : Radius(1);
            if (dest < 0 || dest >= n || !step_radius.admits(g.distance(c, dest)))
                throw MalformedError("cop move exceeds his speed");
            c = dest;
            trace.cop_positions.push_back(c);
            ++steps;
            bool caught = spec.variant == Variant::Visible
                              ? c == r
                              : g.distance(c, r) <= spec.capture_radius;
            if (caught) {
                trace.captured = true;
                trace.capture_step = steps;
                return trace;
            }
            int next;
            if (robber.kind == RobberAgent::Kind::Optimal) {
                if (!robber.optimal) throw MalformedError("optimal robber needs solved policies");
                next = robber.optimal->robber_reply(c, r);
            } else {
                next = driver.pick(robber_replies(g, spec, c, r));
            }
            auto legal = robber_replies(g, spec, c, r);
            if (!std::binary_search(legal.begin(), legal.end(), next))
                throw MalformedError("robber move is illegal");
            r = next;
            trace.robber_positions.push_back(r);
        }
    }
    return trace;
}

}  // namespace copwin
