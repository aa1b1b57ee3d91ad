#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "copwin/decomposition.hpp"
#include "copwin/dismantling.hpp"
#include "copwin/game.hpp"
#include "copwin/graph.hpp"

namespace copwin {

/// Positional cop strategy materialized as a table. Visible / capture games
/// fill move (n*n destinations, -1 where undefined); witness games fill
/// plans (k-walks, empty where undefined). start is the vertex the strategy
/// wants the cop to begin on (-1: any).
struct StrategyTable {
    GameSpec game;
    int n = 0;
    int start = -1;
    std::vector<int> move;                     // (c*n + r) -> destination
    std::vector<std::vector<int>> plans;       // (c*n + r) -> k-walk
    std::vector<uint8_t> memory_bits;          // optional per-configuration bit

    bool has_entry(int c, int r) const {
        size_t i = static_cast<size_t>(c) * n + r;
        if (!move.empty()) return move[i] >= 0;
        return !plans.empty() && !plans[i].empty();
    }
};

/// Least-fixpoint configuration labeling for the oscillating-pair witness
/// strategy over a position set X. label 1 sits exactly on the terminal
/// configurations (robber within distance 1); a configuration labeled l+1
/// has an oscillation pair (x,y) whose phase successors are all labeled <= l.
struct MarkTable {
    VertexSet x_set;
    int k = 1;
    int n = 0;
    std::vector<int> label;  // (c*n + r); -1 unmarked / not in X
    std::vector<int> x_of;   // chosen pair per marked non-terminal configuration
    std::vector<int> y_of;

    int label_at(int c, int r) const { return label[static_cast<size_t>(c) * n + r]; }
    bool complete() const;  // every X-configuration marked
};

/// One deterministic play-out. Positions include the starting placements;
/// capture_step counts cop moves (0 = captured at placement, only possible
/// on the one-vertex graph).
struct Trace {
    GameSpec game;
    std::vector<int> cop_positions;
    std::vector<int> robber_positions;
    bool captured = false;
    int capture_step = -1;
    int cap = 0;
};

/// Cop strategy induced by an (s,s')-elimination order: play the restricted
/// game on the suffix sets, folding each eliminated vertex onto its
/// eliminator. Parsimonious: captures whenever the robber is within s'.
StrategyTable shadow_strategy(const Graph& g, const EliminationCertificate& cert);

/// The labeling procedure itself; computable for any k (the derived strategy
/// is only valid for odd k).
MarkTable mark_procedure(const Graph& g, const VertexSet& x_set, int k);

/// Phase plans from a complete MarkTable: step to y, oscillate x/y, end at y.
/// Requires odd k and a complete table.
StrategyTable mark_strategy(const Graph& g, const MarkTable& table);

/// Pursuit down a big-brother decomposition: start at the root's dominating
/// vertex, then always step to the neighbor closest to the robber. Valid for
/// visible games at any robber speed.
StrategyTable bb_strategy(const Graph& g, const Decomposition& d);

/// Phase plans descending a big-two-brother decomposition: occupy the
/// separator, oscillate across attachment edges, and end each phase on the
/// next piece's dominating vertex (parity decides the oscillation start).
StrategyTable btb_witness_strategy(const Graph& g, const Decomposition& d, int k);

/// How the simulated robber picks his moves.
struct RobberAgent {
    enum class Kind { Optimal, Random, Scripted };
    Kind kind = Kind::Optimal;
    uint64_t seed = 0;                 // Random
    std::vector<int> script;           // Scripted: initial vertex then replies
    const OptimalPolicies* optimal = nullptr;
};

/// Cop side: either a strategy table or solver-optimal play.
struct CopAgent {
    const StrategyTable* table = nullptr;
    const OptimalPolicies* optimal = nullptr;
    std::optional<int> start;  // overrides the table / solver choice
};

int default_step_cap(const Graph& g, const GameSpec& spec);

/// Deterministic replay under the solver capture timings. Illegal moves by
/// either side throw MalformedError (an implementation bug, not a loss).
Trace simulate(const Graph& g, const GameSpec& spec, const CopAgent& cop,
               const RobberAgent& robber, int cap);

}  // namespace copwin
