#pragma once

#include <cstdint>
#include <vector>

#include "copwin/graph.hpp"
#include "copwin/radius.hpp"

namespace copwin {

enum class Variant { Visible, Witness, CaptureRadius };
enum class Player { Cop, Robber };

/// Which game is being played, with its parameters. The witness game fixes
/// cop speed 1; the capture-radius game fixes both speeds to 1.
struct GameSpec {
    Variant variant = Variant::Visible;
    Radius robber_speed{1};   // s
    Radius cop_speed{1};      // s', visible game only
    int witness_phase = 1;    // k, witness game only
    int capture_radius = 0;   // capture-radius game only

    static GameSpec visible(Radius s, Radius s_prime) {
        return {Variant::Visible, s, s_prime, 1, 0};
    }
    static GameSpec witness(int k, Radius s = Radius(1)) {
        return {Variant::Witness, s, Radius(1), k, 0};
    }
    static GameSpec capture(int radius) {
        return {Variant::CaptureRadius, Radius(1), Radius(1), 1, radius};
    }
};

/// Solved configuration space of a game. A configuration is (cop vertex,
/// robber vertex) at the solver's canonical decision point: cop about to
/// move (visible / capture-radius) or cop about to commit a phase plan
/// (witness). Labels are fixpoint iteration indices: an upper bound on the
/// remaining solving rounds, strictly decreasing along cop-optimal play.
struct GameValue {
    GameSpec spec;
    int n = 0;
    std::vector<Player> winner;  // row-major (cop * n + robber)
    std::vector<int> label;      // -1 on robber-winning configurations
    Player verdict = Player::Robber;
    int best_start = -1;  // smallest winning initial cop vertex, -1 if none

    Player winner_at(int c, int r) const { return winner[static_cast<size_t>(c) * n + r]; }
    int label_at(int c, int r) const { return label[static_cast<size_t>(c) * n + r]; }
};

/// Exact solver for the visible game: cop speed s', robber speed s, cop
/// moves first. At (c,r) the cop wins immediately iff d(c,r) <= s'
/// (he lands on the robber); otherwise he relocates within ball(c,s') and
/// the robber answers with any vertex of punctured_ball(r, s, c'), his path
/// avoiding the cop's new position. Least fixpoint over configurations.
GameValue solve_visible(const Graph& g, Radius s, Radius s_prime);

/// Exact solver for the witness game: robber visible every k moves, cop
/// commits k-move walk plans the robber gets to see. Configurations are
/// phase boundaries. A configuration with d(c,r) <= 1 is an immediate cop
/// win. Guards: k <= 8 unless force_large_k, n <= 24 (set-of-positions
/// bitmask width).
GameValue solve_witness(const Graph& g, int k, Radius s = Radius(1), bool force_large_k = false);

/// Exact solver for the capture-radius game: both speeds 1, cop moves
/// first, capture checked after the cop's move only. At (c,r) the cop wins
/// immediately iff d(c,r) <= radius+1; the robber answers with any vertex
/// of ball(r,1) other than the cop's position.
GameValue solve_capture(const Graph& g, int radius);

/// Deterministic optimal play extracted from a solved game. Cop: minimize
/// the worst successor label, ties by lexicographically smallest move
/// sequence. Robber: prefer robber-winning successors (smallest vertex),
/// else maximize label, ties by smallest vertex. Owns copies of the graph
/// and the solved value.
class OptimalPolicies {
public:
    OptimalPolicies(const Graph& g, const GameValue& value);

    const GameValue& value() const { return value_; }

    /// Cop destination at a visible / capture-radius decision point.
    int cop_move(int c, int r) const;
    /// Cop phase plan (k vertices) at a witness phase boundary.
    std::vector<int> cop_plan(int c, int r) const;

    /// Robber initial vertex against a cop starting at cop_start.
    int robber_initial(int cop_start) const;
    /// Robber reply after the cop moved to cop_pos (visible / capture-radius).
    int robber_reply(int cop_pos, int r) const;
    /// Robber positions after each of the k steps of a phase he plays
    /// against a known plan; stops early (short vector) if every
    /// continuation is already captured mid-phase.
    std::vector<int> robber_phase(const std::vector<int>& plan, int r) const;

private:
    Graph graph_;
    GameValue value_;

    int rank_reply(int c_pos, int candidate) const;
};

OptimalPolicies extract_optimal_policies(const GameValue& value, const Graph& g);

/// Legal robber replies once the cop stands at cop_pos (variant-aware).
std::vector<int> robber_replies(const Graph& g, const GameSpec& spec, int cop_pos, int r);

}  // namespace copwin
