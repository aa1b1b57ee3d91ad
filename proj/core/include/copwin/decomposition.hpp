#pragma once

#include <optional>
#include <vector>

#include "copwin/graph.hpp"

namespace copwin {

enum class DecompositionKind { BigBrother, BigTwoBrother };

/// Rooted tree of peels. pieces[0] is the root; every piece has a big
/// brother y_i adjacent to all its other vertices. Big-brother pieces are
/// blocks meeting the earlier union exactly in y_i (= x_i, the articulation
/// point). Big-two-brother pieces meet the earlier union in {x_i} or in the
/// edge {x_i, y_i}. The root stores x = y.
struct Decomposition {
    DecompositionKind kind = DecompositionKind::BigBrother;
    std::vector<VertexSet> pieces;
    std::vector<int> big_brother;    // y_i per piece
    std::vector<int> small_brother;  // x_i per piece
    std::vector<int> parent;         // -1 for the root, else an earlier index
};

/// Iteratively peels leaf blocks dominated by their articulation point; the
/// surviving block must have a dominating vertex. Any qualifying peel keeps
/// membership intact, so the smallest candidate is taken each round.
std::optional<Decomposition> big_brother(const Graph& g);

/// Iteratively peels: a degree-1 vertex toward its neighbor, or a component
/// C of G minus {x,y} (x,y adjacent or equal) with y adjacent to all of C.
/// Succeeds once the residue has a dominating vertex.
std::optional<Decomposition> big_two_brother(const Graph& g);

/// Checks every structural invariant of the decomposition from scratch.
/// Throws MalformedError on structurally nonsensical input.
bool verify_decomposition(const Graph& g, const Decomposition& d);

/// A big-brother decomposition relabeled as a big-two-brother one.
Decomposition as_big_two_brother(const Decomposition& d);

}  // namespace copwin
