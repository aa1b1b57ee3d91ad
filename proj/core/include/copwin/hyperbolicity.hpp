#pragma once

#include <array>

#include "copwin/graph.hpp"

namespace copwin {

/// Four-point condition data for one quadruple: the three pairwise distance
/// sums and the doubled gaps between them. All values are integers; delta
/// itself may be half-integral, so 2*delta is what gets reported.
struct FourPointReport {
    std::array<int, 4> quadruple;
    std::array<int, 3> sums;  // d(u,v)+d(x,y), d(u,x)+d(v,y), d(u,y)+d(v,x)
    int two_xi = 0;           // largest sum - median sum
    int two_eta = 0;          // largest sum - smallest sum
};

struct HyperbolicityReport {
    int two_delta = 0;
    std::array<int, 4> witness{0, 0, 0, 0};
};

FourPointReport four_point(const Graph& g, int u, int v, int x, int y);

/// Exhaustive quadruple scan; the witness is the lexicographically smallest
/// sorted quadruple attaining the maximum. Graphs on fewer than 4 vertices
/// report 0 with a degenerate witness.
HyperbolicityReport hyperbolicity(const Graph& g);

/// Computes 2*delta and runs the greedy (2r, r + 2*delta) elimination.
/// Requires 2r >= two_delta; throws ParamError otherwise.
bool check_hyperbolic_dismantling(const Graph& g, int r);

}  // namespace copwin
