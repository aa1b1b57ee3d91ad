#include "copwin/hyperbolicity.hpp"

#include <algorithm>

#include "copwin/dismantling.hpp"

namespace copwin {

FourPointReport four_point(const Graph& g, int u, int v, int x, int y) {
    const int n = g.vertex_count();
    for (int z : {u, v, x, y})
        if (z < 0 || z >= n) throw ParamError("four_point vertex out of range");

    FourPointReport rep;
    rep.quadruple = {u, v, x, y};
    rep.sums = {g.distance(u, v) + g.distance(x, y), g.distance(u, x) + g.distance(v, y),
                g.distance(u, y) + g.distance(v, x)};
    auto sorted = rep.sums;
    std::sort(sorted.begin(), sorted.end());
    rep.two_xi = sorted[2] - sorted[1];
    rep.two_eta = sorted[2] - sorted[0];
    return rep;
}

HyperbolicityReport hyperbolicity(const Graph& g) {
    if (!is_connected(g)) throw DisconnectedError("hyperbolicity requires a connected graph");
    const int n = g.vertex_count();

    HyperbolicityReport rep;
    rep.witness = {0, std::min(1, n - 1), std::min(2, n - 1), std::min(3, n - 1)};
    if (n < 4) return rep;

    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            for (int x = v + 1; x < n; ++x) {
                for (int y = x + 1; y < n; ++y) {
                    int s1 = g.distance(u, v) + g.distance(x, y);
                    int s2 = g.distance(u, x) + g.distance(v, y);
                    int s3 = g.distance(u, y) + g.distance(v, x);
                    int hi = std::max({s1, s2, s3});
                    int lo = std::min({s1, s2, s3});
                    int mid = s1 + s2 + s3 - hi - lo;
                    if (hi - mid > rep.two_delta) {
                        rep.two_delta = hi - mid;
                        rep.witness = {u, v, x, y};
                    }
                }
            }
        }
    }
    return rep;
}

bool check_hyperbolic_dismantling(const Graph& g, int r) {
    if (r < 1) throw ParamError("check_hyperbolic_dismantling needs r >= 1");
    int two_delta = hyperbolicity(g).two_delta;
    if (2 * r < two_delta) throw ParamError("hypothesis violated: need 2r >= two_delta");
    return ss_dismantle(g, Radius(2 * r), Radius(r + two_delta)).has_value();
}

}  // namespace copwin
