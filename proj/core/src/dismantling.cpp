#include "copwin/dismantling.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <unordered_map>
#include <unordered_set>

#include "bits.hpp"

namespace copwin {

namespace {

using detail::DynBits;

DynBits to_bits(int n, const VertexSet& verts) {
    DynBits b(n);
    for (int v : verts) b.set(v);
    return b;
}

VertexSet bits_to_set(int n, const DynBits& b) {
    VertexSet out;
    for (int v = 0; v < n; ++v)
        if (b.test(v)) out.push_back(v);
    return out;
}

void require_connected(const Graph& g) {
    if (!is_connected(g)) throw DisconnectedError("dismantling requires a connected graph");
}

}  // namespace

std::optional<EliminationCertificate> ss_dismantle(const Graph& g, Radius s, Radius s_prime) {
    require_connected(g);
    const int n = g.vertex_count();

    std::vector<DynBits> sp_ball(n);
    for (int u = 0; u < n; ++u) sp_ball[u] = to_bits(n, ball(g, u, s_prime));

    // Punctured balls live in the full graph, so they are loop invariants.
    const bool cache = n <= 256;
    std::vector<DynBits> pball_cache;
    if (cache) {
        pball_cache.resize(static_cast<size_t>(n) * n);
        for (int v = 0; v < n; ++v)
            for (int u = 0; u < n; ++u)
                if (u != v)
                    pball_cache[static_cast<size_t>(v) * n + u] =
                        to_bits(n, punctured_ball(g, v, s, u));
    }
    auto reach = [&](int v, int u) -> DynBits {
        if (cache) return pball_cache[static_cast<size_t>(v) * n + u];
        return to_bits(n, punctured_ball(g, v, s, u));
    };

    EliminationCertificate cert;
    cert.family = CertificateFamily::SsDismantle;
    cert.s = s;
    cert.s_prime = s_prime;

    DynBits alive(n);
    std::vector<int> alive_list(n);
    for (int v = 0; v < n; ++v) {
        alive.set(v);
        alive_list[v] = v;
    }

    while (alive_list.size() > 1) {
        int pick_v = -1, pick_u = -1;
        for (int v : alive_list) {
            for (int u : alive_list) {
                if (u == v) continue;
                if (reach(v, u).masked_subset_of(alive, sp_ball[u])) {
                    pick_v = v;
                    pick_u = u;
                    break;
                }
            }
            if (pick_v >= 0) break;
        }
        if (pick_v < 0) return std::nullopt;
        cert.order.push_back(pick_v);
        cert.elim_y.push_back(pick_u);
        cert.elim_x.push_back(-1);
        alive.reset(pick_v);
        alive_list.erase(std::find(alive_list.begin(), alive_list.end(), pick_v));
    }
    cert.order.push_back(alive_list.front());
    cert.elim_y.push_back(-1);
    cert.elim_x.push_back(-1);
    return cert;
}

std::optional<EliminationCertificate> ss_dismantle_local(const Graph& g, Radius s) {
    require_connected(g);
    const int n = g.vertex_count();

    EliminationCertificate cert;
    cert.family = CertificateFamily::SsDismantle;
    cert.s = s;
    cert.s_prime = Radius(1);

    VertexSet alive(n);
    for (int v = 0; v < n; ++v) alive[v] = v;

    while (alive.size() > 1) {
        Graph h = induced_subgraph(g, alive);
        const int m = h.vertex_count();
        int pick_v = -1, pick_u = -1;
        for (int v = 0; v < m && pick_v < 0; ++v) {
            for (int u = 0; u < m; ++u) {
                if (u == v) continue;
                auto reach = punctured_ball(h, v, s, u);
                bool ok = true;
                for (int z : reach) {
                    if (z != u && !h.adjacent(z, u)) {
                        ok = false;
                        break;
                    }
                }
                if (ok) {
                    pick_v = v;
                    pick_u = u;
                    break;
                }
            }
        }
        if (pick_v < 0) return std::nullopt;
        cert.order.push_back(alive[pick_v]);
        cert.elim_y.push_back(alive[pick_u]);
        cert.elim_x.push_back(-1);
        alive.erase(alive.begin() + pick_v);
    }
    cert.order.push_back(alive.front());
    cert.elim_y.push_back(-1);
    cert.elim_x.push_back(-1);
    return cert;
}

std::optional<EliminationCertificate> mno_order(const Graph& g) {
    require_connected(g);
    const int n = g.vertex_count();

    std::vector<DynBits> closed(n);
    for (int v = 0; v < n; ++v) {
        closed[v] = DynBits(n);
        closed[v].set(v);
        for (int w : g.neighbors(v)) closed[v].set(w);
    }

    EliminationCertificate cert;
    cert.family = CertificateFamily::Mno;

    DynBits alive(n);
    std::vector<int> alive_list(n);
    for (int v = 0; v < n; ++v) {
        alive.set(v);
        alive_list[v] = v;
    }

    auto max_neighbor = [&](int v, int u) {
        // u a neighbor of v inside the remaining set whose closed neighborhood
        // absorbs that of every remaining w around v.
        if (!g.adjacent(v, u)) return false;
        for (int w = 0; w < n; ++w) {
            if (!alive.test(w) || !closed[v].test(w)) continue;
            if (!closed[w].masked_subset_of(alive, closed[u])) return false;
        }
        return true;
    };

    while (alive_list.size() > 1) {
        int pick_v = -1, pick_u = -1;
        for (int v : alive_list) {
            for (int u : alive_list) {
                if (u != v && max_neighbor(v, u)) {
                    pick_v = v;
                    pick_u = u;
                    break;
                }
            }
            if (pick_v >= 0) break;
        }
        if (pick_v < 0) return std::nullopt;
        cert.order.push_back(pick_v);
        cert.elim_y.push_back(pick_u);
        cert.elim_x.push_back(-1);
        alive.reset(pick_v);
        alive_list.erase(std::find(alive_list.begin(), alive_list.end(), pick_v));
    }
    cert.order.push_back(alive_list.front());
    cert.elim_y.push_back(-1);
    cert.elim_x.push_back(-1);
    return cert;
}

namespace {

constexpr int kBacktrackLimit = 20;

uint32_t full_mask(int n) { return n == 32 ? ~uint32_t{0} : (uint32_t{1} << n) - 1; }

}  // namespace

std::optional<EliminationCertificate> bipartite_dismantle(const Graph& g) {
    require_connected(g);
    if (!bipartition(g)) throw ParamError("bipartite dismantling requires a bipartite graph");
    const int n = g.vertex_count();
    if (n > kBacktrackLimit) throw ParamError("backtracking family limited to 20 vertices");

    std::vector<uint32_t> closed(n, 0), open(n, 0);
    for (int v = 0; v < n; ++v) {
        for (int w : g.neighbors(v)) open[v] |= uint32_t{1} << w;
        closed[v] = open[v] | (uint32_t{1} << v);
    }

    std::unordered_set<uint32_t> failed;
    std::vector<std::pair<int, int>> picks;

    // Eliminations end once an adjacent pair remains.
    std::function<bool(uint32_t)> rec = [&](uint32_t mask) -> bool {
        if (std::popcount(mask) <= 1) return true;
        if (std::popcount(mask) == 2) {
            int a = std::countr_zero(mask);
            int b = 31 - std::countl_zero(mask);
            return g.adjacent(a, b);
        }
        if (failed.contains(mask)) return false;
        for (int v = 0; v < n; ++v) {
            if (!(mask >> v & 1)) continue;
            for (int y = 0; y < n; ++y) {
                if (y == v || !(mask >> y & 1) || g.adjacent(v, y)) continue;
                if ((open[v] & mask & ~closed[y]) != 0) continue;
                picks.emplace_back(v, y);
                if (rec(mask & ~(uint32_t{1} << v))) return true;
                picks.pop_back();
            }
        }
        failed.insert(mask);
        return false;
    };

    if (!rec(full_mask(n))) return std::nullopt;

    EliminationCertificate cert;
    cert.family = CertificateFamily::Bipartite;
    uint32_t remaining = full_mask(n);
    for (auto [v, y] : picks) {
        cert.order.push_back(v);
        cert.elim_y.push_back(y);
        cert.elim_x.push_back(-1);
        remaining &= ~(uint32_t{1} << v);
    }
    for (int v = 0; v < n; ++v) {
        if (remaining >> v & 1) {
            cert.order.push_back(v);
            cert.elim_y.push_back(-1);
            cert.elim_x.push_back(-1);
        }
    }
    return cert;
}

namespace {

// Backtracking core shared by the two pair-eliminator families.
std::optional<EliminationCertificate> pair_dismantle(const Graph& g, int k, bool strong) {
    if (!is_connected(g)) throw DisconnectedError("dismantling requires a connected graph");
    if (k < 1) throw ParamError("bidismantling needs k >= 1");
    const int n = g.vertex_count();
    if (n > kBacktrackLimit) throw ParamError("backtracking family limited to 20 vertices");

    std::vector<uint32_t> closed(n, 0);
    for (int v = 0; v < n; ++v) {
        closed[v] = uint32_t{1} << v;
        for (int w : g.neighbors(v)) closed[v] |= uint32_t{1} << w;
    }

    // Punctured balls are graph-level, cached across the whole search.
    std::unordered_map<uint64_t, uint32_t> pair_reach;  // key v*n*n + x*n + y
    auto reach2 = [&](int v, int x, int y) {
        uint64_t key = (static_cast<uint64_t>(v) * n + x) * n + y;
        auto it = pair_reach.find(key);
        if (it != pair_reach.end()) return it->second;
        uint32_t m = 0;
        for (int z : punctured_ball2(g, v, Radius(k), x, y)) m |= uint32_t{1} << z;
        pair_reach.emplace(key, m);
        return m;
    };
    std::unordered_map<uint64_t, uint32_t> single_reach;  // key v*n + y, radius 2
    auto reach_avoiding = [&](int v, int y) {
        uint64_t key = static_cast<uint64_t>(v) * n + y;
        auto it = single_reach.find(key);
        if (it != single_reach.end()) return it->second;
        uint32_t m = 0;
        for (int z : punctured_ball(g, v, Radius(2), y)) m |= uint32_t{1} << z;
        single_reach.emplace(key, m);
        return m;
    };

    auto admissible = [&](uint32_t mask, int v, int y, int x) {
        if ((reach2(v, x, y) & mask & ~closed[y]) != 0) return false;
        if (strong && x != y) {
            if ((reach_avoiding(v, y) & mask & ~reach_avoiding(x, y)) != 0) return false;
        }
        return true;
    };

    std::unordered_set<uint32_t> failed;
    std::vector<std::tuple<int, int, int>> picks;

    std::function<bool(uint32_t)> rec = [&](uint32_t mask) -> bool {
        if (std::popcount(mask) == 1) return true;
        if (failed.contains(mask)) return false;
        for (int v = 0; v < n; ++v) {
            if (!(mask >> v & 1)) continue;
            for (int y = 0; y < n; ++y) {
                if (y == v || !(mask >> y & 1)) continue;
                for (int x = 0; x < n; ++x) {
                    if (x == v || !(mask >> x & 1)) continue;
                    if (x != y && !g.adjacent(x, y)) continue;
                    if (!admissible(mask, v, y, x)) continue;
                    picks.emplace_back(v, y, x);
                    if (rec(mask & ~(uint32_t{1} << v))) return true;
                    picks.pop_back();
                }
            }
        }
        failed.insert(mask);
        return false;
    };

    if (!rec(full_mask(n))) return std::nullopt;

    EliminationCertificate cert;
    cert.family = strong ? CertificateFamily::StrongBidismantle : CertificateFamily::Bidismantle;
    cert.k = k;
    uint32_t remaining = full_mask(n);
    for (auto [v, y, x] : picks) {
        cert.order.push_back(v);
        cert.elim_y.push_back(y);
        cert.elim_x.push_back(x);
        remaining &= ~(uint32_t{1} << v);
    }
    cert.order.push_back(std::countr_zero(remaining));
    cert.elim_y.push_back(-1);
    cert.elim_x.push_back(-1);
    return cert;
}

}  // namespace

std::optional<EliminationCertificate> bidismantle(const Graph& g, int k) {
    return pair_dismantle(g, k, false);
}

std::optional<EliminationCertificate> strong_bidismantle(const Graph& g) {
    return pair_dismantle(g, 2, true);
}

namespace {

void check_structure(const Graph& g, const EliminationCertificate& cert) {
    const int n = g.vertex_count();
    if (static_cast<int>(cert.order.size()) != n ||
        cert.elim_y.size() != cert.order.size() || cert.elim_x.size() != cert.order.size())
        throw MalformedError("certificate arrays have wrong sizes");
    std::vector<bool> seen(n, false);
    for (int v : cert.order) {
        if (v < 0 || v >= n || seen[v]) throw MalformedError("order is not a permutation");
        seen[v] = true;
    }
    for (size_t i = 0; i < cert.order.size(); ++i) {
        if (cert.elim_y[i] < -1 || cert.elim_y[i] >= n || cert.elim_x[i] < -1 ||
            cert.elim_x[i] >= n)
            throw MalformedError("eliminator out of range");
    }
    bool pair_family = cert.family == CertificateFamily::Bidismantle ||
                       cert.family == CertificateFamily::StrongBidismantle;
    if (pair_family && cert.k < 1) throw MalformedError("pair family needs k >= 1");
}

}  // namespace

bool verify_certificate(const Graph& g, const EliminationCertificate& cert) {
    check_structure(g, cert);
    const int n = g.vertex_count();

    std::vector<int> pos(n);
    for (int i = 0; i < n; ++i) pos[cert.order[i]] = i;

    DynBits alive(n);
    std::vector<DynBits> closed(n);
    for (int v = 0; v < n; ++v) {
        alive.set(v);
        closed[v] = DynBits(n);
        closed[v].set(v);
        for (int w : g.neighbors(v)) closed[v].set(w);
    }

    auto later = [&](int i, int u) { return u >= 0 && pos[u] > i; };

    int tail = cert.family == CertificateFamily::Bipartite ? 2 : 1;
    if (cert.family == CertificateFamily::Bipartite) {
        if (!bipartition(g)) return false;
        if (n >= 2 && !g.adjacent(cert.order[n - 2], cert.order[n - 1])) return false;
        if (n == 1) tail = 1;
    }

    for (int i = 0; i < n - tail; ++i) {
        int v = cert.order[i];
        int y = cert.elim_y[i];
        int x = cert.elim_x[i];
        if (!later(i, y)) return false;

        switch (cert.family) {
            case CertificateFamily::SsDismantle: {
                DynBits sp = to_bits(n, ball(g, y, cert.s_prime));
                DynBits reach = to_bits(n, punctured_ball(g, v, cert.s, y));
                if (!reach.masked_subset_of(alive, sp)) return false;
                break;
            }
            case CertificateFamily::Mno: {
                if (!g.adjacent(v, y)) return false;
                for (int w = 0; w < n; ++w) {
                    if (!alive.test(w) || !closed[v].test(w)) continue;
                    if (!closed[w].masked_subset_of(alive, closed[y])) return false;
                }
                break;
            }
            case CertificateFamily::Bipartite: {
                if (g.adjacent(v, y)) return false;
                for (int w : g.neighbors(v))
                    if (alive.test(w) && w != y && !g.adjacent(w, y)) return false;
                break;
            }
            case CertificateFamily::Bidismantle:
            case CertificateFamily::StrongBidismantle: {
                if (!later(i, x)) return false;
                if (x != y && !g.adjacent(x, y)) return false;
                DynBits reach = DynBits(n);
                for (int z : punctured_ball2(g, v, Radius(cert.k), x, y)) reach.set(z);
                if (!reach.masked_subset_of(alive, closed[y])) return false;
                if (cert.family == CertificateFamily::StrongBidismantle && x != y) {
                    DynBits lhs = to_bits(n, punctured_ball(g, v, Radius(2), y));
                    DynBits rhs = to_bits(n, punctured_ball(g, x, Radius(2), y));
                    if (!lhs.masked_subset_of(alive, rhs)) return false;
                }
                break;
            }
        }
        alive.reset(v);
    }
    return true;
}

}  // namespace copwin
