#include "copwin/decomposition.hpp"

#include <algorithm>
#include <tuple>

#include "bits.hpp"

namespace copwin {

namespace {

using detail::DynBits;

struct Peel {
    VertexSet piece;  // original ids, sorted
    int y;
    int x;
};

Decomposition assemble(DecompositionKind kind, const VertexSet& root_piece, int root_y,
                       std::vector<Peel> peels) {
    Decomposition d;
    d.kind = kind;
    d.pieces.push_back(root_piece);
    d.big_brother.push_back(root_y);
    d.small_brother.push_back(root_y);
    d.parent.push_back(-1);
    for (auto it = peels.rbegin(); it != peels.rend(); ++it) {
        d.pieces.push_back(it->piece);
        d.big_brother.push_back(it->y);
        d.small_brother.push_back(it->x);
        d.parent.push_back(-1);
    }
    for (size_t i = 1; i < d.pieces.size(); ++i) {
        int x = d.small_brother[i];
        int y = d.big_brother[i];
        for (size_t j = 0; j < i; ++j) {
            const auto& pj = d.pieces[j];
            bool has_x = std::binary_search(pj.begin(), pj.end(), x);
            bool has_y = std::binary_search(pj.begin(), pj.end(), y);
            if (has_x && (x == y || has_y)) {
                d.parent[i] = static_cast<int>(j);
                break;
            }
        }
        if (d.parent[i] < 0) throw Error("peel attachment not covered by an earlier piece");
    }
    return d;
}

}  // namespace

std::optional<Decomposition> big_brother(const Graph& g) {
    if (!is_connected(g)) throw DisconnectedError("big_brother requires a connected graph");

    VertexSet alive(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) alive[v] = v;
    std::vector<Peel> peels;

    while (true) {
        Graph h = induced_subgraph(g, alive);
        BlockCutTree bct = blocks_and_articulations(h);

        if (bct.blocks.size() == 1) {
            VertexSet all(h.vertex_count());
            for (int v = 0; v < h.vertex_count(); ++v) all[v] = v;
            auto dom = dominating_vertex(h, all);
            if (!dom) return std::nullopt;
            return assemble(DecompositionKind::BigBrother, alive, alive[*dom],
                            std::move(peels));
        }

        // Count articulations per block; a leaf block holds exactly one.
        std::vector<int> artic_count(bct.blocks.size(), 0);
        std::vector<int> artic_of(bct.blocks.size(), -1);
        for (auto [b, a] : bct.tree_edges) {
            ++artic_count[b];
            artic_of[b] = bct.articulations[a];
        }

        int best_block = -1;
        std::pair<int, int> best_key{0, 0};  // (min original vertex, articulation)
        for (size_t b = 0; b < bct.blocks.size(); ++b) {
            if (artic_count[b] != 1) continue;
            int a = artic_of[b];
            bool dominated = true;
            for (int v : bct.blocks[b]) {
                if (v != a && !h.adjacent(a, v)) {
                    dominated = false;
                    break;
                }
            }
            if (!dominated) continue;
            std::pair<int, int> key{alive[bct.blocks[b].front()], alive[a]};
            if (best_block < 0 || key < best_key) {
                best_block = static_cast<int>(b);
                best_key = key;
            }
        }
        if (best_block < 0) return std::nullopt;

        int artic = artic_of[best_block];
        Peel peel;
        peel.y = peel.x = alive[artic];
        for (int v : bct.blocks[best_block]) peel.piece.push_back(alive[v]);
        std::sort(peel.piece.begin(), peel.piece.end());

        VertexSet next_alive;
        for (size_t i = 0; i < alive.size(); ++i) {
            int local = static_cast<int>(i);
            bool in_block = std::binary_search(bct.blocks[best_block].begin(),
                                               bct.blocks[best_block].end(), local);
            if (!in_block || local == artic) next_alive.push_back(alive[i]);
        }
        alive = std::move(next_alive);
        peels.push_back(std::move(peel));
    }
}

std::optional<Decomposition> big_two_brother(const Graph& g) {
    if (!is_connected(g)) throw DisconnectedError("big_two_brother requires a connected graph");

    VertexSet alive(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) alive[v] = v;
    std::vector<Peel> peels;

    while (true) {
        Graph h = induced_subgraph(g, alive);
        const int m = h.vertex_count();

        VertexSet all(m);
        for (int v = 0; v < m; ++v) all[v] = v;
        if (auto dom = dominating_vertex(h, all)) {
            return assemble(DecompositionKind::BigTwoBrother, alive, alive[*dom],
                            std::move(peels));
        }

        // Degree-1 vertices peel toward their unique neighbor.
        int leaf = -1;
        for (int v = 0; v < m; ++v) {
            if (h.degree(v) == 1) {
                leaf = v;
                break;
            }
        }
        if (leaf >= 0) {
            int w = h.neighbors(leaf).front();
            Peel peel;
            peel.piece = {alive[leaf], alive[w]};
            std::sort(peel.piece.begin(), peel.piece.end());
            peel.y = peel.x = alive[w];
            VertexSet next_alive;
            for (size_t i = 0; i < alive.size(); ++i)
                if (static_cast<int>(i) != leaf) next_alive.push_back(alive[i]);
            alive = std::move(next_alive);
            peels.push_back(std::move(peel));
            continue;
        }

        // Component of h minus {x,y} fully adjacent to y; candidates ordered
        // by (smallest component vertex, y, x).
        std::tuple<int, int, int> best_key{0, 0, 0};
        VertexSet best_comp;
        int best_y = -1, best_x = -1;
        for (int y = 0; y < m; ++y) {
            VertexSet xs{y};
            for (int w : h.neighbors(y)) xs.push_back(w);
            std::sort(xs.begin(), xs.end());
            for (int x : xs) {
                std::vector<int> comp_id(m, -1);
                for (int s = 0; s < m; ++s) {
                    if (s == x || s == y || comp_id[s] >= 0) continue;
                    std::vector<int> queue_buf{s};
                    comp_id[s] = s;
                    VertexSet comp{s};
                    for (size_t head = 0; head < queue_buf.size(); ++head) {
                        for (int w : h.neighbors(queue_buf[head])) {
                            if (w == x || w == y || comp_id[w] >= 0) continue;
                            comp_id[w] = s;
                            comp.push_back(w);
                            queue_buf.push_back(w);
                        }
                    }
                    bool dominated = true;
                    for (int v : comp) {
                        if (!h.adjacent(y, v)) {
                            dominated = false;
                            break;
                        }
                    }
                    if (!dominated) continue;
                    std::tuple<int, int, int> key{alive[s], alive[y], alive[x]};
                    if (best_y < 0 || key < best_key) {
                        best_key = key;
                        best_comp = comp;
                        best_y = y;
                        best_x = x;
                    }
                }
            }
        }
        if (best_y < 0) return std::nullopt;

        Peel peel;
        peel.y = alive[best_y];
        peel.x = alive[best_x];
        for (int v : best_comp) peel.piece.push_back(alive[v]);
        peel.piece.push_back(alive[best_y]);
        if (best_x != best_y) peel.piece.push_back(alive[best_x]);
        std::sort(peel.piece.begin(), peel.piece.end());

        std::sort(best_comp.begin(), best_comp.end());
        VertexSet next_alive;
        for (size_t i = 0; i < alive.size(); ++i)
            if (!std::binary_search(best_comp.begin(), best_comp.end(), static_cast<int>(i)))
                next_alive.push_back(alive[i]);
        alive = std::move(next_alive);
        peels.push_back(std::move(peel));
    }
}

namespace {

bool piece_dominated(const Graph& g, const VertexSet& piece, int y) {
    for (int v : piece)
        if (v != y && !g.adjacent(y, v)) return false;
    return true;
}

bool induced_connected(const Graph& g, const VertexSet& piece) {
    return piece.size() <= 1 || is_connected(induced_subgraph(g, piece));
}

bool block_like(const Graph& g, const VertexSet& piece) {
    if (piece.size() <= 1) return true;
    Graph h = induced_subgraph(g, piece);
    if (!is_connected(h)) return false;
    BlockCutTree bct = blocks_and_articulations(h);
    return bct.blocks.size() == 1;
}

}  // namespace

bool verify_decomposition(const Graph& g, const Decomposition& d) {
    const int n = g.vertex_count();
    const size_t r = d.pieces.size();
    if (r == 0 || d.big_brother.size() != r || d.small_brother.size() != r ||
        d.parent.size() != r)
        throw MalformedError("decomposition arrays have wrong sizes");
    for (size_t i = 0; i < r; ++i) {
        const auto& p = d.pieces[i];
        if (p.empty() || !std::is_sorted(p.begin(), p.end()) ||
            std::adjacent_find(p.begin(), p.end()) != p.end() || p.front() < 0 || p.back() >= n)
            throw MalformedError("piece is not a sorted set of valid vertices");
        if (d.big_brother[i] < 0 || d.big_brother[i] >= n || d.small_brother[i] < 0 ||
            d.small_brother[i] >= n)
            throw MalformedError("brother vertex out of range");
    }
    if (d.parent[0] != -1) return false;
    for (size_t i = 1; i < r; ++i)
        if (d.parent[i] < 0 || d.parent[i] >= static_cast<int>(i)) return false;

    DynBits covered(n);
    for (const auto& p : d.pieces)
        for (int v : p) covered.set(v);
    for (int v = 0; v < n; ++v)
        if (!covered.test(v)) return false;

    DynBits prefix(n);
    for (size_t i = 0; i < r; ++i) {
        const auto& piece = d.pieces[i];
        int y = d.big_brother[i];
        int x = d.small_brother[i];
        if (!std::binary_search(piece.begin(), piece.end(), y)) return false;
        if (!std::binary_search(piece.begin(), piece.end(), x)) return false;
        if (!piece_dominated(g, piece, y)) return false;

        if (i == 0) {
            if (x != y) return false;
            if (d.kind == DecompositionKind::BigBrother ? !block_like(g, piece)
                                                        : !induced_connected(g, piece))
                return false;
        } else {
            VertexSet inter;
            for (int v : piece)
                if (prefix.test(v)) inter.push_back(v);

            if (d.kind == DecompositionKind::BigBrother) {
                if (x != y) return false;
                if (inter != VertexSet{y}) return false;
                if (!block_like(g, piece)) return false;
            } else {
                VertexSet expect_single{x};
                VertexSet expect_edge{std::min(x, y), std::max(x, y)};
                bool single = inter == expect_single;
                bool edge = x != y && g.adjacent(x, y) && inter == expect_edge;
                if (!single && !edge) return false;
                if (!induced_connected(g, piece)) return false;
            }

            // Separator property: the new material touches the old only
            // through the attachment set.
            DynBits sep(n);
            for (int v : inter) sep.set(v);
            for (int v : piece) {
                if (sep.test(v)) continue;
                for (int w : g.neighbors(v))
                    if (prefix.test(w) && !sep.test(w)) return false;
            }

            // Attachment set inside the parent piece.
            const auto& pp = d.pieces[d.parent[i]];
            for (int v : inter)
                if (!std::binary_search(pp.begin(), pp.end(), v)) return false;
        }

        for (int v : piece) prefix.set(v);
    }
    return true;
}

Decomposition as_big_two_brother(const Decomposition& d) {
    Decomposition out = d;
    out.kind = DecompositionKind::BigTwoBrother;
    return out;
}

}  // namespace copwin
