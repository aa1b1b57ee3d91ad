#include "copwin/graph.hpp"

#include <algorithm>
#include <queue>
#include <string>

namespace copwin {

Graph Graph::build(int n, std::span<const Edge> edges) {
    if (n < 0) throw ParamError("vertex count must be non-negative");
    Graph g;
    g.n_ = n;
    g.adj_.assign(n, {});
    for (const auto& [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw GraphBuildError(GraphBuildError::Kind::VertexOutOfRange,
                                  "edge endpoint out of range: " + std::to_string(u) + " " +
                                      std::to_string(v));
        if (u == v)
            throw GraphBuildError(GraphBuildError::Kind::SelfLoop,
                                  "self-loop at vertex " + std::to_string(u));
        g.adj_[u].push_back(v);
        g.adj_[v].push_back(u);
    }
    for (int v = 0; v < n; ++v) {
        auto& nb = g.adj_[v];
        std::sort(nb.begin(), nb.end());
        if (std::adjacent_find(nb.begin(), nb.end()) != nb.end())
            throw GraphBuildError(GraphBuildError::Kind::DuplicateEdge,
                                  "duplicate edge at vertex " + std::to_string(v));
        g.m_ += static_cast<int>(nb.size());
    }
    g.m_ /= 2;

    g.dist_.assign(static_cast<size_t>(n) * n, unreachable());
    std::vector<int> queue_buf(n);
    for (int s = 0; s < n; ++s) {
        int* row = g.dist_.data() + static_cast<size_t>(s) * n;
        row[s] = 0;
        int head = 0, tail = 0;
        queue_buf[tail++] = s;
        while (head < tail) {
            int u = queue_buf[head++];
            for (int w : g.adj_[u]) {
                if (row[w] == unreachable()) {
                    row[w] = row[u] + 1;
                    queue_buf[tail++] = w;
                }
            }
        }
    }
    return g;
}

bool Graph::adjacent(int u, int v) const {
    return u != v && distance(u, v) == 1;
}

int Graph::diameter() const {
    int d = 0;
    for (int v : dist_) {
        if (v == unreachable()) return unreachable();
        d = std::max(d, v);
    }
    return d;
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(m_);
    for (int u = 0; u < n_; ++u)
        for (int v : adj_[u])
            if (u < v) out.emplace_back(u, v);
    return out;
}

VertexSet ball(const Graph& g, int x, Radius r) {
    VertexSet out;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (g.reaches(x, v) && r.admits(g.distance(x, v))) out.push_back(v);
    return out;
}

namespace {

VertexSet bounded_bfs_avoiding(const Graph& g, int x, Radius r, int y1, int y2) {
    const int n = g.vertex_count();
    std::vector<int> depth(n, -1);
    depth[x] = 0;
    std::vector<int> queue_buf{x};
    for (size_t head = 0; head < queue_buf.size(); ++head) {
        int u = queue_buf[head];
        if (!r.is_unbounded() && depth[u] >= r.value()) continue;
        for (int w : g.neighbors(u)) {
            if (w == y1 || w == y2 || depth[w] >= 0) continue;
            depth[w] = depth[u] + 1;
            queue_buf.push_back(w);
        }
    }
    VertexSet out;
    for (int v = 0; v < n; ++v)
        if (depth[v] >= 0) out.push_back(v);
    return out;
}

}  // namespace

VertexSet punctured_ball(const Graph& g, int x, Radius r, int y) {
    if (x == y) throw ParamError("punctured ball centered at its own puncture");
    return bounded_bfs_avoiding(g, x, r, y, y);
}

VertexSet punctured_ball2(const Graph& g, int x, Radius r, int y1, int y2) {
    if (x == y1 || x == y2) throw ParamError("punctured ball centered at its own puncture");
    return bounded_bfs_avoiding(g, x, r, y1, y2);
}

bool is_connected(const Graph& g) {
    const int n = g.vertex_count();
    if (n == 0) return false;
    for (int v = 1; v < n; ++v)
        if (!g.reaches(0, v)) return false;
    return true;
}

std::vector<VertexSet> components(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<bool> seen(n, false);
    std::vector<VertexSet> out;
    for (int s = 0; s < n; ++s) {
        if (seen[s]) continue;
        VertexSet comp;
        for (int v = s; v < n; ++v) {
            if (!seen[v] && g.reaches(s, v)) {
                seen[v] = true;
                comp.push_back(v);
            }
        }
        out.push_back(std::move(comp));
    }
    return out;
}

std::optional<std::pair<VertexSet, VertexSet>> bipartition(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<int> color(n, -1);
    for (int s = 0; s < n; ++s) {
        if (color[s] >= 0) continue;
        color[s] = 0;
        std::vector<int> queue_buf{s};
        for (size_t head = 0; head < queue_buf.size(); ++head) {
            int u = queue_buf[head];
            for (int w : g.neighbors(u)) {
                if (color[w] < 0) {
                    color[w] = color[u] ^ 1;
                    queue_buf.push_back(w);
                } else if (color[w] == color[u]) {
                    return std::nullopt;
                }
            }
        }
    }
    VertexSet a, b;
    for (int v = 0; v < n; ++v) (color[v] == 0 ? a : b).push_back(v);
    return std::make_pair(std::move(a), std::move(b));
}

namespace {

// Iterative Hopcroft-Tarjan with an explicit edge stack.
struct BlockFinder {
    const Graph& g;
    std::vector<int> disc, low, parent;
    std::vector<bool> is_artic;
    std::vector<Edge> edge_stack;
    std::vector<VertexSet> blocks;
    int timer = 0;

    explicit BlockFinder(const Graph& graph)
        : g(graph),
          disc(graph.vertex_count(), -1),
          low(graph.vertex_count(), 0),
          parent(graph.vertex_count(), -1),
          is_artic(graph.vertex_count(), false) {}

    void pop_block(const Edge& until) {
        VertexSet verts;
        while (true) {
            Edge e = edge_stack.back();
            edge_stack.pop_back();
            verts.push_back(e.first);
            verts.push_back(e.second);
            if (e == until) break;
        }
        std::sort(verts.begin(), verts.end());
        verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
        blocks.push_back(std::move(verts));
    }

    void run(int root) {
        struct Frame {
            int v;
            size_t next_nb;
        };
        std::vector<Frame> stack{{root, 0}};
        disc[root] = low[root] = timer++;
        int root_children = 0;

        while (!stack.empty()) {
            Frame& f = stack.back();
            int v = f.v;
            if (f.next_nb < g.neighbors(v).size()) {
                int w = g.neighbors(v)[f.next_nb++];
                if (disc[w] < 0) {
                    parent[w] = v;
                    if (v == root) ++root_children;
                    edge_stack.push_back({v, w});
                    disc[w] = low[w] = timer++;
                    stack.push_back({w, 0});
                } else if (w != parent[v] && disc[w] < disc[v]) {
                    edge_stack.push_back({v, w});
                    low[v] = std::min(low[v], disc[w]);
                }
            } else {
                stack.pop_back();
                int p = parent[v];
                if (p >= 0) {
                    low[p] = std::min(low[p], low[v]);
                    if (low[v] >= disc[p]) {
                        if (p != root) is_artic[p] = true;
                        pop_block({p, v});
                    }
                }
            }
        }
        if (root_children >= 2) is_artic[root] = true;
    }
};

}  // namespace

BlockCutTree blocks_and_articulations(const Graph& g) {
    if (!is_connected(g)) throw DisconnectedError("block decomposition requires a connected graph");

    BlockCutTree out;
    const int n = g.vertex_count();
    if (n == 1) {
        out.blocks.push_back({0});
        return out;
    }

    BlockFinder finder(g);
    finder.run(0);

    std::sort(finder.blocks.begin(), finder.blocks.end());
    out.blocks = std::move(finder.blocks);
    for (int v = 0; v < n; ++v)
        if (finder.is_artic[v]) out.articulations.push_back(v);

    for (size_t b = 0; b < out.blocks.size(); ++b) {
        for (size_t a = 0; a < out.articulations.size(); ++a) {
            if (std::binary_search(out.blocks[b].begin(), out.blocks[b].end(),
                                   out.articulations[a]))
                out.tree_edges.emplace_back(static_cast<int>(b), static_cast<int>(a));
        }
    }
    return out;
}

std::optional<int> dominating_vertex(const Graph& g, const VertexSet& x) {
    if (x.empty()) throw ParamError("dominating_vertex of empty set");
    for (int u : x) {
        bool ok = true;
        for (int v : x) {
            if (v != u && !g.adjacent(u, v)) {
                ok = false;
                break;
            }
        }
        if (ok) return u;
    }
    return std::nullopt;
}

Graph induced_subgraph(const Graph& g, const VertexSet& verts) {
    std::vector<int> new_id(g.vertex_count(), -1);
    for (size_t i = 0; i < verts.size(); ++i) new_id[verts[i]] = static_cast<int>(i);
    std::vector<Edge> es;
    for (int u : verts)
        for (int w : g.neighbors(u))
            if (u < w && new_id[w] >= 0) es.emplace_back(new_id[u], new_id[w]);
    return Graph::build(static_cast<int>(verts.size()), es);
}

Graph relabel(const Graph& g, const std::vector<int>& perm) {
    std::vector<Edge> es;
    for (auto [u, v] : g.edges()) es.emplace_back(perm[u], perm[v]);
    return Graph::build(g.vertex_count(), es);
}

}  // namespace copwin
