#pragma once

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "copwin/errors.hpp"
#include "copwin/radius.hpp"

namespace copwin {

using Edge = std::pair<int, int>;
using VertexSet = std::vector<int>;  // always sorted ascending

/// Immutable simple undirected graph with precomputed all-pairs hop distances.
/// Vertices are dense identifiers 0..n-1. Construction validates the edge list
/// (out-of-range endpoint, self-loop, duplicate edge) and runs BFS from every
/// vertex; all later metric queries are table lookups.
class Graph {
public:
    static Graph build(int n, std::span<const Edge> edges);
    static Graph build(int n, std::initializer_list<Edge> edges) {
        return build(n, std::span<const Edge>(edges.begin(), edges.size()));
    }

    int vertex_count() const { return n_; }
    int edge_count() const { return m_; }

    const std::vector<int>& neighbors(int v) const { return adj_[v]; }
    bool adjacent(int u, int v) const;
    int degree(int v) const { return static_cast<int>(adj_[v].size()); }

    /// Hop distance, or unreachable() when u and v lie in different components.
    int distance(int u, int v) const { return dist_[static_cast<size_t>(u) * n_ + v]; }
    static constexpr int unreachable() { return 1 << 29; }
    bool reaches(int u, int v) const { return distance(u, v) != unreachable(); }

    /// Largest finite distance (0 for a single vertex); unreachable() if disconnected.
    int diameter() const;

    std::vector<Edge> edges() const;

    bool operator==(const Graph& other) const { return n_ == other.n_ && adj_ == other.adj_; }

private:
    Graph() = default;

    int n_ = 0;
    int m_ = 0;
    std::vector<std::vector<int>> adj_;  // per-vertex sorted neighbor lists
    std::vector<int> dist_;              // row-major n*n
};

/// {v : d(x,v) <= r}; unbounded r yields the connected component of x.
VertexSet ball(const Graph& g, int x, Radius r);

/// Vertices reachable from x by a path of length <= r in G with y deleted.
/// Always contains x. Throws ParamError when x == y.
VertexSet punctured_ball(const Graph& g, int x, Radius r, int y);

/// Same with two deleted vertices y1, y2 (y1 == y2 degenerates to one puncture).
VertexSet punctured_ball2(const Graph& g, int x, Radius r, int y1, int y2);

bool is_connected(const Graph& g);

/// Connected components, each sorted, ordered by smallest member.
std::vector<VertexSet> components(const Graph& g);

/// 2-coloring (side containing the smallest vertex of each component first),
/// or nullopt when the graph has an odd cycle.
std::optional<std::pair<VertexSet, VertexSet>> bipartition(const Graph& g);

/// Block-cut structure of a connected graph: biconnected blocks (single edges
/// count), articulation points, and the bipartite block/cut tree edges given
/// as (block index, articulation index) pairs.
struct BlockCutTree {
    std::vector<VertexSet> blocks;  // sorted sets, ordered lexicographically
    VertexSet articulations;
    std::vector<std::pair<int, int>> tree_edges;
};

BlockCutTree blocks_and_articulations(const Graph& g);

/// Smallest u in X adjacent to every other vertex of X, if any. Throws on empty X.
std::optional<int> dominating_vertex(const Graph& g, const VertexSet& x);

/// Subgraph induced by a sorted vertex set; new id = position in the set.
Graph induced_subgraph(const Graph& g, const VertexSet& verts);

/// Isomorphic copy with vertex v renamed perm[v].
Graph relabel(const Graph& g, const std::vector<int>& perm);

}  // namespace copwin
