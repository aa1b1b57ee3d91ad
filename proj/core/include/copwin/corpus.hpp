#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "copwin/graph.hpp"

namespace copwin {

/// Named fixture constructions with documented vertex numbering.
///
/// sun3: inner triangle 0,1,2 plus corners 3 (adj 0,1), 4 (adj 1,2),
///       5 (adj 2,0).
/// gk(k): 2k+4 vertices: x=0, y=1, u=2, v=3, u_i = 3+i, v_i = k+3+i
///       (i = 1..k). x adjacent to all but v; y adjacent to all but u;
///       rungs {u_i,u_{i+1}}, {u_i,v_{i+1}}, {v_i,v_{i+1}}, {v_i,u_{i+1}}
///       for i < k; u adjacent to x,u_1,v_1; v adjacent to y,u_k,v_k.
/// star(m): K_{1,m} with center 0 and m leaves.
/// two_triangles_shared_edge: triangles 0,1,2 and 1,2,3.
Graph fixture_sun3();
Graph fixture_gk(int k);
Graph fixture_path(int n);
Graph fixture_cycle(int n);
Graph fixture_complete(int n);
Graph fixture_complete_bipartite(int a, int b);
Graph fixture_star(int leaves);
Graph fixture_two_triangles_shared_edge();

/// Parses "sun3", "gk(3)", "path(5)", "cycle(4)", "complete(4)",
/// "complete_bipartite(3,3)", "star(4)", "two_triangles_shared_edge".
Graph fixture(const std::string& id);

/// All connected labeled simple graphs on n vertices in ascending
/// adjacency-bitmask order. Guarded to n <= 7.
void for_each_connected(int n, const std::function<void(const Graph&)>& fn);
std::vector<Graph> enumerate_connected(int n);

/// Number of connected labeled graphs on n vertices via the standard
/// subtraction recurrence; the enumerator is cross-checked against it.
uint64_t count_connected_labeled(int n);

/// Reproducible edge-probability-1/2 samples, rejection-sampled to
/// connectivity. Identical output for identical (n, count, seed).
std::vector<Graph> sample_connected(int n, int count, uint64_t seed);

struct Disagreement {
    long index = -1;          // position within the corpus stream
    std::string graph6;
    std::string detail;
};

struct CheckResult {
    std::string name;
    long graphs = 0;      // graphs the check applied to
    long agreements = 0;
    std::vector<Disagreement> disagreements;
    double seconds = 0;   // summed per-graph work time
};

struct CrosscheckReport {
    std::vector<CheckResult> checks;
    long corpus_size = 0;
    bool ok() const {
        for (const auto& c : checks)
            if (!c.disagreements.empty()) return false;
        return true;
    }
};

struct CorpusSpec {
    enum class Source { Enumerate, Sample, Explicit };
    Source source = Source::Enumerate;
    int max_n = 5;           // Enumerate: every connected graph on 1..max_n vertices
    int sample_n = 8;        // Sample
    int sample_count = 100;
    uint64_t seed = 1;
    std::vector<Graph> graphs;  // Explicit
};

/// Catalog of recognizer/solver agreement checks runnable per graph.
std::vector<std::string> available_checks();

/// Runs the named checks over the corpus with a deterministic merge
/// (disagreements ordered by corpus index). threads <= 0 picks a default.
CrosscheckReport crosscheck(const CorpusSpec& corpus, const std::vector<std::string>& checks,
                            int threads = 0);

}  // namespace copwin
