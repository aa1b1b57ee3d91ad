#pragma once

#include <optional>
#include <vector>

#include "copwin/graph.hpp"
#include "copwin/radius.hpp"

namespace copwin {

enum class CertificateFamily { SsDismantle, Mno, Bipartite, Bidismantle, StrongBidismantle };

/// An ordered elimination witness. order[i] is the i-th vertex removed; the
/// final vertex (final two for the bipartite family) carries no eliminator.
/// Single-eliminator families fill y only (x = -1); pair families fill both.
/// Every eliminator appears strictly later in the order than the vertex it
/// eliminates. verify_certificate re-checks the whole thing from scratch.
struct EliminationCertificate {
    CertificateFamily family = CertificateFamily::SsDismantle;
    std::vector<int> order;
    std::vector<int> elim_y;  // aligned with order; -1 where absent
    std::vector<int> elim_x;  // aligned with order; -1 where absent
    Radius s{1};              // SsDismantle
    Radius s_prime{1};        // SsDismantle
    int k = 0;                // Bidismantle / StrongBidismantle
};

/// Greedy (s,s')-elimination: repeatedly delete a vertex v whose punctured
/// s-ball within the remaining set fits inside some remaining vertex's
/// s'-ball; succeeds iff a single vertex remains. Greedy order independence
/// makes smallest-(v,u) tie-breaking sound.
std::optional<EliminationCertificate> ss_dismantle(const Graph& g, Radius s, Radius s_prime);

/// The s'=1 variant evaluated inside the shrinking induced subgraph instead
/// of the ambient graph. Kept as an independent implementation; it must
/// agree with ss_dismantle(g, s, 1) on every connected graph.
std::optional<EliminationCertificate> ss_dismantle_local(const Graph& g, Radius s);

/// Maximum-neighborhood elimination: each removed vertex has, within the
/// remaining induced subgraph, a neighbor whose closed neighborhood contains
/// every closed neighborhood around it.
std::optional<EliminationCertificate> mno_order(const Graph& g);

/// Bipartite elimination: each removed vertex has a later, non-adjacent
/// vertex dominating its remaining open neighborhood; the last two vertices
/// must form an edge. Exhaustive backtracking with remaining-set memoization
/// (greedy confluence is unproven for this family).
std::optional<EliminationCertificate> bipartite_dismantle(const Graph& g);

/// k-bidismantling: each removed vertex v has later adjacent-or-equal x,y
/// with the k-ball of v punctured at {x,y}, within the remaining set,
/// dominated by y. Backtracking with memoization.
std::optional<EliminationCertificate> bidismantle(const Graph& g, int k);

/// 2-bidismantling strengthened per vertex by x == y or
/// punctured_ball(v,2,y) within the remaining set contained in
/// punctured_ball(x,2,y). Backtracking with memoization.
std::optional<EliminationCertificate> strong_bidismantle(const Graph& g);

/// Re-checks every elimination condition of the certificate's family from
/// scratch. Returns false on a violated condition or an eliminator that
/// precedes its vertex; throws MalformedError on structural nonsense
/// (not a permutation, bad sizes, bad family parameters).
bool verify_certificate(const Graph& g, const EliminationCertificate& cert);

}  // namespace copwin
