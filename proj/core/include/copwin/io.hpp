#pragma once

#include <string>
#include <vector>

#include "copwin/corpus.hpp"
#include "copwin/decomposition.hpp"
#include "copwin/dismantling.hpp"
#include "copwin/game.hpp"
#include "copwin/graph.hpp"
#include "copwin/hyperbolicity.hpp"
#include "copwin/strategy.hpp"

namespace copwin {

/// Edge-list text: optional '#' comment lines, a "n m" header line, then m
/// lines "u v" with 0-based endpoints. format_edge_list emits the canonical
/// form (no comments, edges ascending), and parsing it back reproduces the
/// graph byte-for-byte under re-formatting.
Graph parse_edge_list(const std::string& text);
std::string format_edge_list(const Graph& g);

/// Standard graph6 encoding for graphs on at most 62 vertices.
Graph parse_graph6(const std::string& line);
std::string to_graph6(const Graph& g);

enum class GraphFormat { Auto, EdgeList, Graph6 };

/// Reads one or more graphs from file text. Edge-list files hold one graph;
/// graph6 files hold one per line. Auto keys off the first data line.
std::vector<Graph> parse_graphs(const std::string& text, GraphFormat format = GraphFormat::Auto);

/// JSON emitters (schema-versioned, machine-readable CLI output).
std::string json_certificate(const EliminationCertificate& cert, bool pretty = false);
std::string json_no_certificate(const std::string& family, bool pretty = false);
std::string json_decomposition(const Decomposition& d, bool pretty = false);
std::string json_no_decomposition(const std::string& kind, bool pretty = false);
std::string json_blocks(const BlockCutTree& t, bool pretty = false);
std::string json_game_summary(const GameValue& v, bool include_table, bool pretty = false);
std::string json_hyperbolicity(const HyperbolicityReport& rep, bool pretty = false);
std::string json_trace(const Trace& trace, bool pretty = false);
std::string json_crosscheck(const CrosscheckReport& rep, bool pretty = false);

const char* family_name(CertificateFamily family);
const char* kind_name(DecompositionKind kind);
const char* variant_name(Variant variant);

}  // namespace copwin
