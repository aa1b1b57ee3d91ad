#include "copwin/io.hpp"

#include <sstream>

#include <json.hpp>

namespace copwin {

using nlohmann::json;

Graph parse_edge_list(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int n = -1, m = -1;
    std::vector<Edge> edges;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        size_t first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        std::istringstream ls(line);
        if (n < 0) {
            if (!(ls >> n >> m) || n < 0 || m < 0)
                throw ParseError("line " + std::to_string(line_no) + ": expected header 'n m'");
        } else {
            int u, v;
            if (!(ls >> u >> v))
                throw ParseError("line " + std::to_string(line_no) + ": expected edge 'u v'");
            edges.push_back({u, v});
        }
        std::string rest;
        if (ls >> rest) throw ParseError("line " + std::to_string(line_no) + ": trailing tokens");
    }
    if (n < 0) throw ParseError("missing 'n m' header line");
    if (static_cast<int>(edges.size()) != m)
        throw ParseError("header announces " + std::to_string(m) + " edges, found " +
                         std::to_string(edges.size()));
    return Graph::build(n, edges);
}

std::string format_edge_list(const Graph& g) {
    std::ostringstream out;
    out << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
    return out.str();
}

Graph parse_graph6(const std::string& line) {
    std::string s = line;
    while (!s.empty() && (s.back() == '\n' || s.back() == '\r')) s.pop_back();
    if (s.starts_with(">>graph6<<")) s = s.substr(10);
    if (s.empty()) throw ParseError("empty graph6 line");
    int n = s[0] - 63;
    if (n < 0 || n > 62) throw ParseError("graph6 vertex counts above 62 are not supported");
    size_t need = (static_cast<size_t>(n) * (n - 1) / 2 + 5) / 6;
    if (s.size() != 1 + need) throw ParseError("graph6 line has wrong length");

    std::vector<Edge> edges;
    size_t bit = 0;
    for (int v = 1; v < n; ++v) {
        for (int u = 0; u < v; ++u, ++bit) {
            int byte = s[1 + bit / 6] - 63;
            if (byte < 0 || byte > 63) throw ParseError("graph6 byte out of range");
            if (byte >> (5 - bit % 6) & 1) edges.push_back({u, v});
        }
    }
    return Graph::build(n, edges);
}

std::string to_graph6(const Graph& g) {
    const int n = g.vertex_count();
    if (n > 62) throw ParamError("graph6 vertex counts above 62 are not supported");
    std::string s(1 + (static_cast<size_t>(n) * (n - 1) / 2 + 5) / 6,
                  static_cast<char>(63));
    s[0] = static_cast<char>(63 + n);
    size_t bit = 0;
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u, ++bit)
            if (g.adjacent(u, v)) s[1 + bit / 6] += 1 << (5 - bit % 6);
    return s;
}

std::vector<Graph> parse_graphs(const std::string& text, GraphFormat format) {
    if (format == GraphFormat::Auto) {
        std::istringstream in(text);
        std::string line;
        format = GraphFormat::Graph6;
        while (std::getline(in, line)) {
            size_t first = line.find_first_not_of(" \t\r");
            if (first == std::string::npos || line[first] == '#') continue;
            // A header of two decimal numbers marks the edge-list format.
            std::istringstream ls(line);
            int a, b;
            std::string rest;
            if (ls >> a >> b && !(ls >> rest)) format = GraphFormat::EdgeList;
            break;
        }
    }
    if (format == GraphFormat::EdgeList) return {parse_edge_list(text)};

    std::vector<Graph> out;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        size_t first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        out.push_back(parse_graph6(line.substr(first)));
    }
    if (out.empty()) throw ParseError("no graphs in input");
    return out;
}

const char* family_name(CertificateFamily family) {
    switch (family) {
        case CertificateFamily::SsDismantle: return "ss";
        case CertificateFamily::Mno: return "mno";
        case CertificateFamily::Bipartite: return "bipartite";
        case CertificateFamily::Bidismantle: return "bi";
        case CertificateFamily::StrongBidismantle: return "strongbi";
    }
    return "?";
}

const char* kind_name(DecompositionKind kind) {
    return kind == DecompositionKind::BigBrother ? "bb" : "btb";
}

const char* variant_name(Variant variant) {
    switch (variant) {
        case Variant::Visible: return "visible";
        case Variant::Witness: return "witness";
        case Variant::CaptureRadius: return "capture";
    }
    return "?";
}

namespace {

std::string dump(const json& j, bool pretty) { return pretty ? j.dump(2) + "\n" : j.dump() + "\n"; }

json radius_json(Radius r) {
    if (r.is_unbounded()) return json("inf");
    return json(r.value());
}

json spec_json(const GameSpec& spec) {
    json j{{"variant", variant_name(spec.variant)}};
    switch (spec.variant) {
        case Variant::Visible:
            j["s"] = radius_json(spec.robber_speed);
            j["sprime"] = radius_json(spec.cop_speed);
            break;
        case Variant::Witness:
            j["k"] = spec.witness_phase;
            j["s"] = radius_json(spec.robber_speed);
            break;
        case Variant::CaptureRadius:
            j["radius"] = spec.capture_radius;
            break;
    }
    return j;
}

}  // namespace

std::string json_certificate(const EliminationCertificate& cert, bool pretty) {
    json j{{"schema", "copwin.certificate/1"},
           {"family", family_name(cert.family)},
           {"found", true},
           {"order", cert.order}};
    json elems = json::array();
    for (size_t i = 0; i < cert.order.size(); ++i) {
        json e{{"v", cert.order[i]}};
        if (cert.elim_y[i] >= 0) e["y"] = cert.elim_y[i];
        if (cert.elim_x[i] >= 0) e["x"] = cert.elim_x[i];
        elems.push_back(std::move(e));
    }
    j["eliminators"] = std::move(elems);
    json params = json::object();
    if (cert.family == CertificateFamily::SsDismantle) {
        params["s"] = radius_json(cert.s);
        params["sprime"] = radius_json(cert.s_prime);
    }
    if (cert.family == CertificateFamily::Bidismantle ||
        cert.family == CertificateFamily::StrongBidismantle)
        params["k"] = cert.k;
    j["params"] = std::move(params);
    return dump(j, pretty);
}

std::string json_no_certificate(const std::string& family, bool pretty) {
    return dump(json{{"schema", "copwin.certificate/1"}, {"family", family}, {"found", false}},
                pretty);
}

std::string json_decomposition(const Decomposition& d, bool pretty) {
    json j{{"schema", "copwin.decomposition/1"},
           {"kind", kind_name(d.kind)},
           {"found", true},
           {"pieces", d.pieces},
           {"big_brother", d.big_brother},
           {"small_brother", d.small_brother},
           {"parent", d.parent}};
    return dump(j, pretty);
}

std::string json_no_decomposition(const std::string& kind, bool pretty) {
    return dump(json{{"schema", "copwin.decomposition/1"}, {"kind", kind}, {"found", false}},
                pretty);
}

std::string json_blocks(const BlockCutTree& t, bool pretty) {
    json edges = json::array();
    for (auto [b, a] : t.tree_edges) edges.push_back(json::array({b, a}));
    json j{{"schema", "copwin.blocks/1"},
           {"blocks", t.blocks},
           {"articulations", t.articulations},
           {"tree_edges", std::move(edges)}};
    return dump(j, pretty);
}

std::string json_game_summary(const GameValue& v, bool include_table, bool pretty) {
    json j{{"schema", "copwin.solve/1"},
           {"game", spec_json(v.spec)},
           {"verdict", v.verdict == Player::Cop ? "COP" : "ROBBER"}};
    if (v.best_start >= 0)
        j["best_start"] = v.best_start;
    else
        j["best_start"] = nullptr;
    if (include_table) {
        json winners = json::array();
        json labels = json::array();
        for (int c = 0; c < v.n; ++c) {
            json wrow = json::array();
            json lrow = json::array();
            for (int r = 0; r < v.n; ++r) {
                wrow.push_back(v.winner_at(c, r) == Player::Cop ? "C" : "R");
                lrow.push_back(v.label_at(c, r));
            }
            winners.push_back(std::move(wrow));
            labels.push_back(std::move(lrow));
        }
        j["value"] = json{{"winner", std::move(winners)}, {"label", std::move(labels)}};
    }
    return dump(j, pretty);
}

std::string json_hyperbolicity(const HyperbolicityReport& rep, bool pretty) {
    json j{{"schema", "copwin.hyperbolicity/1"},
           {"two_delta", rep.two_delta},
           {"witness", rep.witness}};
    return dump(j, pretty);
}

std::string json_trace(const Trace& trace, bool pretty) {
    json outcome{{"captured", trace.captured}, {"cap", trace.cap}};
    if (trace.captured)
        outcome["step"] = trace.capture_step;
    else
        outcome["step"] = nullptr;
    json j{{"schema", "copwin.trace/1"},
           {"game", spec_json(trace.game)},
           {"cop", trace.cop_positions},
           {"robber", trace.robber_positions},
           {"outcome", std::move(outcome)}};
    return dump(j, pretty);
}

std::string json_crosscheck(const CrosscheckReport& rep, bool pretty) {
    json checks = json::array();
    for (const auto& c : rep.checks) {
        json disagreements = json::array();
        for (const auto& d : c.disagreements)
            disagreements.push_back(
                json{{"index", d.index}, {"graph6", d.graph6}, {"detail", d.detail}});
        checks.push_back(json{{"name", c.name},
                              {"graphs", c.graphs},
                              {"agreements", c.agreements},
                              {"disagreements", std::move(disagreements)},
                              {"seconds", c.seconds}});
    }
    json j{{"schema", "copwin.crosscheck/1"},
           {"corpus_size", rep.corpus_size},
           {"ok", rep.ok()},
           {"checks", std::move(checks)}};
    return dump(j, pretty);
}

}  // namespace copwin
