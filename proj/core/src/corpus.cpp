#include "copwin/corpus.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <mutex>
#include <random>
#include <thread>

#include "copwin/decomposition.hpp"
#include "copwin/dismantling.hpp"
#include "copwin/game.hpp"
#include "copwin/hyperbolicity.hpp"
#include "copwin/io.hpp"
#include "copwin/strategy.hpp"

namespace copwin {

Graph fixture_sun3() {
    return Graph::build(6, {{0, 1}, {1, 2}, {2, 0}, {3, 0}, {3, 1}, {4, 1}, {4, 2}, {5, 2}, {5, 0}});
}

Graph fixture_gk(int k) {
    if (k < 1) throw ParamError("gk needs k >= 1");
    const int n = 2 * k + 4;
    const int x = 0, y = 1, u = 2, v = 3;
    auto ui = [&](int i) { return 3 + i; };      // i = 1..k
    auto vi = [&](int i) { return k + 3 + i; };  // i = 1..k

    std::vector<Edge> edges;
    for (int w = 1; w < n; ++w)
        if (w != v) edges.push_back({x, w});
    for (int w = 2; w < n; ++w)
        if (w != u) edges.push_back({y, w});
    for (int i = 1; i < k; ++i) {
        edges.push_back({ui(i), ui(i + 1)});
        edges.push_back({ui(i), vi(i + 1)});
        edges.push_back({vi(i), vi(i + 1)});
        edges.push_back({vi(i), ui(i + 1)});
    }
    edges.push_back({u, ui(1)});
    edges.push_back({u, vi(1)});
    edges.push_back({v, ui(k)});
    edges.push_back({v, vi(k)});
    return Graph::build(n, edges);
}

Graph fixture_path(int n) {
    if (n < 1) throw ParamError("path needs n >= 1");
    std::vector<Edge> edges;
    for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
    return Graph::build(n, edges);
}

Graph fixture_cycle(int n) {
    if (n < 3) throw ParamError("cycle needs n >= 3");
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i) edges.push_back({i, (i + 1) % n});
    return Graph::build(n, edges);
}

Graph fixture_complete(int n) {
    if (n < 1) throw ParamError("complete needs n >= 1");
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) edges.push_back({i, j});
    return Graph::build(n, edges);
}

Graph fixture_complete_bipartite(int a, int b) {
    if (a < 1 || b < 1) throw ParamError("complete_bipartite needs both sides non-empty");
    std::vector<Edge> edges;
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j) edges.push_back({i, a + j});
    return Graph::build(a + b, edges);
}

Graph fixture_star(int leaves) {
    if (leaves < 1) throw ParamError("star needs at least one leaf");
    std::vector<Edge> edges;
    for (int i = 1; i <= leaves; ++i) edges.push_back({0, i});
    return Graph::build(leaves + 1, edges);
}

Graph fixture_two_triangles_shared_edge() {
    return Graph::build(4, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}});
}

Graph fixture(const std::string& id) {
    auto open = id.find('(');
    std::string name = id.substr(0, open);
    std::vector<int> args;
    if (open != std::string::npos) {
        if (id.back() != ')') throw ParamError("bad fixture id: " + id);
        std::string inner = id.substr(open + 1, id.size() - open - 2);
        size_t pos = 0;
        while (pos < inner.size()) {
            size_t next = inner.find(',', pos);
            if (next == std::string::npos) next = inner.size();
            try {
                args.push_back(std::stoi(inner.substr(pos, next - pos)));
            } catch (const std::logic_error&) {
                throw ParamError("bad fixture id: " + id);
            }
            pos = next + 1;
        }
    }
    auto want = [&](size_t c) {
        if (args.size() != c) throw ParamError("fixture " + name + " wants different arity");
    };
    if (name == "sun3") { want(0); return fixture_sun3(); }
    if (name == "gk") { want(1); return fixture_gk(args[0]); }
    if (name == "path") { want(1); return fixture_path(args[0]); }
    if (name == "cycle") { want(1); return fixture_cycle(args[0]); }
    if (name == "complete") { want(1); return fixture_complete(args[0]); }
    if (name == "complete_bipartite") { want(2); return fixture_complete_bipartite(args[0], args[1]); }
    if (name == "star") { want(1); return fixture_star(args[0]); }
    if (name == "two_triangles_shared_edge") { want(0); return fixture_two_triangles_shared_edge(); }
    throw ParamError("unknown fixture: " + id);
}

void for_each_connected(int n, const std::function<void(const Graph&)>& fn) {
    if (n < 1 || n > 7) throw ParamError("labeled enumeration guarded to 1 <= n <= 7");
    const int slots = n * (n - 1) / 2;
    std::vector<Edge> slot_edges;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) slot_edges.push_back({i, j});

    std::vector<Edge> edges;
    for (uint32_t mask = 0; mask < (uint32_t{1} << slots); ++mask) {
        edges.clear();
        for (int b = 0; b < slots; ++b)
            if (mask >> b & 1) edges.push_back(slot_edges[b]);
        Graph g = Graph::build(n, edges);
        if (is_connected(g)) fn(g);
    }
}

std::vector<Graph> enumerate_connected(int n) {
    std::vector<Graph> out;
    for_each_connected(n, [&](const Graph& g) { out.push_back(g); });
    return out;
}

uint64_t count_connected_labeled(int n) {
    if (n < 1 || n > 11) throw ParamError("count guarded to 1 <= n <= 11");
    auto pow2 = [](int e) { return uint64_t{1} << e; };
    std::vector<uint64_t> c(n + 1, 0);
    std::vector<std::vector<uint64_t>> binom(n + 1, std::vector<uint64_t>(n + 1, 0));
    for (int i = 0; i <= n; ++i) {
        binom[i][0] = 1;
        for (int j = 1; j <= i; ++j)
            binom[i][j] = binom[i - 1][j - 1] + (j <= i - 1 ? binom[i - 1][j] : 0);
    }
    for (int m = 1; m <= n; ++m) {
        uint64_t total = pow2(m * (m - 1) / 2);
        for (int k = 1; k < m; ++k)
            total -= binom[m - 1][k - 1] * c[k] * pow2((m - k) * (m - k - 1) / 2);
        c[m] = total;
    }
    return c[n];
}

std::vector<Graph> sample_connected(int n, int count, uint64_t seed) {
    if (n < 1) throw ParamError("sample needs n >= 1");
    std::mt19937_64 rng(seed);
    std::vector<Graph> out;
    out.reserve(count);
    const int slots = n * (n - 1) / 2;
    std::vector<Edge> slot_edges;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) slot_edges.push_back({i, j});

    while (static_cast<int>(out.size()) < count) {
        std::vector<Edge> edges;
        uint64_t word = 0;
        int bits_left = 0;
        for (int b = 0; b < slots; ++b) {
            if (bits_left == 0) {
                word = rng();
                bits_left = 64;
            }
            if (word & 1) edges.push_back(slot_edges[b]);
            word >>= 1;
            --bits_left;
        }
        Graph g = Graph::build(n, edges);
        if (is_connected(g)) out.push_back(std::move(g));
    }
    return out;
}

namespace {

struct CheckOutcome {
    bool applicable = true;
    std::string failure;  // empty = agreement
};

using CheckFn = std::function<CheckOutcome(const Graph&)>;

CheckOutcome pass() { return {true, ""}; }
CheckOutcome skip() { return {false, ""}; }
CheckOutcome fail(std::string detail) { return {true, std::move(detail)}; }

std::string verdict_name(Player p) { return p == Player::Cop ? "COP" : "ROBBER"; }

CheckOutcome check_visible_dismantle(const Graph& g) {
    const std::pair<Radius, Radius> speeds[] = {
        {Radius(1), Radius(1)}, {Radius(2), Radius(1)}, {Radius(3), Radius(1)},
        {Radius(2), Radius(2)}, {Radius(3), Radius(2)}, {Radius(4), Radius(2)},
        {Radius::unbounded(), Radius(1)}};
    for (auto [s, sp] : speeds) {
        bool dismantlable = ss_dismantle(g, s, sp).has_value();
        bool cop_wins = solve_visible(g, s, sp).verdict == Player::Cop;
        if (dismantlable != cop_wins)
            return fail("(" + s.to_string() + "," + sp.to_string() + "): dismantle=" +
                        (dismantlable ? "yes" : "no") + " solver=" +
                        (cop_wins ? "COP" : "ROBBER"));
    }
    return pass();
}

CheckOutcome check_local_dismantle(const Graph& g) {
    const Radius speeds[] = {Radius(1), Radius(2), Radius(3), Radius::unbounded()};
    for (Radius s : speeds) {
        auto global = ss_dismantle(g, s, Radius(1));
        auto local = ss_dismantle_local(g, s);
        if (global.has_value() != local.has_value())
            return fail("s=" + s.to_string() + ": ambient and induced recognizers disagree");
        if (local && !verify_certificate(g, *local))
            return fail("s=" + s.to_string() + ": induced-variant certificate fails verification");
    }
    return pass();
}

CheckOutcome check_dually_chordal(const Graph& g) {
    bool has_mno = mno_order(g).has_value();
    bool dism = ss_dismantle(g, Radius(2), Radius(1)).has_value();
    bool cop = solve_visible(g, Radius(2), Radius(1)).verdict == Player::Cop;
    if (has_mno != dism || dism != cop)
        return fail(std::string("mno=") + (has_mno ? "y" : "n") + " dismantle=" +
                    (dism ? "y" : "n") + " solver=" + (cop ? "COP" : "ROBBER"));
    return pass();
}

CheckOutcome check_big_brother(const Graph& g) {
    auto d = big_brother(g);
    bool cop3 = solve_visible(g, Radius(3), Radius(1)).verdict == Player::Cop;
    bool cop4 = solve_visible(g, Radius(4), Radius(1)).verdict == Player::Cop;
    bool copinf = solve_visible(g, Radius::unbounded(), Radius(1)).verdict == Player::Cop;
    if (d.has_value() != cop3 || cop3 != cop4 || cop4 != copinf)
        return fail(std::string("bb=") + (d ? "y" : "n") + " s3=" + (cop3 ? "C" : "R") +
                    " s4=" + (cop4 ? "C" : "R") + " sinf=" + (copinf ? "C" : "R"));
    if (d) {
        if (!verify_decomposition(g, *d)) return fail("big-brother decomposition fails verification");
        if (!verify_decomposition(g, as_big_two_brother(*d)))
            return fail("relabeled decomposition fails big-two-brother verification");
    }
    return pass();
}

CheckOutcome check_big_two_brother(const Graph& g) {
    auto d = big_two_brother(g);
    if (d) {
        if (!verify_decomposition(g, *d))
            return fail("big-two-brother decomposition fails verification");
        for (int k = 1; k <= 5; ++k) {
            if (solve_witness(g, k, Radius(1)).verdict != Player::Cop)
                return fail("decomposition exists but witness k=" + std::to_string(k) +
                            " is robber-won");
        }
    } else {
        if (bidismantle(g, g.vertex_count()).has_value())
            return fail("no decomposition but the n-bidismantling succeeds");
    }
    return pass();
}

CheckOutcome check_witness2_necessary(const Graph& g) {
    if (solve_witness(g, 2, Radius(1)).verdict != Player::Cop) return skip();
    auto cert = bidismantle(g, 2);
    if (!cert) return fail("witness k=2 cop-won but not 2-bidismantlable");
    if (!verify_certificate(g, *cert)) return fail("2-bidismantling certificate fails verification");
    return pass();
}

CheckOutcome check_strong_sufficient(const Graph& g) {
    auto cert = strong_bidismantle(g);
    if (!cert) return skip();
    if (!verify_certificate(g, *cert))
        return fail("strong 2-bidismantling certificate fails verification");
    if (solve_witness(g, 2, Radius(1)).verdict != Player::Cop)
        return fail("strongly 2-bidismantlable but witness k=2 robber-won");
    return pass();
}

CheckOutcome check_odd_bidismantle(const Graph& g) {
    bool applied = false;
    for (int k : {3, 5}) {
        auto cert = bidismantle(g, k);
        if (!cert) continue;
        applied = true;
        if (!verify_certificate(g, *cert)) return fail("bidismantling certificate fails verification");
        if (solve_witness(g, k, Radius(1)).verdict != Player::Cop)
            return fail("k=" + std::to_string(k) + "-bidismantlable but witness robber-won");
    }
    return applied ? pass() : skip();
}

CheckOutcome check_mark_sufficient(const Graph& g) {
    VertexSet all(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) all[v] = v;
    bool applied = false;
    for (int k : {3, 5}) {
        MarkTable table = mark_procedure(g, all, k);
        if (!table.complete()) continue;
        applied = true;
        if (solve_witness(g, k, Radius(1)).verdict != Player::Cop)
            return fail("mark table complete for k=" + std::to_string(k) +
                        " but witness robber-won");
    }
    return applied ? pass() : skip();
}

CheckOutcome check_fast_witness(const Graph& g) {
    bool bb = big_brother(g).has_value();
    bool w22 = solve_witness(g, 2, Radius(2)).verdict == Player::Cop;
    bool w13 = solve_witness(g, 1, Radius(3)).verdict == Player::Cop;
    if (w22 != bb) return fail(std::string("witness(k=2,s=2)=") + (w22 ? "C" : "R") +
                               " bb=" + (bb ? "y" : "n"));
    if (w13 != bb) return fail(std::string("witness(k=1,s=3)=") + (w13 ? "C" : "R") +
                               " bb=" + (bb ? "y" : "n"));
    return pass();
}

CheckOutcome check_witness1_visible(const Graph& g) {
    for (int s : {1, 2, 3}) {
        bool w = solve_witness(g, 1, Radius(s)).verdict == Player::Cop;
        bool vis = solve_visible(g, Radius(s), Radius(1)).verdict == Player::Cop;
        if (w != vis) return fail("s=" + std::to_string(s) + ": one-move-phase witness differs");
    }
    return pass();
}

CheckOutcome check_capture0_visible(const Graph& g) {
    bool cap = solve_capture(g, 0).verdict == Player::Cop;
    bool vis = solve_visible(g, Radius(1), Radius(1)).verdict == Player::Cop;
    if (cap != vis) return fail("radius-0 capture differs from the unit-speed visible game");
    return pass();
}

CheckOutcome check_bipartite_capture(const Graph& g) {
    if (!bipartition(g)) return skip();
    auto cert = bipartite_dismantle(g);
    bool cop = solve_capture(g, 1).verdict == Player::Cop;
    if (cert.has_value() != cop)
        return fail(std::string("bipartite dismantle=") + (cert ? "y" : "n") + " capture(1)=" +
                    (cop ? "COP" : "ROBBER"));
    if (cert && !verify_certificate(g, *cert))
        return fail("bipartite certificate fails verification");
    return pass();
}

CheckOutcome check_diameter2_capture(const Graph& g) {
    if (g.diameter() > 2) return skip();
    if (solve_capture(g, 1).verdict != Player::Cop)
        return fail("diameter <= 2 but capture radius 1 is robber-won");
    return pass();
}

CheckOutcome check_hyperbolic_dismantle(const Graph& g) {
    int two_delta = hyperbolicity(g).two_delta;
    int r = std::max(1, two_delta);
    if (!check_hyperbolic_dismantling(g, r))
        return fail("(2r, r+2delta) elimination failed at r=" + std::to_string(r));
    return pass();
}

CheckOutcome check_hyperbolicity_speed_bound(const Graph& g) {
    bool applied = false;
    const std::pair<int, int> speeds[] = {{2, 1}, {4, 2}};
    for (auto [s, sp] : speeds) {
        if (solve_visible(g, Radius(s), Radius(sp)).verdict != Player::Cop) continue;
        applied = true;
        int two_delta = hyperbolicity(g).two_delta;
        if (two_delta > 2 * (s - 1))
            return fail("cop-won at (" + std::to_string(s) + "," + std::to_string(sp) +
                        ") but 2delta=" + std::to_string(two_delta));
    }
    return applied ? pass() : skip();
}

CheckOutcome check_monotone_cop_power(const Graph& g) {
    const std::pair<int, int> speeds[] = {{1, 1}, {2, 1}, {3, 1}, {3, 2}};
    for (auto [s, sp] : speeds) {
        bool weak = solve_visible(g, Radius(s), Radius(sp)).verdict == Player::Cop;
        bool strong = solve_visible(g, Radius(s), Radius(sp + 1)).verdict == Player::Cop;
        if (weak && !strong)
            return fail("cop win lost when his speed grew from " + std::to_string(sp));
    }
    for (int k : {1, 2, 3}) {
        bool longer = solve_witness(g, k + 1, Radius(1)).verdict == Player::Cop;
        bool shorter = solve_witness(g, k, Radius(1)).verdict == Player::Cop;
        if (longer && !shorter)
            return fail("witness win at k=" + std::to_string(k + 1) + " lost at k=" +
                        std::to_string(k));
    }
    return pass();
}

bool strategy_captures(const Graph& g, const GameSpec& spec, const StrategyTable& table,
                       const GameValue& value) {
    OptimalPolicies policies(g, value);
    RobberAgent robber;
    robber.kind = RobberAgent::Kind::Optimal;
    robber.optimal = &policies;
    CopAgent cop;
    cop.table = &table;
    Trace t = simulate(g, spec, cop, robber, default_step_cap(g, spec));
    return t.captured;
}

CheckOutcome check_strategy_soundness(const Graph& g) {
    // Shadow strategies at a spread of speed pairs.
    const std::pair<Radius, Radius> speeds[] = {
        {Radius(1), Radius(1)}, {Radius(2), Radius(1)}, {Radius(2), Radius(2)},
        {Radius(3), Radius(1)}};
    for (auto [s, sp] : speeds) {
        auto cert = ss_dismantle(g, s, sp);
        if (!cert) continue;
        GameValue value = solve_visible(g, s, sp);
        if (!strategy_captures(g, GameSpec::visible(s, sp), shadow_strategy(g, *cert), value))
            return fail("shadow strategy failed at (" + s.to_string() + "," + sp.to_string() +
                        ")");
    }

    // Oscillation strategy from a complete mark table, odd phase length.
    VertexSet all(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) all[v] = v;
    MarkTable marks = mark_procedure(g, all, 3);
    if (marks.complete()) {
        GameValue value = solve_witness(g, 3, Radius(1));
        if (!strategy_captures(g, GameSpec::witness(3), mark_strategy(g, marks), value))
            return fail("mark strategy failed at k=3");
    }

    if (auto d = big_brother(g)) {
        for (Radius s : {Radius(3), Radius::unbounded()}) {
            GameValue value = solve_visible(g, s, Radius(1));
            if (!strategy_captures(g, GameSpec::visible(s, Radius(1)), bb_strategy(g, *d), value))
                return fail("big-brother pursuit failed at s=" + s.to_string());
        }
    }

    if (auto d = big_two_brother(g)) {
        for (int k : {1, 2, 3}) {
            GameValue value = solve_witness(g, k, Radius(1));
            if (!strategy_captures(g, GameSpec::witness(k), btb_witness_strategy(g, *d, k),
                                   value))
                return fail("big-two-brother phase strategy failed at k=" + std::to_string(k));
        }
    }
    return pass();
}

CheckOutcome check_certificates_verify(const Graph& g) {
    if (auto c = ss_dismantle(g, Radius(1), Radius(1)); c && !verify_certificate(g, *c))
        return fail("(1,1) certificate rejected");
    if (auto c = ss_dismantle(g, Radius(2), Radius(1)); c && !verify_certificate(g, *c))
        return fail("(2,1) certificate rejected");
    if (auto c = mno_order(g); c && !verify_certificate(g, *c))
        return fail("mno certificate rejected");
    if (auto c = bidismantle(g, 2); c && !verify_certificate(g, *c))
        return fail("2-bidismantling certificate rejected");
    if (auto c = strong_bidismantle(g); c && !verify_certificate(g, *c))
        return fail("strong certificate rejected");
    if (bipartition(g)) {
        if (auto c = bipartite_dismantle(g); c && !verify_certificate(g, *c))
            return fail("bipartite certificate rejected");
    }
    if (auto d = big_brother(g); d && !verify_decomposition(g, *d))
        return fail("big-brother decomposition rejected");
    if (auto d = big_two_brother(g); d && !verify_decomposition(g, *d))
        return fail("big-two-brother decomposition rejected");
    return pass();
}

CheckOutcome check_self_test_inject(const Graph&) {
    return fail("synthetic disagreement (harness self-test)");
}

const std::vector<std::pair<std::string, CheckFn>>& check_registry() {
    static const std::vector<std::pair<std::string, CheckFn>> registry = {
        {"visible-dismantle", check_visible_dismantle},
        {"local-dismantle", check_local_dismantle},
        {"dually-chordal", check_dually_chordal},
        {"big-brother", check_big_brother},
        {"big-two-brother", check_big_two_brother},
        {"witness2-necessary", check_witness2_necessary},
        {"strong-sufficient", check_strong_sufficient},
        {"odd-bidismantle-sufficient", check_odd_bidismantle},
        {"mark-sufficient", check_mark_sufficient},
        {"fast-witness", check_fast_witness},
        {"witness1-visible", check_witness1_visible},
        {"capture0-visible", check_capture0_visible},
        {"bipartite-capture", check_bipartite_capture},
        {"diameter2-capture", check_diameter2_capture},
        {"hyperbolic-dismantle", check_hyperbolic_dismantle},
        {"hyperbolicity-speed-bound", check_hyperbolicity_speed_bound},
        {"monotone-cop-power", check_monotone_cop_power},
        {"strategy-soundness", check_strategy_soundness},
        {"certificates-verify", check_certificates_verify},
        {"self-test-inject", check_self_test_inject},
    };
    return registry;
}

}  // namespace

std::vector<std::string> available_checks() {
    std::vector<std::string> names;
    for (const auto& [name, fn] : check_registry()) names.push_back(name);
    return names;
}

namespace {

std::vector<Graph> corpus_graphs(const CorpusSpec& corpus) {
    switch (corpus.source) {
        case CorpusSpec::Source::Enumerate: {
            std::vector<Graph> out;
            for (int n = 1; n <= corpus.max_n; ++n)
                for_each_connected(n, [&](const Graph& g) { out.push_back(g); });
            return out;
        }
        case CorpusSpec::Source::Sample:
            return sample_connected(corpus.sample_n, corpus.sample_count, corpus.seed);
        case CorpusSpec::Source::Explicit:
            return corpus.graphs;
    }
    throw ParamError("unknown corpus source");
}

}  // namespace

CrosscheckReport crosscheck(const CorpusSpec& corpus, const std::vector<std::string>& checks,
                            int threads) {
    std::vector<CheckFn> fns;
    CrosscheckReport report;
    for (const auto& name : checks) {
        bool found = false;
        for (const auto& [rname, fn] : check_registry()) {
            if (rname == name) {
                fns.push_back(fn);
                found = true;
                break;
            }
        }
        if (!found) throw ParamError("unknown check: " + name);
        CheckResult res;
        res.name = name;
        report.checks.push_back(std::move(res));
    }

    std::vector<Graph> graphs = corpus_graphs(corpus);
    report.corpus_size = static_cast<long>(graphs.size());

    if (threads <= 0)
        threads = std::max(1u, std::min(std::thread::hardware_concurrency(), 8u));
    threads = std::min<int>(threads, std::max<size_t>(graphs.size(), size_t{1}));

    struct ItemOutcome {
        uint8_t applied = 0;
        std::string failure;
    };
    std::vector<std::vector<ItemOutcome>> outcomes(graphs.size(),
                                                   std::vector<ItemOutcome>(fns.size()));
    std::vector<double> work_seconds(checks.size(), 0.0);
    std::mutex work_mutex;
    std::atomic<size_t> cursor{0};

    auto worker = [&] {
        std::vector<double> local_seconds(fns.size(), 0.0);
        while (true) {
            size_t i = cursor.fetch_add(1);
            if (i >= graphs.size()) break;
            for (size_t c = 0; c < fns.size(); ++c) {
                auto t0 = std::chrono::steady_clock::now();
                CheckOutcome out;
                try {
                    out = fns[c](graphs[i]);
                } catch (const std::exception& e) {
                    out = fail(std::string("exception: ") + e.what());
                }
                auto t1 = std::chrono::steady_clock::now();
                local_seconds[c] += std::chrono::duration<double>(t1 - t0).count();
                outcomes[i][c].applied = out.applicable ? 1 : 0;
                outcomes[i][c].failure = std::move(out.failure);
            }
        }
        std::lock_guard<std::mutex> lock(work_mutex);
        for (size_t c = 0; c < fns.size(); ++c) work_seconds[c] += local_seconds[c];
    };

    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();

    for (size_t i = 0; i < graphs.size(); ++i) {
        for (size_t c = 0; c < fns.size(); ++c) {
            const auto& out = outcomes[i][c];
            if (!out.applied) continue;
            auto& res = report.checks[c];
            ++res.graphs;
            if (out.failure.empty()) {
                ++res.agreements;
            } else {
                res.disagreements.push_back(
                    {static_cast<long>(i), to_graph6(graphs[i]), out.failure});
            }
        }
    }
    for (size_t c = 0; c < fns.size(); ++c) report.checks[c].seconds = work_seconds[c];
    return report;
}

}  // namespace copwin
