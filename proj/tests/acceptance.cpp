// Acceptance suite: each criterion prints one pass/fail line. Default mode
// covers the always-on criteria; --extended adds the hours-scale
// reproductions.
#include <chrono>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <numeric>
#include <random>
#include <sstream>

#include "folkman/algorithms.hpp"
#include "folkman/canon.hpp"
#include "folkman/cliques.hpp"
#include "folkman/coloring.hpp"
#include "folkman/generate.hpp"
#include "folkman/graph.hpp"
#include "folkman/pipeline.hpp"

using namespace folkman;
namespace fs = std::filesystem;

namespace {

int failures = 0;

struct Timer {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    }
};

void report(const std::string& name, bool ok, double seconds, const std::string& detail = "") {
    std::cout << (ok ? "PASS " : "FAIL ") << name << "  (" << static_cast<long>(seconds * 1000)
              << " ms)";
    if (!detail.empty()) std::cout << "  " << detail;
    std::cout << std::endl;
    if (!ok) ++failures;
}

std::string fixtures_dir = "fixtures";

Graph random_graph(int n, double p, std::mt19937& rng) {
    Graph g(n);
    std::bernoulli_distribution coin(p);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng)) g.add_edge(u, v);
    return g;
}

Graph permute(const Graph& g, const std::vector<int>& perm) {
    Graph h(g.n);
    for (int u = 0; u < g.n; ++u)
        for (int v = u + 1; v < g.n; ++v)
            if (g.has_edge(u, v)) h.add_edge(perm[u], perm[v]);
    return h;
}

// ---------------------------------------------------------------- criterion 1
void criterion_arrowing_basics() {
    bool ok = true;
    double worst = 0;
    auto timed = [&](const Graph& g, bool expected) {
        Timer t;
        bool got = arrows_e33(g);
        worst = std::max(worst, t.seconds());
        if (got != expected) ok = false;
    };
    Timer total;
    timed(complete_graph(6), true);
    timed(complete_graph(5), false);
    timed(join(complete_graph(3), cycle_graph(5)), true);
    ok = ok && worst < 1.0;
    report("criterion-1 arrowing basics (K6, K5, K3+C5; each < 1 s)", ok, total.seconds());
}

// ---------------------------------------------------------------- criterion 2
void criterion_a6(int n, const std::vector<long>& expected, double budget_s) {
    Timer t;
    A6Result result = run_a6(n);
    bool ok = result.step_counts == expected && t.seconds() <= budget_s;
    if (n == 8) {
        // the single survivor is the 8-vertex cone over the pentagon
        ok = ok && result.graphs.size() == 1 &&
             canonical_form(result.graphs[0]) ==
                 canonical_form(join(complete_graph(3), cycle_graph(5)));
    }
    std::ostringstream detail;
    detail << "steps:";
    for (long c : result.step_counts) detail << " " << c;
    report("criterion-2 minimal-graph sweep n=" + std::to_string(n), ok, t.seconds(),
           detail.str());
}

void criterion_a6_extended() {
    Timer t;
    A6Result result = run_a6(10);
    bool ok = result.step_counts.back() == 6;
    long delta4 = 0;
    for (const Graph& g : result.graphs)
        if (degree_stats(g).min_degree == 4) ++delta4;
    ok = ok && delta4 == 1;
    std::ostringstream detail;
    detail << "final=" << result.step_counts.back() << " delta4=" << delta4;
    report("criterion-2x minimal-graph sweep n=10 (6 graphs, one with min degree 4)", ok,
           t.seconds(), detail.str());
}

// ------------------------------------------------------- criteria 3, 4 chains
void criterion_chain_a(const std::string& workdir) {
    // alpha <= 3 branch ending at order 17: maximal counts 1, 2, 6, 37, 20, 0
    // with descent sizes 2, 12, 274, 78926, 5291; first four steps <= 30 min
    Timer t;
    ChainResult result = run_chain(fixtures_dir + "/chains/chain_a.chain", workdir);
    bool ok = result.manifests.size() == 6;
    const long want_max[] = {1, 2, 6, 37, 20, 0};
    const long want_plusk[] = {-1, 2, 12, 274, 78926, 5291};
    double first_four = 0;
    std::ostringstream detail;
    for (size_t i = 0; ok && i < 6; ++i) {
        const RunManifest& m = result.manifests[i];
        if (m.post_arrow != want_max[i]) ok = false;
        if (want_plusk[i] >= 0 && m.plusk_count != want_plusk[i]) ok = false;
        if (i >= 1 && i <= 4) first_four += static_cast<double>(m.wall_ms) / 1000.0;
        detail << " " << m.post_arrow << "/" << m.plusk_count;
    }
    ok = ok && first_four <= 1800.0;
    report("criterion-3 extension chain A (order-17 class, alpha <= 3 branch)", ok, t.seconds(),
           detail.str());
}

void criterion_chain_b(const std::string& workdir) {
    // maximal counts 8, 56, 420, 0 with descent sizes 324, 104283, 2614547
    Timer t;
    ChainResult result = run_chain(fixtures_dir + "/chains/chain_b.chain", workdir);
    bool ok = result.manifests.size() == 6;
    // steps 0-1 build the 10-vertex seed set from K6; steps 2-5 are the rows
    const long want_max[] = {8, 56, 420, 0};
    const long want_plusk[] = {-1, 324, 104283, 2614547};
    std::ostringstream detail;
    for (size_t i = 0; ok && i < 4; ++i) {
        const RunManifest& m = result.manifests[i + 2];
        if (m.post_arrow != want_max[i]) ok = false;
        if (want_plusk[i] >= 0 && m.plusk_count != want_plusk[i]) ok = false;
        detail << " " << m.post_arrow << "/" << m.plusk_count;
    }
    ok = ok && result.final_empty;
    report("criterion-4 extension chain B (order-16 class is empty)", ok, t.seconds(),
           detail.str());
}

// ---------------------------------------------------------------- criterion 5
void criterion_a4_equivalence(const std::string& workdir) {
    Timer t;
    // chain B parameters with the alpha cap that makes the cone inputs
    // desk-computable: q=7, k=2, t=3, orders 10 -> 12 -> 14 -> 16. The
    // engine route (e_*) and the cone-handling route (c_*) must emit
    // byte-identical files; outputs are canonically sorted, so digest
    // equality is set equality.
    ChainResult cmp = run_chain(fixtures_dir + "/chains/chain_a4_cmp.chain", workdir);
    std::map<std::string, const RunManifest*> by_id;
    for (const RunManifest& m : cmp.manifests) by_id[m.step_id] = &m;
    bool ok = true;
    std::ostringstream detail;
    for (const char* order : {"12", "14", "16"}) {
        auto e = by_id.find(std::string("e_") + order);
        auto c = by_id.find(std::string("c_") + order);
        if (e == by_id.end() || c == by_id.end()) {
            ok = false;
            break;
        }
        bool same = e->second->output_digest == c->second->output_digest;
        ok = ok && same;
        detail << " n=" << order << ":" << e->second->post_arrow << (same ? "==" : "!=")
               << c->second->post_arrow;
    }
    report("criterion-5 cone-handling run equals the plain engine at every step", ok,
           t.seconds(), detail.str());
}

// ---------------------------------------------------------------- criterion 6
void criterion_marked_sets() {
    Timer t;
    long n4 = 0, n5 = 0, n8 = 0;
    for (const Graph& g : enumerate_graphs(4))
        if (is_marked_set(g, g.vertices())) ++n4;
    GenerateFilter k4free;
    k4free.clique_max = 3;
    for (const Graph& g : enumerate_graphs(5, k4free))
        if (is_marked_set(g, g.vertices())) ++n5;
    GenerateFilter trianglefree;
    trianglefree.clique_max = 2;
    for (const Graph& g : enumerate_graphs(8, trianglefree))
        if (is_marked_set(g, g.vertices())) ++n8;
    bool ok = n4 == 1 && n5 == 3 && n8 == 7 && t.seconds() <= 300.0;
    std::ostringstream detail;
    detail << "counts: " << n4 << " " << n5 << " " << n8;
    report("criterion-6 fully marked graphs (1 on 4 vertices, 3 on 5, 7 triangle-free on 8)",
           ok, t.seconds(), detail.str());
}

// ---------------------------------------------------------------- criterion 7
void criterion_a8(const std::string& workdir) {
    (void)workdir;
    Timer total;
    ValidatorReport rep;
    std::vector<Graph> fixture =
        ingest_graph6(fixtures_dir + "/l14_1.g6",
                      {parse_validator("omega<4"), parse_validator("cone-arrows-e33")}, &rep);
    bool ok = fixture.size() == 153 && rep.all_passed();

    std::vector<Graph> maximal;
    for (const Graph& g : fixture)
        if (is_maximal_kqfree(g, 4)) maximal.push_back(g);
    ok = ok && maximal.size() == 8;

    Timer t18;
    ExtendResult r18 = run_a8(18, 0, 4, maximal);
    double s18 = t18.seconds();
    ok = ok && r18.post_arrow == 0 && s18 <= 60.0;

    Timer t19;
    ExtendResult r19 = run_a8(19, 0, 5, maximal);
    double s19 = t19.seconds();
    ok = ok && r19.post_chromatic == 31 && r19.post_arrow == 0 && s19 <= 600.0;

    std::ostringstream detail;
    detail << "fixture=" << fixture.size() << " maximal=" << maximal.size()
           << " run18=" << r18.post_arrow << " (" << static_cast<long>(s18 * 1000)
           << " ms) run19:chi6=" << r19.post_chromatic << " final=" << r19.post_arrow << " ("
           << static_cast<long>(s19 * 1000) << " ms)";
    report("criterion-7 cone-class regressions from the 153-graph fixture", ok, total.seconds(),
           detail.str());
}

// ---------------------------------------------------------------- criterion 8
void criterion_extremal() {
    Timer t;
    Graph g = join(complete_graph(1), complement(cycle_graph(7)));
    bool ok = arrows_v(g, {3, 3}) && clique_number(g) == 4;
    // exhaustive search at order 8: it is the unique K5-free (3,3)-arrowing graph
    long found = 0;
    bool unique_match = true;
    CanonicalForm target = canonical_form(g);
    GenerateFilter filter;
    filter.clique_max = 4;
    for (const Graph& h : enumerate_graphs(8, filter)) {
        if (!arrows_v(h, {3, 3})) continue;
        ++found;
        if (canonical_form(h) != target) unique_match = false;
    }
    ok = ok && found == 1 && unique_match;
    report("criterion-8 the cone over the 7-cycle complement is the unique order-8 witness",
           ok, t.seconds(), "found=" + std::to_string(found));
}

// ---------------------------------------------------------------- criterion 9
void criterion_properties() {
    Timer t;
    bool ok = true;
    std::mt19937 rng(2026);

    // canonical relabeling invariance: 200 random graphs x 100 permutations
    for (int trial = 0; trial < 200 && ok; ++trial) {
        int n = 4 + static_cast<int>(rng() % 9);  // up to 12
        Graph g = random_graph(n, 0.2 + 0.06 * (rng() % 10), rng);
        CanonicalForm f = canonical_form(g);
        if (graph6_decode(graph6_encode(g)) != g) ok = false;
        std::vector<int> perm(n);
        std::iota(perm.begin(), perm.end(), 0);
        for (int shuffle = 0; shuffle < 100 && ok; ++shuffle) {
            std::shuffle(perm.begin(), perm.end(), rng);
            if (canonical_form(permute(g, perm)) != f) ok = false;
        }
    }
    if (!ok) {
        report("criterion-9 property suites", false, t.seconds(), "canonical invariance");
        return;
    }

    for (int trial = 0; trial < 60 && ok; ++trial) {
        Graph g = random_graph(8, 0.5, rng);
        // monotonicity under edge addition
        Graph h = g;
        bool added = false;
        for (int u = 0; u < h.n && !added; ++u)
            for (int v = u + 1; v < h.n && !added; ++v)
                if (!h.has_edge(u, v)) {
                    h.add_edge(u, v);
                    added = true;
                }
        if (arrows_v(g, {2, 3}) && !arrows_v(h, {2, 3})) ok = false;
        if (arrows_e33(g) && !arrows_e33(h)) ok = false;
        // parts permutation invariance
        if (arrows_v(g, {3, 2, 2}) != arrows_v(g, {2, 2, 3})) ok = false;
        // (2_r) arrowing is the chromatic condition; arrowing forces chi >= m
        int chi = chromatic_number(g);
        if (arrows_v(g, {2, 2, 2}) != (chi >= 4)) ok = false;
        if (arrows_v(g, {2, 3}) && chi < 4) ok = false;
        // multiplicity zero iff no arrowing
        if ((k3_multiplicity(g) == 0) != !arrows_e33(g)) ok = false;
    }
    if (!ok) {
        report("criterion-9 property suites", false, t.seconds(), "arrowing properties");
        return;
    }

    // oracle equivalence of the engine on two toy classes
    struct Case {
        std::vector<int> parts;
        int q, n, k, t, seed_n;
    };
    for (const Case& c : {Case{{2, 3}, 4, 7, 2, 3, 5}, Case{{2, 2}, 3, 6, 2, 4, 4}}) {
        ArrowParams target(c.parts, c.q);
        ArrowParams seed = target.decrement_first();
        std::vector<Graph> seeds;
        for (const Graph& g : enumerate_graphs(c.seed_n))
            if (is_maximal_kqfree(g, c.q) && arrows_v(g, seed.parts) &&
                independence_number(g) <= c.t)
                seeds.push_back(g);
        EngineJob job = make_vertex_job(EnginePreset::a3, c.parts, c.q, c.n, c.k, c.t);
        ExtendResult result = run_extension(seeds, job);
        std::vector<CanonicalForm> expected, got;
        for (const Graph& g : enumerate_graphs(c.n)) {
            if (!is_maximal_kqfree(g, c.q) || !arrows_v(g, target.parts)) continue;
            int alpha = independence_number(g);
            if (alpha < c.k || alpha > c.t) continue;
            expected.push_back(canonical_form(g));
        }
        std::sort(expected.begin(), expected.end());
        for (const Graph& g : result.graphs) got.push_back(canonical_form(g));
        if (got != expected) ok = false;
    }
    report("criterion-9 property suites", ok, t.seconds());
}

}  // namespace

int main(int argc, char** argv) {
    bool extended = false;
    for (int i = 1; i < argc; ++i) {
        if (std::strcmp(argv[i], "--extended") == 0) extended = true;
        if (std::strcmp(argv[i], "--fixtures") == 0 && i + 1 < argc) fixtures_dir = argv[++i];
    }
    std::string workdir = (fs::temp_directory_path() / "folkman_acceptance").string();
    fs::create_directories(workdir);

    criterion_arrowing_basics();
    criterion_a6(8, {424, 59, 9, 1, 1, 1}, 600.0);
    criterion_a6(9, {15471, 2365, 380, 7, 3, 1}, 600.0);
    criterion_chain_a(workdir);
    criterion_a4_equivalence(workdir);
    criterion_marked_sets();
    criterion_a8(workdir);
    criterion_extremal();
    criterion_properties();
    if (extended) {
        criterion_chain_b(workdir);
        criterion_a6_extended();
    } else {
        std::cout << "SKIP criterion-4 extension chain B (hours-scale; rerun with --extended)"
                  << std::endl;
        std::cout << "SKIP criterion-2x minimal-graph sweep n=10 (hours-scale; rerun with "
                     "--extended)"
                  << std::endl;
    }

    if (failures) {
        std::cout << failures << " criterion(s) failed" << std::endl;
        return 1;
    }
    std::cout << "all criteria passed" << std::endl;
    return 0;
}
