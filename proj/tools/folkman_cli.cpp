#include <CLI11.hpp>
#include <iostream>

#include "folkman/algorithms.hpp"
#include "folkman/canon.hpp"
#include "folkman/cliques.hpp"
#include "folkman/coloring.hpp"
#include "folkman/generate.hpp"
#include "folkman/pipeline.hpp"

using namespace folkman;

namespace {

constexpr int kExitEmpty = 2;

void print_manifest(const RunManifest& m) {
    std::cout << m.descriptor << (m.cached ? " [cached]" : "") << "\n"
              << "  input=" << m.input_count << " plusk=" << m.plusk_count
              << " candidates=" << m.candidates << " unique=" << m.maximal
              << " final=" << m.post_arrow << " wall_ms=" << m.wall_ms << "\n";
}

int finish(const RunManifest& m) {
    print_manifest(m);
    return m.post_arrow == 0 ? kExitEmpty : 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"folkman: arrowing search toolkit for small Folkman classes"};
    app.require_subcommand(1);

    std::string workdir = ".";
    app.add_option("--workdir", workdir, "directory for outputs and manifest.tsv");

    ChainStep step;
    auto add_common = [&](CLI::App* cmd, const std::string& op) {
        step.keys.clear();
        cmd->parse_complete_callback([&step, op] { step.keys["op"] = op; });
    };
    auto opt = [&](CLI::App* cmd, const char* name, const char* key, const char* help) {
        cmd->add_option_function<std::string>(
            name, [&step, key = std::string(key)](const std::string& v) { step.keys[key] = v; },
            help);
    };

    // gen
    auto* gen = app.add_subcommand("gen", "enumerate non-isomorphic graphs (n <= 10)");
    add_common(gen, "gen");
    opt(gen, "--n", "n", "vertex count");
    opt(gen, "--min-degree", "min_degree", "minimum degree filter");
    opt(gen, "--clique-max", "clique_max", "clique number upper bound");
    opt(gen, "--clique-min", "clique_min", "clique number lower bound");
    opt(gen, "--independence-max", "independence_max", "independence number upper bound");
    opt(gen, "--chromatic-min", "chromatic_min", "chromatic number lower bound");
    opt(gen, "--out", "out", "output .g6 file");
    gen->get_option("--n")->required();

    auto* seed = app.add_subcommand("seed", "write named graphs, e.g. 'K6|K3+C5'");
    add_common(seed, "seed");
    opt(seed, "--graphs", "graphs", "pipe-separated graph expressions");
    opt(seed, "--out", "out", "output .g6 file");
    seed->get_option("--graphs")->required();

    auto* ingest = app.add_subcommand("ingest", "load a graph6 archive with validators");
    add_common(ingest, "ingest");
    opt(ingest, "--in", "in", "input .g6 file");
    opt(ingest, "--validate", "validate", "pipe-separated validators, e.g. 'omega<4|cone-arrows-e33'");
    opt(ingest, "--out", "out", "output .g6 file");
    ingest->get_option("--in")->required();

    auto* filter = app.add_subcommand("filter", "keep graphs passing all predicates");
    add_common(filter, "filter");
    opt(filter, "--in", "in", "input .g6 file");
    opt(filter, "--keep", "keep", "pipe-separated predicates");
    opt(filter, "--sort", "sort", "canonical (default) or keep");
    opt(filter, "--out", "out", "output .g6 file");
    filter->get_option("--in")->required();
    filter->get_option("--keep")->required();

    auto* dup = app.add_subcommand("dup-vertex", "all single-vertex duplications");
    add_common(dup, "dup-vertex");
    opt(dup, "--in", "in", "input .g6 file");
    opt(dup, "--out", "out", "output .g6 file");
    dup->get_option("--in")->required();

    auto* descend = app.add_subcommand("descend", "edge-deletion walk inside a class");
    add_common(descend, "descend");
    opt(descend, "--in", "in", "maximal input set (.g6)");
    opt(descend, "--parts", "parts", "class parts, e.g. 2,2,5 (vertex classes)");
    opt(descend, "--cones", "cones", "p of K_p + G ->e (3,3) (edge classes)");
    opt(descend, "--q", "q", "forbidden clique order");
    opt(descend, "--alpha-max", "alpha_max", "independence cap");
    opt(descend, "--all", "all", "1 = every subgraph in class, not only (+K_{q-1})");
    opt(descend, "--out", "out", "output .g6 file");
    descend->get_option("--in")->required();
    descend->get_option("--q")->required();

    auto* extend = app.add_subcommand("extend", "independent-set extension engine");
    add_common(extend, "extend");
    opt(extend, "--preset", "preset", "a1 | a2 | a3 | a5");
    opt(extend, "--in", "in", "maximal input set (.g6)");
    opt(extend, "--parts", "parts", "target class parts");
    opt(extend, "--q", "q", "forbidden clique order");
    opt(extend, "--n", "n", "target order");
    opt(extend, "--k", "k", "added independent vertices");
    opt(extend, "--t", "t", "independence cap");
    opt(extend, "--out", "out", "output .g6 file");
    for (const char* o : {"--in", "--parts", "--q", "--n", "--k"})
        extend->get_option(o)->required();

    auto* a4 = app.add_subcommand("a4", "extension with cone-vertex handling");
    add_common(a4, "a4");
    opt(a4, "--in", "in", "maximal set at order n-k");
    opt(a4, "--in2", "in2", "maximal set at order n-1, clique bound q-1");
    opt(a4, "--parts", "parts", "target class parts");
    opt(a4, "--q", "q", "forbidden clique order");
    opt(a4, "--n", "n", "target order");
    opt(a4, "--k", "k", "added independent vertices");
    opt(a4, "--t", "t", "independence cap");
    opt(a4, "--out", "out", "output .g6 file");
    for (const char* o : {"--in", "--in2", "--parts", "--q", "--n", "--k", "--t"})
        a4->get_option(o)->required();

    auto* a6 = app.add_subcommand("a6", "all n-vertex minimal (3,3) edge-arrowing graphs");
    add_common(a6, "a6");
    opt(a6, "--n", "n", "vertex count (7..10)");
    opt(a6, "--out", "out", "output .g6 file");
    a6->get_option("--n")->required();

    auto* a7 = app.add_subcommand("a7", "minimal graphs via marked vertex sets");
    add_common(a7, "a7");
    opt(a7, "--q", "q", "forbidden clique order (4..6)");
    opt(a7, "--k", "k", "core order");
    opt(a7, "--n", "n", "restrict families to size n-k");
    opt(a7, "--in", "in", "core graphs (.g6); generated when omitted");
    opt(a7, "--out", "out", "output .g6 file");
    a7->get_option("--q")->required();
    a7->get_option("--k")->required();

    auto* a8 = app.add_subcommand("a8", "non-Sperner maximal K4-free L-class graphs");
    add_common(a8, "a8");
    opt(a8, "--in", "in", "union of maximal sets at order n-k, cone count p+1");
    opt(a8, "--n", "n", "target order");
    opt(a8, "--p", "p", "cone count (0..2)");
    opt(a8, "--k", "k", "independence number of the targets");
    opt(a8, "--delta-floor", "delta_floor", "1 = apply the minimum-degree-8 strengthening");
    opt(a8, "--out", "out", "output .g6 file");
    for (const char* o : {"--in", "--n", "--p", "--k"}) a8->get_option(o)->required();

    auto* mine = app.add_subcommand("minimal-e33", "keep the minimal (3,3)-arrowing graphs");
    add_common(mine, "minimal-e33");
    opt(mine, "--in", "in", "input .g6 file");
    opt(mine, "--out", "out", "output .g6 file");
    mine->get_option("--in")->required();

    auto* extmax = app.add_subcommand("extend-maximal", "grow a maximal set via subgraph completions");
    add_common(extmax, "extend-maximal");
    opt(extmax, "--in", "in", "maximal input set (.g6)");
    opt(extmax, "--parts", "parts", "class parts");
    opt(extmax, "--q", "q", "forbidden clique order");
    opt(extmax, "--out", "out", "output .g6 file");
    for (const char* o : {"--in", "--parts", "--q"}) extmax->get_option(o)->required();

    auto* canon_cmd = app.add_subcommand("canon", "canonicalize and deduplicate a .g6 file");
    add_common(canon_cmd, "canon");
    opt(canon_cmd, "--in", "in", "input .g6 file");
    opt(canon_cmd, "--out", "out", "output .g6 file");
    canon_cmd->get_option("--in")->required();

    // query verbs
    std::string query_in, query_parts;
    int mp_m = 0, mp_p = 0;
    auto* arrowv = app.add_subcommand("arrow-v", "vertex arrowing decision per graph");
    arrowv->add_option("--in", query_in)->required();
    arrowv->add_option("--parts", query_parts);
    arrowv->add_option("--m", mp_m);
    arrowv->add_option("--p", mp_p);

    auto* arrowe = app.add_subcommand("arrow-e", "edge (3,3) arrowing decision per graph");
    arrowe->add_option("--in", query_in)->required();

    auto* mult = app.add_subcommand("mult", "minimum monochromatic-triangle count per graph");
    mult->add_option("--in", query_in)->required();

    auto* stats = app.add_subcommand("stats", "property table for a .g6 file");
    stats->add_option("--in", query_in)->required();

    std::string chain_config;
    auto* chain = app.add_subcommand("chain", "run a declarative step list");
    chain->add_option("config", chain_config, "chain config file")->required();

    for (CLI::App* sub : app.get_subcommands({})) sub->fallthrough();

    CLI11_PARSE(app, argc, argv);

    try {
        if (arrowv->parsed()) {
            auto graphs = read_graph6_file(query_in);
            bool any_negative = false;
            for (size_t i = 0; i < graphs.size(); ++i) {
                bool yes;
                if (!query_parts.empty()) {
                    ColoringWitness w;
                    yes = arrows_v(graphs[i], parse_parts(query_parts), &w);
                } else if (mp_m > 0) {
                    yes = arrows_v_uni(graphs[i], mp_m, mp_p);
                } else {
                    throw std::invalid_argument("arrow-v needs --parts or --m/--p");
                }
                std::cout << i << "\t" << (yes ? "arrows" : "does-not-arrow") << "\n";
                if (!yes) any_negative = true;
            }
            return any_negative ? kExitEmpty : 0;
        }
        if (arrowe->parsed()) {
            auto graphs = read_graph6_file(query_in);
            bool any_negative = false;
            for (size_t i = 0; i < graphs.size(); ++i) {
                bool yes = arrows_e33(graphs[i]);
                std::cout << i << "\t" << (yes ? "arrows" : "does-not-arrow") << "\n";
                if (!yes) any_negative = true;
            }
            return any_negative ? kExitEmpty : 0;
        }
        if (mult->parsed()) {
            auto graphs = read_graph6_file(query_in);
            for (size_t i = 0; i < graphs.size(); ++i)
                std::cout << i << "\t" << k3_multiplicity(graphs[i]) << "\n";
            return 0;
        }
        if (stats->parsed()) {
            std::cout << stats_report(read_graph6_file(query_in));
            return 0;
        }
        if (chain->parsed()) {
            ChainResult result = run_chain(chain_config, workdir);
            for (const RunManifest& m : result.manifests) print_manifest(m);
            return result.final_empty ? kExitEmpty : 0;
        }
        // everything else is a single pipeline step
        for (auto* sub : app.get_subcommands())
            if (sub->parsed()) {
                step.id = step.keys.count("out") ? step.keys["out"] : sub->get_name();
                return finish(run_step(step, workdir));
            }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
