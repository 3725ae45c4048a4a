#include "folkman/pipeline.hpp"

#include <chrono>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

#include "folkman/canon.hpp"
#include "folkman/cliques.hpp"
#include "folkman/coloring.hpp"
#include "folkman/detail/sha256.hpp"
#include "folkman/generate.hpp"

namespace folkman::detail {

std::string sha256_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path + " for hashing");
    Sha256 h;
    char buf[65536];
    while (in.read(buf, sizeof(buf)) || in.gcount() > 0)
        h.update(buf, static_cast<size_t>(in.gcount()));
    return h.hex_digest();
}

}  // namespace folkman::detail

namespace folkman {

namespace fs = std::filesystem;

std::string RunManifest::to_tsv() const {
    std::ostringstream out;
    out << step_id << '\t' << descriptor << '\t' << input_digest << '\t' << input2_digest
        << '\t' << output_digest << '\t' << input_count << '\t' << plusk_count << '\t'
        << candidates << '\t' << maximal << '\t' << post_arrow << '\t' << wall_ms;
    return out.str();
}

std::optional<RunManifest> RunManifest::from_tsv(const std::string& line) {
    std::istringstream in(line);
    RunManifest m;
    std::string field;
    auto next = [&](std::string& dst) {
        if (!std::getline(in, dst, '\t')) throw std::runtime_error("short manifest line");
    };
    try {
        next(m.step_id);
        next(m.descriptor);
        next(m.input_digest);
        next(m.input2_digest);
        next(m.output_digest);
        next(field); m.input_count = std::stol(field);
        next(field); m.plusk_count = std::stol(field);
        next(field); m.candidates = std::stol(field);
        next(field); m.maximal = std::stol(field);
        next(field); m.post_arrow = std::stol(field);
        next(field); m.wall_ms = std::stol(field);
    } catch (const std::exception&) {
        return std::nullopt;
    }
    return m;
}

const std::string& ChainStep::get(const std::string& key) const {
    auto it = keys.find(key);
    if (it == keys.end())
        throw std::invalid_argument("step '" + id + "' is missing key '" + key + "'");
    return it->second;
}

std::string ChainStep::get_or(const std::string& key, const std::string& fallback) const {
    auto it = keys.find(key);
    return it == keys.end() ? fallback : it->second;
}

int ChainStep::get_int(const std::string& key) const { return std::stoi(get(key)); }

std::vector<ChainStep> parse_chain_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open chain config " + path);
    std::vector<ChainStep> steps;
    std::string line;
    size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        size_t hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        auto trim = [](std::string s) {
            size_t a = s.find_first_not_of(" \t\r");
            size_t b = s.find_last_not_of(" \t\r");
            return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
        };
        line = trim(line);
        if (line.empty()) continue;
        if (line.front() == '[') {
            if (line.back() != ']')
                throw std::runtime_error(path + ":" + std::to_string(lineno) + ": bad section");
            steps.push_back(ChainStep{trim(line.substr(1, line.size() - 2)), {}});
            continue;
        }
        size_t eq = line.find('=');
        if (eq == std::string::npos || steps.empty())
            throw std::runtime_error(path + ":" + std::to_string(lineno) + ": expected key = value");
        steps.back().keys[trim(line.substr(0, eq))] = trim(line.substr(eq + 1));
    }
    return steps;
}

namespace {

std::vector<Validator> parse_validator_list(const std::string& text) {
    std::vector<Validator> out;
    size_t pos = 0;
    while (pos < text.size()) {
        size_t bar = text.find('|', pos);
        if (bar == std::string::npos) bar = text.size();
        std::string piece = text.substr(pos, bar - pos);
        size_t a = piece.find_first_not_of(" \t");
        size_t b = piece.find_last_not_of(" \t");
        if (a != std::string::npos) out.push_back(parse_validator(piece.substr(a, b - a + 1)));
        pos = bar + 1;
    }
    return out;
}

EnginePreset parse_preset(const std::string& name) {
    if (name == "a1") return EnginePreset::a1;
    if (name == "a2") return EnginePreset::a2;
    if (name == "a3") return EnginePreset::a3;
    if (name == "a5") return EnginePreset::a5;
    if (name == "a8") return EnginePreset::a8;
    throw std::invalid_argument("unknown engine preset: " + name);
}

struct StepOutput {
    std::vector<Graph> graphs;
    RunManifest manifest;
};

std::vector<Graph> load_input(const ChainStep& step, const std::string& key) {
    return read_graph6_file(step.get(key));
}

StepOutput execute(const ChainStep& step) {
    StepOutput out;
    RunManifest& m = out.manifest;
    m.step_id = step.id;
    const std::string op = step.get("op");

    if (op == "seed") {
        std::string list = step.get("graphs");
        size_t pos = 0;
        while (pos < list.size()) {
            size_t bar = list.find('|', pos);
            if (bar == std::string::npos) bar = list.size();
            std::string expr = list.substr(pos, bar - pos);
            size_t a = expr.find_first_not_of(" \t");
            size_t b = expr.find_last_not_of(" \t");
            if (a != std::string::npos)
                out.graphs.push_back(parse_named_graph(expr.substr(a, b - a + 1)));
            pos = bar + 1;
        }
        out.graphs = dedup_isomorphs(out.graphs);
        m.descriptor = "seed";
        m.post_arrow = m.maximal = static_cast<long>(out.graphs.size());
    } else if (op == "gen") {
        GenerateFilter filter;
        if (step.has("min_degree")) filter.min_degree = step.get_int("min_degree");
        if (step.has("clique_max")) filter.clique_max = step.get_int("clique_max");
        if (step.has("clique_min")) filter.clique_min = step.get_int("clique_min");
        if (step.has("independence_max"))
            filter.independence_max = step.get_int("independence_max");
        if (step.has("chromatic_min")) filter.chromatic_min = step.get_int("chromatic_min");
        out.graphs = enumerate_graphs(step.get_int("n"), filter);
        m.descriptor = "gen(n=" + step.get("n") + ")";
        m.post_arrow = m.maximal = static_cast<long>(out.graphs.size());
    } else if (op == "ingest") {
        ValidatorReport report;
        out.graphs = ingest_graph6(step.get("in"), parse_validator_list(step.get_or("validate", "")),
                                   &report);
        if (!report.all_passed()) {
            std::string detail;
            for (const auto& e : report.entries)
                if (!e.failures.empty())
                    detail += " " + e.name + " fails at index " + std::to_string(e.failures.front());
            throw std::runtime_error("ingest validation failed:" + detail);
        }
        m.descriptor = "ingest";
        m.input_count = static_cast<long>(out.graphs.size());
        m.post_arrow = m.maximal = static_cast<long>(out.graphs.size());
    } else if (op == "filter") {
        std::vector<Graph> input = load_input(step, "in");
        m.input_count = static_cast<long>(input.size());
        auto validators = parse_validator_list(step.get("keep"));
        for (const Graph& g : input) {
            bool ok = true;
            for (const auto& [name, pred] : validators)
                if (!pred(g)) {
                    ok = false;
                    break;
                }
            if (ok) out.graphs.push_back(g);
        }
        if (step.get_or("sort", "canonical") == "canonical")
            out.graphs = dedup_isomorphs(out.graphs);
        m.descriptor = "filter";
        m.post_arrow = m.maximal = static_cast<long>(out.graphs.size());
    } else if (op == "dup-vertex") {
        std::vector<Graph> input = load_input(step, "in");
        m.input_count = static_cast<long>(input.size());
        std::vector<Graph> dups;
        for (const Graph& g : input)
            for (Graph& d : duplicate_each_vertex(g)) dups.push_back(std::move(d));
        out.graphs = dedup_isomorphs(dups);
        m.descriptor = "dup-vertex";
        m.post_arrow = m.maximal = static_cast<long>(out.graphs.size());
    } else if (op == "canon") {
        std::vector<Graph> input = load_input(step, "in");
        m.input_count = static_cast<long>(input.size());
        out.graphs = dedup_isomorphs(input);
        m.descriptor = "canon";
        m.post_arrow = m.maximal = static_cast<long>(out.graphs.size());
    } else if (op == "merge") {
        std::vector<Graph> all;
        for (const char* key : {"in", "in2", "in3", "in4", "in5", "in6"}) {
            if (!step.has(key)) continue;
            std::vector<Graph> part = load_input(step, key);
            all.insert(all.end(), part.begin(), part.end());
        }
        m.input_count = static_cast<long>(all.size());
        out.graphs = dedup_isomorphs(all);
        m.descriptor = "merge";
        m.post_arrow = m.maximal = static_cast<long>(out.graphs.size());
    } else if (op == "descend") {
        std::vector<Graph> input = load_input(step, "in");
        m.input_count = static_cast<long>(input.size());
        int q = step.get_int("q");
        ClassDescriptor cls;
        if (step.has("cones"))
            cls = ClassDescriptor::edge_l(step.get_int("cones"));
        else
            cls = ClassDescriptor::vertex(parse_parts(step.get("parts")));
        DescentOptions opts;
        opts.plus_k = step.get_or("all", "0") == "1" ? 0 : q - 1;
        if (step.has("alpha_max")) opts.alpha_cap = step.get_int("alpha_max");
        DescentCounts counts;
        out.graphs = plus_k_descend(input, cls, q, opts, &counts);
        m.descriptor = "descend " + cls.describe(q);
        m.plusk_count = counts.emitted;
        m.post_arrow = m.maximal = static_cast<long>(out.graphs.size());
    } else if (op == "extend" || op == "a4" || op == "a8") {
        std::vector<Graph> input = load_input(step, "in");
        m.input_count = static_cast<long>(input.size());
        ExtendResult result;
        std::string descriptor;
        if (op == "a8") {
            int n = step.get_int("n"), p = step.get_int("p"), k = step.get_int("k");
            A8Options opts;
            if (step.get_or("delta_floor", "0") == "1") opts.delta_floor = true;
            result = run_a8(n, p, k, input, opts);
            descriptor = "a8(n=" + std::to_string(n) + ",p=" + std::to_string(p) +
                         ",k=" + std::to_string(k) + ")";
        } else {
            std::vector<int> parts = parse_parts(step.get("parts"));
            int q = step.get_int("q"), n = step.get_int("n"), k = step.get_int("k");
            std::optional<int> t;
            if (step.has("t")) t = step.get_int("t");
            if (op == "a4") {
                EngineJob job = make_vertex_job(EnginePreset::a3, parts, q, n, k, t);
                std::vector<Graph> a2_input = load_input(step, "in2");
                result = run_a4(input, a2_input, job);
                descriptor = "a4 " + job.target.describe(q) + " n=" + std::to_string(n);
            } else {
                EngineJob job =
                    make_vertex_job(parse_preset(step.get_or("preset", "a3")), parts, q, n, k, t);
                result = run_extension(input, job);
                descriptor = "extend " + job.target.describe(q) + " n=" + std::to_string(n);
            }
        }
        out.graphs = std::move(result.graphs);
        m.descriptor = descriptor;
        m.plusk_count = result.plusk_count;
        m.candidates = result.candidates;
        m.maximal = result.unique_graphs;
        m.post_arrow = result.post_arrow;
    } else if (op == "a6") {
        A6Result result = run_a6(step.get_int("n"));
        out.graphs = std::move(result.graphs);
        m.descriptor = "a6(n=" + step.get("n") + ") steps";
        for (long c : result.step_counts) m.descriptor += " " + std::to_string(c);
        m.input_count = result.step_counts[0];
        m.plusk_count = result.step_counts[1];
        m.candidates = result.step_counts[2];
        m.maximal = result.step_counts[4];
        m.post_arrow = result.step_counts[5];
    } else if (op == "a7") {
        std::vector<Graph> input;
        if (step.has("in")) input = load_input(step, "in");
        std::optional<int> exact_n;
        if (step.has("n")) exact_n = step.get_int("n");
        A7Result result = run_a7(step.get_int("q"), step.get_int("k"), exact_n, input);
        out.graphs = std::move(result.graphs);
        m.descriptor = "a7(q=" + step.get("q") + ",k=" + step.get("k") + ")";
        m.input_count = result.inputs;
        m.candidates = result.families;
        m.maximal = result.unique_graphs;
        m.post_arrow = static_cast<long>(out.graphs.size());
    } else if (op == "minimal-e33") {
        std::vector<Graph> input = load_input(step, "in");
        m.input_count = static_cast<long>(input.size());
        for (const Graph& g : input)
            if (is_minimal_e33(g)) out.graphs.push_back(g);
        out.graphs = dedup_isomorphs(out.graphs);
        m.descriptor = "minimal-e33";
        m.post_arrow = m.maximal = static_cast<long>(out.graphs.size());
    } else if (op == "extend-maximal") {
        std::vector<Graph> input = load_input(step, "in");
        m.input_count = static_cast<long>(input.size());
        out.graphs = extend_maximal_procedure(input, parse_parts(step.get("parts")),
                                              step.get_int("q"));
        m.descriptor = "extend-maximal";
        m.post_arrow = m.maximal = static_cast<long>(out.graphs.size());
    } else {
        throw std::invalid_argument("unknown op '" + op + "' in step " + step.id);
    }
    return out;
}

std::map<std::string, RunManifest> load_manifest(const std::string& path) {
    std::map<std::string, RunManifest> out;
    std::ifstream in(path);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        if (auto m = RunManifest::from_tsv(line)) out[m->step_id] = *m;
    }
    return out;
}

}  // namespace

RunManifest run_step(const ChainStep& step, const std::string& workdir) {
    fs::create_directories(workdir);
    std::string manifest_path = (fs::path(workdir) / "manifest.tsv").string();
    std::string out_path = step.has("out")
                               ? (fs::path(workdir) / step.get("out")).string()
                               : (fs::path(workdir) / (step.id + ".g6")).string();

    auto digest_of = [&](const char* key) -> std::string {
        if (!step.has(key)) return "-";
        if (!fs::exists(step.get(key)))
            throw std::runtime_error("step '" + step.id + "' depends on missing file " +
                                     step.get(key));
        return detail::sha256_file(step.get(key));
    };
    std::string in_digest = digest_of("in");
    std::string in2_digest = digest_of("in2");
    for (const char* key : {"in3", "in4", "in5", "in6"}) {
        std::string d = digest_of(key);
        if (d != "-") in2_digest += ":" + d.substr(0, 16);
    }

    auto manifest = load_manifest(manifest_path);
    auto it = manifest.find(step.id);
    if (it != manifest.end() && it->second.input_digest == in_digest &&
        it->second.input2_digest == in2_digest && fs::exists(out_path) &&
        detail::sha256_file(out_path) == it->second.output_digest) {
        RunManifest cached = it->second;
        cached.cached = true;
        return cached;
    }

    auto t0 = std::chrono::steady_clock::now();
    StepOutput result = execute(step);
    auto t1 = std::chrono::steady_clock::now();

    write_graph6_file(out_path, result.graphs);
    RunManifest m = result.manifest;
    m.input_digest = in_digest;
    m.input2_digest = in2_digest;
    m.output_digest = detail::sha256_file(out_path);
    m.wall_ms = std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();

    std::ofstream mf(manifest_path, std::ios::app);
    mf << m.to_tsv() << '\n';
    return m;
}

ChainResult run_chain(const std::string& config_path, const std::string& workdir) {
    std::vector<ChainStep> steps = parse_chain_config(config_path);
    fs::create_directories(workdir);

    // resolve step references in "in"/"in2" to the producing step's output;
    // other relative paths are taken relative to the config file
    fs::path config_dir = fs::path(config_path).parent_path();
    std::map<std::string, std::string> outputs;
    ChainResult result;
    for (ChainStep step : steps) {
        for (const char* key : {"in", "in2", "in3", "in4", "in5", "in6"}) {
            if (!step.has(key)) continue;
            const std::string& ref = step.keys[key];
            auto it = outputs.find(ref);
            if (it != outputs.end()) {
                step.keys[key] = it->second;
            } else if (fs::path(ref).is_relative() && !fs::exists(ref)) {
                step.keys[key] = (config_dir / ref).string();
            }
        }
        RunManifest m = run_step(step, workdir);
        std::string out_path = step.has("out")
                                   ? (fs::path(workdir) / step.get("out")).string()
                                   : (fs::path(workdir) / (step.id + ".g6")).string();
        outputs[step.id] = out_path;
        result.manifests.push_back(m);
    }
    if (!result.manifests.empty()) result.final_empty = result.manifests.back().post_arrow == 0;
    return result;
}

GraphStats graph_stats(const Graph& g, bool with_aut) {
    GraphStats st{};
    DegreeStats deg = degree_stats(g);
    st.edges = g.edge_count();
    st.min_degree = deg.min_degree;
    st.max_degree = deg.max_degree;
    st.alpha = independence_number(g);
    st.chi = chromatic_number(g);
    if (with_aut && g.n <= 20) st.aut = automorphism_count(g);
    return st;
}

std::string stats_report(const std::vector<Graph>& graphs) {
    std::ostringstream out;
    out << "index\tn\tedges\tmindeg\tmaxdeg\talpha\tchi\taut\n";
    std::map<int, long> hist_e, hist_dmin, hist_dmax, hist_alpha, hist_chi;
    std::map<std::uint64_t, long> hist_aut;
    for (size_t i = 0; i < graphs.size(); ++i) {
        const Graph& g = graphs[i];
        GraphStats st = graph_stats(g, true);
        out << i << '\t' << g.n << '\t' << st.edges << '\t' << st.min_degree << '\t'
            << st.max_degree << '\t' << st.alpha << '\t' << st.chi << '\t';
        if (st.aut)
            out << *st.aut;
        else
            out << "-";
        out << '\n';
        ++hist_e[st.edges];
        ++hist_dmin[st.min_degree];
        ++hist_dmax[st.max_degree];
        ++hist_alpha[st.alpha];
        ++hist_chi[st.chi];
        if (st.aut) ++hist_aut[*st.aut];
    }
    auto dump = [&](const char* name, const std::map<int, long>& h) {
        out << "# " << name << ":";
        for (auto [k, v] : h) out << " " << k << "x" << v;
        out << '\n';
    };
    dump("edges", hist_e);
    dump("mindeg", hist_dmin);
    dump("maxdeg", hist_dmax);
    dump("alpha", hist_alpha);
    dump("chi", hist_chi);
    out << "# aut:";
    for (auto [k, v] : hist_aut) out << " " << k << "x" << v;
    out << '\n';
    return out.str();
}

}  // namespace folkman
