#include "folkman/generate.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <stdexcept>
#include <unordered_set>

#include "folkman/canon.hpp"
#include "folkman/cliques.hpp"
#include "folkman/coloring.hpp"
#include "folkman/detail/parallel.hpp"

namespace folkman {

namespace {

bool passes(const Graph& g, const GenerateFilter& f) {
    if (f.min_degree && g.n > 0 && degree_stats(g).min_degree < *f.min_degree) return false;
    if (f.clique_max && has_clique(g, g.vertices(), *f.clique_max + 1)) return false;
    if (f.clique_min && !has_clique(g, g.vertices(), *f.clique_min)) return false;
    if (f.independence_max && independence_number(g) > *f.independence_max) return false;
    if (f.chromatic_min && k_colorable(g, *f.chromatic_min - 1)) return false;
    return true;
}

// Is the new (last) vertex an acceptable canonical deletion vertex? The
// deletion rule: among the minimum-degree vertices, delete one from the
// orbit that the colored canonical form ranks first. acc_colors pins one
// candidate vertex; two candidates are in the same orbit iff their pinned
// forms agree.
bool canonical_new_vertex(const Graph& g) {
    int w = g.n - 1;
    int mindeg = g.n;
    for (int v = 0; v < g.n; ++v) mindeg = std::min(mindeg, g.degree(v));
    if (g.degree(w) != mindeg) return false;

    std::vector<int> colors(g.n, 0);
    auto pinned = [&](int v) {
        colors[v] = -1;
        CanonicalForm f = canonical_form_colored(g, colors);
        colors[v] = 0;
        return f;
    };
    CanonicalForm wform = pinned(w);
    for (int v = 0; v < w; ++v) {
        if (g.degree(v) != mindeg) continue;
        CanonicalForm vf = pinned(v);
        if (vf < wform) return false;  // a strictly earlier orbit exists
    }
    return true;
}

}  // namespace

void enumerate_graphs_stream(int n, const GenerateFilter& filter,
                             const std::function<void(const Graph&)>& visit) {
    if (n < 1) throw std::invalid_argument("enumeration needs n >= 1");
    if (n > 10)
        throw std::invalid_argument(
            "exhaustive generation is guarded to n <= 10; ingest an archive for larger orders");

    if (n == 1) {
        Graph g1(1);
        if (passes(g1, filter)) visit(g1);
        return;
    }

    std::mutex emit_mu;
    std::vector<CanonicalForm> level = {canonical_form(Graph(1))};
    for (int sz = 2; sz <= n; ++sz) {
        bool last_level = (sz == n);
        int workers = detail::worker_count();
        std::vector<std::vector<CanonicalForm>> next_parts(workers);

        detail::parallel_for_worker(static_cast<long>(level.size()), workers,
                                    [&](int slot, long idx) {
            Graph parent = decode_form(level[idx]);
            std::unordered_set<CanonicalForm, CanonicalFormHash> seen;
            for (vmask nbhd = 0; nbhd < (vmask{1} << parent.n); ++nbhd) {
                Graph child = parent;
                add_vertex(child, nbhd);
                if (filter.clique_max &&
                    has_clique(child, child.vertices(), *filter.clique_max + 1))
                    continue;
                if (!canonical_new_vertex(child)) continue;
                CanonicalForm cf = canonical_form(child);
                if (!seen.insert(cf).second) continue;  // equivalent augmentation
                if (last_level) {
                    if (passes(child, filter)) {
                        Graph out = decode_form(cf);
                        std::lock_guard<std::mutex> lock(emit_mu);
                        visit(out);
                    }
                } else {
                    next_parts[slot].push_back(std::move(cf));
                }
            }
        });
        if (last_level) break;
        std::vector<CanonicalForm> next;
        for (auto& part : next_parts)
            next.insert(next.end(), std::make_move_iterator(part.begin()),
                        std::make_move_iterator(part.end()));
        level = std::move(next);
    }
}

std::vector<Graph> enumerate_graphs(int n, const GenerateFilter& filter) {
    std::vector<CanonicalForm> forms;
    enumerate_graphs_stream(n, filter,
                            [&](const Graph& g) { forms.push_back(canonical_form(g)); });
    std::sort(forms.begin(), forms.end());
    std::vector<Graph> out;
    out.reserve(forms.size());
    for (const CanonicalForm& f : forms) out.push_back(decode_form(f));
    return out;
}

std::vector<Graph> ingest_graph6(const std::string& path,
                                 const std::vector<Validator>& validators,
                                 ValidatorReport* report) {
    std::vector<Graph> graphs = read_graph6_file(path);
    if (report) {
        report->total = graphs.size();
        report->entries.clear();
        for (const auto& [name, pred] : validators) {
            ValidatorReport::Entry entry;
            entry.name = name;
            for (size_t i = 0; i < graphs.size(); ++i) {
                if (pred(graphs[i]))
                    ++entry.passed;
                else
                    entry.failures.push_back(i);
            }
            report->entries.push_back(std::move(entry));
        }
    }
    return graphs;
}

Validator parse_validator(const std::string& text) {
    auto starts = [&](const std::string& prefix) {
        return text.rfind(prefix, 0) == 0;
    };
    if (starts("omega<")) {
        int q = std::stoi(text.substr(6));
        return {text, [q](const Graph& g) { return !has_clique(g, g.vertices(), q); }};
    }
    if (starts("alpha<=")) {
        int k = std::stoi(text.substr(7));
        return {text, [k](const Graph& g) { return independence_number(g) <= k; }};
    }
    if (starts("alpha<")) {
        int k = std::stoi(text.substr(6));
        return {text, [k](const Graph& g) { return independence_number(g) < k; }};
    }
    if (starts("mindeg>=")) {
        int d = std::stoi(text.substr(8));
        return {text, [d](const Graph& g) { return degree_stats(g).min_degree >= d; }};
    }
    if (starts("alpha=")) {
        int k = std::stoi(text.substr(6));
        return {text, [k](const Graph& g) { return independence_number(g) == k; }};
    }
    if (starts("maximal-kfree:")) {
        int q = std::stoi(text.substr(14));
        return {text, [q](const Graph& g) { return is_maximal_kqfree(g, q); }};
    }
    if (starts("kp-arrows-e33:")) {
        int p = std::stoi(text.substr(14));
        return {text, [p](const Graph& g) {
                    return arrows_e33(p ? join(complete_graph(p), g) : g);
                }};
    }
    if (text == "arrows-e33")
        return {text, [](const Graph& g) { return arrows_e33(g); }};
    if (text == "cone-arrows-e33")
        return {text, [](const Graph& g) {
                    return arrows_e33(join(complete_graph(1), g));
                }};
    if (starts("arrows-v:")) {
        std::vector<int> parts = parse_parts(text.substr(9));
        return {text, [parts](const Graph& g) { return arrows_v(g, parts); }};
    }
    throw std::invalid_argument("unknown validator: " + text);
}

}  // namespace folkman
