#include "folkman/algorithms.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <mutex>
#include <stdexcept>
#include <unordered_set>

#include "folkman/cliques.hpp"
#include "folkman/coloring.hpp"
#include "folkman/detail/parallel.hpp"
#include "folkman/generate.hpp"

namespace folkman {

namespace {

// Sharded set of canonical forms for concurrent claim-once semantics.
class FormSet {
public:
    bool insert(const CanonicalForm& f) {
        size_t h = CanonicalFormHash{}(f);
        Shard& s = shards_[h % kShards];
        std::lock_guard<std::mutex> lock(s.mu);
        return s.set.insert(f).second;
    }

    size_t size() const {
        size_t total = 0;
        for (const Shard& s : shards_) total += s.set.size();
        return total;
    }

    std::vector<CanonicalForm> sorted() const {
        std::vector<CanonicalForm> out;
        out.reserve(size());
        for (const Shard& s : shards_)
            out.insert(out.end(), s.set.begin(), s.set.end());
        std::sort(out.begin(), out.end());
        return out;
    }

private:
    static constexpr size_t kShards = 64;
    struct Shard {
        std::mutex mu;
        std::unordered_set<CanonicalForm, CanonicalFormHash> set;
    };
    std::array<Shard, kShards> shards_;
};

}  // namespace

ClassDescriptor ClassDescriptor::vertex(std::vector<int> parts) {
    ClassDescriptor d;
    d.kind = Kind::vertex;
    d.parts = ArrowParams(std::move(parts), kMaxVertices + 1).parts;
    return d;
}

ClassDescriptor ClassDescriptor::edge_l(int cones) {
    ClassDescriptor d;
    d.kind = Kind::edge_l;
    d.cones = cones;
    return d;
}

bool ClassDescriptor::member(const Graph& g) const {
    if (kind == Kind::vertex) return arrows_v(g, parts);
    if (cones == 0) return arrows_e33(g);
    return arrows_e33(join(complete_graph(cones), g));
}

std::string ClassDescriptor::describe(int q) const {
    if (kind == Kind::vertex) {
        std::string out = "Hv(";
        for (size_t i = 0; i < parts.size(); ++i) {
            if (i) out += ",";
            out += std::to_string(parts[i]);
        }
        out += ";" + std::to_string(q) + ")";
        return out;
    }
    return "L(p=" + std::to_string(cones) + ";q=" + std::to_string(q) + ")";
}

ExtensionSpec make_spec(EnginePreset preset, int n, int k, int q, std::optional<int> t) {
    ExtensionSpec spec;
    spec.n = n;
    spec.k = k;
    spec.q = q;
    spec.t = t;
    switch (preset) {
        case EnginePreset::a1:
            spec.multiset = true;
            spec.require_common_kq2 = true;  // implied by maximality, used as pruning
            break;
        case EnginePreset::a2:
            spec.multiset = true;
            spec.final_alpha = true;
            break;
        case EnginePreset::a3:
            spec.multiset = true;
            spec.recursive_alpha = true;
            break;
        case EnginePreset::a5:
        case EnginePreset::a8:
            spec.multiset = false;
            spec.require_non_sperner = true;
            spec.exclude_neighborhoods = true;
            spec.recursive_alpha = true;
            if (!spec.t) spec.t = k;
            break;
    }
    if ((spec.recursive_alpha || spec.final_alpha) && !spec.t)
        throw std::invalid_argument("this preset needs an independence cap t");
    if (spec.t && k > *spec.t)
        throw std::invalid_argument("k must not exceed the independence cap t");
    return spec;
}

EngineJob make_vertex_job(EnginePreset preset, const std::vector<int>& parts, int q,
                          int n, int k, std::optional<int> t) {
    ArrowParams target(parts, q);
    if (target.parts.empty() || target.parts.front() < 2)
        throw std::invalid_argument("target parts must have a_1 >= 2");
    EngineJob job;
    job.target = ClassDescriptor::vertex(target.parts);
    job.seed = ClassDescriptor::vertex(target.decrement_first().parts);
    job.spec = make_spec(preset, n, k, q, t);
    return job;
}

namespace {

struct DescentDriver {
    const ClassDescriptor& cls;
    int q;
    const DescentOptions& opts;
    FormSet visited;
    std::atomic<long> claimed{0};
    std::atomic<long> emitted{0};

    DescentDriver(const ClassDescriptor& c, int clique_bound, const DescentOptions& o)
        : cls(c), q(clique_bound), opts(o) {}

    bool passes_floor(const Graph& g) const {
        if (!opts.min_degree_floor || g.n == 0) return true;
        return degree_stats(g).min_degree >= *opts.min_degree_floor;
    }

    bool node_core_ok(const Graph& g) const {
        if (opts.plus_k > 0 && !is_plus_kp(g, opts.plus_k)) return false;
        if (opts.alpha_cap && !alpha_at_most(g, g.vertices(), *opts.alpha_cap))
            return false;
        return cls.member(g);
    }

    bool node_ok(const Graph& g) const { return passes_floor(g) && node_core_ok(g); }

    // consumer runs concurrently inside workers
    template <typename Consumer>
    void run(const std::vector<Graph>& roots, Consumer consume) {
        detail::TaskQueue<CanonicalForm> queue;
        for (const Graph& g : roots) {
            if (has_clique(g, g.vertices(), q))
                throw std::invalid_argument("descent input contains a forbidden clique");
            if (!node_core_ok(g))
                throw std::invalid_argument("descent input graph is not in the seed class");
            if (!passes_floor(g)) continue;  // the degree floor removes, not rejects
            CanonicalForm f = canonical_form(g);
            if (visited.insert(f)) {
                ++claimed;
                queue.push(std::move(f));
            }
        }
        queue.run(detail::worker_count(),
                  [&](CanonicalForm& form, detail::TaskQueue<CanonicalForm>& q2) {
                      Graph h = decode_form(form);
                      if (!opts.cone_free_only || cone_vertices(h) == 0) {
                          ++emitted;
                          consume(h);
                      }
                      for (int u = 0; u < h.n; ++u) {
                          vmask row = h.adj[u] & ~low_mask(u + 1);
                          for_each_bit(row, [&](int v) {
                              Graph child = h;
                              child.remove_edge(u, v);
                              if (!node_ok(child)) return;
                              CanonicalForm cf = canonical_form(child);
                              if (visited.insert(cf)) {
                                  ++claimed;
                                  q2.push(std::move(cf));
                              }
                          });
                      }
                  });
    }
};

}  // namespace

std::vector<Graph> plus_k_descend(const std::vector<Graph>& maximal_graphs,
                                  const ClassDescriptor& cls, int q,
                                  const DescentOptions& opts, DescentCounts* counts) {
    DescentDriver driver(cls, q, opts);
    FormSet emitted;
    driver.run(maximal_graphs, [&](const Graph& h) { emitted.insert(canonical_form(h)); });
    if (counts) counts->emitted = driver.emitted.load();
    std::vector<Graph> out;
    for (const CanonicalForm& f : emitted.sorted()) out.push_back(decode_form(f));
    return out;
}

namespace {

// Per-graph extension: enumerate candidate neighborhoods and add k
// independent vertices in every admissible way.
struct ExtensionWorker {
    const EngineJob& job;
    FormSet& unique;
    std::atomic<long>& candidates;

    void process(const Graph& h) const {
        const ExtensionSpec& spec = job.spec;
        Graph co = complement(h);
        std::vector<vmask> cands;
        for (vmask m : maximal_kfree_subsets(h, spec.q - 1)) {
            if (spec.exclude_neighborhoods) {
                bool is_neighborhood = false;
                for (int v = 0; v < h.n && !is_neighborhood; ++v)
                    if (h.adj[v] == m) is_neighborhood = true;
                if (is_neighborhood) continue;
            }
            if (spec.min_degree_floor &&
                popcount(m) < *spec.min_degree_floor)
                continue;
            if (spec.recursive_alpha &&
                has_clique(co, h.vertices() & ~m, *spec.t))  // alpha(h - m) > t - 1
                continue;
            cands.push_back(m);
        }
        std::vector<int> chosen;
        chosen.reserve(spec.k);
        rec(h, co, cands, 0, chosen);
    }

    void rec(const Graph& h, const Graph& co, const std::vector<vmask>& cands,
             size_t start, std::vector<int>& chosen) const {
        const ExtensionSpec& spec = job.spec;
        if (static_cast<int>(chosen.size()) == spec.k) {
            construct(h, cands, chosen);
            return;
        }
        for (size_t j = start; j < cands.size(); ++j) {
            if (!admissible(h, co, cands, chosen, j)) continue;
            chosen.push_back(static_cast<int>(j));
            rec(h, co, cands, spec.multiset ? j : j + 1, chosen);
            chosen.pop_back();
        }
    }

    bool admissible(const Graph& h, const Graph& co, const std::vector<vmask>& cands,
                    const std::vector<int>& chosen, size_t j) const {
        const ExtensionSpec& spec = job.spec;
        vmask mj = cands[j];
        if (spec.require_common_kq2) {
            for (int i : chosen)
                if (!has_clique(h, cands[i] & mj, spec.q - 2)) return false;
        }
        if (spec.recursive_alpha) {
            // every sub-multiset containing the new element
            int c = static_cast<int>(chosen.size());
            for (int s = 0; s < (1 << c); ++s) {
                vmask u = mj;
                int size = 1;
                for (int i = 0; i < c; ++i)
                    if ((s >> i) & 1) {
                        u |= cands[chosen[i]];
                        ++size;
                    }
                if (has_clique(co, h.vertices() & ~u, *spec.t - size + 1)) return false;
            }
        }
        if (spec.min_degree_floor) {
            // with a degree floor f on the target, every vertex outside the
            // union of a chosen sub-multiset N' keeps degree >= f - k + |N'|
            int f = *spec.min_degree_floor;
            int c = static_cast<int>(chosen.size());
            for (int s = 0; s < (1 << c); ++s) {
                vmask u = mj;
                int size = 1;
                for (int i = 0; i < c; ++i)
                    if ((s >> i) & 1) {
                        u |= cands[chosen[i]];
                        ++size;
                    }
                int need = f - spec.k + size;
                if (need <= 0) continue;
                vmask outside = h.vertices() & ~u;
                bool ok = true;
                for_each_bit(outside, [&](int v) {
                    if (h.degree(v) < need) ok = false;
                });
                if (!ok) return false;
            }
        }
        return true;
    }

    void construct(const Graph& h, const std::vector<vmask>& cands,
                   const std::vector<int>& chosen) const {
        const ExtensionSpec& spec = job.spec;
        Graph g = h;
        for (int i : chosen) add_vertex(g, cands[i]);
        // the pair condition above is the (v_i, v_j) part of maximality; the
        // remaining non-edges are checked here
        if (!is_maximal_kqfree(g, spec.q)) return;
        if (spec.require_non_sperner && is_sperner(g)) return;
        if (spec.final_alpha && independence_number(g) > *spec.t) return;
        candidates.fetch_add(1, std::memory_order_relaxed);
        unique.insert(canonical_form(g));
    }
};

ExtendResult finish_extension(const EngineJob& job, FormSet& unique, long input_count,
                              long plusk, long constructed) {
    ExtendResult result;
    result.input_count = input_count;
    result.plusk_count = plusk;
    result.candidates = constructed;
    std::vector<CanonicalForm> forms = unique.sorted();
    result.unique_graphs = static_cast<long>(forms.size());

    std::vector<Graph> graphs(forms.size());
    std::vector<char> keep(forms.size(), 0);
    const ClassDescriptor& target = job.target;
    if (target.kind == ClassDescriptor::Kind::edge_l) {
        int chromatic_min = 6 - target.cones;
        std::vector<char> chrom(forms.size(), 0);
        detail::parallel_for(static_cast<long>(forms.size()), detail::worker_count(), [&](long i) {
            graphs[i] = decode_form(forms[i]);
            chrom[i] = !k_colorable(graphs[i], chromatic_min - 1);
        });
        long surv = 0;
        for (char c : chrom) surv += c;
        result.post_chromatic = surv;
        detail::parallel_for(static_cast<long>(forms.size()), detail::worker_count(), [&](long i) {
            keep[i] = chrom[i] && target.member(graphs[i]);
        });
    } else {
        detail::parallel_for(static_cast<long>(forms.size()), detail::worker_count(), [&](long i) {
            graphs[i] = decode_form(forms[i]);
            keep[i] = target.member(graphs[i]);
        });
        result.post_chromatic = result.unique_graphs;
    }
    for (size_t i = 0; i < forms.size(); ++i)
        if (keep[i]) result.graphs.push_back(graphs[i]);
    result.post_arrow = static_cast<long>(result.graphs.size());
    return result;
}

void validate_engine_input(const std::vector<Graph>& input, const EngineJob& job) {
    for (const Graph& g : input) {
        if (g.n + job.spec.k != job.spec.n)
            throw std::invalid_argument("input order plus k must equal the target order");
        if (!is_maximal_kqfree(g, job.spec.q))
            throw std::invalid_argument("extension input must consist of maximal graphs");
    }
}

}  // namespace

ExtendResult run_extension(const std::vector<Graph>& maximal_input, const EngineJob& job) {
    validate_engine_input(maximal_input, job);
    FormSet unique;
    std::atomic<long> constructed{0};
    ExtensionWorker worker{job, unique, constructed};

    DescentOptions opts;
    opts.plus_k = job.spec.q - 1;
    opts.alpha_cap = job.spec.t;
    if (job.spec.min_degree_floor)
        opts.min_degree_floor = *job.spec.min_degree_floor - job.spec.k;
    DescentDriver driver(job.seed, job.spec.q, opts);
    driver.run(maximal_input, [&](const Graph& h) { worker.process(h); });

    return finish_extension(job, unique, static_cast<long>(maximal_input.size()),
                            driver.claimed.load(), constructed.load());
}

ExtendResult run_a4(const std::vector<Graph>& a1, const std::vector<Graph>& a2,
                    const EngineJob& job) {
    validate_engine_input(a1, job);
    const ExtensionSpec& spec = job.spec;
    FormSet unique;
    std::atomic<long> constructed{0};
    ExtensionWorker worker{job, unique, constructed};

    DescentOptions opts;
    opts.plus_k = spec.q - 1;
    opts.alpha_cap = spec.t;
    opts.cone_free_only = true;
    DescentDriver driver(job.seed, spec.q, opts);
    driver.run(a1, [&](const Graph& h) { worker.process(h); });

    ExtendResult result = finish_extension(job, unique, static_cast<long>(a1.size()),
                                           driver.claimed.load(), constructed.load());

    FormSet final_set;
    for (const Graph& g : result.graphs) final_set.insert(canonical_form(g));

    // single-cone inputs: an independent set outside the cone lifts K_1 + H
    // to K~_{k+1} + H
    if (spec.t && *spec.t > spec.k) {
        for (const Graph& g : a1) {
            vmask cones = cone_vertices(g);
            if (popcount(cones) != 1) continue;
            if (!job.target.member(g)) continue;
            Graph h = remove_vertices(g, cones);
            Graph lifted = join(empty_graph(spec.k + 1), h);
            final_set.insert(canonical_form(lifted));
        }
    }
    // order n-1 maximal graphs at clique bound q-1 give the cone graphs
    for (const Graph& h : a2) {
        if (h.n + 1 != spec.n)
            throw std::invalid_argument("a4 second input must have order n-1");
        if (!is_maximal_kqfree(h, spec.q - 1))
            throw std::invalid_argument("a4 second input must be maximal at clique bound q-1");
        int alpha = independence_number(h);
        if (alpha < spec.k || (spec.t && alpha > *spec.t)) continue;
        Graph g = join(complete_graph(1), h);
        if (!job.target.member(g)) continue;
        final_set.insert(canonical_form(g));
    }

    result.graphs.clear();
    for (const CanonicalForm& f : final_set.sorted()) result.graphs.push_back(decode_form(f));
    result.post_arrow = static_cast<long>(result.graphs.size());
    return result;
}

A6Result run_a6(int n) {
    if (n < 7 || n > 10)
        throw std::invalid_argument("the minimal-graph sweep is guarded to 7 <= n <= 10");
    A6Result result;
    result.step_counts.assign(6, 0);

    GenerateFilter filter;
    filter.min_degree = 4;
    std::vector<Graph> stage3;
    enumerate_graphs_stream(n, filter, [&](const Graph& g) {
        ++result.step_counts[0];
        if (is_sperner(g)) return;
        ++result.step_counts[1];
        if (max_clique_in(g, g.vertices()) != 5) return;
        ++result.step_counts[2];
        stage3.push_back(g);
    });

    int workers = detail::worker_count();
    std::vector<char> keep(stage3.size(), 0);
    detail::parallel_for(static_cast<long>(stage3.size()), workers,
                         [&](long i) { keep[i] = !k_colorable(stage3[i], 5); });
    std::vector<Graph> stage4;
    for (size_t i = 0; i < stage3.size(); ++i)
        if (keep[i]) stage4.push_back(stage3[i]);
    result.step_counts[3] = static_cast<long>(stage4.size());

    keep.assign(stage4.size(), 0);
    detail::parallel_for(static_cast<long>(stage4.size()), workers,
                         [&](long i) { keep[i] = arrows_e33(stage4[i]); });
    std::vector<Graph> stage5;
    for (size_t i = 0; i < stage4.size(); ++i)
        if (keep[i]) stage5.push_back(stage4[i]);
    result.step_counts[4] = static_cast<long>(stage5.size());

    keep.assign(stage5.size(), 0);
    detail::parallel_for(static_cast<long>(stage5.size()), workers,
                         [&](long i) { keep[i] = is_minimal_e33(stage5[i]); });
    for (size_t i = 0; i < stage5.size(); ++i)
        if (keep[i]) result.graphs.push_back(stage5[i]);
    result.step_counts[5] = static_cast<long>(result.graphs.size());
    result.graphs = dedup_isomorphs(result.graphs);
    return result;
}

bool is_minimal_e33(const Graph& g) {
    // edge minimality suffices once isolated vertices are ruled out: every
    // other proper subgraph sits inside some single-edge deletion, and
    // isolated vertices never help arrowing
    for (int v = 0; v < g.n; ++v)
        if (g.adj[v] == 0) return false;
    if (!arrows_e33(g)) return false;
    for (int u = 0; u < g.n; ++u) {
        vmask row = g.adj[u] & ~low_mask(u + 1);
        bool ok = true;
        for_each_bit(row, [&](int v) {
            Graph h = g;
            h.remove_edge(u, v);
            if (arrows_e33(h)) ok = false;
        });
        if (!ok) return false;
    }
    return true;
}

bool is_minimal_v(const Graph& g, const std::vector<int>& parts, int q) {
    if (has_clique(g, g.vertices(), q) || !arrows_v(g, parts))
        throw std::invalid_argument("graph is not in the stated class");
    for (int u = 0; u < g.n; ++u) {
        vmask row = g.adj[u] & ~low_mask(u + 1);
        bool ok = true;
        for_each_bit(row, [&](int v) {
            Graph h = g;
            h.remove_edge(u, v);
            if (arrows_v(h, parts)) ok = false;
        });
        if (!ok) return false;
    }
    return true;
}

bool is_bicritical_v(const Graph& g, const std::vector<int>& parts, int q) {
    return is_minimal_v(g, parts, q) && is_maximal_kqfree(g, q);
}

A7Result run_a7(int q, int k, std::optional<int> exact_n, const std::vector<Graph>& inputs) {
    if (q < 4 || q > 6)
        throw std::invalid_argument("the marked-set construction applies for q in {4,5,6}");
    std::vector<Graph> cores = inputs;
    if (cores.empty()) {
        GenerateFilter filter;
        filter.clique_max = q - 1;
        filter.chromatic_min = 5;
        cores = enumerate_graphs(k, filter);
    }
    A7Result result;
    result.inputs = static_cast<long>(cores.size());

    FormSet unique;
    std::atomic<long> families{0};
    detail::parallel_for(static_cast<long>(cores.size()), detail::worker_count(), [&](long idx) {
        const Graph& h = cores[idx];
        std::vector<vmask> candidates;
        for (vmask m = 0; m < (vmask{1} << h.n); ++m) {
            if (popcount(m) < 4) continue;  // sets of size <= 3 are never marked
            if (has_clique(h, m, q - 1)) continue;
            bool contained = false;
            for (int v = 0; v < h.n && !contained; ++v)
                if ((m & ~h.adj[v]) == 0) contained = true;
            if (contained) continue;
            candidates.push_back(m);
        }
        std::optional<int> size;
        if (exact_n) size = *exact_n - k;
        for (const auto& family : minimal_complete_families(h, candidates, size)) {
            if (family.empty()) continue;  // needs at least one added vertex
            families.fetch_add(1, std::memory_order_relaxed);
            Graph g = h;
            for (vmask m : family) add_vertex(g, m);
            unique.insert(canonical_form(g));
        }
    });
    result.families = families.load();

    std::vector<CanonicalForm> forms = unique.sorted();
    result.unique_graphs = static_cast<long>(forms.size());
    std::vector<Graph> graphs(forms.size());
    std::vector<char> keep(forms.size(), 0);
    detail::parallel_for(static_cast<long>(forms.size()), detail::worker_count(), [&](long i) {
        graphs[i] = decode_form(forms[i]);
        keep[i] = is_minimal_e33(graphs[i]);
    });
    for (size_t i = 0; i < forms.size(); ++i)
        if (keep[i]) result.graphs.push_back(graphs[i]);
    return result;
}

ExtendResult run_a8(int n, int p, int k, const std::vector<Graph>& input,
                    const A8Options& opts) {
    if (p < 0 || p > 2) throw std::invalid_argument("cone count p must be 0, 1 or 2");
    if (n >= 9 && k <= 2) {
        // alpha <= 2 with at least 9 vertices forces a K_4 (R(3,4) = 9)
        return {};
    }
    EngineJob job;
    job.seed = ClassDescriptor::edge_l(p + 1);
    job.target = ClassDescriptor::edge_l(p);
    job.spec = make_spec(EnginePreset::a8, n, k, 4);
    if (opts.delta_floor) job.spec.min_degree_floor = 8;
    return run_extension(input, job);
}

namespace {

void maximal_completions(const Graph& w, int q, FormSet& visited, FormSet& maximal_out) {
    bool any_addable = false;
    for (int u = 0; u < w.n; ++u) {
        vmask nonadj = w.vertices() & ~w.adj[u] & ~low_mask(u + 1);
        for_each_bit(nonadj, [&](int v) {
            if (has_clique(w, w.adj[u] & w.adj[v], q - 2)) return;  // would close K_q
            any_addable = true;
            Graph g = w;
            g.add_edge(u, v);
            if (visited.insert(canonical_form(g))) maximal_completions(g, q, visited, maximal_out);
        });
    }
    if (!any_addable) maximal_out.insert(canonical_form(w));
}

}  // namespace

std::vector<Graph> extend_maximal_procedure(const std::vector<Graph>& maximal_graphs,
                                            const std::vector<int>& parts, int q) {
    ClassDescriptor cls = ClassDescriptor::vertex(parts);
    DescentOptions opts;  // plus_k = 0: every subgraph still in the class
    DescentCounts counts;
    std::vector<Graph> in_class = plus_k_descend(maximal_graphs, cls, q, opts, &counts);

    FormSet visited, maximal_out;
    for (const Graph& g : maximal_graphs) {
        CanonicalForm f = canonical_form(g);
        visited.insert(f);
        maximal_out.insert(f);
    }
    for (const Graph& w : in_class) {
        if (is_maximal_kqfree(w, q)) continue;
        maximal_completions(w, q, visited, maximal_out);
    }
    std::vector<Graph> out;
    for (const CanonicalForm& f : maximal_out.sorted()) out.push_back(decode_form(f));
    return out;
}

namespace {

constexpr RamseyEntry kRamsey[] = {
    {3, 3, 6, "Greenwood-Gleason 1955"},
    {3, 4, 9, "Greenwood-Gleason 1955"},
    {3, 5, 14, "Greenwood-Gleason 1955"},
    {3, 6, 18, "Kery 1964"},
    {3, 7, 23, "Kalbfleisch 1966; Graver-Yackel 1968"},
    {3, 8, 28, "McKay-Zhang 1992"},
    {4, 4, 18, "Greenwood-Gleason 1955"},
};

}  // namespace

std::span<const RamseyEntry> known_ramsey() { return kRamsey; }

std::optional<int> ramsey_number(int p, int q) {
    for (const RamseyEntry& e : kRamsey)
        if ((e.p == p && e.q == q) || (e.p == q && e.q == p)) return e.value;
    return std::nullopt;
}

std::vector<Graph> duplicate_each_vertex(const Graph& g) {
    std::vector<Graph> out;
    out.reserve(g.n);
    for (int v = 0; v < g.n; ++v) {
        Graph h = g;
        add_vertex(h, g.adj[v]);
        out.push_back(h);
    }
    return out;
}

}  // namespace folkman
