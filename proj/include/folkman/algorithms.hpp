#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "folkman/canon.hpp"
#include "folkman/graph.hpp"

namespace folkman {

// Membership side of a Folkman class (the K_q bound is carried separately by
// the jobs). Vertex kind: G ->v parts. Edge kind: K_cones + G ->e (3,3),
// the working classes of the K_4-free edge computations.
struct ClassDescriptor {
    enum class Kind { vertex, edge_l } kind = Kind::vertex;
    std::vector<int> parts;  // vertex kind; canonical ascending, may be empty
    int cones = 0;           // edge kind: p of K_p + G

    static ClassDescriptor vertex(std::vector<int> parts);
    static ClassDescriptor edge_l(int cones);

    bool member(const Graph& g) const;
    std::string describe(int q) const;
};

// Knobs of the shared extension engine (step 2 of the extension
// algorithms). The completeness-critical distinction: multiset mode admits
// duplicate neighborhoods (Sperner outputs possible), subset mode pairs with
// the non-Sperner postcondition.
struct ExtensionSpec {
    int n = 0;  // target order
    int k = 0;  // added independent vertices
    int q = 0;  // forbidden clique
    std::optional<int> t;           // independence cap
    bool multiset = true;
    bool require_non_sperner = false;
    bool exclude_neighborhoods = false;  // candidate M != N_H(v) for all v
    bool require_common_kq2 = true;      // prune pairs without a common K_{q-2}
    bool recursive_alpha = false;        // incremental alpha conditions
    bool final_alpha = false;            // single alpha(G) <= t check instead
    std::optional<int> min_degree_floor;
};

enum class EnginePreset { a1, a2, a3, a5, a8 };

ExtensionSpec make_spec(EnginePreset preset, int n, int k, int q,
                        std::optional<int> t = std::nullopt);

struct DescentOptions {
    int plus_k = 0;  // emit only (+K_{plus_k})-graphs; 0 emits every subgraph in class
    std::optional<int> alpha_cap;
    std::optional<int> min_degree_floor;
    bool cone_free_only = false;
};

struct DescentCounts {
    long emitted = 0;
};

// Edge-deletion lattice under the input maximal graphs, keeping only nodes
// that stay in the class (and under the alpha cap / degree floor). All of
// those conditions, including the (+K_{plus_k}) property, fail monotonically
// under deletion, so the walk prunes on the first failure. Deduplication is
// by canonical form.
std::vector<Graph> plus_k_descend(const std::vector<Graph>& maximal_graphs,
                                  const ClassDescriptor& cls, int q,
                                  const DescentOptions& opts = {},
                                  DescentCounts* counts = nullptr);

struct EngineJob {
    ClassDescriptor seed;    // descent class (first part already decremented)
    ClassDescriptor target;  // post-filter class
    ExtensionSpec spec;
};

// Builds the vertex-flavor job for target parts (a_1,...,a_s; q): the seed
// class is (a_1 - 1, a_2, ..., a_s; q) at order n - k.
EngineJob make_vertex_job(EnginePreset preset, const std::vector<int>& parts, int q,
                          int n, int k, std::optional<int> t = std::nullopt);

struct ExtendResult {
    std::vector<Graph> graphs;  // sorted by canonical form
    long input_count = 0;
    long plusk_count = 0;      // descent nodes
    long candidates = 0;       // graphs constructed and kept in step 2
    long unique_graphs = 0;    // after isomorph rejection
    long post_chromatic = 0;   // after the chromatic step (edge kind only)
    long post_arrow = 0;       // final
};

ExtendResult run_extension(const std::vector<Graph>& maximal_input, const EngineJob& job);

// Algorithm with cone-vertex handling: the descent is restricted to
// cone-free graphs, and the missing members are reconstructed directly from
// the inputs: K~_{k+1} + H for the single-cone graphs of a1 (when t > k) and
// K_1 + H for the order n-1 graphs of a2 at the smaller clique bound.
ExtendResult run_a4(const std::vector<Graph>& a1, const std::vector<Graph>& a2,
                    const EngineJob& job);

struct A6Result {
    std::vector<Graph> graphs;
    std::vector<long> step_counts;  // after each of the six steps
};

// All n-vertex minimal graphs of the (3,3) edge-arrowing class, 7 <= n <= 10.
A6Result run_a6(int n);

bool is_minimal_e33(const Graph& g);
bool is_minimal_v(const Graph& g, const std::vector<int>& parts, int q);
bool is_bicritical_v(const Graph& g, const std::vector<int>& parts, int q);

struct A7Result {
    std::vector<Graph> graphs;
    long inputs = 0;
    long families = 0;
    long unique_graphs = 0;
};

// Minimal (3,3)-arrowing K_q-free graphs with alpha(G) >= |V(G)| - k >= 1,
// grown from k-vertex cores via minimal complete families of marked vertex
// sets; q in {4,5,6}. exact_n restricts families to size n - k. When inputs
// is empty the k-vertex cores are generated (guarded to k <= 10).
A7Result run_a7(int q, int k, std::optional<int> exact_n = std::nullopt,
                const std::vector<Graph>& inputs = {});

struct A8Options {
    bool delta_floor = false;  // opt-in minimum-degree-8 strengthening
};

// Non-Sperner maximal K_4-free graphs G of order n with alpha(G) = k and
// K_p + G ->e (3,3); input is the union over k' <= k of the corresponding
// maximal sets at order n - k and cone count p + 1.
ExtendResult run_a8(int n, int p, int k, const std::vector<Graph>& input,
                    const A8Options& opts = {});

// Extending a set of maximal graphs: walk down to the arrowing subgraphs of
// the members, then complete every non-maximal one upward in all ways.
// Idempotent on fixed points.
std::vector<Graph> extend_maximal_procedure(const std::vector<Graph>& maximal_graphs,
                                            const std::vector<int>& parts, int q);

struct RamseyEntry {
    int p, q, value;
    const char* source;
};

std::span<const RamseyEntry> known_ramsey();
std::optional<int> ramsey_number(int p, int q);

// Duplicate of each vertex of g: one new vertex with the same neighborhood,
// non-adjacent to the original. Sperner completions of maximal sets.
std::vector<Graph> duplicate_each_vertex(const Graph& g);

}  // namespace folkman
