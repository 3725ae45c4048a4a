#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <string>
#include <vector>

namespace folkman {

using vmask = std::uint64_t;

constexpr int kMaxVertices = 64;

constexpr vmask bit(int v) { return vmask{1} << v; }

constexpr vmask low_mask(int n) {
    return n >= 64 ? ~vmask{0} : (vmask{1} << n) - 1;
}

inline int popcount(vmask m) { return std::popcount(m); }
inline int lowest(vmask m) { return std::countr_zero(m); }

// Iterates set bits in ascending order.
template <typename F>
inline void for_each_bit(vmask m, F&& f) {
    while (m) {
        int v = std::countr_zero(m);
        m &= m - 1;
        f(v);
    }
}

// Simple labeled graph on at most 64 vertices. Rows are bit masks over the
// vertex set; the matrix stays symmetric and irreflexive, and bits at
// positions >= n are zero. Values are cheap to copy and never mutated by
// queries.
struct Graph {
    int n = 0;
    std::array<vmask, kMaxVertices> adj{};

    explicit Graph(int nv = 0);

    vmask vertices() const { return low_mask(n); }
    bool has_edge(int u, int v) const { return (adj[u] >> v) & 1; }
    void add_edge(int u, int v);
    void remove_edge(int u, int v);
    int degree(int v) const { return popcount(adj[v]); }
    int edge_count() const;

    bool operator==(const Graph& o) const;
};

Graph complete_graph(int n);
Graph cycle_graph(int n);
Graph empty_graph(int n);
Graph path_graph(int n);
Graph complement(const Graph& g);

// join: every vertex of a connected to every vertex of b; a keeps labels
// 0..a.n-1, b is shifted up.
Graph join(const Graph& a, const Graph& b);

// K_{m-p-1} + complement(C_{2p+1}); requires m >= p+1.
Graph extremal_graph(int m, int p);

// Induced subgraph on V(g) minus the masked vertices; remaining vertices are
// relabeled preserving relative order. S must be a proper subset of V(g).
Graph remove_vertices(const Graph& g, vmask s);

// Induced subgraph on the masked vertices, relabeled preserving order.
Graph induced_subgraph(const Graph& g, vmask keep);

// Adds one vertex adjacent to exactly the masked vertices; returns the new
// vertex's index (= old n).
int add_vertex(Graph& g, vmask neighborhood);

struct DegreeStats {
    int min_degree = 0;
    int max_degree = 0;
    std::vector<int> sequence;  // sorted descending
};

DegreeStats degree_stats(const Graph& g);

// Parses compact constructors like "K6", "C5", "E3", "P4", "K7-e",
// "co(C7)", "K3+C5" (join), "extremal(5,3)". Used by chain seeds and tests.
Graph parse_named_graph(const std::string& expr);

// Parameter tuple (a_1,...,a_s; q) of a Folkman class. Canonical form drops
// entries equal to 1 and keeps the list ascending; m and p are always
// recomputed from parts.
struct ArrowParams {
    std::vector<int> parts;  // ascending, each >= 2 after canonicalization
    int q = 0;
    enum class Flavor { vertex, edge } flavor = Flavor::vertex;

    ArrowParams() = default;
    ArrowParams(std::vector<int> raw_parts, int clique_bound,
                Flavor f = Flavor::vertex);

    int m() const;  // sum (a_i - 1) + 1
    int p() const;  // max a_i, 1 when the list is empty

    // Decrements the smallest entry, re-canonicalizing (the seed class of
    // the extension algorithms).
    ArrowParams decrement_first() const;

    std::string describe() const;  // e.g. "(2,2,5;7)"
};

std::vector<int> parse_parts(const std::string& csv);

}  // namespace folkman
