#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "folkman/graph.hpp"

namespace folkman {

// Exact clique's existence test on the induced subgraph g[cand]: true iff it
// contains K_k. k = 0 is vacuously true.
bool has_clique(const Graph& g, vmask cand, int k);

// Exact maximum clique size within g[cand] (branch and bound with a greedy
// coloring upper bound; exact always, the bound only prunes).
int max_clique_in(const Graph& g, vmask cand);

int clique_number(const Graph& g);
int independence_number(const Graph& g);

// alpha(g[cand]) <= t ?
bool alpha_at_most(const Graph& g, vmask cand, int t);

// All r-cliques of g as vertex masks, ascending mask order.
std::vector<vmask> enumerate_cliques(const Graph& g, int r);

// All maximal K_r-free subsets of V(g): no K_r inside, and every outside
// vertex closes one. Emitted in ascending order of their bit masks.
// Computed as complements of the minimal transversals of the r-clique
// hypergraph.
std::vector<vmask> maximal_kfree_subsets(const Graph& g, int r);

// omega(g) < q and every non-edge uv has a K_{q-2} inside N(u) & N(v)
// (equivalently omega(g+e) = q for every non-edge e).
bool is_maximal_kqfree(const Graph& g, int q);

// Every non-edge uv has a K_{p-2} inside N(u) & N(v); vacuously true for
// complete graphs.
bool is_plus_kp(const Graph& g, int p);

// Neighborhood containment N(u) subseteq N(v) for some ordered pair u != v.
std::optional<std::pair<int, int>> sperner_witness(const Graph& g);
bool is_sperner(const Graph& g);

// Vertices adjacent to all others.
vmask cone_vertices(const Graph& g);

}  // namespace folkman
