#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "folkman/graph.hpp"

namespace folkman {

// Certificate for a negative arrowing answer: a vertex s-coloring whose
// class i is K_{a_i}-free, or an edge 2-coloring with no monochromatic
// triangle.
struct ColoringWitness {
    enum class Flavor { vertex, edge } flavor = Flavor::vertex;
    std::vector<int> assignment;  // per vertex (class index) or per edge (1/2)
};

int chromatic_number(const Graph& g);
bool k_colorable(const Graph& g, int k);

// G ->v (a_1,...,a_s): every s-coloring of V(G) has a monochromatic
// a_i-clique in some class i. parts is the canonical ascending tuple.
bool arrows_v(const Graph& g, const std::vector<int>& parts,
              ColoringWitness* witness = nullptr);

// G ->v [m|p]: G ->v (a_1,...,a_s) for every tuple with sum (a_i-1)+1 = m
// and max a_i <= p. For m <= p this degenerates to omega(G) >= m; otherwise
// only the tuples with 2 <= a_1 <= ... <= a_s <= p and a_1+a_2-1 > p need
// checking.
bool arrows_v_uni(const Graph& g, int m, int p);

std::vector<std::vector<int>> uni_check_tuples(int m, int p);

// G ->e (3,3): every 2-coloring of E(G) has a monochromatic triangle.
bool arrows_e33(const Graph& g, ColoringWitness* witness = nullptr);

// Edge list in the fixed order used by edge witnesses (u < v, sorted by the
// search's static order).
std::vector<std::pair<int, int>> edge_list(const Graph& g);

// Streams every (3,3)-free 2-coloring of E(g) with the first listed edge
// fixed to color 1 (color swap broken). colors[i] in {1,2} follows
// edge_list(g). Return false from the visitor to stop early.
void enumerate_33free_colorings(const Graph& g,
                                const std::function<bool(const std::vector<int>&)>& visit);

// Minimum number of monochromatic triangles over all 2-edge-colorings.
long k3_multiplicity(const Graph& g);

// M is a marked vertex set in h: some (3,3)-free coloring of E(h) cannot be
// extended over a new vertex whose neighborhood is M.
bool is_marked_set(const Graph& h, vmask m);

// Given a (3,3)-free coloring of h (edge_list order), can the star edges to
// a new vertex with neighborhood m be colored without a monochromatic
// triangle?
bool star_extension_exists(const Graph& h, const std::vector<int>& colors, vmask m);

// All minimal families F of candidate sets such that every (3,3)-free
// coloring of h is blocked by some member of F. With exact_size set, only
// families of that size are returned. When h arrows (3,3) the empty family
// is vacuously complete and [{}] is returned.
std::vector<std::vector<vmask>> minimal_complete_families(
    const Graph& h, const std::vector<vmask>& candidates,
    std::optional<int> exact_size = std::nullopt);

bool verify_vertex_witness(const Graph& g, const std::vector<int>& parts,
                           const std::vector<int>& assignment);
bool verify_edge_witness(const Graph& g, const std::vector<int>& colors);

}  // namespace folkman
