#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "folkman/graph.hpp"

namespace folkman {

// Order-independent fingerprint of a graph: one byte holding n followed by
// the upper-triangle adjacency bits of the canonically relabeled graph,
// packed MSB-first. Equal bytes iff isomorphic; byte order gives a total
// order on forms.
struct CanonicalForm {
    std::vector<std::uint8_t> bytes;

    bool operator==(const CanonicalForm& o) const { return bytes == o.bytes; }
    bool operator<(const CanonicalForm& o) const { return bytes < o.bytes; }
};

struct CanonicalFormHash {
    std::size_t operator()(const CanonicalForm& f) const {
        std::uint64_t h = 1469598103934665603ull;
        for (std::uint8_t b : f.bytes) {
            h ^= b;
            h *= 1099511628211ull;
        }
        return static_cast<std::size_t>(h);
    }
};

CanonicalForm canonical_form(const Graph& g);

// Canonical form respecting an initial coloring of the vertices (cells are
// ordered by ascending color value). The bytes embed the color cell sizes,
// so forms are comparable only between graphs colored from the same palette.
CanonicalForm canonical_form_colored(const Graph& g, std::span<const int> colors);

// Inverse of the byte packing: the canonically labeled representative.
Graph decode_form(const CanonicalForm& f);

Graph canonical_copy(const Graph& g);

// One representative per isomorphism class (the canonically labeled graph),
// sorted by canonical form.
std::vector<Graph> dedup_isomorphs(const std::vector<Graph>& graphs);

// Exact |Aut(G)| via an orbit-stabilizer chain over colored canonical forms.
// Guarded to n <= 20 (reporting only).
std::uint64_t automorphism_count(const Graph& g);

// graph6, bit-exact with the published format (n <= 64, so both the
// single-byte and the ~-prefixed 4-byte order headers occur).
std::string graph6_encode(const Graph& g);
Graph graph6_decode(const std::string& line);

std::vector<Graph> read_graph6_file(const std::string& path);
void write_graph6_file(const std::string& path, const std::vector<Graph>& graphs);

}  // namespace folkman
