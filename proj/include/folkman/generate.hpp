#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "folkman/graph.hpp"

namespace folkman {

struct GenerateFilter {
    std::optional<int> min_degree;
    std::optional<int> clique_min;
    std::optional<int> clique_max;  // pushed into the search (monotone)
    std::optional<int> independence_max;
    std::optional<int> chromatic_min;
};

// Exhaustive non-isomorphic generation by canonical augmentation: extend by
// one vertex, keep a completion only when the new vertex can be the
// canonical deletion vertex. Hard guard n <= 10; larger orders are ingested
// from archives instead. Results are sorted by canonical form.
std::vector<Graph> enumerate_graphs(int n, const GenerateFilter& filter = {});

// Streaming variant; the visitor sees each filtered graph once, in
// unspecified order.
void enumerate_graphs_stream(int n, const GenerateFilter& filter,
                             const std::function<void(const Graph&)>& visit);

struct ValidatorReport {
    struct Entry {
        std::string name;
        long passed = 0;
        std::vector<size_t> failures;  // graph indices (load order)
    };
    std::vector<Entry> entries;
    size_t total = 0;

    bool all_passed() const {
        for (const auto& e : entries)
            if (!e.failures.empty()) return false;
        return true;
    }
};

using Validator = std::pair<std::string, std::function<bool(const Graph&)>>;

// Loads a .g6 file preserving order and applies each validator, reporting
// pass counts and failing graph indices.
std::vector<Graph> ingest_graph6(const std::string& path,
                                 const std::vector<Validator>& validators,
                                 ValidatorReport* report = nullptr);

// Named validators for the CLI: "omega<Q", "alpha<K", "mindeg>=D",
// "arrows-e33", "cone-arrows-e33" (K_1 + G), "arrows-v:A,B,..".
Validator parse_validator(const std::string& text);

}  // namespace folkman
