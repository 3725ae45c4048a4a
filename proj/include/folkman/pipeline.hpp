#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "folkman/algorithms.hpp"
#include "folkman/graph.hpp"

namespace folkman {

// One line per executed pipeline step, appended to manifest.tsv in the work
// directory. Digests are SHA-256 of the file bytes; a rerun with matching
// input digests and an intact output file is a cache hit.
struct RunManifest {
    std::string step_id;
    std::string descriptor;
    std::string input_digest;   // "-" when the step has no file input
    std::string input2_digest;  // second input (a4), "-" otherwise
    std::string output_digest;
    long input_count = 0;
    long plusk_count = 0;
    long candidates = 0;
    long maximal = 0;
    long post_arrow = 0;
    long wall_ms = 0;
    bool cached = false;

    std::string to_tsv() const;
    static std::optional<RunManifest> from_tsv(const std::string& line);
};

// Declarative chain config: one [step] section per step, key = value lines,
// '#' comments. Steps run in file order; "in"/"in2" refer to earlier step
// ids or to literal paths.
struct ChainStep {
    std::string id;
    std::map<std::string, std::string> keys;

    const std::string& get(const std::string& key) const;
    std::string get_or(const std::string& key, const std::string& fallback) const;
    bool has(const std::string& key) const { return keys.count(key) != 0; }
    int get_int(const std::string& key) const;
};

std::vector<ChainStep> parse_chain_config(const std::string& path);

struct ChainResult {
    std::vector<RunManifest> manifests;
    bool final_empty = false;
};

// Executes a chain in DAG order with per-step caching. workdir holds the
// produced .g6 files and manifest.tsv.
ChainResult run_chain(const std::string& config_path, const std::string& workdir);

// Executes a single already-parsed step (used by run_chain and by the CLI
// verbs); returns its manifest.
RunManifest run_step(const ChainStep& step, const std::string& workdir);

struct GraphStats {
    int edges, min_degree, max_degree, alpha, chi;
    std::optional<std::uint64_t> aut;  // only for n <= 20
};

GraphStats graph_stats(const Graph& g, bool with_aut);

// Per-graph table plus histograms, mirroring the property tables the
// pipelines print.
std::string stats_report(const std::vector<Graph>& graphs);

}  // namespace folkman
