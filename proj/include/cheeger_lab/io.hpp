#pragma once

#include "cheeger_lab/graph.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace cheeger_lab {

// A parsed graph file: dense ids 0..n-1 internally, original external ids
// kept for output.
struct GraphDoc {
    WeightedGraph graph;
    std::vector<std::int64_t> external_ids;  // dense id -> external id
    bool mu_explicit;
};

// JSON object {"vertices":[{"id":..,"mu":..?}],"edges":[{"u":..,"v":..,"w":..}]}.
// Unknown fields are rejected; weights accept "3/7", "0.25" or JSON numbers.
GraphDoc parse_graph_json(const std::string& text);

// TSV edge list "u<TAB>v<TAB>w"; mu defaults to the weighted degree.
// Blank lines and lines starting with '#' are skipped.
GraphDoc parse_graph_tsv(const std::string& text);

// Sniffs the format from the content (leading '{' = JSON).
GraphDoc parse_graph_text(const std::string& text);
GraphDoc parse_graph_file(const std::string& path);

std::string emit_graph_json(const GraphDoc& doc);
std::string emit_graph_tsv(const GraphDoc& doc);

struct Fingerprint {
    int n;
    int edge_count;
    int beta;
    std::uint64_t weight_hash;  // FNV-1a over the canonical serialization
};

Fingerprint fingerprint(const WeightedGraph& g);

bool graphs_equal(const WeightedGraph& a, const WeightedGraph& b);

}  // namespace cheeger_lab
