#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace polarmin {

// One undirected weighted edge between compacted vertex ids.
struct Edge {
    int u = 0;
    int v = 0;
    double w = 1.0;
};

// Undirected weighted graph with vertex ids compacted to [0, n).
// `labels[i]` remembers the id vertex i carried in the input file, so chosen
// edges and component maps can be reported in the caller's vocabulary.
struct Graph {
    int n = 0;
    long long m = 0;
    std::vector<Edge> edges;                                // each pair once, u < v
    std::vector<std::vector<std::pair<int, double>>> adjacency;  // (neighbor, weight)
    std::vector<long long> labels;                          // compacted id -> original id
    double w_min = 0.0;
    double w_max = 0.0;

    double weighted_degree(int v) const {
        double d = 0.0;
        for (auto [_, w] : adjacency[v]) d += w;
        return d;
    }
    bool has_edge(int a, int b) const {
        for (auto [nb, _] : adjacency[a])
            if (nb == b) return true;
        return false;
    }
};

// Builds a Graph from already-compacted edges (u < v not required; ids in
// [0, n)).  Parallel edges merge by summing weights; self-loops are rejected.
Graph make_graph(int n, std::vector<Edge> edges,
                 std::vector<long long> labels = {});

// Parses "u v [w]" lines (w defaults to 1.0).  '#' and '%' start comment
// lines; blank lines are skipped.  Duplicate pairs merge by summing weights;
// self-loops are dropped.  Vertex ids may be arbitrary non-negative integers
// and are compacted to [0, n) in ascending original-id order.
// Throws ParseError on malformed lines and ValidationError on weights <= 0.
Graph load_edge_list(std::istream& in);
Graph load_edge_list(const std::string& path);

// Connected check over all n vertices.
bool is_connected(const Graph& g);

// Largest connected component, ties broken toward the component containing
// the smallest original vertex id.  Vertex ids are re-compacted (ascending
// original id); `labels` carries original ids through.  When `mapping` is
// non-null it receives (original id, new id) pairs in new-id order.
Graph largest_connected_component(
    const Graph& g, std::vector<std::pair<long long, int>>* mapping = nullptr);

// Writes a mapping as "orig_id new_id" lines.
void write_id_mapping(const std::vector<std::pair<long long, int>>& mapping,
                      std::ostream& out);

}  // namespace polarmin
