#include "polarmin/graph.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>

#include "polarmin/errors.hpp"

namespace polarmin {

namespace {

void finalize(Graph& g) {
    std::sort(g.edges.begin(), g.edges.end(), [](const Edge& a, const Edge& b) {
        return std::pair(a.u, a.v) < std::pair(b.u, b.v);
    });
    g.m = static_cast<long long>(g.edges.size());
    g.adjacency.assign(g.n, {});
    g.w_min = 0.0;
    g.w_max = 0.0;
    for (const Edge& e : g.edges) {
        g.adjacency[e.u].emplace_back(e.v, e.w);
        g.adjacency[e.v].emplace_back(e.u, e.w);
        if (g.w_min == 0.0 || e.w < g.w_min) g.w_min = e.w;
        if (e.w > g.w_max) g.w_max = e.w;
    }
}

}  // namespace

Graph make_graph(int n, std::vector<Edge> edges, std::vector<long long> labels) {
    Graph g;
    g.n = n;
    if (labels.empty()) {
        g.labels.resize(n);
        for (int i = 0; i < n; ++i) g.labels[i] = i;
    } else {
        if (static_cast<int>(labels.size()) != n)
            throw ValidationError("label vector does not match vertex count");
        g.labels = std::move(labels);
    }
    // Merge parallel edges by summing weights.
    std::map<std::pair<int, int>, double> merged;
    for (const Edge& e : edges) {
        if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n)
            throw ValidationError("edge endpoint out of range");
        if (e.u == e.v) throw ValidationError("self-loop in edge set");
        if (!(e.w > 0.0)) throw ValidationError("nonpositive edge weight");
        merged[std::minmax(e.u, e.v)] += e.w;
    }
    g.edges.reserve(merged.size());
    for (auto& [uv, w] : merged) g.edges.push_back({uv.first, uv.second, w});
    finalize(g);
    return g;
}

Graph load_edge_list(std::istream& in) {
    std::map<std::pair<long long, long long>, double> merged;
    std::map<long long, int> seen;  // original id -> placeholder (sorted later)
    std::string line;
    long lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        size_t start = line.find_first_not_of(" \t\r");
        if (start == std::string::npos) continue;
        char c = line[start];
        if (c == '#' || c == '%') continue;

        std::istringstream ls(line);
        long long u, v;
        double w = 1.0;
        if (!(ls >> u >> v))
            throw ParseError("expected 'u v [w]', got '" + line + "'", lineno);
        if (ls >> std::ws && !ls.eof()) {
            if (!(ls >> w))
                throw ParseError("bad weight in '" + line + "'", lineno);
            std::string rest;
            if (ls >> rest)
                throw ParseError("trailing tokens in '" + line + "'", lineno);
        }
        if (u < 0 || v < 0)
            throw ParseError("negative vertex id", lineno);
        if (!(w > 0.0))
            throw ValidationError("nonpositive weight " + std::to_string(w) +
                                  " on line " + std::to_string(lineno));
        seen.emplace(u, 0);
        seen.emplace(v, 0);
        if (u == v) continue;  // drop self-loops, but keep the vertex
        auto key = std::minmax(u, v);
        merged[key] += w;
    }

    Graph g;
    g.n = static_cast<int>(seen.size());
    g.labels.reserve(seen.size());
    int next = 0;
    for (auto& [orig, compact] : seen) {
        compact = next++;
        g.labels.push_back(orig);
    }
    g.edges.reserve(merged.size());
    for (auto& [uv, w] : merged)
        g.edges.push_back({seen[uv.first], seen[uv.second], w});
    finalize(g);
    return g;
}

Graph load_edge_list(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open edge list '" + path + "'");
    return load_edge_list(in);
}

namespace {

// Component id per vertex, iterative DFS.
std::vector<int> components(const Graph& g, int& count) {
    std::vector<int> comp(g.n, -1);
    std::vector<int> stack;
    count = 0;
    for (int s = 0; s < g.n; ++s) {
        if (comp[s] >= 0) continue;
        int id = count++;
        stack.push_back(s);
        comp[s] = id;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (auto [nb, _] : g.adjacency[v]) {
                if (comp[nb] < 0) {
                    comp[nb] = id;
                    stack.push_back(nb);
                }
            }
        }
    }
    return comp;
}

}  // namespace

bool is_connected(const Graph& g) {
    if (g.n == 0) return false;
    int count = 0;
    components(g, count);
    return count == 1;
}

Graph largest_connected_component(
    const Graph& g, std::vector<std::pair<long long, int>>* mapping) {
    if (g.n == 0) throw ValidationError("empty graph");
    int count = 0;
    std::vector<int> comp = components(g, count);

    std::vector<long long> size(count, 0);
    for (int v = 0; v < g.n; ++v) ++size[comp[v]];
    // Ties toward the component holding the smallest original id.  Vertices
    // are scanned in ascending original id (the compaction order), so the
    // first component reaching the max size wins.
    int best = 0;
    for (int c = 1; c < count; ++c)
        if (size[c] > size[best]) best = c;

    std::vector<int> newid(g.n, -1);
    std::vector<long long> labels;
    int next = 0;
    for (int v = 0; v < g.n; ++v) {
        if (comp[v] == best) {
            newid[v] = next++;
            labels.push_back(g.labels[v]);
        }
    }
    std::vector<Edge> edges;
    edges.reserve(g.edges.size());
    for (const Edge& e : g.edges)
        if (comp[e.u] == best)
            edges.push_back({newid[e.u], newid[e.v], e.w});

    if (mapping) {
        mapping->clear();
        for (int v = 0; v < g.n; ++v)
            if (newid[v] >= 0) mapping->emplace_back(g.labels[v], newid[v]);
    }
    return make_graph(next, std::move(edges), std::move(labels));
}

void write_id_mapping(const std::vector<std::pair<long long, int>>& mapping,
                      std::ostream& out) {
    for (auto [orig, fresh] : mapping) out << orig << ' ' << fresh << '\n';
}

}  // namespace polarmin
