#include "polarmin/graphgen.hpp"

#include <algorithm>
#include <set>
#include <utility>

#include "polarmin/errors.hpp"
#include "polarmin/rng.hpp"

namespace polarmin {

Graph path_graph(int n) {
    std::vector<Edge> e;
    for (int i = 0; i + 1 < n; ++i) e.push_back({i, i + 1, 1.0});
    return make_graph(n, std::move(e));
}

Graph cycle_graph(int n) {
    if (n < 3) throw ValidationError("cycle needs at least 3 vertices");
    std::vector<Edge> e;
    for (int i = 0; i < n; ++i) e.push_back({i, (i + 1) % n, 1.0});
    return make_graph(n, std::move(e));
}

Graph star_graph(int leaves) {
    std::vector<Edge> e;
    for (int i = 1; i <= leaves; ++i) e.push_back({0, i, 1.0});
    return make_graph(leaves + 1, std::move(e));
}

Graph complete_graph(int n) {
    std::vector<Edge> e;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) e.push_back({i, j, 1.0});
    return make_graph(n, std::move(e));
}

Graph grid_graph(int rows, int cols) {
    auto id = [cols](int r, int c) { return r * cols + c; };
    std::vector<Edge> e;
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) {
            if (c + 1 < cols) e.push_back({id(r, c), id(r, c + 1), 1.0});
            if (r + 1 < rows) e.push_back({id(r, c), id(r + 1, c), 1.0});
        }
    return make_graph(rows * cols, std::move(e));
}

Graph balanced_binary_tree(int depth) {
    int n = (1 << (depth + 1)) - 1;
    std::vector<Edge> e;
    for (int v = 1; v < n; ++v) e.push_back({(v - 1) / 2, v, 1.0});
    return make_graph(n, std::move(e));
}

Graph ring_with_chords(int n, int chords_per_node, std::uint64_t seed) {
    if (n < 3) throw ValidationError("ring needs at least 3 vertices");
    std::set<std::pair<int, int>> have;
    std::vector<Edge> e;
    for (int i = 0; i < n; ++i) {
        int j = (i + 1) % n;
        have.insert(std::minmax(i, j));
        e.push_back({i, j, 1.0});
    }
    std::mt19937_64 rng = substream_rng(seed, Stream::graphgen, 1);
    long long wanted = static_cast<long long>(chords_per_node) * n;
    if (wanted + n > static_cast<long long>(n) * (n - 1) / 2)
        throw ValidationError("too many chords for this ring size");
    const long long budget = 200 * wanted + 1000;
    long long attempts = 0;
    while (wanted > 0 && attempts < budget) {
        ++attempts;
        int a = static_cast<int>(bounded(rng, n));
        int b = static_cast<int>(bounded(rng, n));
        if (a == b) continue;
        auto key = std::minmax(a, b);
        if (!have.insert(key).second) continue;
        e.push_back({key.first, key.second, 1.0});
        --wanted;
    }
    return make_graph(n, std::move(e));
}

Graph sparse_random_graph(int n, double avg_degree, std::uint64_t seed) {
    if (n < 2) throw ValidationError("need at least 2 vertices");
    std::mt19937_64 rng = substream_rng(seed, Stream::graphgen, 2);
    // Sample ~ n*avg_degree/2 distinct pairs.
    std::set<std::pair<int, int>> have;
    long long wanted = static_cast<long long>(n * avg_degree / 2.0);
    long long max_pairs = static_cast<long long>(n) * (n - 1) / 2;
    wanted = std::min(wanted, max_pairs);
    long long attempts = 0;
    while (static_cast<long long>(have.size()) < wanted &&
           attempts < 200 * std::max<long long>(wanted, 1)) {
        ++attempts;
        int a = static_cast<int>(bounded(rng, n));
        int b = static_cast<int>(bounded(rng, n));
        if (a != b) have.insert(std::minmax(a, b));
    }
    std::vector<Edge> e;
    e.reserve(have.size());
    for (auto& [a, b] : have) e.push_back({a, b, 1.0});
    Graph g = make_graph(n, std::move(e));

    // Stitch components: attach each non-root component to the previous one.
    while (!is_connected(g)) {
        std::vector<int> comp(g.n, -1);
        std::vector<int> stack;
        std::vector<int> reps;
        for (int s = 0; s < g.n; ++s) {
            if (comp[s] >= 0) continue;
            reps.push_back(s);
            comp[s] = static_cast<int>(reps.size()) - 1;
            stack.push_back(s);
            while (!stack.empty()) {
                int v = stack.back();
                stack.pop_back();
                for (auto [nb, _] : g.adjacency[v])
                    if (comp[nb] < 0) {
                        comp[nb] = comp[s];
                        stack.push_back(nb);
                    }
            }
        }
        std::vector<Edge> edges = g.edges;
        for (size_t c = 1; c < reps.size(); ++c)
            edges.push_back({reps[c - 1], reps[c], 1.0});
        g = make_graph(g.n, std::move(edges));
    }
    return g;
}

Graph randomize_weights(const Graph& g, double w_lo, double w_hi,
                        std::uint64_t seed) {
    if (!(w_lo > 0.0) || w_hi < w_lo)
        throw ValidationError("need 0 < w_lo <= w_hi");
    std::mt19937_64 rng = substream_rng(seed, Stream::graphgen, 3);
    std::vector<Edge> e = g.edges;
    for (Edge& ed : e) {
        double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
        ed.w = w_lo + u * (w_hi - w_lo);
    }
    Graph out = make_graph(g.n, std::move(e), g.labels);
    return out;
}

}  // namespace polarmin
