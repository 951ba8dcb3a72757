#pragma once

// Brute-force oracles and exhaustive small-graph generators shared by the
// test binaries. Everything here is deliberately independent of the library
// search code so it can serve as an oracle.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "modhom/graph.hpp"

namespace testsupport {

using modhom::Graph;

inline Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    return Graph::from_edges(n, edges);
}

inline Graph path_graph(int n) {
    Graph g(n);
    for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
    return g;
}

inline Graph cycle_graph(int n) {
    Graph g = path_graph(n);
    g.add_edge(0, n - 1);
    return g;
}

inline Graph complete_graph(int n) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

// K_{a,b} with left part 0..a-1.
inline Graph complete_bipartite(int a, int b) {
    Graph g(a + b);
    for (int u = 0; u < a; ++u)
        for (int v = 0; v < b; ++v) g.add_edge(u, a + v);
    return g;
}

inline Graph star_graph(int leaves) { return complete_bipartite(1, leaves); }

// Triangle 0-1-2 with leaves 3,4 on 0 and 5,6 on 1. With p=3 vertex 2 is the
// unique one of degree != 1 mod 3 and it lies on the triangle.
inline Graph fixture_t1() {
    return from_edges(7, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {0, 4}, {1, 5}, {1, 6}});
}

// Tree: center 0 of degree 4 with leaves 5,6 and paths 0-1-3, 0-2-4. With
// p=3 the degree-2 vertices 1 and 2 sit at distance 2.
inline Graph fixture_f1() {
    return from_edges(7, {{0, 1}, {0, 2}, {0, 5}, {0, 6}, {1, 3}, {2, 4}});
}

// T1 plus a leaf-padded branch 2-8, 8-{9,10}, 8-11, 11-12. With p=3 vertex 11
// (degree 2) is the unique degree witness and lies on no cycle.
inline Graph fixture_f22() {
    return from_edges(13, {{0, 1},
                           {0, 2},
                           {1, 2},
                           {0, 3},
                           {0, 4},
                           {1, 5},
                           {1, 6},
                           {2, 7},
                           {2, 8},
                           {8, 9},
                           {8, 10},
                           {8, 11},
                           {11, 12}});
}

// Cubic, square-free, connected, trivial automorphism group; every degree is
// 3 = 1 mod 2, so p=2 classification goes through the cycle-gadget case.
inline Graph fixture_f3() {
    return from_edges(14, {{0, 7},  {0, 9},  {0, 11}, {1, 6},  {1, 7},  {1, 12},
                           {2, 5},  {2, 8},  {2, 10}, {3, 9},  {3, 12}, {3, 13},
                           {4, 6},  {4, 8},  {4, 13}, {5, 10}, {5, 12}, {6, 11},
                           {7, 10}, {8, 13}, {9, 11}});
}

// The Frucht graph: 12 vertices, 3-regular, trivial automorphism group.
inline Graph frucht_graph() {
    Graph g = cycle_graph(12);
    for (auto [u, v] : std::vector<std::pair<int, int>>{
             {0, 7}, {1, 11}, {2, 10}, {3, 5}, {4, 9}, {6, 8}})
        g.add_edge(u, v);
    return g;
}

// Exhaustive map enumeration; the ground-truth homomorphism counter.
inline std::uint64_t brute_hom_count(const Graph& g, const Graph& h,
                                     const std::map<int, int>& pins = {}) {
    int n = g.vertex_count(), hn = h.vertex_count();
    if (hn == 0) return n == 0 ? 1 : 0;
    auto edges = g.edges();
    std::vector<int> image(n, 0);
    std::uint64_t count = 0;
    while (true) {
        bool ok = true;
        for (auto [gv, hv] : pins)
            if (image[gv] != hv) { ok = false; break; }
        if (ok)
            for (auto [u, v] : edges)
                if (!h.has_edge(image[u], image[v])) { ok = false; break; }
        if (ok) ++count;
        int i = 0;
        while (i < n && image[i] == hn - 1) image[i++] = 0;
        if (i == n) break;
        ++image[i];
    }
    return count;
}

// Canonical key over all vertex permutations (n <= 8): the minimum
// upper-triangle adjacency bitmask.
inline std::uint64_t canonical_key(const Graph& g) {
    int n = g.vertex_count();
    auto edges = g.edges();
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    auto bit = [n](int u, int v) {
        if (u > v) std::swap(u, v);
        return std::uint64_t{1} << (u * n - u * (u + 1) / 2 + (v - u - 1));
    };
    std::uint64_t best = ~std::uint64_t{0};
    do {
        std::uint64_t key = 0;
        for (auto [u, v] : edges) key |= bit(perm[u], perm[v]);
        best = std::min(best, key);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

// All graphs on exactly n vertices up to isomorphism, by vertex augmentation
// with canonical-form deduplication. Cached; n <= 7 is the intended range.
inline const std::vector<Graph>& all_graphs(int n) {
    static std::map<int, std::vector<Graph>> cache;
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    std::vector<Graph> out;
    if (n == 0) {
        out.push_back(Graph(0));
    } else {
        std::set<std::uint64_t> seen;
        for (const Graph& base : all_graphs(n - 1)) {
            for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (n - 1)); ++mask) {
                Graph g(n);
                for (auto [u, v] : base.edges()) g.add_edge(u, v);
                for (int v = 0; v < n - 1; ++v)
                    if (mask >> v & 1) g.add_edge(v, n - 1);
                if (seen.insert(canonical_key(g)).second) out.push_back(g);
            }
        }
    }
    return cache.emplace(n, std::move(out)).first->second;
}

// AHU encoding rooted at `root`.
inline std::string ahu_encode(const Graph& g, int root, int parent) {
    std::vector<std::string> parts;
    for (int u : g.neighbors(root))
        if (u != parent) parts.push_back(ahu_encode(g, u, root));
    std::sort(parts.begin(), parts.end());
    std::string out = "(";
    for (const auto& part : parts) out += part;
    return out + ")";
}

// Tree canonical form: AHU encoding minimized over the center vertices.
inline std::string tree_canonical(const Graph& g) {
    int n = g.vertex_count();
    std::vector<int> deg(n), order;
    for (int v = 0; v < n; ++v) deg[v] = g.degree(v);
    std::vector<bool> removed(n, false);
    int remaining = n;
    std::vector<int> layer;
    for (int v = 0; v < n; ++v)
        if (deg[v] <= 1) layer.push_back(v);
    while (remaining > 2) {
        std::vector<int> next;
        for (int v : layer) {
            removed[v] = true;
            --remaining;
            for (int u : g.neighbors(v))
                if (!removed[u] && --deg[u] == 1) next.push_back(u);
        }
        layer = std::move(next);
    }
    std::string best;
    for (int v = 0; v < n; ++v) {
        if (removed[v]) continue;
        std::string enc = ahu_encode(g, v, -1);
        if (best.empty() || enc < best) best = enc;
    }
    return best;
}

// All trees on exactly n >= 1 vertices up to isomorphism, by leaf
// augmentation with AHU deduplication. Cached; n <= 10 is the intended range.
inline const std::vector<Graph>& all_trees(int n) {
    static std::map<int, std::vector<Graph>> cache;
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    std::vector<Graph> out;
    if (n == 1) {
        out.push_back(Graph(1));
    } else {
        std::set<std::string> seen;
        for (const Graph& base : all_trees(n - 1)) {
            for (int v = 0; v < n - 1; ++v) {
                Graph g(n);
                for (auto [a, b] : base.edges()) g.add_edge(a, b);
                g.add_edge(v, n - 1);
                if (seen.insert(tree_canonical(g)).second) out.push_back(g);
            }
        }
    }
    return cache.emplace(n, std::move(out)).first->second;
}

// Seeded Erdos-Renyi-style sample with 1..max_n vertices, edge odds 1/2.
inline Graph random_graph(std::mt19937_64& gen, int max_n) {
    int n = 1 + static_cast<int>(gen() % static_cast<std::uint64_t>(max_n));
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (gen() & 1) g.add_edge(u, v);
    return g;
}

}  // namespace testsupport
