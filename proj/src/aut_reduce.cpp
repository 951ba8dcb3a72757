#include "modhom/aut_reduce.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <sstream>

#include "modhom/errors.hpp"
#include "modhom/hom_count.hpp"
#include "modhom/residue.hpp"

namespace modhom {

bool is_automorphism(const Graph& g, const Automorphism& perm) {
    int n = g.vertex_count();
    if (static_cast<int>(perm.size()) != n) return false;
    std::vector<bool> hit(n, false);
    for (int v : perm) {
        if (v < 0 || v >= n || hit[v]) return false;
        hit[v] = true;
    }
    for (auto [u, v] : g.edges())
        if (!g.has_edge(perm[u], perm[v])) return false;
    // Edge count is preserved by bijectivity, so edges map onto edges.
    return true;
}

namespace {

// Per-vertex invariant: (degree, sorted neighbor degrees). Candidate images
// must match it.
std::vector<std::vector<int>> vertex_invariants(const Graph& g) {
    int n = g.vertex_count();
    std::vector<std::vector<int>> inv(n);
    for (int v = 0; v < n; ++v) {
        inv[v].push_back(g.degree(v));
        for (int u : g.neighbors(v)) inv[v].push_back(g.degree(u));
        std::sort(inv[v].begin() + 1, inv[v].end());
    }
    return inv;
}

void enumerate_rec(const Graph& g, const std::vector<std::vector<int>>& inv, int v,
                   Automorphism& perm, std::vector<bool>& used,
                   std::vector<Automorphism>& out) {
    int n = g.vertex_count();
    if (v == n) {
        out.push_back(perm);
        return;
    }
    for (int w = 0; w < n; ++w) {
        if (used[w] || inv[v] != inv[w]) continue;
        bool ok = true;
        for (int u = 0; u < v && ok; ++u)
            if (g.has_edge(u, v) != g.has_edge(perm[u], w)) ok = false;
        if (!ok) continue;
        perm[v] = w;
        used[w] = true;
        enumerate_rec(g, inv, v + 1, perm, used, out);
        used[w] = false;
    }
    perm[v] = -1;
}

}  // namespace

std::vector<Automorphism> enumerate_automorphisms(const Graph& h, int max_vertices) {
    int n = h.vertex_count();
    if (n > max_vertices)
        throw TooLargeError("graph exceeds the automorphism enumeration bound of " +
                            std::to_string(max_vertices) + " vertices");
    std::vector<Automorphism> out;
    Automorphism perm(n, -1);
    std::vector<bool> used(n, false);
    enumerate_rec(h, vertex_invariants(h), 0, perm, used, out);
    return out;  // ascending image choice yields lexicographic order
}

int automorphism_order(const Automorphism& perm) {
    int n = static_cast<int>(perm.size());
    std::vector<bool> seen(n, false);
    long long order = 1;
    for (int s = 0; s < n; ++s) {
        if (seen[s]) continue;
        int len = 0, v = s;
        do {
            seen[v] = true;
            v = perm[v];
            ++len;
        } while (v != s);
        order = std::lcm(order, static_cast<long long>(len));
    }
    return static_cast<int>(order);
}

std::optional<Automorphism> find_order_p_automorphism(const Graph& h, std::uint64_t p,
                                                      int max_vertices) {
    for (const auto& perm : enumerate_automorphisms(h, max_vertices))
        if (automorphism_order(perm) == static_cast<int>(p)) return perm;
    return std::nullopt;
}

InducedSubgraph fixed_point_subgraph(const Graph& h, const Automorphism& perm) {
    if (!is_automorphism(h, perm))
        throw std::invalid_argument("not an automorphism of the graph");
    InducedSubgraph out;
    int n = h.vertex_count();
    std::vector<int> new_id(n, -1);
    for (int v = 0; v < n; ++v) {
        if (perm[v] == v) {
            new_id[v] = static_cast<int>(out.old_ids.size());
            out.old_ids.push_back(v);
        }
    }
    out.graph = Graph(static_cast<int>(out.old_ids.size()));
    for (auto [u, v] : h.edges())
        if (new_id[u] != -1 && new_id[v] != -1)
            out.graph.add_edge(new_id[u], new_id[v]);
    return out;
}

std::string serialize_trace(const ReductionTrace& trace) {
    std::ostringstream out;
    int i = 0;
    for (const auto& step : trace.steps) {
        out << "step " << ++i << ": pi=";
        for (size_t j = 0; j < step.automorphism.size(); ++j) {
            if (j) out << ',';
            out << step.automorphism[j];
        }
        out << " fix=";
        for (size_t j = 0; j < step.fixed.size(); ++j) {
            if (j) out << ',';
            out << step.fixed[j];
        }
        out << " -> n'=" << step.result.vertex_count() << '\n';
    }
    return out.str();
}

std::pair<Graph, ReductionTrace> reduce_to_hstar(const Graph& h, std::uint64_t p,
                                                 int max_vertices) {
    if (!is_prime(p)) throw std::invalid_argument("modulus must be prime");
    ReductionTrace trace;
    trace.initial = h;
    Graph cur = h;
    while (true) {
        auto pi = find_order_p_automorphism(cur, p, max_vertices);
        if (!pi) break;
        auto sub = fixed_point_subgraph(cur, *pi);
        trace.steps.push_back({*pi, sub.old_ids, sub.graph});
        cur = sub.graph;
    }
    return {cur, trace};
}

CongruenceReport verify_hstar_congruence(const Graph& h, std::uint64_t p, int samples,
                                         int size_bound, std::uint64_t seed,
                                         int max_vertices) {
    auto [hstar, trace] = reduce_to_hstar(h, p, max_vertices);
    CongruenceReport report;
    std::mt19937_64 gen(seed);
    for (int i = 0; i < samples; ++i) {
        int n = 1 + static_cast<int>(gen() % static_cast<std::uint64_t>(size_bound));
        Graph g(n);
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (gen() & 1) g.add_edge(u, v);
        std::uint64_t lhs = count_homs_mod(g, h, p).value();
        std::uint64_t rhs = count_homs_mod(g, hstar, p).value();
        ++report.checked;
        if (lhs != rhs) {
            report.ok = false;
            report.counterexamples.push_back({g, lhs, rhs});
        }
    }
    return report;
}

}  // namespace modhom
