#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "modhom/graph.hpp"

namespace modhom {

// Automorphism as an image array: perm[v] is the image of v.
using Automorphism = std::vector<int>;

inline constexpr int kDefaultAutBound = 12;

bool is_automorphism(const Graph& g, const Automorphism& perm);

// Complete automorphism list, lexicographically sorted by image array
// (the identity is always first). Throws TooLargeError past the bound.
std::vector<Automorphism> enumerate_automorphisms(const Graph& h,
                                                  int max_vertices = kDefaultAutBound);

// Least k >= 1 with perm^(k) = id; the lcm of cycle lengths.
int automorphism_order(const Automorphism& perm);

// Lexicographically smallest automorphism of exact order p, if any.
std::optional<Automorphism> find_order_p_automorphism(const Graph& h, std::uint64_t p,
                                                      int max_vertices = kDefaultAutBound);

struct InducedSubgraph {
    Graph graph;
    std::vector<int> old_ids;  // new id -> old id, increasing
};

// Induced subgraph on the fixed points of perm, vertices re-densified in
// increasing id order.
InducedSubgraph fixed_point_subgraph(const Graph& h, const Automorphism& perm);

struct ReductionStep {
    Automorphism automorphism;  // on the previous graph
    std::vector<int> fixed;     // its fixed points (previous graph's ids)
    Graph result;
};

struct ReductionTrace {
    Graph initial;
    std::vector<ReductionStep> steps;
    const Graph& final_graph() const {
        return steps.empty() ? initial : steps.back().result;
    }
};

std::string serialize_trace(const ReductionTrace& trace);

// Repeatedly strips to the fixed points of an order-p automorphism until
// none remains.
std::pair<Graph, ReductionTrace> reduce_to_hstar(const Graph& h, std::uint64_t p,
                                                 int max_vertices = kDefaultAutBound);

struct CongruenceReport {
    struct Counterexample {
        Graph g;
        std::uint64_t lhs;
        std::uint64_t rhs;
    };
    bool ok = true;
    int checked = 0;
    std::vector<Counterexample> counterexamples;
};

// Samples seeded random graphs G and checks |Hom(G,h)| = |Hom(G,h*)| mod p.
CongruenceReport verify_hstar_congruence(const Graph& h, std::uint64_t p, int samples,
                                         int size_bound, std::uint64_t seed,
                                         int max_vertices = kDefaultAutBound);

}  // namespace modhom
