#pragma once

#include <cstdint>
#include <functional>
#include <map>

#include <boost/multiprecision/cpp_int.hpp>

#include "modhom/graph.hpp"
#include "modhom/labelled_graph.hpp"
#include "modhom/residue.hpp"

namespace modhom {

using BigInt = boost::multiprecision::cpp_int;

inline constexpr std::uint64_t kDefaultNodeBudget = 100'000'000;
inline constexpr std::uint64_t kDefaultHomBudget = 10'000'000;

struct PinConstraint {
    std::vector<std::pair<int, int>> pairs;  // (vertex of G, vertex of H)
};

// Exact |Hom(g,h)|; empty g yields 1. Backtracking over a BFS vertex order
// with neighbor-intersection pruning, factorized per connected component.
// Throws BudgetExceededError when the search node budget runs out.
BigInt count_homs(const Graph& g, const Graph& h,
                  std::uint64_t budget = kDefaultNodeBudget);

Residue count_homs_mod(const Graph& g, const Graph& h, std::uint64_t p,
                       std::uint64_t budget = kDefaultNodeBudget);

// Homomorphisms extending the pinning function, mod p.
Residue count_homs_labelled(const LabelledGraph& lg, const Graph& h, std::uint64_t p,
                            std::uint64_t budget = kDefaultNodeBudget);

Residue count_homs_pinned(const Graph& g, const Graph& h, const PinConstraint& c,
                          std::uint64_t p, std::uint64_t budget = kDefaultNodeBudget);

// Exact variants, used by the gadget verifiers.
BigInt count_homs_pinned_exact(const Graph& g, const Graph& h,
                               const std::map<int, int>& pins,
                               std::uint64_t budget = kDefaultNodeBudget);

// Calls cb with every homomorphism extending pins (image array indexed by
// G-vertex). Returns false if more than max_homs homomorphisms exist; the
// callback may return false to stop early (the function then returns true).
bool for_each_hom(const Graph& g, const Graph& h, const std::map<int, int>& pins,
                  std::uint64_t max_homs,
                  const std::function<bool(const std::vector<int>&)>& cb);

// Weighted independent-set sum: sum over I of l1^|V_L cap I| * l2^|V_R cap I|.
Residue count_z_bis(const BipartiteInstance& b, const Residue& l1, const Residue& l2);

// |Hom(g, K_{a,b})| mod p in polynomial time.
Residue count_homs_complete_bipartite(const Graph& g, std::uint64_t a, std::uint64_t b,
                                      std::uint64_t p);

}  // namespace modhom
