#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "modhom/gadget.hpp"
#include "modhom/graph.hpp"
#include "modhom/hom_count.hpp"
#include "modhom/labelled_graph.hpp"

namespace modhom {

// Which gadget copy a block of G' vertices came from. `vertices` lists the
// fresh (non-identified) vertex ids in gadget-local order; the identified
// endpoints are the original G vertices in `anchors`.
struct GadgetCopy {
    std::string role;          // "JL", "JR", or "K"
    std::vector<int> anchors;  // JL/JR: one G vertex; K: left, right endpoint
    std::vector<int> vertices;
};

struct ReductionOutput {
    LabelledGraph gprime;         // no distinguished vertices
    std::vector<int> vertex_map;  // G vertex -> G' vertex id
    std::vector<GadgetCopy> copies;
};

// The reduction instance: one J_L copy per left vertex (s identified with
// the vertex), one J_R per right vertex (t identified), one K per edge
// (s with the left endpoint, t with the right). Original G vertices keep
// their ids; fresh vertices follow in (left gadgets, right gadgets, edge
// gadgets) order, each internally in gadget-local order.
ReductionOutput build_reduction_graph(const BipartiteInstance& b, const HardnessGadget& g);

// The independent set read off a homomorphism of G': the G vertices whose
// image differs from the designated delta. Throws if sigma is not a
// homomorphism extending the pins.
std::vector<int> chi_of_hom(const std::vector<int>& sigma, const BipartiteInstance& b,
                            const Graph& h, const HardnessGadget& g,
                            const ReductionOutput& r);

struct ReductionReport {
    bool conclusive = true;  // false when the enumeration budget ran out
    std::uint64_t homs_mod_p = 0;
    std::uint64_t z_mod_p = 0;
    bool congruence = false;
    bool chi_independent = false;
    bool chi_surjective = false;
    bool class_cardinalities = false;
    std::vector<std::string> failures;

    bool all_pass() const {
        return conclusive && congruence && chi_independent && chi_surjective &&
               class_cardinalities;
    }
};

// Enumerates Hom(G',h) in full, checks the congruence against the weighted
// independent-set sum with weights |Delta_i|-1, and audits the chi-classes:
// every chi is independent, every independent set is hit, and every class
// has cardinality l1^|V_L cap chi| * l2^|V_R cap chi| mod p. If more than
// max_homs homomorphisms exist the run is marked inconclusive; no sampling.
ReductionReport verify_reduction(const BipartiteInstance& b, const Graph& h,
                                 const HardnessGadget& g, std::uint64_t p,
                                 std::uint64_t max_homs = kDefaultHomBudget);

// Serialization: the G' graph uses the graph file format; pins go to a
// separate file of `g h` lines; provenance is a JSON document.
std::string serialize_pins(const ReductionOutput& r);
std::string reduction_provenance_json(const ReductionOutput& r);

}  // namespace modhom
