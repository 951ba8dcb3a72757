#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "modhom/aut_reduce.hpp"
#include "modhom/gadget.hpp"
#include "modhom/graph.hpp"

namespace modhom {

// Which branch of the degree-based case analysis applies, with the
// witnesses the gadget construction needs.
struct CaseSelection {
    enum class Kind { Case1, Case2_1, Case2_2, Case3 };
    Kind kind;
    Walk walk;  // the nc-walk the edge gadget is built over

    // Case1: endpoints of the connecting path.
    int alpha = -1;
    int beta = -1;
    // Case2_*/Case3: anchor vertex (walk front == walk back).
    int theta = -1;
    // Case2_2: the underlying cycle and connecting path.
    Walk cycle;
    Walk path;
};

CaseSelection select_case(const Graph& h, std::uint64_t p,
                          int max_vertices = kDefaultAutBound);

// Assembles the hardness gadget for the selected case and verifies it;
// a verification failure is an internal error, not a user error.
HardnessGadget build_hardness_gadget(const Graph& h, std::uint64_t p,
                                     int max_vertices = kDefaultAutBound);

struct Classification {
    enum class Verdict { Tractable, Hard, Unsupported };
    Verdict verdict;
    std::uint64_t p = 0;
    Graph hstar;
    ReductionTrace trace;

    // Tractable: the derived graph is the star K_{1,star_leaves}.
    int star_leaves = 0;
    // Hard: gadget and the weights |Delta|-1 mod p (both nonzero).
    std::optional<HardnessGadget> gadget;
    std::uint64_t lambda1 = 0;
    std::uint64_t lambda2 = 0;
    // Unsupported: why.
    std::string reason;
};

Classification classify(const Graph& h, std::uint64_t p,
                        int max_vertices = kDefaultAutBound);

// Tree degree property: a non-star tree without order-p automorphisms has
// at least two vertices of degree != 1 mod p. Test-suite property, not a
// pipeline step.
bool check_tree_degree_lemma(const Graph& h, std::uint64_t p,
                             int max_vertices = kDefaultAutBound);

std::string classification_to_json(const Classification& c);

}  // namespace modhom
