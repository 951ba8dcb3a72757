#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "modhom/graph.hpp"
#include "modhom/labelled_graph.hpp"

namespace modhom {

enum class GadgetSide { Left, Right };

// Edge gadget over an nc-walk g0 g1 ... gk of length k >= 1: a path
// s v1 ... v_{k-1} t with each v_i carrying a pendant u_i pinned to g_i.
// Local ids: s=0, t=1, v_i=1+i, u_i=k+i. A length-1 walk degenerates to
// the bare edge s-t.
LabelledGraph build_edge_gadget(const Graph& h, const Walk& w);

// Vertex gadget of the first kind: a single edge s-x (or t-y) with the
// non-distinguished endpoint pinned to alpha. Local ids: s/t=0, x/y=1.
LabelledGraph build_vertex_gadget_pinned_edge(const Graph& h, int alpha, GadgetSide side);

// Vertex gadget of the second kind, over a simple cycle theta g1 ... gk theta
// of length >= 3: a cycle s v1 ... v_k s with pendants u_i pinned to g_i and
// an extra pendant x pinned to theta. Local ids: s/t=0, v_i=i, u_i=k+i,
// x/y=2k+1.
LabelledGraph build_vertex_gadget_cycle(const Graph& h, const Walk& cycle, GadgetSide side);

// The tuple of Definition "hardness gadget": target sets, designated
// vertices, and the three partially H-labelled graphs.
struct HardnessGadget {
    std::vector<int> delta1;  // sorted
    std::vector<int> delta2;  // sorted
    int d1 = -1;              // member of delta1
    int d2 = -1;              // member of delta2
    LabelledGraph jl;         // has s
    LabelledGraph jr;         // has t
    LabelledGraph k;          // has s and t

    bool operator==(const HardnessGadget&) const = default;
};

struct GadgetConditionResult {
    std::string condition;  // "i" .. "vii"
    bool pass = false;
    std::string detail;
};

struct GadgetReport {
    std::vector<GadgetConditionResult> conditions;
    bool all_pass = false;
    bool square_free_warning = false;
};

// Checks the seven hardness-gadget conditions by exhaustive pinned counting,
// independent of how the gadget was constructed. The range-confinement check
// for K is performed with the vertex gadgets attached at s and t, which is
// the configuration the reduction uses.
GadgetReport verify_hardness_gadget(const Graph& h, const HardnessGadget& g,
                                    std::uint64_t p);

struct WalkCheckReport {
    bool ok = true;
    int checked = 0;
    std::vector<std::string> violations;
};

// Shifting property of the edge gadget: pinning s (or t) to a neighbor of
// the walk end other than the second vertex forces the whole interior.
WalkCheckReport check_shifting(const Graph& h, const Walk& w);

// The four pinned-count identities of the edge gadget, including the
// closed form 1 + sum(deg(g_i)-1).
WalkCheckReport count_formula_check(const Graph& h, const Walk& w);

// Structured JSON document; key order is fixed.
std::string gadget_to_json(const HardnessGadget& g, std::uint64_t p);

}  // namespace modhom
