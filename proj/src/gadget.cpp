#include "modhom/gadget.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

#include "modhom/errors.hpp"
#include "modhom/hom_count.hpp"

namespace modhom {

LabelledGraph build_edge_gadget(const Graph& h, const Walk& w) {
    if (w.size() < 2) throw std::invalid_argument("walk must have length at least 1");
    if (!is_nc_walk(h, w)) throw std::invalid_argument("walk is not an nc-walk");
    int k = static_cast<int>(w.size()) - 1;
    LabelledGraph lg;
    lg.s = 0;
    lg.t = 1;
    if (k == 1) {
        lg.graph = Graph(2);
        lg.graph.add_edge(0, 1);
        return lg;
    }
    lg.graph = Graph(2 * k);
    lg.graph.add_edge(0, 2);  // s - v1
    for (int i = 1; i <= k - 2; ++i) lg.graph.add_edge(1 + i, 2 + i);
    lg.graph.add_edge(k, 1);  // v_{k-1} - t
    for (int i = 1; i <= k - 1; ++i) {
        lg.graph.add_edge(1 + i, k + i);  // v_i - u_i
        lg.pins[k + i] = w[i];
    }
    return lg;
}

LabelledGraph build_vertex_gadget_pinned_edge(const Graph& h, int alpha, GadgetSide side) {
    if (alpha < 0 || alpha >= h.vertex_count())
        throw std::invalid_argument("pinned vertex outside V(H)");
    LabelledGraph lg;
    lg.graph = Graph(2);
    lg.graph.add_edge(0, 1);
    lg.pins[1] = alpha;
    if (side == GadgetSide::Left)
        lg.s = 0;
    else
        lg.t = 0;
    return lg;
}

LabelledGraph build_vertex_gadget_cycle(const Graph& h, const Walk& cycle, GadgetSide side) {
    if (cycle.size() < 4 || cycle.front() != cycle.back())
        throw std::invalid_argument("cycle must be closed and of length at least 3");
    if (!is_walk(h, cycle)) throw std::invalid_argument("not a walk in the graph");
    std::set<int> distinct(cycle.begin(), cycle.end() - 1);
    if (distinct.size() != cycle.size() - 1)
        throw std::invalid_argument("cycle is not simple");
    int k = static_cast<int>(cycle.size()) - 2;  // interior gamma_1..gamma_k
    LabelledGraph lg;
    lg.graph = Graph(2 * k + 2);
    lg.graph.add_edge(0, 1);  // s - v1
    for (int i = 1; i <= k - 1; ++i) lg.graph.add_edge(i, i + 1);
    lg.graph.add_edge(k, 0);  // v_k - s
    lg.graph.add_edge(0, 2 * k + 1);  // s - x
    for (int i = 1; i <= k; ++i) {
        lg.graph.add_edge(i, k + i);
        lg.pins[k + i] = cycle[i];
    }
    lg.pins[2 * k + 1] = cycle[0];
    if (side == GadgetSide::Left)
        lg.s = 0;
    else
        lg.t = 0;
    return lg;
}

namespace {

void require_wellformed(const Graph& h, const HardnessGadget& g) {
    auto check_lg = [&](const LabelledGraph& lg, const char* name) {
        for (auto [v, hv] : lg.pins) {
            if (v < 0 || v >= lg.graph.vertex_count())
                throw std::invalid_argument(std::string(name) + ": pinned vertex out of range");
            if (hv < 0 || hv >= h.vertex_count())
                throw std::invalid_argument(std::string(name) + ": pin target outside V(H)");
            if ((lg.s && *lg.s == v) || (lg.t && *lg.t == v))
                throw std::invalid_argument(std::string(name) + ": distinguished vertex is pinned");
        }
    };
    check_lg(g.jl, "JL");
    check_lg(g.jr, "JR");
    check_lg(g.k, "K");
    if (!g.jl.s) throw std::invalid_argument("JL lacks distinguished vertex s");
    if (!g.jr.t) throw std::invalid_argument("JR lacks distinguished vertex t");
    if (!g.k.s || !g.k.t) throw std::invalid_argument("K lacks distinguished vertices");
    auto check_delta = [&](const std::vector<int>& d, int dd, const char* name) {
        if (d.empty() || !std::is_sorted(d.begin(), d.end()) ||
            std::adjacent_find(d.begin(), d.end()) != d.end())
            throw std::invalid_argument(std::string(name) + " must be sorted and duplicate-free");
        for (int v : d)
            if (v < 0 || v >= h.vertex_count())
                throw std::invalid_argument(std::string(name) + " member outside V(H)");
        if (!std::binary_search(d.begin(), d.end(), dd))
            throw std::invalid_argument(std::string(name) + " does not contain its designated vertex");
    };
    check_delta(g.delta1, g.d1, "Delta1");
    check_delta(g.delta2, g.d2, "Delta2");
}

// K with the vertex gadgets glued on at s and t, as in the reduction graph.
LabelledGraph attach_vertex_gadgets(const HardnessGadget& g) {
    const LabelledGraph& k = g.k;
    LabelledGraph out = k;
    auto splice = [&out](const LabelledGraph& part, int part_anchor, int out_anchor) {
        int base = out.graph.vertex_count();
        std::vector<int> map(part.graph.vertex_count(), -1);
        int next = base;
        for (int v = 0; v < part.graph.vertex_count(); ++v)
            map[v] = (v == part_anchor) ? out_anchor : next++;
        Graph grown(next);
        for (auto [u, v] : out.graph.edges()) grown.add_edge(u, v);
        for (auto [u, v] : part.graph.edges()) grown.add_edge(map[u], map[v]);
        out.graph = grown;
        for (auto [v, hv] : part.pins) out.pins[map[v]] = hv;
    };
    splice(g.jl, *g.jl.s, *k.s);
    splice(g.jr, *g.jr.t, *k.t);
    return out;
}

}  // namespace

GadgetReport verify_hardness_gadget(const Graph& h, const HardnessGadget& g,
                                    std::uint64_t p) {
    if (!is_prime(p)) throw std::invalid_argument("modulus must be prime");
    require_wellformed(h, g);
    GadgetReport report;
    report.square_free_warning = !is_square_free(h);

    auto add = [&report](const std::string& cond, bool pass, std::string detail) {
        report.conditions.push_back({cond, pass, std::move(detail)});
    };
    auto in_set = [](const std::vector<int>& set, int v) {
        return std::binary_search(set.begin(), set.end(), v);
    };
    auto exact_count = [&h](const LabelledGraph& lg, std::map<int, int> extra) {
        std::map<int, int> pins = lg.pins;
        for (auto [a, b] : extra) pins[a] = b;
        return count_homs_pinned_exact(lg.graph, h, pins);
    };

    // (i) |Delta|-1 nonzero mod p.
    {
        std::uint64_t l1 = (g.delta1.size() - 1) % p;
        std::uint64_t l2 = (g.delta2.size() - 1) % p;
        add("i", l1 != 0 && l2 != 0,
            "|Delta1|-1=" + std::to_string(g.delta1.size() - 1) +
                ", |Delta2|-1=" + std::to_string(g.delta2.size() - 1) + " mod " +
                std::to_string(p));
    }

    // (ii) range confinement of s and t.
    {
        bool pass = true;
        std::string detail;
        auto confined = [&](const LabelledGraph& lg, int anchor,
                            const std::vector<int>& delta, const char* name) {
            for_each_hom(lg.graph, h, lg.pins, kDefaultHomBudget,
                         [&](const std::vector<int>& img) {
                             if (!in_set(delta, img[anchor])) {
                                 pass = false;
                                 detail = std::string(name) + " maps its anchor to " +
                                          std::to_string(img[anchor]) + " outside Delta";
                                 return false;
                             }
                             return true;
                         });
        };
        confined(g.jl, *g.jl.s, g.delta1, "JL");
        if (pass) confined(g.jr, *g.jr.t, g.delta2, "JR");
        if (pass) {
            LabelledGraph composite = attach_vertex_gadgets(g);
            for_each_hom(composite.graph, h, composite.pins, kDefaultHomBudget,
                         [&](const std::vector<int>& img) {
                             if (!in_set(g.delta1, img[*g.k.s]) ||
                                 !in_set(g.delta2, img[*g.k.t])) {
                                 pass = false;
                                 detail = "K (with vertex gadgets attached) maps s,t to (" +
                                          std::to_string(img[*g.k.s]) + "," +
                                          std::to_string(img[*g.k.t]) + ") outside Delta1 x Delta2";
                                 return false;
                             }
                             return true;
                         });
        }
        add("ii", pass, pass ? "s,t confined to Delta1,Delta2" : detail);
    }

    // (iii) vertex gadget counts: 1 mod p inside Delta, empty outside.
    {
        bool pass = true;
        std::string detail;
        auto node_counts = [&](const LabelledGraph& lg, int anchor,
                               const std::vector<int>& delta, const char* name) {
            for (int gamma = 0; gamma < h.vertex_count() && pass; ++gamma) {
                BigInt cnt = exact_count(lg, {{anchor, gamma}});
                if (in_set(delta, gamma)) {
                    if (cnt % p != 1) {
                        pass = false;
                        detail = std::string(name) + " count at " + std::to_string(gamma) +
                                 " is " + cnt.str() + ", not 1 mod p";
                    }
                } else if (cnt != 0) {
                    pass = false;
                    detail = std::string(name) + " has " + cnt.str() +
                             " homomorphisms at " + std::to_string(gamma) + " outside Delta";
                }
            }
        };
        node_counts(g.jl, *g.jl.s, g.delta1, "JL");
        if (pass) node_counts(g.jr, *g.jr.t, g.delta2, "JR");
        add("iii", pass, pass ? "vertex gadget counts are 1 on Delta, 0 off Delta" : detail);
    }

    // (iv)-(vii) edge gadget counts.
    int s = *g.k.s, t = *g.k.t;
    {
        bool pass = true;
        std::string detail;
        for (int w1 : g.delta1) {
            if (w1 == g.d1) continue;
            for (int w2 : g.delta2) {
                if (w2 == g.d2) continue;
                BigInt cnt = exact_count(g.k, {{s, w1}, {t, w2}});
                if (cnt != 0) {
                    pass = false;
                    detail = "K count at (" + std::to_string(w1) + "," + std::to_string(w2) +
                             ") is " + cnt.str() + ", expected 0";
                }
            }
        }
        add("iv", pass, pass ? "K is empty on (Delta1-d1) x (Delta2-d2)" : detail);
    }
    auto unit_count = [&](const std::string& cond, std::vector<std::pair<int, int>> cases) {
        bool pass = true;
        std::string detail;
        for (auto [w1, w2] : cases) {
            BigInt cnt = exact_count(g.k, {{s, w1}, {t, w2}});
            if (cnt % p != 1) {
                pass = false;
                detail = "K count at (" + std::to_string(w1) + "," + std::to_string(w2) +
                         ") is " + cnt.str() + ", not 1 mod p";
                break;
            }
        }
        add(cond, pass, pass ? "K counts are 1 mod p" : detail);
    };
    {
        std::vector<std::pair<int, int>> cases;
        for (int w1 : g.delta1)
            if (w1 != g.d1) cases.emplace_back(w1, g.d2);
        unit_count("v", cases);
    }
    {
        std::vector<std::pair<int, int>> cases;
        for (int w2 : g.delta2)
            if (w2 != g.d2) cases.emplace_back(g.d1, w2);
        unit_count("vi", cases);
    }
    unit_count("vii", {{g.d1, g.d2}});

    report.all_pass = std::all_of(report.conditions.begin(), report.conditions.end(),
                                  [](const auto& c) { return c.pass; });
    return report;
}

WalkCheckReport check_shifting(const Graph& h, const Walk& w) {
    if (w.size() < 3) throw std::invalid_argument("walk must have length at least 2");
    LabelledGraph k_gadget = build_edge_gadget(h, w);
    int k = static_cast<int>(w.size()) - 1;
    WalkCheckReport report;

    auto run_side = [&](int anchor, int walk_end, int walk_second, bool forward) {
        for (int theta : h.neighbors(walk_end)) {
            if (theta == walk_second) continue;
            std::map<int, int> pins = k_gadget.pins;
            pins[anchor] = theta;
            for_each_hom(k_gadget.graph, h, pins, kDefaultHomBudget,
                         [&](const std::vector<int>& img) {
                             ++report.checked;
                             for (int i = 1; i <= k - 1; ++i) {
                                 int expected = forward ? w[i - 1] : w[i + 1];
                                 if (img[1 + i] != expected) {
                                     report.ok = false;
                                     report.violations.push_back(
                                         "theta=" + std::to_string(theta) + " v" +
                                         std::to_string(i) + " -> " +
                                         std::to_string(img[1 + i]) + ", expected " +
                                         std::to_string(expected));
                                 }
                             }
                             return true;
                         });
        }
    };
    run_side(*k_gadget.s, w[0], w[1], true);
    run_side(*k_gadget.t, w[k], w[k - 1], false);
    return report;
}

WalkCheckReport count_formula_check(const Graph& h, const Walk& w) {
    LabelledGraph k_gadget = build_edge_gadget(h, w);
    int k = static_cast<int>(w.size()) - 1;
    int s = *k_gadget.s, t = *k_gadget.t;
    WalkCheckReport report;

    auto pinned = [&](int ws, int wt) {
        std::map<int, int> pins = k_gadget.pins;
        pins[s] = ws;
        pins[t] = wt;
        return count_homs_pinned_exact(k_gadget.graph, h, pins);
    };
    auto expect = [&](int ws, int wt, const BigInt& want, const char* item) {
        ++report.checked;
        BigInt got = pinned(ws, wt);
        if (got != want) {
            report.ok = false;
            report.violations.push_back(std::string(item) + " at (" + std::to_string(ws) +
                                        "," + std::to_string(wt) + "): got " + got.str() +
                                        ", expected " + want.str());
        }
    };

    std::vector<int> omega_s, omega_t;
    for (int v : h.neighbors(w[0]))
        if (v != w[1]) omega_s.push_back(v);
    for (int v : h.neighbors(w[k]))
        if (v != w[k - 1]) omega_t.push_back(v);

    for (int ws : omega_s)
        for (int wt : omega_t) expect(ws, wt, 0, "(1)");
    for (int wt : omega_t) expect(w[1], wt, 1, "(2)");
    for (int ws : omega_s) expect(ws, w[k - 1], 1, "(3)");
    BigInt closed_form = 1;
    for (int i = 1; i <= k - 1; ++i) closed_form += h.degree(w[i]) - 1;
    expect(w[1], w[k - 1], closed_form, "(4)");
    return report;
}

namespace {

nlohmann::ordered_json labelled_to_json(const LabelledGraph& lg) {
    nlohmann::ordered_json j;
    j["n"] = lg.graph.vertex_count();
    auto edges = nlohmann::ordered_json::array();
    for (auto [u, v] : lg.graph.edges()) edges.push_back({u, v});
    j["edges"] = edges;
    auto pins = nlohmann::ordered_json::object();
    for (auto [v, hv] : lg.pins) pins[std::to_string(v)] = hv;
    j["pins"] = pins;
    if (lg.s) j["s"] = *lg.s;
    if (lg.t) j["t"] = *lg.t;
    return j;
}

}  // namespace

std::string gadget_to_json(const HardnessGadget& g, std::uint64_t p) {
    nlohmann::ordered_json j;
    j["p"] = p;
    j["delta1"] = g.delta1;
    j["delta2"] = g.delta2;
    j["d1"] = g.d1;
    j["d2"] = g.d2;
    j["JL"] = labelled_to_json(g.jl);
    j["JR"] = labelled_to_json(g.jr);
    j["K"] = labelled_to_json(g.k);
    return j.dump(2) + "\n";
}

}  // namespace modhom
