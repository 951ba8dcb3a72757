#include "modhom/bis_reduction.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include <nlohmann/json.hpp>

#include "modhom/errors.hpp"
#include "modhom/residue.hpp"

namespace modhom {

namespace {

int fresh_count(const LabelledGraph& lg, int identified) {
    return lg.graph.vertex_count() - identified;
}

// Splices one gadget copy into gp: gadget-local vertices listed in `anchors`
// (pairs local id -> existing G' id) are identified, the rest get fresh ids
// starting at next_id in local order.
GadgetCopy place_copy(Graph& gp, std::map<int, int>& pins, int& next_id,
                      const LabelledGraph& lg, const std::string& role,
                      const std::vector<std::pair<int, int>>& anchors) {
    int n = lg.graph.vertex_count();
    std::vector<int> to_global(n, -1);
    GadgetCopy copy;
    copy.role = role;
    for (auto [local, global] : anchors) {
        to_global[local] = global;
        copy.anchors.push_back(global);
    }
    for (int v = 0; v < n; ++v) {
        if (to_global[v] != -1) continue;
        to_global[v] = next_id++;
        copy.vertices.push_back(to_global[v]);
    }
    for (auto [u, v] : lg.graph.edges()) gp.add_edge(to_global[u], to_global[v]);
    for (auto [v, hv] : lg.pins) pins[to_global[v]] = hv;
    return copy;
}

std::vector<bool> left_lookup(const BipartiteInstance& b) {
    std::vector<bool> is_left(b.graph.vertex_count(), false);
    for (int v : b.left) is_left[v] = true;
    return is_left;
}

}  // namespace

ReductionOutput build_reduction_graph(const BipartiteInstance& b, const HardnessGadget& g) {
    if (!g.jl.s || !g.jr.t || !g.k.s || !g.k.t)
        throw std::invalid_argument("gadget lacks distinguished vertices");
    std::vector<bool> is_left = left_lookup(b);
    for (auto [u, v] : b.graph.edges())
        if (is_left[u] == is_left[v])
            throw std::invalid_argument("edge does not cross the bipartition");

    int n = b.graph.vertex_count();
    int total = n + static_cast<int>(b.left.size()) * fresh_count(g.jl, 1) +
                static_cast<int>(b.right.size()) * fresh_count(g.jr, 1) +
                b.graph.edge_count() * fresh_count(g.k, 2);

    ReductionOutput out;
    Graph gp(total);
    std::map<int, int> pins;
    int next_id = n;
    for (int x : b.left)
        out.copies.push_back(place_copy(gp, pins, next_id, g.jl, "JL", {{*g.jl.s, x}}));
    for (int y : b.right)
        out.copies.push_back(place_copy(gp, pins, next_id, g.jr, "JR", {{*g.jr.t, y}}));
    for (auto [u, v] : b.graph.edges()) {
        int x = is_left[u] ? u : v;
        int y = is_left[u] ? v : u;
        out.copies.push_back(
            place_copy(gp, pins, next_id, g.k, "K", {{*g.k.s, x}, {*g.k.t, y}}));
    }
    out.gprime.graph = std::move(gp);
    out.gprime.pins = std::move(pins);
    out.vertex_map.resize(n);
    for (int v = 0; v < n; ++v) out.vertex_map[v] = v;
    return out;
}

std::vector<int> chi_of_hom(const std::vector<int>& sigma, const BipartiteInstance& b,
                            const Graph& h, const HardnessGadget& g,
                            const ReductionOutput& r) {
    const Graph& gp = r.gprime.graph;
    if (static_cast<int>(sigma.size()) != gp.vertex_count())
        throw std::invalid_argument("image size does not match G'");
    for (int v : sigma)
        if (v < 0 || v >= h.vertex_count())
            throw std::invalid_argument("image vertex outside V(H)");
    for (auto [v, hv] : r.gprime.pins)
        if (sigma[v] != hv) throw std::invalid_argument("map violates a pin");
    for (auto [u, v] : gp.edges())
        if (!h.has_edge(sigma[u], sigma[v]))
            throw std::invalid_argument("map is not a homomorphism");

    std::vector<int> chi;
    for (int x : b.left)
        if (sigma[r.vertex_map[x]] != g.d1) chi.push_back(x);
    for (int y : b.right)
        if (sigma[r.vertex_map[y]] != g.d2) chi.push_back(y);
    std::sort(chi.begin(), chi.end());
    return chi;
}

namespace {

bool is_independent(const Graph& g, const std::vector<int>& set) {
    for (size_t i = 0; i < set.size(); ++i)
        for (size_t j = i + 1; j < set.size(); ++j)
            if (g.has_edge(set[i], set[j])) return false;
    return true;
}

void all_independent_sets(const Graph& g, int v, std::vector<int>& cur,
                          std::vector<std::vector<int>>& out) {
    if (v == g.vertex_count()) {
        out.push_back(cur);
        return;
    }
    all_independent_sets(g, v + 1, cur, out);
    for (int u : g.neighbors(v))
        if (u < v && std::binary_search(cur.begin(), cur.end(), u)) return;
    cur.push_back(v);
    all_independent_sets(g, v + 1, cur, out);
    cur.pop_back();
}

std::string format_set(const std::vector<int>& set) {
    std::ostringstream out;
    out << '{';
    for (size_t i = 0; i < set.size(); ++i) {
        if (i) out << ',';
        out << set[i];
    }
    out << '}';
    return out.str();
}

}  // namespace

ReductionReport verify_reduction(const BipartiteInstance& b, const Graph& h,
                                 const HardnessGadget& g, std::uint64_t p,
                                 std::uint64_t max_homs) {
    if (!is_prime(p)) throw std::invalid_argument("modulus must be prime");
    ReductionOutput r = build_reduction_graph(b, g);
    std::vector<bool> is_left = left_lookup(b);
    Residue l1((g.delta1.size() - 1) % p, p);
    Residue l2((g.delta2.size() - 1) % p, p);

    ReductionReport report;
    report.chi_independent = true;
    std::uint64_t total = 0;
    std::map<std::vector<int>, std::uint64_t> classes;
    bool complete = for_each_hom(
        r.gprime.graph, h, r.gprime.pins, max_homs, [&](const std::vector<int>& sigma) {
            std::vector<int> chi;
            for (int x : b.left)
                if (sigma[x] != g.d1) chi.push_back(x);
            for (int y : b.right)
                if (sigma[y] != g.d2) chi.push_back(y);
            std::sort(chi.begin(), chi.end());
            auto [it, fresh] = classes.try_emplace(chi, 0);
            if (fresh && !is_independent(b.graph, chi)) {
                report.chi_independent = false;
                report.failures.push_back("chi " + format_set(chi) + " is not independent");
            }
            it->second = (it->second + 1) % p;
            total = (total + 1) % p;
            return true;
        });
    if (!complete) {
        report.conclusive = false;
        report.chi_independent = false;
        report.failures.push_back("homomorphism budget exceeded; run is inconclusive");
        return report;
    }

    report.homs_mod_p = total;
    report.z_mod_p = count_z_bis(b, l1, l2).value();
    report.congruence = report.homs_mod_p == report.z_mod_p;
    if (!report.congruence)
        report.failures.push_back("congruence fails: homs " + std::to_string(total) +
                                  " vs Z " + std::to_string(report.z_mod_p) + " mod " +
                                  std::to_string(p));

    std::vector<std::vector<int>> independents;
    std::vector<int> cur;
    all_independent_sets(b.graph, 0, cur, independents);
    for (auto& set : independents) std::sort(set.begin(), set.end());
    report.chi_surjective = true;
    for (const auto& set : independents) {
        if (!classes.count(set)) {
            report.chi_surjective = false;
            report.failures.push_back("independent set " + format_set(set) +
                                      " is not realized by any homomorphism");
        }
    }

    report.class_cardinalities = true;
    for (const auto& [chi, count] : classes) {
        std::uint64_t nl = 0, nr = 0;
        for (int v : chi) (is_left[v] ? nl : nr)++;
        std::uint64_t expected = (l1.pow(nl) * l2.pow(nr)).value();
        if (count != expected) {
            report.class_cardinalities = false;
            report.failures.push_back("class " + format_set(chi) + " has cardinality " +
                                      std::to_string(count) + " mod p, expected " +
                                      std::to_string(expected));
        }
    }
    return report;
}

std::string serialize_pins(const ReductionOutput& r) {
    std::ostringstream out;
    for (auto [v, hv] : r.gprime.pins) out << v << ' ' << hv << '\n';
    return out.str();
}

std::string reduction_provenance_json(const ReductionOutput& r) {
    nlohmann::ordered_json j;
    j["vertex_map"] = r.vertex_map;
    j["gadget_copies"] = nlohmann::ordered_json::array();
    for (const auto& copy : r.copies) {
        nlohmann::ordered_json c;
        c["role"] = copy.role;
        c["anchors"] = copy.anchors;
        c["vertices"] = copy.vertices;
        j["gadget_copies"].push_back(c);
    }
    return j.dump(2) + "\n";
}

}  // namespace modhom
