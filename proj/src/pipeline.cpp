#include "modhom/pipeline.hpp"

#include <algorithm>
#include <queue>

#include <nlohmann/json.hpp>

#include "modhom/errors.hpp"
#include "modhom/residue.hpp"

namespace modhom {

namespace {

std::vector<int> bfs_distances(const Graph& g, int src) {
    std::vector<int> dist(g.vertex_count(), -1);
    dist[src] = 0;
    std::queue<int> q;
    q.push(src);
    while (!q.empty()) {
        int u = q.front();
        q.pop();
        for (int v : g.neighbors(u))
            if (dist[v] == -1) { dist[v] = dist[u] + 1; q.push(v); }
    }
    return dist;
}

std::vector<int> degree_witnesses(const Graph& h, std::uint64_t p) {
    std::vector<int> s;
    for (int v = 0; v < h.vertex_count(); ++v)
        if (static_cast<std::uint64_t>(h.degree(v)) % p != 1) s.push_back(v);
    return s;
}

// Re-anchor a closed cycle walk at `anchor` and pick the lexicographically
// smaller of the two traversal directions.
Walk orient_cycle(const Walk& cycle, int anchor) {
    std::vector<int> ring(cycle.begin(), cycle.end() - 1);
    auto it = std::find(ring.begin(), ring.end(), anchor);
    std::rotate(ring.begin(), it, ring.end());
    std::vector<int> reversed(ring);
    std::reverse(reversed.begin() + 1, reversed.end());
    if (reversed < ring) ring = reversed;
    ring.push_back(anchor);
    return ring;
}

}  // namespace

CaseSelection select_case(const Graph& h, std::uint64_t p, int max_vertices) {
    if (!is_prime(p)) throw std::invalid_argument("modulus must be prime");
    if (h.vertex_count() == 0) throw UnsupportedError("empty graph");
    if (!is_connected(h)) throw UnsupportedError("graph is disconnected");
    if (!is_square_free(h)) throw UnsupportedError("graph is not square-free");
    if (is_star(h)) throw UnsupportedError("graph is a star");
    if (find_order_p_automorphism(h, p, max_vertices))
        throw UnsupportedError("graph has an automorphism of order " + std::to_string(p));

    std::vector<int> s = degree_witnesses(h, p);
    CaseSelection sel;

    if (s.size() >= 2) {
        sel.kind = CaseSelection::Kind::Case1;
        int best_dist = -1;
        for (int a : s) {
            auto dist = bfs_distances(h, a);
            for (int b : s) {
                if (b <= a) continue;
                if (best_dist == -1 || dist[b] < best_dist) {
                    best_dist = dist[b];
                    sel.alpha = a;
                    sel.beta = b;
                }
            }
        }
        sel.walk = *shortest_path(h, sel.alpha, sel.beta);
        return sel;
    }

    if (is_tree(h))
        throw std::logic_error(
            "internal contradiction: non-star tree without order-p automorphism "
            "must have two vertices of degree != 1 mod p");

    if (s.size() == 1) {
        sel.theta = s[0];
        if (auto c = shortest_cycle_through(h, sel.theta)) {
            sel.kind = CaseSelection::Kind::Case2_1;
            sel.walk = *c;
            return sel;
        }
        sel.kind = CaseSelection::Kind::Case2_2;
        Walk c = *shortest_cycle(h);
        auto dist = bfs_distances(h, sel.theta);
        int gamma0 = -1;
        for (size_t i = 0; i + 1 < c.size(); ++i) {
            int v = c[i];
            if (gamma0 == -1 || dist[v] < dist[gamma0] ||
                (dist[v] == dist[gamma0] && v < gamma0))
                gamma0 = v;
        }
        sel.cycle = orient_cycle(c, gamma0);
        sel.path = *shortest_path(h, gamma0, sel.theta);
        // theta (P reversed) gamma0 (around the cycle) gamma0 (P) theta
        sel.walk.assign(sel.path.rbegin(), sel.path.rend());
        sel.walk.insert(sel.walk.end(), sel.cycle.begin() + 1, sel.cycle.end());
        sel.walk.insert(sel.walk.end(), sel.path.begin() + 1, sel.path.end());
        return sel;
    }

    sel.kind = CaseSelection::Kind::Case3;
    sel.walk = *shortest_cycle(h);
    sel.theta = sel.walk.front();
    sel.cycle = sel.walk;
    return sel;
}

HardnessGadget build_hardness_gadget(const Graph& h, std::uint64_t p, int max_vertices) {
    CaseSelection sel = select_case(h, p, max_vertices);
    HardnessGadget g;
    g.k = build_edge_gadget(h, sel.walk);
    g.d1 = sel.walk[1];
    g.d2 = sel.walk[sel.walk.size() - 2];

    switch (sel.kind) {
        case CaseSelection::Kind::Case1:
            g.delta1 = h.neighbors(sel.alpha);
            g.delta2 = h.neighbors(sel.beta);
            g.jl = build_vertex_gadget_pinned_edge(h, sel.alpha, GadgetSide::Left);
            g.jr = build_vertex_gadget_pinned_edge(h, sel.beta, GadgetSide::Right);
            break;
        case CaseSelection::Kind::Case2_1:
        case CaseSelection::Kind::Case2_2:
            g.delta1 = g.delta2 = h.neighbors(sel.theta);
            g.jl = build_vertex_gadget_pinned_edge(h, sel.theta, GadgetSide::Left);
            g.jr = build_vertex_gadget_pinned_edge(h, sel.theta, GadgetSide::Right);
            break;
        case CaseSelection::Kind::Case3:
            g.delta1 = {std::min(g.d1, g.d2), std::max(g.d1, g.d2)};
            g.delta2 = g.delta1;
            g.jl = build_vertex_gadget_cycle(h, sel.cycle, GadgetSide::Left);
            g.jr = build_vertex_gadget_cycle(h, sel.cycle, GadgetSide::Right);
            break;
    }

    GadgetReport report = verify_hardness_gadget(h, g, p);
    if (!report.all_pass) {
        std::string why;
        for (const auto& c : report.conditions)
            if (!c.pass) why += " (" + c.condition + ") " + c.detail + ";";
        throw std::logic_error("constructed gadget failed verification:" + why);
    }
    return g;
}

Classification classify(const Graph& h, std::uint64_t p, int max_vertices) {
    if (!is_prime(p)) throw std::invalid_argument("modulus must be prime");
    Classification c;
    c.p = p;
    if (h.vertex_count() == 0) {
        c.verdict = Classification::Verdict::Unsupported;
        c.reason = "empty graph";
        return c;
    }
    if (!is_square_free(h)) {
        c.verdict = Classification::Verdict::Unsupported;
        c.reason = "not square-free -- outside the classified class";
        return c;
    }
    std::tie(c.hstar, c.trace) = reduce_to_hstar(h, p, max_vertices);
    if (is_star(c.hstar)) {
        c.verdict = Classification::Verdict::Tractable;
        c.star_leaves = star_leaf_count(c.hstar);
        return c;
    }
    if (c.hstar.vertex_count() == 0) {
        // A fixed-point-free order-p automorphism (e.g. the K2 swap at p=2)
        // derives the empty graph; the case analysis does not cover it.
        c.verdict = Classification::Verdict::Unsupported;
        c.reason = "derived graph is empty";
        return c;
    }
    if (!is_connected(c.hstar)) {
        c.verdict = Classification::Verdict::Unsupported;
        c.reason = "derived graph is disconnected";
        return c;
    }
    c.verdict = Classification::Verdict::Hard;
    c.gadget = build_hardness_gadget(c.hstar, p, max_vertices);
    c.lambda1 = (c.gadget->delta1.size() - 1) % p;
    c.lambda2 = (c.gadget->delta2.size() - 1) % p;
    return c;
}

bool check_tree_degree_lemma(const Graph& h, std::uint64_t p, int max_vertices) {
    if (!is_tree(h)) throw std::invalid_argument("graph is not a tree");
    if (is_star(h)) throw std::invalid_argument("graph is a star");
    if (find_order_p_automorphism(h, p, max_vertices))
        throw std::invalid_argument("tree has an automorphism of order " + std::to_string(p));
    return degree_witnesses(h, p).size() >= 2;
}

std::string classification_to_json(const Classification& c) {
    nlohmann::ordered_json j;
    switch (c.verdict) {
        case Classification::Verdict::Tractable:
            j["verdict"] = "Tractable";
            j["star"] = {{"a", 1}, {"b", c.star_leaves}};
            break;
        case Classification::Verdict::Hard:
            j["verdict"] = "Hard";
            j["gadget"] = nlohmann::ordered_json::parse(gadget_to_json(*c.gadget, c.p));
            j["lambda1"] = c.lambda1;
            j["lambda2"] = c.lambda2;
            break;
        case Classification::Verdict::Unsupported:
            j["verdict"] = "Unsupported";
            j["reason"] = c.reason;
            break;
    }
    j["trace"] = serialize_trace(c.trace);
    return j.dump(2) + "\n";
}

}  // namespace modhom
