#include "modhom/hom_count.hpp"

#include <algorithm>
#include <bit>
#include <queue>
#include <set>

#include "modhom/errors.hpp"

namespace modhom {

namespace {

// BFS order from the lowest-id vertex of each component, neighbors ascending.
// Returns the order plus the [begin,end) slice per component.
std::pair<std::vector<int>, std::vector<std::pair<int, int>>> bfs_order(const Graph& g) {
    int n = g.vertex_count();
    std::vector<int> order;
    std::vector<std::pair<int, int>> slices;
    std::vector<bool> seen(n, false);
    for (int root = 0; root < n; ++root) {
        if (seen[root]) continue;
        int begin = static_cast<int>(order.size());
        std::queue<int> q;
        q.push(root);
        seen[root] = true;
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            order.push_back(u);
            for (int v : g.neighbors(u))
                if (!seen[v]) { seen[v] = true; q.push(v); }
        }
        slices.emplace_back(begin, static_cast<int>(order.size()));
    }
    return {order, slices};
}

class HomSearch {
public:
    HomSearch(const Graph& g, const Graph& h, const std::map<int, int>& pins,
              std::uint64_t node_budget)
        : g_(g), h_(h), node_budget_(node_budget) {
        int hn = h.vertex_count();
        if (hn > 64) throw TooLargeError("target graph exceeds 64 vertices");
        full_mask_ = hn == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << hn) - 1;
        hmask_.assign(hn, 0);
        for (int v = 0; v < hn; ++v)
            for (int u : h.neighbors(v)) hmask_[v] |= std::uint64_t{1} << u;

        pin_mask_.assign(g.vertex_count(), full_mask_);
        for (auto [gv, hv] : pins) {
            if (gv < 0 || gv >= g.vertex_count())
                throw std::invalid_argument("pinned vertex outside V(G)");
            if (hv < 0 || hv >= hn)
                throw std::invalid_argument("pin target outside V(H)");
            pin_mask_[gv] = std::uint64_t{1} << hv;
        }

        std::tie(order_, slices_) = bfs_order(g);
        int n = g.vertex_count();
        pos_.assign(n, -1);
        for (int d = 0; d < n; ++d) pos_[order_[d]] = d;
        prior_.assign(n, {});
        for (int d = 0; d < n; ++d)
            for (int u : g.neighbors(order_[d]))
                if (pos_[u] < d) prior_[d].push_back(u);
        image_.assign(n, -1);
    }

    BigInt count_exact() {
        BigInt total = 1;
        for (auto [lo, hi] : slices_) total *= count_range(lo, hi);
        return total;
    }

    std::uint64_t count_mod(std::uint64_t p) {
        std::uint64_t total = 1 % p;
        for (auto [lo, hi] : slices_) total = total * count_range_mod(lo, hi, p) % p;
        return total;
    }

    // Returns false iff the homomorphism budget was exceeded.
    bool enumerate(std::uint64_t max_homs,
                   const std::function<bool(const std::vector<int>&)>& cb) {
        max_homs_ = max_homs;
        emitted_ = 0;
        cb_ = &cb;
        stop_ = false;
        exceeded_ = false;
        enum_at(0);
        return !exceeded_;
    }

private:
    std::uint64_t candidates_at(int d) {
        if (++nodes_ > node_budget_)
            throw BudgetExceededError("homomorphism search node budget exceeded");
        int v = order_[d];
        std::uint64_t cand = pin_mask_[v];
        for (int u : prior_[d]) cand &= hmask_[image_[u]];
        return cand;
    }

    BigInt count_range(int d, int hi) {
        if (d == hi) return 1;
        BigInt total = 0;
        std::uint64_t cand = candidates_at(d);
        while (cand) {
            int hv = std::countr_zero(cand);
            cand &= cand - 1;
            image_[order_[d]] = hv;
            total += count_range(d + 1, hi);
        }
        image_[order_[d]] = -1;
        return total;
    }

    std::uint64_t count_range_mod(int d, int hi, std::uint64_t p) {
        if (d == hi) return 1 % p;
        std::uint64_t total = 0;
        std::uint64_t cand = candidates_at(d);
        while (cand) {
            int hv = std::countr_zero(cand);
            cand &= cand - 1;
            image_[order_[d]] = hv;
            total = (total + count_range_mod(d + 1, hi, p)) % p;
        }
        image_[order_[d]] = -1;
        return total;
    }

    void enum_at(int d) {
        if (stop_) return;
        if (d == static_cast<int>(order_.size())) {
            if (++emitted_ > max_homs_) {
                exceeded_ = true;
                stop_ = true;
                return;
            }
            if (!(*cb_)(image_)) stop_ = true;
            return;
        }
        std::uint64_t cand = candidates_at(d);
        while (cand && !stop_) {
            int hv = std::countr_zero(cand);
            cand &= cand - 1;
            image_[order_[d]] = hv;
            enum_at(d + 1);
        }
        image_[order_[d]] = -1;
    }

    const Graph& g_;
    const Graph& h_;
    std::uint64_t node_budget_;
    std::uint64_t nodes_ = 0;
    std::uint64_t full_mask_;
    std::vector<std::uint64_t> hmask_;
    std::vector<std::uint64_t> pin_mask_;
    std::vector<int> order_;
    std::vector<std::pair<int, int>> slices_;
    std::vector<int> pos_;
    std::vector<std::vector<int>> prior_;
    std::vector<int> image_;

    std::uint64_t max_homs_ = 0;
    std::uint64_t emitted_ = 0;
    const std::function<bool(const std::vector<int>&)>* cb_ = nullptr;
    bool stop_ = false;
    bool exceeded_ = false;
};

}  // namespace

BigInt count_homs(const Graph& g, const Graph& h, std::uint64_t budget) {
    return HomSearch(g, h, {}, budget).count_exact();
}

Residue count_homs_mod(const Graph& g, const Graph& h, std::uint64_t p,
                       std::uint64_t budget) {
    if (!is_prime(p)) throw std::invalid_argument("modulus must be prime");
    return Residue(HomSearch(g, h, {}, budget).count_mod(p), p);
}

Residue count_homs_labelled(const LabelledGraph& lg, const Graph& h, std::uint64_t p,
                            std::uint64_t budget) {
    if (!is_prime(p)) throw std::invalid_argument("modulus must be prime");
    return Residue(HomSearch(lg.graph, h, lg.pins, budget).count_mod(p), p);
}

Residue count_homs_pinned(const Graph& g, const Graph& h, const PinConstraint& c,
                          std::uint64_t p, std::uint64_t budget) {
    if (!is_prime(p)) throw std::invalid_argument("modulus must be prime");
    std::map<int, int> pins;
    for (auto [gv, hv] : c.pairs) {
        if (pins.count(gv)) throw std::invalid_argument("duplicate pinned vertex");
        pins[gv] = hv;
    }
    return Residue(HomSearch(g, h, pins, budget).count_mod(p), p);
}

BigInt count_homs_pinned_exact(const Graph& g, const Graph& h,
                               const std::map<int, int>& pins, std::uint64_t budget) {
    return HomSearch(g, h, pins, budget).count_exact();
}

bool for_each_hom(const Graph& g, const Graph& h, const std::map<int, int>& pins,
                  std::uint64_t max_homs,
                  const std::function<bool(const std::vector<int>&)>& cb) {
    return HomSearch(g, h, pins, ~std::uint64_t{0}).enumerate(max_homs, cb);
}

namespace {

Residue z_bis_rec(const Graph& g, const std::vector<bool>& is_left, int v,
                  std::vector<bool>& in, const Residue& l1, const Residue& l2) {
    int n = g.vertex_count();
    if (v == n) return Residue(1, l1.modulus());
    // Exclude v.
    Residue total = z_bis_rec(g, is_left, v + 1, in, l1, l2);
    // Include v unless a neighbor is already in.
    bool blocked = false;
    for (int u : g.neighbors(v))
        if (u < v && in[u]) { blocked = true; break; }
    if (!blocked) {
        in[v] = true;
        total = total + (is_left[v] ? l1 : l2) * z_bis_rec(g, is_left, v + 1, in, l1, l2);
        in[v] = false;
    }
    return total;
}

}  // namespace

Residue count_z_bis(const BipartiteInstance& b, const Residue& l1, const Residue& l2) {
    if (l1.modulus() != l2.modulus())
        throw std::invalid_argument("mismatched moduli");
    std::vector<bool> is_left(b.graph.vertex_count(), false);
    for (int v : b.left) is_left[v] = true;
    std::vector<bool> in(b.graph.vertex_count(), false);
    return z_bis_rec(b.graph, is_left, 0, in, l1, l2);
}

Residue count_homs_complete_bipartite(const Graph& g, std::uint64_t a, std::uint64_t b,
                                      std::uint64_t p) {
    if (!is_prime(p)) throw std::invalid_argument("modulus must be prime");
    auto parts = bipartition(g);
    if (std::holds_alternative<Walk>(parts)) return Residue(0, p);
    const auto& bi = std::get<BipartiteInstance>(parts);
    std::vector<bool> is_left(g.vertex_count(), false);
    for (int v : bi.left) is_left[v] = true;
    Residue ra(a % p, p), rb(b % p, p), total(1, p);
    for (const auto& comp : components(g)) {
        std::uint64_t l = 0, r = 0;
        for (int v : comp) (is_left[v] ? l : r)++;
        total = total * (ra.pow(l) * rb.pow(r) + ra.pow(r) * rb.pow(l));
    }
    return total;
}

}  // namespace modhom
