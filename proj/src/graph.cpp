#include "modhom/graph.hpp"

#include <algorithm>
#include <deque>
#include <queue>
#include <sstream>
#include <stdexcept>

#include "modhom/errors.hpp"

namespace modhom {

Graph::Graph(int n) {
    if (n < 0) throw std::invalid_argument("negative vertex count");
    adj_.resize(n);
}

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    Graph g(n);
    for (auto [u, v] : edges) g.add_edge(u, v);
    return g;
}

bool Graph::has_edge(int u, int v) const {
    if (u < 0 || u >= vertex_count() || v < 0 || v >= vertex_count()) return false;
    const auto& a = adj_[u];
    return std::binary_search(a.begin(), a.end(), v);
}

void Graph::add_edge(int u, int v) {
    int n = vertex_count();
    if (u < 0 || u >= n || v < 0 || v >= n)
        throw std::invalid_argument("edge endpoint out of range");
    if (u == v) throw std::invalid_argument("loop edge");
    if (has_edge(u, v)) throw std::invalid_argument("duplicate edge");
    adj_[u].insert(std::upper_bound(adj_[u].begin(), adj_[u].end(), v), v);
    adj_[v].insert(std::upper_bound(adj_[v].begin(), adj_[v].end(), u), u);
    ++edge_count_;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(edge_count_);
    for (int u = 0; u < vertex_count(); ++u)
        for (int v : adj_[u])
            if (u < v) out.emplace_back(u, v);
    return out;
}

namespace {

struct Line {
    std::string text;
    int number;
};

// Data lines with comments and blanks stripped, line numbers preserved.
std::vector<Line> data_lines(const std::string& text) {
    std::vector<Line> out;
    std::istringstream in(text);
    std::string line;
    int number = 0;
    while (std::getline(in, line)) {
        ++number;
        size_t start = line.find_first_not_of(" \t\r");
        if (start == std::string::npos || line[start] == '#') continue;
        out.push_back({line, number});
    }
    return out;
}

std::vector<long long> parse_ints(const Line& ln, const std::string& what) {
    std::istringstream in(ln.text);
    std::vector<long long> vals;
    long long x;
    while (in >> x) vals.push_back(x);
    std::string rest;
    if (in.clear(), in >> rest)
        throw ParseError("malformed " + what + ": unexpected token '" + rest + "'", ln.number);
    return vals;
}

Graph parse_graph_lines(const std::vector<Line>& lines, size_t header,
                        std::optional<std::vector<int>>* left_out) {
    if (header >= lines.size()) throw ParseError("missing 'n m' header", 1);
    auto hdr = parse_ints(lines[header], "header");
    if (hdr.size() != 2 || hdr[0] < 0 || hdr[1] < 0)
        throw ParseError("malformed header, expected 'n m'", lines[header].number);
    int n = static_cast<int>(hdr[0]);
    long long m = hdr[1];
    Graph g(n);
    size_t idx = header + 1;

    if (left_out && idx < lines.size()) {
        std::istringstream probe(lines[idx].text);
        std::string tag;
        probe >> tag;
        if (tag == "L") {
            std::vector<int> left;
            long long v;
            while (probe >> v) {
                if (v < 0 || v >= n)
                    throw ParseError("left-part vertex out of range", lines[idx].number);
                left.push_back(static_cast<int>(v));
            }
            std::sort(left.begin(), left.end());
            if (std::adjacent_find(left.begin(), left.end()) != left.end())
                throw ParseError("duplicate vertex in left part", lines[idx].number);
            *left_out = left;
            ++idx;
        }
    }

    for (long long e = 0; e < m; ++e, ++idx) {
        if (idx >= lines.size())
            throw ParseError("expected " + std::to_string(m) + " edges, got " +
                                 std::to_string(e),
                             lines.empty() ? 1 : lines.back().number);
        auto vals = parse_ints(lines[idx], "edge");
        if (vals.size() != 2)
            throw ParseError("malformed edge, expected 'u v'", lines[idx].number);
        long long u = vals[0], v = vals[1];
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw ParseError("vertex id out of range", lines[idx].number);
        if (u == v) throw ParseError("loop edge", lines[idx].number);
        if (g.has_edge(static_cast<int>(u), static_cast<int>(v)))
            throw ParseError("duplicate edge", lines[idx].number);
        g.add_edge(static_cast<int>(u), static_cast<int>(v));
    }
    if (idx < lines.size())
        throw ParseError("unexpected extra line", lines[idx].number);
    return g;
}

}  // namespace

Graph parse_graph(const std::string& text) {
    return parse_graph_lines(data_lines(text), 0, nullptr);
}

std::string serialize_graph(const Graph& g) {
    std::ostringstream out;
    out << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
    return out.str();
}

BipartiteInstance parse_bipartite(const std::string& text) {
    std::optional<std::vector<int>> left;
    Graph g = parse_graph_lines(data_lines(text), 0, &left);
    if (!left) {
        auto result = bipartition(g);
        if (std::holds_alternative<Walk>(result))
            throw UnsupportedError("graph is not bipartite (odd cycle found)");
        return std::get<BipartiteInstance>(result);
    }
    BipartiteInstance b;
    b.graph = g;
    b.left = *left;
    std::vector<bool> in_left(g.vertex_count(), false);
    for (int v : b.left) in_left[v] = true;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (!in_left[v]) b.right.push_back(v);
    for (auto [u, v] : g.edges())
        if (in_left[u] == in_left[v])
            throw UnsupportedError("declared left part is not independent from right");
    return b;
}

std::string serialize_bipartite(const BipartiteInstance& b) {
    std::ostringstream out;
    out << b.graph.vertex_count() << ' ' << b.graph.edge_count() << '\n';
    out << 'L';
    for (int v : b.left) out << ' ' << v;
    out << '\n';
    for (auto [u, v] : b.graph.edges()) out << u << ' ' << v << '\n';
    return out.str();
}

bool is_walk(const Graph& g, const Walk& w) {
    if (w.empty()) return false;
    for (int v : w)
        if (v < 0 || v >= g.vertex_count()) return false;
    for (size_t i = 0; i + 1 < w.size(); ++i)
        if (!g.has_edge(w[i], w[i + 1])) return false;
    return true;
}

bool is_nc_walk(const Graph& g, const Walk& w) {
    if (!is_walk(g, w)) throw std::invalid_argument("not a walk in the graph");
    for (size_t i = 1; i + 1 < w.size(); ++i)
        if (w[i - 1] == w[i + 1]) return false;
    return true;
}

bool is_square_free(const Graph& g) {
    int n = g.vertex_count();
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            int common = 0;
            const auto& nu = g.neighbors(u);
            const auto& nv = g.neighbors(v);
            size_t i = 0, j = 0;
            while (i < nu.size() && j < nv.size()) {
                if (nu[i] == nv[j]) { ++common; ++i; ++j; }
                else if (nu[i] < nv[j]) ++i;
                else ++j;
            }
            if (common > 1) return false;
        }
    }
    return true;
}

bool is_star(const Graph& g) {
    int n = g.vertex_count();
    if (n == 0) return false;
    if (n == 1) return true;  // K_{1,0}
    if (!is_connected(g)) return false;
    if (g.edge_count() != n - 1) return false;
    for (int v = 0; v < n; ++v)
        if (g.degree(v) == n - 1) return true;
    return false;
}

int star_leaf_count(const Graph& g) {
    if (!is_star(g)) throw std::invalid_argument("not a star");
    return g.vertex_count() - 1;
}

std::variant<BipartiteInstance, Walk> bipartition(const Graph& g) {
    int n = g.vertex_count();
    std::vector<int> color(n, -1), parent(n, -1), depth(n, 0);
    BipartiteInstance b;
    b.graph = g;
    for (int root = 0; root < n; ++root) {
        if (color[root] != -1) continue;
        color[root] = 0;
        std::queue<int> q;
        q.push(root);
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            for (int v : g.neighbors(u)) {
                if (color[v] == -1) {
                    color[v] = 1 - color[u];
                    parent[v] = u;
                    depth[v] = depth[u] + 1;
                    q.push(v);
                } else if (color[v] == color[u]) {
                    // Odd cycle: join the two tree paths at their meeting point.
                    std::vector<int> pu, pv;
                    int a = u, c = v;
                    while (depth[a] > depth[c]) { pu.push_back(a); a = parent[a]; }
                    while (depth[c] > depth[a]) { pv.push_back(c); c = parent[c]; }
                    while (a != c) {
                        pu.push_back(a); a = parent[a];
                        pv.push_back(c); c = parent[c];
                    }
                    Walk cycle;
                    cycle.push_back(a);
                    for (auto it = pu.rbegin(); it != pu.rend(); ++it) cycle.push_back(*it);
                    for (int x : pv) cycle.push_back(x);
                    cycle.push_back(a);
                    // Walk runs a..u, v..a; the u-v edge closes it.
                    std::reverse(cycle.begin(), cycle.end());
                    return cycle;
                }
            }
        }
    }
    for (int v = 0; v < n; ++v)
        (color[v] == 0 ? b.left : b.right).push_back(v);
    return b;
}

std::optional<Walk> shortest_path(const Graph& g, int u, int v) {
    int n = g.vertex_count();
    if (u < 0 || u >= n || v < 0 || v >= n)
        throw std::invalid_argument("vertex out of range");
    std::vector<int> dist(n, -1);
    dist[v] = 0;
    std::queue<int> q;
    q.push(v);
    while (!q.empty()) {
        int x = q.front();
        q.pop();
        for (int y : g.neighbors(x))
            if (dist[y] == -1) { dist[y] = dist[x] + 1; q.push(y); }
    }
    if (dist[u] == -1) return std::nullopt;
    // Greedy descent toward v picks the lexicographically smallest path.
    Walk w{u};
    int cur = u;
    while (cur != v) {
        for (int y : g.neighbors(cur)) {
            if (dist[y] == dist[cur] - 1) { cur = y; break; }
        }
        w.push_back(cur);
    }
    return w;
}

namespace {

// Lex-smallest simple cycle of exactly `len` edges starting at `start`;
// non-start vertices are restricted to ids > floor when floor >= 0.
bool find_cycle_exact(const Graph& g, int start, int len, int floor, Walk& path,
                      std::vector<bool>& used) {
    int depth = static_cast<int>(path.size()) - 1;
    int cur = path.back();
    if (depth == len - 1) {
        if (g.has_edge(cur, start)) {
            path.push_back(start);
            return true;
        }
        return false;
    }
    for (int y : g.neighbors(cur)) {
        if (y == start || used[y] || y <= floor) continue;
        used[y] = true;
        path.push_back(y);
        if (find_cycle_exact(g, start, len, floor, path, used)) return true;
        path.pop_back();
        used[y] = false;
    }
    return false;
}

std::optional<Walk> shortest_cycle_from(const Graph& g, int start, int floor) {
    int n = g.vertex_count();
    std::vector<bool> used(n, false);
    for (int len = 3; len <= n; ++len) {
        Walk path{start};
        if (find_cycle_exact(g, start, len, floor, path, used)) return path;
    }
    return std::nullopt;
}

}  // namespace

std::optional<Walk> shortest_cycle_through(const Graph& g, int v) {
    if (v < 0 || v >= g.vertex_count())
        throw std::invalid_argument("vertex out of range");
    return shortest_cycle_from(g, v, -1);
}

std::optional<Walk> shortest_cycle(const Graph& g) {
    std::optional<Walk> best;
    for (int v = 0; v < g.vertex_count(); ++v) {
        auto c = shortest_cycle_from(g, v, v);
        if (c && (!best || c->size() < best->size())) best = c;
    }
    return best;
}

std::vector<std::vector<int>> components(const Graph& g) {
    int n = g.vertex_count();
    std::vector<int> comp(n, -1);
    std::vector<std::vector<int>> out;
    for (int root = 0; root < n; ++root) {
        if (comp[root] != -1) continue;
        int id = static_cast<int>(out.size());
        out.emplace_back();
        std::deque<int> stack{root};
        comp[root] = id;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            out[id].push_back(u);
            for (int v : g.neighbors(u))
                if (comp[v] == -1) { comp[v] = id; stack.push_back(v); }
        }
        std::sort(out[id].begin(), out[id].end());
    }
    return out;
}

bool is_connected(const Graph& g) { return components(g).size() <= 1; }

bool is_tree(const Graph& g) {
    return is_connected(g) && g.edge_count() == g.vertex_count() - 1;
}

}  // namespace modhom
