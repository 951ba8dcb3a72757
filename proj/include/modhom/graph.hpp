#pragma once

#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace modhom {

// Loopless simple undirected graph. Vertices are dense ids 0..n-1,
// adjacency lists are kept sorted.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);
    static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

    int vertex_count() const { return static_cast<int>(adj_.size()); }
    int edge_count() const { return edge_count_; }
    int degree(int v) const { return static_cast<int>(adj_[v].size()); }
    const std::vector<int>& neighbors(int v) const { return adj_[v]; }
    bool has_edge(int u, int v) const;
    void add_edge(int u, int v);  // throws on loop, duplicate, or out-of-range
    std::vector<std::pair<int, int>> edges() const;  // sorted, u < v

    bool operator==(const Graph&) const = default;

private:
    std::vector<std::vector<int>> adj_;
    int edge_count_ = 0;
};

// A walk is its vertex sequence; a walk of length k has k+1 entries.
using Walk = std::vector<int>;

struct BipartiteInstance {
    Graph graph;
    std::vector<int> left;   // sorted
    std::vector<int> right;  // sorted
};

Graph parse_graph(const std::string& text);
std::string serialize_graph(const Graph& g);

// Bipartite graph file; honors an optional "L u1 u2 ..." line fixing the
// left part, otherwise bipartition() is applied.
BipartiteInstance parse_bipartite(const std::string& text);
std::string serialize_bipartite(const BipartiteInstance& b);

bool is_walk(const Graph& g, const Walk& w);
// True iff the walk never immediately retraces an edge. Throws on non-walks.
bool is_nc_walk(const Graph& g, const Walk& w);

// No two distinct vertices share more than one common neighbor.
bool is_square_free(const Graph& g);

// Isomorphic to K_{1,n} for some n >= 0; a single vertex is K_{1,0}.
bool is_star(const Graph& g);
// Number of leaves n of a star K_{1,n}; only valid when is_star holds.
int star_leaf_count(const Graph& g);

// Two-coloring per component with the component's smallest vertex in the
// left part; on failure returns an odd cycle as a closed walk.
std::variant<BipartiteInstance, Walk> bipartition(const Graph& g);

// Lexicographically smallest shortest path, or nullopt if disconnected.
std::optional<Walk> shortest_path(const Graph& g, int u, int v);

// Shortest simple cycle through v as a closed walk v,...,v of length >= 3,
// lexicographically smallest; nullopt if v is on no cycle.
std::optional<Walk> shortest_cycle_through(const Graph& g, int v);

// Girth witness: shortest simple cycle overall, anchored at its smallest
// vertex and lexicographically smallest; nullopt for forests.
std::optional<Walk> shortest_cycle(const Graph& g);

std::vector<std::vector<int>> components(const Graph& g);
bool is_connected(const Graph& g);
bool is_tree(const Graph& g);

}  // namespace modhom
