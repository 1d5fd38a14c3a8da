#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace parfact {

// Sorted, duplicate-free list of vertex ids.
using VertexSet = std::vector<int>;

using Edge = std::pair<int, int>;

// Immutable simple undirected graph. Vertices are 0..n-1, neighbor lists are
// sorted ascending, and the edge list is canonical: (u,v) with u < v, sorted
// lexicographically.
class Graph {
public:
    static Graph build(int n, const std::vector<Edge>& edge_pairs);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }
    const std::vector<int>& neighbors(int v) const { return adj_[v]; }
    int degree(int v) const { return static_cast<int>(adj_[v].size()); }
    bool has_edge(int u, int v) const;
    bool has_vertex(int v) const { return 0 <= v && v < n_; }

private:
    Graph(int n, std::vector<std::vector<int>> adj, std::vector<Edge> edges);

    int n_ = 0;
    std::vector<std::vector<int>> adj_;
    std::vector<Edge> edges_;
};

// VertexSet helpers. A set is canonical for g when it is strictly increasing
// and every id is a vertex of g.
bool set_contains(const VertexSet& s, int v);
void require_vertex_set(const Graph& g, const VertexSet& s, const char* what);
void require_disjoint(const VertexSet& a, const VertexSet& b);

// d_{G-S}(v): neighbors of v outside the excluded set.
int degree_excluding(const Graph& g, int v, const VertexSet& excluded);

// Connected components of the subgraph induced on V(G) \ removed, each
// component sorted, list ordered by smallest contained vertex.
std::vector<VertexSet> components_excluding(const Graph& g, const VertexSet& removed);

// e_G(A,B): edges with one end in A and the other in B (A, B disjoint).
long long edges_between(const Graph& g, const VertexSet& a, const VertexSet& b);

int min_degree(const Graph& g);

// All unordered pairs u < v with uv not an edge, lexicographic.
std::vector<Edge> nonadjacent_pairs(const Graph& g);

bool is_connected(const Graph& g);

// Deterministic generators.
Graph complete_graph(int n);
Graph cycle_graph(int n);
Graph path_graph(int n);
Graph complete_bipartite(int left, int right);

// G(n,p) with exact rational p = p_num/p_den, one independent draw per pair
// (u,v) in lexicographic order. Fixed (n, p_num, p_den, seed) reproduces the
// same edge list on every platform.
Graph gnp_graph(int n, std::uint64_t p_num, std::uint64_t p_den, std::uint64_t seed);

enum class GraphModel { complete, cycle, path, complete_bipartite, gnp };

struct GenParams {
    int n = 0;
    int left = 0;  // complete_bipartite
    int right = 0; // complete_bipartite
    std::uint64_t p_num = 0; // gnp
    std::uint64_t p_den = 1; // gnp
};

Graph generate(GraphModel model, const GenParams& params, std::uint64_t seed);

} // namespace parfact
