#include "parfact/graph.hpp"

#include <algorithm>
#include <string>

#include "parfact/errors.hpp"
#include "parfact/rng.hpp"

namespace parfact {

const char* errc_name(errc code) {
    switch (code) {
        case errc::self_loop: return "SelfLoop";
        case errc::duplicate_edge: return "DuplicateEdge";
        case errc::vertex_out_of_range: return "VertexOutOfRange";
        case errc::empty_graph: return "EmptyGraph";
        case errc::bad_params: return "BadParams";
        case errc::vertex_in_excluded: return "VertexInExcluded";
        case errc::overlapping_sets: return "OverlappingSets";
        case errc::too_large: return "TooLarge";
        case errc::even_k: return "EvenK";
        case errc::k_too_small: return "KTooSmall";
        case errc::bad_range: return "BadRange";
        case errc::bad_parity: return "BadParity";
        case errc::bad_m: return "BadM";
        case errc::infeasible_vertex: return "InfeasibleVertex";
        case errc::not_perfect: return "NotPerfect";
        case errc::edge_not_in_graph: return "EdgeNotInGraph";
        case errc::syntax_error: return "SyntaxError";
        case errc::bad_config: return "BadConfig";
        case errc::internal: return "Internal";
    }
    return "Unknown";
}

Graph::Graph(int n, std::vector<std::vector<int>> adj, std::vector<Edge> edges)
    : n_(n), adj_(std::move(adj)), edges_(std::move(edges)) {}

Graph Graph::build(int n, const std::vector<Edge>& edge_pairs) {
    require(n >= 0, errc::bad_params, "vertex count must be non-negative");

    std::vector<Edge> edges;
    edges.reserve(edge_pairs.size());
    for (auto [u, v] : edge_pairs) {
        if (u < 0 || u >= n)
            fail(errc::vertex_out_of_range, "vertex " + std::to_string(u));
        if (v < 0 || v >= n)
            fail(errc::vertex_out_of_range, "vertex " + std::to_string(v));
        if (u == v)
            fail(errc::self_loop, "vertex " + std::to_string(u));
        edges.emplace_back(std::min(u, v), std::max(u, v));
    }
    std::sort(edges.begin(), edges.end());
    for (std::size_t i = 1; i < edges.size(); ++i) {
        if (edges[i] == edges[i - 1])
            fail(errc::duplicate_edge, "edge " + std::to_string(edges[i].first) + " " +
                                           std::to_string(edges[i].second));
    }

    std::vector<std::vector<int>> adj(n);
    for (auto [u, v] : edges) {
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    for (auto& list : adj) std::sort(list.begin(), list.end());

    std::size_t degree_sum = 0;
    for (const auto& list : adj) degree_sum += list.size();
    PARFACT_CHECK(degree_sum == 2 * edges.size());

    return Graph(n, std::move(adj), std::move(edges));
}

bool Graph::has_edge(int u, int v) const {
    if (!has_vertex(u) || !has_vertex(v) || u == v) return false;
    return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
}

bool set_contains(const VertexSet& s, int v) {
    return std::binary_search(s.begin(), s.end(), v);
}

void require_vertex_set(const Graph& g, const VertexSet& s, const char* what) {
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (!g.has_vertex(s[i]))
            fail(errc::vertex_out_of_range,
                 std::string(what) + " contains vertex " + std::to_string(s[i]));
        if (i > 0 && s[i - 1] >= s[i])
            fail(errc::bad_params, std::string(what) + " is not strictly increasing");
    }
}

void require_disjoint(const VertexSet& a, const VertexSet& b) {
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] == b[j])
            fail(errc::overlapping_sets, "vertex " + std::to_string(a[i]) + " in both sets");
        if (a[i] < b[j])
            ++i;
        else
            ++j;
    }
}

int degree_excluding(const Graph& g, int v, const VertexSet& excluded) {
    require(g.has_vertex(v), errc::vertex_out_of_range, "vertex " + std::to_string(v));
    require_vertex_set(g, excluded, "excluded set");
    if (set_contains(excluded, v))
        fail(errc::vertex_in_excluded, "vertex " + std::to_string(v));
    int count = 0;
    for (int w : g.neighbors(v))
        if (!set_contains(excluded, w)) ++count;
    return count;
}

std::vector<VertexSet> components_excluding(const Graph& g, const VertexSet& removed) {
    require_vertex_set(g, removed, "removed set");
    const int n = g.vertex_count();
    std::vector<char> blocked(n, 0), seen(n, 0);
    for (int v : removed) blocked[v] = 1;

    std::vector<VertexSet> components;
    std::vector<int> stack;
    for (int start = 0; start < n; ++start) {
        if (blocked[start] || seen[start]) continue;
        VertexSet comp;
        stack.push_back(start);
        seen[start] = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            comp.push_back(v);
            for (int w : g.neighbors(v)) {
                if (!blocked[w] && !seen[w]) {
                    seen[w] = 1;
                    stack.push_back(w);
                }
            }
        }
        std::sort(comp.begin(), comp.end());
        components.push_back(std::move(comp));
    }
    // Visiting start vertices in ascending order already yields the required
    // ordering by smallest contained vertex.
    return components;
}

long long edges_between(const Graph& g, const VertexSet& a, const VertexSet& b) {
    require_vertex_set(g, a, "set A");
    require_vertex_set(g, b, "set B");
    require_disjoint(a, b);
    const int n = g.vertex_count();
    std::vector<char> in_a(n, 0), in_b(n, 0);
    for (int v : a) in_a[v] = 1;
    for (int v : b) in_b[v] = 1;
    long long count = 0;
    for (auto [u, v] : g.edges())
        if ((in_a[u] && in_b[v]) || (in_b[u] && in_a[v])) ++count;
    return count;
}

int min_degree(const Graph& g) {
    require(g.vertex_count() >= 1, errc::empty_graph, "graph has no vertices");
    int best = g.degree(0);
    for (int v = 1; v < g.vertex_count(); ++v) best = std::min(best, g.degree(v));
    return best;
}

std::vector<Edge> nonadjacent_pairs(const Graph& g) {
    std::vector<Edge> pairs;
    for (int u = 0; u < g.vertex_count(); ++u)
        for (int v = u + 1; v < g.vertex_count(); ++v)
            if (!g.has_edge(u, v)) pairs.emplace_back(u, v);
    return pairs;
}

bool is_connected(const Graph& g) {
    return components_excluding(g, {}).size() <= 1;
}

Graph complete_graph(int n) {
    require(n >= 0, errc::bad_params, "complete: n must be non-negative");
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    return Graph::build(n, edges);
}

Graph cycle_graph(int n) {
    require(n >= 3, errc::bad_params, "cycle: n must be at least 3");
    std::vector<Edge> edges;
    for (int v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
    return Graph::build(n, edges);
}

Graph path_graph(int n) {
    require(n >= 1, errc::bad_params, "path: n must be at least 1");
    std::vector<Edge> edges;
    for (int v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
    return Graph::build(n, edges);
}

Graph complete_bipartite(int left, int right) {
    require(left >= 1 && right >= 1, errc::bad_params,
            "complete_bipartite: both part sizes must be positive");
    std::vector<Edge> edges;
    for (int u = 0; u < left; ++u)
        for (int v = 0; v < right; ++v) edges.emplace_back(u, left + v);
    return Graph::build(left + right, edges);
}

Graph gnp_graph(int n, std::uint64_t p_num, std::uint64_t p_den, std::uint64_t seed) {
    require(n >= 0, errc::bad_params, "gnp: n must be non-negative");
    require(p_den >= 1, errc::bad_params, "gnp: probability denominator must be positive");
    require(p_num <= p_den, errc::bad_params, "gnp: probability must lie in [0,1]");
    std::mt19937_64 rng(seed);
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (bounded_uniform(rng, p_den) < p_num) edges.emplace_back(u, v);
    return Graph::build(n, edges);
}

Graph generate(GraphModel model, const GenParams& params, std::uint64_t seed) {
    switch (model) {
        case GraphModel::complete: return complete_graph(params.n);
        case GraphModel::cycle: return cycle_graph(params.n);
        case GraphModel::path: return path_graph(params.n);
        case GraphModel::complete_bipartite: return complete_bipartite(params.left, params.right);
        case GraphModel::gnp: return gnp_graph(params.n, params.p_num, params.p_den, seed);
    }
    fail(errc::bad_params, "unknown graph model");
}

} // namespace parfact
