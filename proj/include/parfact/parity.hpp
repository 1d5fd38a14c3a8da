#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "parfact/graph.hpp"

namespace parfact {

// Per-vertex degree bounds g <= f with g(v) == f(v) (mod 2). A factor F then
// has to satisfy g(v) <= d_F(v) <= f(v) and d_F(v) == f(v) (mod 2).
class ParitySpec {
public:
    static ParitySpec uniform(int n, int a, int b);
    static ParitySpec general(std::vector<int> g, std::vector<int> f);

    int size() const { return static_cast<int>(g_.size()); }
    int g(int v) const { return g_[v]; }
    int f(int v) const { return f_[v]; }
    const std::vector<int>& g_values() const { return g_; }
    const std::vector<int>& f_values() const { return f_; }
    long long g_total() const;

    // Set when built by uniform().
    std::optional<std::pair<int, int>> uniform_ab() const { return uniform_; }

private:
    ParitySpec(std::vector<int> g, std::vector<int> f, std::optional<std::pair<int, int>> ab)
        : g_(std::move(g)), f_(std::move(f)), uniform_(ab) {}

    std::vector<int> g_;
    std::vector<int> f_;
    std::optional<std::pair<int, int>> uniform_;
};

// Witness that eta(S,T) < 0, i.e. no (g,f)-parity factor exists.
struct Certificate {
    VertexSet s;
    VertexSet t;
    long long eta = 0;
    std::vector<VertexSet> odd_components;
};

// Witness that c_o(G-S) > k|S|, i.e. no (1,k)-odd factor exists.
struct AmahashiCertificate {
    VertexSet s;
    long long odd_component_count = 0;
};

// Components C of G-S-T with g(V(C)) + e_G(V(C),T) odd ("g-odd components").
std::vector<VertexSet> g_odd_components(const Graph& g, const ParitySpec& spec,
                                        const VertexSet& s, const VertexSet& t);

// Deficiency eta(S,T) = f(S) - g(T) + sum_{x in T} d_{G-S}(x) - q(S,T).
// Nonnegative over all disjoint S,T exactly when a parity factor exists.
long long eta(const Graph& g, const ParitySpec& spec, const VertexSet& s, const VertexSet& t);

// Exhaustive search over all 3^n disjoint pairs (S,T); returns the first
// violating pair in the order |S|+|T| ascending, then S, then T (subsets
// compared lexicographically as sorted sequences). max_n guards the blowup.
std::optional<Certificate> certificate_search(const Graph& g, const ParitySpec& spec,
                                              int max_n = 12);

// Exhaustive check of c_o(G-S) <= k|S| over all S, k odd; first violating S
// by |S| ascending then lexicographic.
std::optional<AmahashiCertificate> amahashi_search(const Graph& g, int k, int max_n = 20);

// Independent oracle: enumerate all 2^m spanning subgraphs in ascending
// edge-bitmask order and return the first one meeting the spec.
std::optional<std::vector<Edge>> brute_force_factor(const Graph& g, const ParitySpec& spec,
                                                    int max_edges = 18);

// Recomputation check for a Certificate against its graph and spec.
bool verify_certificate(const Graph& g, const ParitySpec& spec, const Certificate& cert);

} // namespace parfact
