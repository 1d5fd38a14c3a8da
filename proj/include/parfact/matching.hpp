#pragma once

#include "parfact/graph.hpp"

namespace parfact {

struct Matching {
    std::vector<Edge> edges; // (u,v) with u < v, sorted, pairwise disjoint
    int size() const { return static_cast<int>(edges.size()); }
};

// Maximum cardinality matching via Edmonds' blossom algorithm. Deterministic:
// greedy seed and augmenting searches scan vertices and sorted neighbor lists
// in ascending id order.
Matching maximum_matching(const Graph& g);

bool has_perfect_matching(const Graph& g);

// Independent oracle: exact maximum matching size by subset DP.
int brute_force_matching(const Graph& g, int max_n = 10);

bool is_valid_matching(const Graph& g, const Matching& m);

} // namespace parfact
