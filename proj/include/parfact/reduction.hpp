#pragma once

#include <string>
#include <utility>
#include <vector>

#include "parfact/graph.hpp"
#include "parfact/matching.hpp"
#include "parfact/parity.hpp"

namespace parfact {

// Spec with f capped to the realizable range at each vertex: f'(v) = g(v) +
// 2*floor((min(f(v), d(v)) - g(v)) / 2). Vertices with g(v) > d(v) cannot be
// satisfied and are listed instead (their f' is pinned to g). Clamping never
// changes factor existence.
struct ClampedSpec {
    ParitySpec spec;
    VertexSet infeasible;
};

ClampedSpec clamp_spec(const Graph& g, const ParitySpec& spec);

// Tutte-style gadget whose perfect matchings encode parity factors. Each
// original edge becomes two external nodes joined by a twin edge; vertex v
// adds d(v) - g'(v) internal nodes adjacent to all of v's externals, with
// (f'(v) - g'(v))/2 disjoint pair edges among consecutive internals. A
// perfect matching that keeps k pair edges at v leaves g'(v) + 2k externals
// matched through twins, so the factor degree at v is g'(v) + 2k.
struct GadgetGraph {
    Graph gadget;
    std::vector<std::pair<int, int>> external_of; // node -> (vertex, edge index); nodes 0..2m-1
    std::vector<int> internal_of;                 // node -> vertex, -1 for externals
    std::vector<Edge> twin_edges;                 // index j = original edge j
    std::vector<Edge> pair_edges;

    // Originating instance, so extraction needs no extra context.
    int original_n = 0;
    std::vector<Edge> original_edges;
    std::vector<int> g_clamped;
    std::vector<int> f_clamped;

    bool is_external(int node) const { return node < static_cast<int>(external_of.size()); }
};

GadgetGraph build_gadget(const Graph& g, const ClampedSpec& clamped);

// Original edges whose twin edge lies in the perfect matching. Asserts the
// per-vertex degree realization g'(v) + 2 * (pair edges kept at v).
std::vector<Edge> extract_factor(const GadgetGraph& gg, const Matching& pm);

// Node-map sidecar for debug dumps of the gadget.
std::string format_gadget_map(const GadgetGraph& gg);

} // namespace parfact
