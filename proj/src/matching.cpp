#include "parfact/matching.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <string>

#include "parfact/errors.hpp"

namespace parfact {

namespace {

// Augmenting-path search with blossom contraction tracked through base[].
// Contracted blossoms are never expanded structurally; flipping the matching
// along parent links restores consistency inside them.
class BlossomMatcher {
public:
    explicit BlossomMatcher(const Graph& g)
        : g_(g),
          n_(g.vertex_count()),
          match_(n_, -1),
          parent_(n_, -1),
          base_(n_),
          in_queue_(n_, 0),
          in_blossom_(n_, 0),
          lca_seen_(n_, 0) {}

    std::vector<int> run() {
        // Greedy seed: lowest free neighbor, vertices ascending.
        for (int v = 0; v < n_; ++v) {
            if (match_[v] != -1) continue;
            for (int w : g_.neighbors(v)) {
                if (match_[w] == -1) {
                    match_[v] = w;
                    match_[w] = v;
                    break;
                }
            }
        }
        for (int v = 0; v < n_; ++v)
            if (match_[v] == -1) grow_tree_from(v);
        return match_;
    }

private:
    bool grow_tree_from(int root) {
        std::fill(parent_.begin(), parent_.end(), -1);
        std::fill(in_queue_.begin(), in_queue_.end(), 0);
        std::iota(base_.begin(), base_.end(), 0);
        queue_.clear();

        queue_.push_back(root);
        in_queue_[root] = 1;
        for (std::size_t head = 0; head < queue_.size(); ++head) {
            const int v = queue_[head];
            for (int to : g_.neighbors(v)) {
                if (base_[v] == base_[to] || match_[v] == to) continue;
                if (to == root || (match_[to] != -1 && parent_[match_[to]] != -1)) {
                    contract_blossom(v, to);
                } else if (parent_[to] == -1) {
                    parent_[to] = v;
                    if (match_[to] == -1) {
                        augment_along(to);
                        return true;
                    }
                    const int next = match_[to];
                    if (!in_queue_[next]) {
                        in_queue_[next] = 1;
                        queue_.push_back(next);
                    }
                }
            }
        }
        return false;
    }

    int lowest_common_base(int a, int b) {
        ++timer_;
        for (;;) {
            a = base_[a];
            lca_seen_[a] = timer_;
            if (match_[a] == -1) break;
            a = parent_[match_[a]];
        }
        for (;;) {
            b = base_[b];
            if (lca_seen_[b] == timer_) return b;
            b = parent_[match_[b]];
        }
    }

    void mark_path(int v, int stem, int child) {
        while (base_[v] != stem) {
            in_blossom_[base_[v]] = 1;
            in_blossom_[base_[match_[v]]] = 1;
            parent_[v] = child;
            child = match_[v];
            v = parent_[match_[v]];
        }
    }

    void contract_blossom(int u, int v) {
        const int stem = lowest_common_base(u, v);
        std::fill(in_blossom_.begin(), in_blossom_.end(), 0);
        mark_path(u, stem, v);
        mark_path(v, stem, u);
        for (int i = 0; i < n_; ++i) {
            if (!in_blossom_[base_[i]]) continue;
            base_[i] = stem;
            if (!in_queue_[i]) {
                in_queue_[i] = 1;
                queue_.push_back(i);
            }
        }
    }

    void augment_along(int v) {
        while (v != -1) {
            const int pv = parent_[v];
            const int next = match_[pv];
            match_[v] = pv;
            match_[pv] = v;
            v = next;
        }
    }

    const Graph& g_;
    int n_;
    std::vector<int> match_;
    std::vector<int> parent_;
    std::vector<int> base_;
    std::vector<char> in_queue_;
    std::vector<char> in_blossom_;
    std::vector<int> lca_seen_;
    std::vector<int> queue_;
    int timer_ = 0;
};

} // namespace

Matching maximum_matching(const Graph& g) {
    const std::vector<int> mate = BlossomMatcher(g).run();
    Matching m;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (mate[v] > v) m.edges.emplace_back(v, mate[v]);
    PARFACT_CHECK(is_valid_matching(g, m));
    return m;
}

bool has_perfect_matching(const Graph& g) {
    return 2 * maximum_matching(g).size() == g.vertex_count();
}

int brute_force_matching(const Graph& g, int max_n) {
    require(max_n >= 0 && max_n <= 22, errc::bad_params, "max_n must lie in [0,22]");
    const int n = g.vertex_count();
    if (n > max_n)
        fail(errc::too_large, "n=" + std::to_string(n) + " exceeds max_n=" + std::to_string(max_n));

    std::vector<std::uint32_t> nbr(n, 0);
    for (auto [u, v] : g.edges()) {
        nbr[u] |= std::uint32_t(1) << v;
        nbr[v] |= std::uint32_t(1) << u;
    }

    std::vector<signed char> dp(std::size_t(1) << n, 0);
    for (std::uint32_t mask = 1; mask < dp.size(); ++mask) {
        const int v = std::countr_zero(mask);
        const std::uint32_t rest = mask ^ (std::uint32_t(1) << v);
        signed char best = dp[rest]; // v stays unmatched
        std::uint32_t partners = nbr[v] & rest;
        while (partners) {
            const int u = std::countr_zero(partners);
            partners &= partners - 1;
            best = std::max<signed char>(
                best, static_cast<signed char>(1 + dp[rest ^ (std::uint32_t(1) << u)]));
        }
        dp[mask] = best;
    }
    return dp[(std::size_t(1) << n) - 1];
}

bool is_valid_matching(const Graph& g, const Matching& m) {
    std::vector<char> used(g.vertex_count(), 0);
    for (auto [u, v] : m.edges) {
        if (!g.has_edge(u, v)) return false;
        if (used[u] || used[v]) return false;
        used[u] = used[v] = 1;
    }
    return true;
}

} // namespace parfact
