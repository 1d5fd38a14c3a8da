#include "parfact/parity.hpp"

#include <algorithm>
#include <functional>
#include <string>

#include "parfact/errors.hpp"

namespace parfact {

namespace {

// Quantities stay below |f|_max * n; the constructors cap f so all arithmetic
// here fits comfortably in long long.
constexpr int kMaxBound = 1'000'000'000;

void check_pair(int g, int f, int v) {
    if (g < 0 || f < 0)
        fail(errc::bad_parity, "negative bound at vertex " + std::to_string(v));
    if (f > kMaxBound)
        fail(errc::bad_parity, "bound too large at vertex " + std::to_string(v));
    if (g > f)
        fail(errc::bad_parity, "g > f at vertex " + std::to_string(v));
    if (((g ^ f) & 1) != 0)
        fail(errc::bad_parity, "g and f differ mod 2 at vertex " + std::to_string(v));
}

void require_spec_size(const Graph& g, const ParitySpec& spec) {
    require(spec.size() == g.vertex_count(), errc::bad_params,
            "spec size does not match vertex count");
}

VertexSet merged(const VertexSet& a, const VertexSet& b) {
    VertexSet out;
    out.reserve(a.size() + b.size());
    std::merge(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

// All subsets of 0..n-1 in lexicographic order of their sorted sequences:
// {}, {0}, {0,1}, {0,1,2}, ..., {1}, {1,2}, ...
std::vector<VertexSet> subsets_lex(int n) {
    std::vector<VertexSet> out;
    out.reserve(std::size_t(1) << n);
    VertexSet prefix;
    auto walk = [&](auto&& self, int next) -> void {
        out.push_back(prefix);
        for (int v = next; v < n; ++v) {
            prefix.push_back(v);
            self(self, v + 1);
            prefix.pop_back();
        }
    };
    walk(walk, 0);
    return out;
}

// Size-k subsets of the sorted pool, lexicographic, fed to visit until it
// returns true; returns true when some call did.
bool for_each_combination(const VertexSet& pool, int k,
                          const std::function<bool(const VertexSet&)>& visit) {
    const int n = static_cast<int>(pool.size());
    if (k > n) return false;
    VertexSet chosen(k);
    auto walk = [&](auto&& self, int start, int depth) -> bool {
        if (depth == k) return visit(chosen);
        for (int i = start; i <= n - (k - depth); ++i) {
            chosen[depth] = pool[i];
            if (self(self, i + 1, depth + 1)) return true;
        }
        return false;
    };
    if (k == 0) return visit(VertexSet{});
    return walk(walk, 0, 0);
}

} // namespace

ParitySpec ParitySpec::uniform(int n, int a, int b) {
    require(n >= 0, errc::bad_params, "spec size must be non-negative");
    check_pair(a, b, 0);
    return ParitySpec(std::vector<int>(n, a), std::vector<int>(n, b),
                      std::make_pair(a, b));
}

ParitySpec ParitySpec::general(std::vector<int> g, std::vector<int> f) {
    require(g.size() == f.size(), errc::bad_params, "g and f must have equal length");
    for (std::size_t v = 0; v < g.size(); ++v) check_pair(g[v], f[v], static_cast<int>(v));
    return ParitySpec(std::move(g), std::move(f), std::nullopt);
}

long long ParitySpec::g_total() const {
    long long sum = 0;
    for (int value : g_) sum += value;
    return sum;
}

std::vector<VertexSet> g_odd_components(const Graph& g, const ParitySpec& spec,
                                        const VertexSet& s, const VertexSet& t) {
    require_spec_size(g, spec);
    require_vertex_set(g, s, "S");
    require_vertex_set(g, t, "T");
    require_disjoint(s, t);

    std::vector<char> in_t(g.vertex_count(), 0);
    for (int v : t) in_t[v] = 1;

    std::vector<VertexSet> odd;
    for (auto& comp : components_excluding(g, merged(s, t))) {
        long long weight = 0;
        for (int v : comp) {
            weight += spec.g(v);
            for (int w : g.neighbors(v))
                if (in_t[w]) ++weight;
        }
        if (weight % 2 == 1) odd.push_back(std::move(comp));
    }
    return odd;
}

long long eta(const Graph& g, const ParitySpec& spec, const VertexSet& s, const VertexSet& t) {
    const long long q = static_cast<long long>(g_odd_components(g, spec, s, t).size());

    std::vector<char> in_s(g.vertex_count(), 0);
    for (int v : s) in_s[v] = 1;

    long long value = -q;
    for (int v : s) value += spec.f(v);
    for (int x : t) {
        value -= spec.g(x);
        for (int w : g.neighbors(x))
            if (!in_s[w]) ++value;
    }
    return value;
}

std::optional<Certificate> certificate_search(const Graph& g, const ParitySpec& spec,
                                              int max_n) {
    require_spec_size(g, spec);
    const int n = g.vertex_count();
    if (n > max_n)
        fail(errc::too_large, "n=" + std::to_string(n) + " exceeds max_n=" + std::to_string(max_n));

    const std::vector<VertexSet> subsets = subsets_lex(n);
    std::optional<Certificate> found;

    for (int total = 0; total <= n && !found; ++total) {
        for (const VertexSet& s : subsets) {
            const int t_size = total - static_cast<int>(s.size());
            if (t_size < 0) continue;
            VertexSet pool;
            pool.reserve(n - s.size());
            for (int v = 0; v < n; ++v)
                if (!set_contains(s, v)) pool.push_back(v);
            const bool hit = for_each_combination(pool, t_size, [&](const VertexSet& t) {
                const long long value = eta(g, spec, s, t);
                if (value < 0) {
                    found = Certificate{s, t, value, g_odd_components(g, spec, s, t)};
                    return true;
                }
                return false;
            });
            if (hit) break;
        }
    }

    if (found) PARFACT_CHECK(verify_certificate(g, spec, *found));
    return found;
}

std::optional<AmahashiCertificate> amahashi_search(const Graph& g, int k, int max_n) {
    require(k >= 1, errc::bad_params, "k must be positive");
    require(k % 2 == 1, errc::even_k, "k=" + std::to_string(k));
    const int n = g.vertex_count();
    if (n > max_n)
        fail(errc::too_large, "n=" + std::to_string(n) + " exceeds max_n=" + std::to_string(max_n));

    VertexSet all(n);
    for (int v = 0; v < n; ++v) all[v] = v;

    std::optional<AmahashiCertificate> found;
    for (int size = 0; size <= n && !found; ++size) {
        for_each_combination(all, size, [&](const VertexSet& s) {
            long long odd = 0;
            for (const auto& comp : components_excluding(g, s))
                if (comp.size() % 2 == 1) ++odd;
            if (odd > static_cast<long long>(k) * size) {
                found = AmahashiCertificate{s, odd};
                return true;
            }
            return false;
        });
    }
    return found;
}

std::optional<std::vector<Edge>> brute_force_factor(const Graph& g, const ParitySpec& spec,
                                                    int max_edges) {
    require_spec_size(g, spec);
    require(max_edges >= 0 && max_edges <= 30, errc::bad_params,
            "max_edges must lie in [0,30]");
    const int n = g.vertex_count();
    const int m = g.edge_count();
    if (m > max_edges)
        fail(errc::too_large,
             "m=" + std::to_string(m) + " exceeds max_edges=" + std::to_string(max_edges));

    std::vector<int> deg(n, 0);
    auto good = [&](int v) {
        const int d = deg[v];
        return spec.g(v) <= d && d <= spec.f(v) && ((d ^ spec.f(v)) & 1) == 0;
    };
    int good_count = 0;
    for (int v = 0; v < n; ++v)
        if (good(v)) ++good_count;

    const std::uint32_t limit = std::uint32_t(1) << m;
    std::uint32_t mask = 0;
    for (;;) {
        if (good_count == n) {
            std::vector<Edge> factor;
            for (int e = 0; e < m; ++e)
                if (mask & (std::uint32_t(1) << e)) factor.push_back(g.edges()[e]);
            return factor;
        }
        if (mask + 1 == limit || m == 0) break;
        std::uint32_t flips = mask ^ (mask + 1);
        for (int e = 0; e < m && flips; ++e) {
            const std::uint32_t bit = std::uint32_t(1) << e;
            if (!(flips & bit)) continue;
            flips &= ~bit;
            auto [u, v] = g.edges()[e];
            const int delta = (mask & bit) ? -1 : +1;
            for (int x : {u, v}) {
                if (good(x)) --good_count;
                deg[x] += delta;
                if (good(x)) ++good_count;
            }
        }
        ++mask;
    }
    return std::nullopt;
}

bool verify_certificate(const Graph& g, const ParitySpec& spec, const Certificate& cert) {
    if (cert.eta >= 0) return false;
    if (eta(g, spec, cert.s, cert.t) != cert.eta) return false;
    return g_odd_components(g, spec, cert.s, cert.t) == cert.odd_components;
}

} // namespace parfact
