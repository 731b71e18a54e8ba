// Test-only oracles, deliberately independent of the library's algorithms:
// exhaustive DFS cycle enumeration for girth, cubic-time triple counting for
// transitive triangles, and factorial ordering search for feedback arc sets.

#ifndef GIRTHLAB_TESTS_ORACLES_HPP
#define GIRTHLAB_TESTS_ORACLES_HPP

#include <algorithm>
#include <cstdint>
#include <limits>
#include <numeric>
#include <optional>
#include <vector>

#include "girthlab/digraph.hpp"

namespace oracles {

// Enumerates every simple directed cycle (via DFS restricted to cycles whose
// minimum vertex is the start) and returns the minimum length.
inline std::optional<int> dfs_girth(const girthlab::Digraph& d) {
    int best = std::numeric_limits<int>::max();
    std::vector<bool> on_path(d.n(), false);

    auto dfs = [&](auto&& self, int start, int v, int depth) -> void {
        for (int w : d.out(v)) {
            if (w == start) {
                best = std::min(best, depth);
            } else if (w > start && !on_path[w] && depth + 1 < best) {
                on_path[w] = true;
                self(self, start, w, depth + 1);
                on_path[w] = false;
            }
        }
    };
    for (int s = 0; s < d.n(); ++s) {
        on_path[s] = true;
        dfs(dfs, s, s, 1);
        on_path[s] = false;
    }
    if (best == std::numeric_limits<int>::max())
        return std::nullopt;
    return best;
}

// Ordered triple scan: (u,v,w) with edges (u,v), (u,w), (v,w).
inline std::int64_t brute_transitive_triangles(const girthlab::Digraph& d) {
    std::int64_t total = 0;
    for (int u = 0; u < d.n(); ++u)
        for (int v = 0; v < d.n(); ++v) {
            if (v == u || !d.has_edge(u, v))
                continue;
            for (int w = 0; w < d.n(); ++w) {
                if (w == u || w == v)
                    continue;
                if (d.has_edge(u, w) && d.has_edge(v, w))
                    ++total;
            }
        }
    return total;
}

// Minimum backward-edge count over all n! orderings.
inline int brute_beta(const girthlab::Digraph& d) {
    std::vector<int> order(d.n());
    std::iota(order.begin(), order.end(), 0);
    std::vector<int> pos(d.n());
    auto edges = d.edges();
    int best = std::numeric_limits<int>::max();
    do {
        for (int i = 0; i < d.n(); ++i)
            pos[order[i]] = i;
        int backward = 0;
        for (const auto& [u, v] : edges)
            if (pos[u] > pos[v])
                ++backward;
        best = std::min(best, backward);
    } while (std::next_permutation(order.begin(), order.end()));
    return best;
}

// Small deterministic generator for property sweeps, independent of the
// library's RNG. Each unordered pair gets one of {none, i->j, j->i}.
class TestRng {
public:
    explicit TestRng(std::uint64_t seed) : state_(seed ? seed : 0x9e3779b97f4a7c15ULL) {}

    std::uint64_t next() {
        state_ ^= state_ << 13;
        state_ ^= state_ >> 7;
        state_ ^= state_ << 17;
        return state_;
    }

    std::uint64_t below(std::uint64_t bound) { return next() % bound; }

private:
    std::uint64_t state_;
};

inline girthlab::Digraph random_digon_free(int n, std::uint64_t seed,
                                           int density_percent = 50) {
    TestRng rng(seed);
    std::vector<girthlab::Edge> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            if (rng.below(100) >= static_cast<std::uint64_t>(density_percent))
                continue;
            if (rng.below(2) == 0)
                edges.emplace_back(i, j);
            else
                edges.emplace_back(j, i);
        }
    return girthlab::Digraph::from_edge_list(n, edges);
}

// Acyclicity via Kahn's algorithm; used to check FAS results.
inline bool is_acyclic_after_removal(const girthlab::Digraph& d,
                                     const std::vector<girthlab::Edge>& removed) {
    std::vector<std::vector<int>> out(d.n());
    std::vector<int> indeg(d.n(), 0);
    auto removed_sorted = removed;
    std::sort(removed_sorted.begin(), removed_sorted.end());
    for (const auto& [u, v] : d.edges()) {
        if (std::binary_search(removed_sorted.begin(), removed_sorted.end(),
                               girthlab::Edge{u, v}))
            continue;
        out[u].push_back(v);
        ++indeg[v];
    }
    std::vector<int> queue;
    for (int v = 0; v < d.n(); ++v)
        if (indeg[v] == 0)
            queue.push_back(v);
    std::size_t seen = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        ++seen;
        for (int w : out[queue[head]])
            if (--indeg[w] == 0)
                queue.push_back(w);
    }
    return seen == static_cast<std::size_t>(d.n());
}

} // namespace oracles

#endif
