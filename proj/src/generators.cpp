#include "girthlab/generators.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <string>

namespace girthlab {

namespace {

// Bounded uniform draw by rejection so results do not depend on the
// standard library's distribution implementation.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t below(std::uint64_t bound) {
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
        std::uint64_t x;
        do {
            x = engine_();
        } while (x >= limit);
        return x % bound;
    }

    template <typename T>
    void shuffle(std::vector<T>& items) {
        for (std::size_t i = items.size(); i > 1; --i)
            std::swap(items[i - 1], items[below(i)]);
    }

private:
    std::mt19937_64 engine_;
};

// True iff a path of length <= max_len leads from `from` to `to` using only
// edges currently in `out`.
bool bounded_reach(const std::vector<std::set<int>>& out, int from, int to,
                   int max_len) {
    if (max_len <= 0)
        return false;
    std::vector<int> dist(out.size(), -1);
    std::vector<int> queue{from};
    dist[from] = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        int v = queue[head];
        if (dist[v] == max_len)
            continue;
        for (int w : out[v]) {
            if (w == to)
                return true;
            if (dist[w] < 0) {
                dist[w] = dist[v] + 1;
                queue.push_back(w);
            }
        }
    }
    return false;
}

} // namespace

Digraph circulant(int n, const std::vector<int>& offsets) {
    if (n < 1)
        throw Error(ErrorCode::BadArgument, "circulant needs n >= 1");
    std::set<int> seen;
    for (int s : offsets) {
        if (s < 1 || s > n - 1)
            throw Error(ErrorCode::BadArgument,
                        "offset " + std::to_string(s) + " outside [1," +
                            std::to_string(n - 1) + "]");
        if (!seen.insert(s).second)
            throw Error(ErrorCode::DuplicateEdge,
                        "repeated offset " + std::to_string(s));
    }
    for (int s : seen)
        if (seen.count(n - s))
            throw Error(ErrorCode::DigonOffsetPair,
                        "offsets " + std::to_string(s) + " and " +
                            std::to_string(n - s) + " form digons");
    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(n) * seen.size());
    for (int i = 0; i < n; ++i)
        for (int s : seen)
            edges.emplace_back(i, (i + s) % n);
    return Digraph::from_edge_list(n, edges);
}

Digraph random_outregular(int n, int r, std::uint64_t seed) {
    if (n < 1)
        throw Error(ErrorCode::BadArgument, "random_outregular needs n >= 1");
    if (r < 0 || (r > 0 && 2 * r >= n))
        throw Error(ErrorCode::InfeasibleDegree,
                    "need r < n/2 to avoid digons (r=" + std::to_string(r) +
                        ", n=" + std::to_string(n) + ")");
    if (r == 0)
        return Digraph::from_edge_list(n, {});

    // Start from the circulant with offsets 1..r (always feasible for
    // r < n/2) and mix with outdegree-preserving edge swaps. Rejection
    // sampling cannot be used here: at r close to n/2 the feasible graphs
    // are nearly tournaments and per-vertex sampling never completes.
    std::vector<std::vector<int>> out(n, std::vector<int>(r));
    const std::size_t words = static_cast<std::size_t>((n + 63) / 64);
    std::vector<std::uint64_t> adj(words * n, 0);
    auto test = [&](int u, int v) {
        return (adj[u * words + (v >> 6)] >> (v & 63)) & 1u;
    };
    auto set_bit = [&](int u, int v) {
        adj[u * words + (v >> 6)] |= std::uint64_t{1} << (v & 63);
    };
    auto clear_bit = [&](int u, int v) {
        adj[u * words + (v >> 6)] &= ~(std::uint64_t{1} << (v & 63));
    };
    for (int i = 0; i < n; ++i)
        for (int s = 1; s <= r; ++s) {
            int target = (i + s) % n;
            out[i][s - 1] = target;
            set_bit(i, target);
        }

    Rng rng(seed);
    const std::int64_t swaps = std::int64_t{20} * n * r;
    for (std::int64_t attempt = 0; attempt < swaps; ++attempt) {
        int a = static_cast<int>(rng.below(n));
        int c = static_cast<int>(rng.below(n));
        if (a == c)
            continue;
        int& b = out[a][rng.below(r)];
        int& d = out[c][rng.below(r)];
        // Swap (a,b),(c,d) -> (a,d),(c,b) when that neither duplicates an
        // edge nor creates a loop or digon.
        if (b == d || b == c || d == a)
            continue;
        if (test(a, d) || test(d, a) || test(c, b) || test(b, c))
            continue;
        clear_bit(a, b);
        clear_bit(c, d);
        set_bit(a, d);
        set_bit(c, b);
        std::swap(b, d);
    }

    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(n) * r);
    for (int v = 0; v < n; ++v)
        for (int u : out[v])
            edges.emplace_back(v, u);
    return Digraph::from_edge_list(n, edges);
}

Digraph random_mfree(int n, int m, double density, std::uint64_t seed) {
    if (n < 1)
        throw Error(ErrorCode::BadArgument, "random_mfree needs n >= 1");
    if (m < 3)
        throw Error(ErrorCode::BadArgument, "random_mfree needs m >= 3");
    if (density < 0.0 || density > 1.0)
        throw Error(ErrorCode::BadArgument, "density must lie in [0,1]");
    Rng rng(seed);
    std::vector<Edge> candidates;
    candidates.reserve(static_cast<std::size_t>(n) * (n - 1));
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            if (u != v)
                candidates.emplace_back(u, v);
    rng.shuffle(candidates);

    const std::int64_t pairs = std::int64_t{n} * (n - 1) / 2;
    const auto target = static_cast<std::int64_t>(density * pairs);
    std::vector<std::set<int>> out(n);
    std::int64_t accepted = 0;
    for (const auto& [u, v] : candidates) {
        if (accepted >= target)
            break;
        if (out[u].count(v) || out[v].count(u))
            continue;
        // Adding (u,v) closes a cycle of length <= m exactly when some
        // path v -> ... -> u of length <= m-1 already exists.
        if (bounded_reach(out, v, u, m - 1))
            continue;
        out[u].insert(v);
        ++accepted;
    }
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v : out[u])
            edges.emplace_back(u, v);
    return Digraph::from_edge_list(n, edges);
}

Digraph transitive_tournament(int n) {
    if (n < 1)
        throw Error(ErrorCode::BadArgument, "transitive_tournament needs n >= 1");
    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            edges.emplace_back(i, j);
    return Digraph::from_edge_list(n, edges);
}

Digraph generate(const GenSpec& spec) {
    switch (spec.kind) {
        case GenSpec::Kind::Circulant:
            return circulant(spec.n, spec.offsets);
        case GenSpec::Kind::OutregularRandom:
            return random_outregular(spec.n, spec.r, spec.seed);
        case GenSpec::Kind::MfreeRandom:
            return random_mfree(spec.n, spec.m, spec.density, spec.seed);
        case GenSpec::Kind::TransitiveTournament:
            return transitive_tournament(spec.n);
    }
    throw Error(ErrorCode::BadArgument, "unknown generator kind");
}

} // namespace girthlab
