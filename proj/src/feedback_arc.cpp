#include "girthlab/feedback_arc.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <deque>
#include <limits>
#include <string>

#include "girthlab/cycles.hpp"

namespace girthlab {

namespace {

// Backward edges of an ordering (position[u] > position[v] for edge (u,v)).
std::vector<Edge> backward_edges(const Digraph& d, const std::vector<int>& order) {
    std::vector<int> pos(d.n());
    for (int i = 0; i < static_cast<int>(order.size()); ++i)
        pos[order[i]] = i;
    std::vector<Edge> removed;
    for (const auto& [u, v] : d.edges())
        if (pos[u] > pos[v])
            removed.emplace_back(u, v);
    return removed;
}

FasResult from_order(const Digraph& d, std::vector<int> order, bool exact) {
    FasResult result;
    result.removed = backward_edges(d, order);
    result.beta = static_cast<int>(result.removed.size());
    result.order = std::move(order);
    result.exact = exact;
    return result;
}

void require_mfree(const Digraph& d, int m) {
    if (!is_m_free(d, m).m_free)
        throw Error(ErrorCode::NotMFree,
                    "input has a cycle of length <= " + std::to_string(m));
}

} // namespace

FasResult beta_exact(const Digraph& d) {
    const int n = d.n();
    if (n > kBetaExactMaxN)
        throw Error(ErrorCode::TooLarge,
                    "beta_exact is limited to n <= " +
                        std::to_string(kBetaExactMaxN) + " (got n=" +
                        std::to_string(n) + ")");
    if (n == 0)
        return FasResult{0, {}, {}, true};

    // dp[S] = min backward edges over orderings placing S first. Appending v
    // costs the in-edges of v from outside S (those land after v).
    std::vector<std::uint32_t> in_mask(n, 0);
    for (int v = 0; v < n; ++v)
        for (int u : d.in(v))
            in_mask[v] |= std::uint32_t{1} << u;

    const std::size_t full = std::size_t{1} << n;
    constexpr std::uint32_t inf = std::numeric_limits<std::uint32_t>::max();
    std::vector<std::uint32_t> dp(full, inf);
    std::vector<std::int8_t> parent(full, -1);
    dp[0] = 0;
    for (std::uint32_t mask = 0; mask < full; ++mask) {
        if (dp[mask] == inf)
            continue;
        for (int v = 0; v < n; ++v) {
            if (mask & (std::uint32_t{1} << v))
                continue;
            // In-neighbors outside S land after v in the ordering.
            std::uint32_t cost = dp[mask] + std::popcount(in_mask[v] & ~mask);
            std::uint32_t next = mask | (std::uint32_t{1} << v);
            if (cost < dp[next]) {
                dp[next] = cost;
                parent[next] = static_cast<std::int8_t>(v);
            }
        }
    }

    std::vector<int> order(n);
    std::uint32_t mask = static_cast<std::uint32_t>(full - 1);
    for (int i = n - 1; i >= 0; --i) {
        int v = parent[mask];
        order[i] = v;
        mask ^= std::uint32_t{1} << v;
    }
    return from_order(d, std::move(order), true);
}

FasResult beta_heuristic(const Digraph& d) {
    const int n = d.n();
    std::vector<int> outdeg(n), indeg(n);
    std::vector<bool> alive(n, true);
    for (int v = 0; v < n; ++v) {
        outdeg[v] = d.outdeg(v);
        indeg[v] = d.indeg(v);
    }
    std::vector<int> front; // grows left to right
    std::deque<int> back;   // sinks, prepended
    int remaining = n;

    auto remove_vertex = [&](int v) {
        alive[v] = false;
        --remaining;
        for (int w : d.out(v))
            if (alive[w])
                --indeg[w];
        for (int w : d.in(v))
            if (alive[w])
                --outdeg[w];
    };

    while (remaining > 0) {
        bool stripped = true;
        while (stripped && remaining > 0) {
            stripped = false;
            for (int v = 0; v < n; ++v)
                if (alive[v] && outdeg[v] == 0) {
                    back.push_front(v);
                    remove_vertex(v);
                    stripped = true;
                }
            for (int v = 0; v < n; ++v)
                if (alive[v] && indeg[v] == 0) {
                    front.push_back(v);
                    remove_vertex(v);
                    stripped = true;
                }
        }
        if (remaining == 0)
            break;
        int best = -1, best_delta = std::numeric_limits<int>::min();
        for (int v = 0; v < n; ++v)
            if (alive[v] && outdeg[v] - indeg[v] > best_delta) {
                best = v;
                best_delta = outdeg[v] - indeg[v];
            }
        front.push_back(best);
        remove_vertex(best);
    }
    front.insert(front.end(), back.begin(), back.end());
    return from_order(d, std::move(front), false);
}

Fact1Report check_fact1(const Digraph& d, int m, double c) {
    require_mfree(d, m);
    Fact1Report report;
    report.c = c;
    report.gamma = d.gamma();
    report.bound = c * static_cast<double>(report.gamma);
    if (d.n() <= kBetaExactMaxN) {
        FasResult fas = beta_exact(d);
        report.beta = fas.beta;
        report.beta_exact = true;
        report.status = report.beta <= report.bound ? CheckStatus::Holds
                                                    : CheckStatus::Violated;
    } else {
        FasResult fas = beta_heuristic(d);
        report.beta = fas.beta;
        report.beta_exact = false;
        report.status = CheckStatus::UnverifiedHeuristic;
    }
    return report;
}

Lemma2Report check_lemma2(const Digraph& d, int m, double c) {
    require_mfree(d, m);
    Lemma2Report report;
    report.min_outdeg = std::numeric_limits<int>::max();
    for (int v = 0; v < d.n(); ++v)
        if (d.outdeg(v) < report.min_outdeg) {
            report.min_outdeg = d.outdeg(v);
            report.witness_vertex = v;
        }
    report.bound = std::sqrt(2.0 * c * static_cast<double>(d.gamma()));
    report.holds = report.min_outdeg <= report.bound;
    return report;
}

SullivanReport sullivan_ratio(const Digraph& d, int m) {
    require_mfree(d, m);
    SullivanReport report;
    report.gamma = d.gamma();
    if (report.gamma == 0)
        throw Error(ErrorCode::GammaZero, "no missing edges, ratio undefined");
    report.beta = beta_exact(d).beta; // throws TooLarge beyond the DP cutoff
    report.ratio = static_cast<double>(report.beta) /
                   static_cast<double>(report.gamma);
    report.conjectured = 2.0 / (static_cast<double>(m + 1) * (m - 2));
    return report;
}

const char* to_string(CheckStatus s) noexcept {
    switch (s) {
        case CheckStatus::Holds: return "holds";
        case CheckStatus::Violated: return "violated";
        case CheckStatus::UnverifiedHeuristic: return "unverified (heuristic beta)";
    }
    return "unknown";
}

} // namespace girthlab
