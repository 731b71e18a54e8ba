#include "girthlab/edge_stats.hpp"

#include <algorithm>
#include <cmath>
#include <thread>

#include "girthlab/cycles.hpp"

namespace girthlab {

namespace {

std::int64_t choose2(std::int64_t k) { return k * (k - 1) / 2; }

// Edges of the subgraph induced by the vertex set given as a bit row.
std::int64_t edges_inside(const Digraph& d, const std::vector<int>& members,
                          std::span<const std::uint64_t> member_bits) {
    std::int64_t total = 0;
    for (int x : members)
        total += intersect_count(d.out_row(x), member_bits);
    return total;
}

std::optional<int> outregular_degree(const Digraph& d) {
    if (d.n() == 0)
        return 0;
    int r = d.outdeg(0);
    for (int v = 1; v < d.n(); ++v)
        if (d.outdeg(v) != r)
            return std::nullopt;
    return r;
}

void require_outregular_mfree(const Digraph& d, int m, int& r) {
    auto reg = outregular_degree(d);
    if (!reg)
        throw Error(ErrorCode::NotOutregular, "input is not outregular");
    r = *reg;
    if (!is_m_free(d, m).m_free)
        throw Error(ErrorCode::NotMFree,
                    "input has a cycle of length <= " + std::to_string(m));
}

void finish(AuditReport& report) {
    report.all_hold = true;
    for (std::size_t i = 0; i < report.items.size(); ++i) {
        const auto& item = report.items[i];
        if (item.defined && item.slack < -kSlackTolerance) {
            report.all_hold = false;
            report.violations.push_back(i);
        }
    }
}

} // namespace

EdgeStatsReport compute_edge_stats(const Digraph& d, int threads) {
    EdgeStatsReport rep;
    rep.edges = d.edges();
    const std::size_t m = rep.edges.size();
    rep.p.resize(m);
    rep.q.resize(m);
    rep.t.resize(m);
    rep.f.resize(m);

    auto edge_range = [&](std::size_t lo, std::size_t hi) {
        std::vector<int> common;
        std::vector<std::uint64_t> common_bits(d.words_per_row());
        for (std::size_t i = lo; i < hi; ++i) {
            auto [u, v] = rep.edges[i];
            int t = intersect_count(d.out_row(u), d.out_row(v));
            rep.t[i] = t;
            rep.p[i] = d.outdeg(v) - t;
            rep.q[i] = diff_count(d.in_row(u), d.in_row(v));
            common.clear();
            std::fill(common_bits.begin(), common_bits.end(), 0);
            for (int w : d.out(u))
                if (d.has_edge(v, w)) {
                    common.push_back(w);
                    common_bits[w >> 6] |= std::uint64_t{1} << (w & 63);
                }
            rep.f[i] = static_cast<int>(choose2(t) -
                                        edges_inside(d, common, common_bits));
        }
    };
    if (threads <= 1 || m < 256) {
        edge_range(0, m);
    } else {
        std::vector<std::thread> pool;
        std::size_t chunk = (m + threads - 1) / threads;
        for (int t = 0; t < threads; ++t) {
            std::size_t lo = t * chunk, hi = std::min(m, lo + chunk);
            if (lo < hi)
                pool.emplace_back(edge_range, lo, hi);
        }
        for (auto& th : pool)
            th.join();
    }

    rep.t_vertex.resize(d.n());
    rep.f_vertex.resize(d.n());
    std::vector<int> members;
    std::vector<std::uint64_t> bits(d.words_per_row());
    for (int v = 0; v < d.n(); ++v) {
        members.assign(d.out(v).begin(), d.out(v).end());
        std::fill(bits.begin(), bits.end(), 0);
        for (int w : members)
            bits[w >> 6] |= std::uint64_t{1} << (w & 63);
        rep.t_vertex[v] = edges_inside(d, members, bits);
        rep.f_vertex[v] = choose2(d.outdeg(v)) - rep.t_vertex[v];
        rep.global.sum_f_vertex += rep.f_vertex[v];
        rep.global.out2claws += choose2(d.outdeg(v));
        rep.global.sum_indegree_sq +=
            static_cast<std::int64_t>(d.indeg(v)) * d.indeg(v);
    }
    for (std::size_t i = 0; i < m; ++i)
        rep.global.transitive_triangles += rep.t[i];

    if (auto r = outregular_degree(d)) {
        rep.global.outdegree = *r;
        if (*r >= 1)
            rep.global.tau = static_cast<double>(rep.global.transitive_triangles) /
                             (static_cast<double>(d.n()) * *r * *r);
    }
    return rep;
}

AuditReport audit_lemma1(const Digraph& d, double alpha, int m) {
    int r = 0;
    require_outregular_mfree(d, m, r);
    auto stats = compute_edge_stats(d);

    AuditReport report;
    report.inequality_id = "lemma1";
    report.m = m;
    report.alpha = alpha;
    const double decay = std::pow(1.0 - alpha, m - 2);
    const double head = (1.0 - decay) / alpha * r;
    for (std::size_t i = 0; i < stats.edges.size(); ++i) {
        auto [u, v] = stats.edges[i];
        AuditItem item;
        item.u = u;
        item.v = v;
        item.lhs = head + d.indeg(v) + stats.q[i] + decay * stats.t[i];
        item.rhs = d.n();
        item.slack = item.rhs - item.lhs;
        report.items.push_back(std::move(item));
    }
    finish(report);
    return report;
}

AuditReport audit_lemma3(const Digraph& d, double alpha, int m) {
    int r = 0;
    require_outregular_mfree(d, m, r);

    AuditReport report;
    report.inequality_id = "lemma3";
    report.m = m;
    report.alpha = alpha;
    const double a = std::pow(1.0 - alpha, m - 1) / alpha;
    report.a = a;
    for (int v = 0; v < d.n(); ++v) {
        AuditItem item;
        item.v = v;
        item.lhs = d.indeg(v);
        item.rhs = a * r;
        item.slack = item.rhs - item.lhs;
        report.items.push_back(std::move(item));
    }
    finish(report);
    return report;
}

AuditReport audit_lemma45(const Digraph& d, int m, double b) {
    int r = 0;
    require_outregular_mfree(d, m, r);
    auto stats = compute_edge_stats(d);

    AuditReport report;
    report.inequality_id = "lemma45";
    report.m = m;
    report.b = b;

    AuditItem lemma4;
    lemma4.label = "lemma4-sum";
    for (int f : stats.f)
        lemma4.lhs += f;
    lemma4.rhs = b * r * static_cast<double>(stats.global.sum_f_vertex);
    lemma4.slack = lemma4.rhs - lemma4.lhs;
    report.items.push_back(std::move(lemma4));

    AuditItem lemma5;
    lemma5.label = "lemma5-sum";
    for (int f : stats.f)
        lemma5.lhs += std::sqrt(static_cast<double>(f));
    if (r == 0) {
        lemma5.rhs = 0.0; // no edges at all
    } else if (*stats.global.tau >= 0.5) {
        lemma5.defined = false; // TauOverHalf: report, don't compute
    } else {
        lemma5.rhs = static_cast<double>(d.n()) * r * r *
                     std::sqrt(b * (0.5 - *stats.global.tau));
    }
    lemma5.slack = lemma5.defined ? lemma5.rhs - lemma5.lhs : 0.0;
    report.items.push_back(std::move(lemma5));

    finish(report);
    return report;
}

AuditReport audit_lemma6(const Digraph& d, double alpha, int m, double c) {
    int r = 0;
    require_outregular_mfree(d, m, r);
    auto stats = compute_edge_stats(d);

    AuditReport report;
    report.inequality_id = "lemma6";
    report.m = m;
    report.alpha = alpha;
    report.c = c;
    const double decay = std::pow(1.0 - alpha, m - 2);
    const double decay3 = std::pow(1.0 - alpha, m - 3);
    const double head = (1.0 - decay) / alpha * r;
    for (std::size_t i = 0; i < stats.edges.size(); ++i) {
        auto [u, v] = stats.edges[i];
        AuditItem item;
        item.u = u;
        item.v = v;
        item.lhs = head + d.indeg(v) + stats.q[i] +
                   decay3 * (stats.t[i] - std::sqrt(2.0 * c * stats.f[i]));
        item.rhs = d.n();
        item.slack = item.rhs - item.lhs;
        report.items.push_back(std::move(item));
    }
    finish(report);
    return report;
}

} // namespace girthlab
