#ifndef GIRTHLAB_EDGE_STATS_HPP
#define GIRTHLAB_EDGE_STATS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "girthlab/digraph.hpp"

namespace girthlab {

/// Aggregate counting statistics. tau is reported only for r-outregular
/// inputs with r >= 1, since it is defined through r.
struct GlobalStats {
    std::int64_t transitive_triangles = 0; // T
    std::optional<double> tau;             // T / (n r^2)
    std::optional<int> outdegree;          // r, present iff outregular
    std::int64_t sum_f_vertex = 0;         // sum of f(v)
    std::int64_t sum_indegree_sq = 0;      // sum of d-(v)^2
    std::int64_t out2claws = 0;            // sum of C(d+(v), 2)
};

/// Per-edge quadruple (p,q,t,f) aligned with `edges`, the per-vertex
/// t(v)/f(v) split of C(d+(v),2), and the aggregates.
struct EdgeStatsReport {
    std::vector<Edge> edges; // sorted by (u,v)
    std::vector<int> p;      // induced 2-paths starting with the edge
    std::vector<int> q;      // induced 2-paths ending with the edge
    std::vector<int> t;      // transitive triangles based at the edge
    std::vector<int> f;      // missing edges inside N+(u) & N+(v)
    std::vector<std::int64_t> t_vertex;
    std::vector<std::int64_t> f_vertex;
    GlobalStats global;
};

/// Exact counts via neighborhood bit-row intersections. `threads` chunks the
/// per-edge loop; integer sums make the reduction order immaterial.
EdgeStatsReport compute_edge_stats(const Digraph& d, int threads = 1);

/// One audited inequality instance. Per-edge items carry (u,v); per-vertex
/// items carry v only; aggregate items carry just the label. slack >= 0
/// means the inequality holds for the item.
struct AuditItem {
    int u = -1;
    int v = -1;
    std::string label;
    double lhs = 0.0;
    double rhs = 0.0;
    double slack = 0.0;
    bool defined = true; // false when the RHS is undefined (tau >= 1/2)
};

/// Violations are diagnostic, not errors: the audited lemmas are proved
/// only for minimal counterexamples, so slack < 0 on an arbitrary m-free
/// digraph is legitimate data.
struct AuditReport {
    std::string inequality_id;
    int m = 0;
    double alpha = 0.0;
    std::optional<double> a;
    std::optional<double> b;
    std::optional<double> c;
    std::vector<AuditItem> items;
    bool all_hold = true;
    std::vector<std::size_t> violations;
};

/// Verdict tolerance for the real-valued right-hand sides.
inline constexpr double kSlackTolerance = 1e-9;

/// n >= (1-(1-alpha)^(m-2))/alpha * r + d-(v) + q(u,v) + (1-alpha)^(m-2) t(u,v)
/// per edge. Requires an r-outregular, m-free input.
AuditReport audit_lemma1(const Digraph& d, double alpha, int m);

/// d-(v) <= (1-alpha)^(m-1)/alpha * r per vertex.
AuditReport audit_lemma3(const Digraph& d, double alpha, int m);

/// Aggregates: sum f(u,v) < b r sum f(v), and
/// sum sqrt(f(u,v)) < n r^2 sqrt(b (1/2 - tau)).
AuditReport audit_lemma45(const Digraph& d, int m, double b);

/// n >= (1-(1-alpha)^(m-2))/alpha * r + d-(v) + q(u,v)
///      + (1-alpha)^(m-3) (t(u,v) - sqrt(2 c f(u,v))) per edge.
AuditReport audit_lemma6(const Digraph& d, double alpha, int m, double c);

} // namespace girthlab

#endif
