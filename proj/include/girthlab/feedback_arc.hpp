#ifndef GIRTHLAB_FEEDBACK_ARC_HPP
#define GIRTHLAB_FEEDBACK_ARC_HPP

#include <cstdint>
#include <vector>

#include "girthlab/digraph.hpp"

namespace girthlab {

/// Feedback arc set result: deleting `removed` leaves an acyclic digraph;
/// `removed` are exactly the backward edges of `order`.
struct FasResult {
    int beta = 0;
    std::vector<Edge> removed;
    std::vector<int> order;
    bool exact = false;
};

/// Maximum size accepted by the subset DP (2^n states).
inline constexpr int kBetaExactMaxN = 20;

/// Minimum feedback arc set by dynamic programming over vertex subsets,
/// O(2^n * n). Requires n <= 20.
FasResult beta_exact(const Digraph& d);

/// Greedy sink/source stripping with max (outdeg - indeg) selection, ties
/// by smallest id. Upper bound: result.beta >= true beta.
FasResult beta_heuristic(const Digraph& d);

enum class CheckStatus { Holds, Violated, UnverifiedHeuristic };

/// beta(G) <= c_m * gamma(G) on an m-free digraph. Exact beta is used for
/// n <= 20; larger instances get only a heuristic upper bound, which cannot
/// certify the inequality, so the verdict is UnverifiedHeuristic.
struct Fact1Report {
    int beta = 0;
    bool beta_exact = false;
    std::int64_t gamma = 0;
    double c = 0.0;
    double bound = 0.0; // c * gamma
    CheckStatus status = CheckStatus::Holds;
};

Fact1Report check_fact1(const Digraph& d, int m, double c);

/// min_v d+(v) <= sqrt(2 c_m gamma(G)) on an m-free digraph.
struct Lemma2Report {
    int min_outdeg = 0;
    int witness_vertex = -1;
    double bound = 0.0;
    bool holds = true;
};

Lemma2Report check_lemma2(const Digraph& d, int m, double c);

/// Diagnostic only: beta/gamma against the open conjecture's
/// 2/((m+1)(m-2)); never asserted.
struct SullivanReport {
    int beta = 0;
    std::int64_t gamma = 0;
    double ratio = 0.0;
    double conjectured = 0.0;
};

SullivanReport sullivan_ratio(const Digraph& d, int m);

const char* to_string(CheckStatus s) noexcept;

} // namespace girthlab

#endif
