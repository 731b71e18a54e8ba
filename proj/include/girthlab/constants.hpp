#ifndef GIRTHLAB_CONSTANTS_HPP
#define GIRTHLAB_CONSTANTS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace girthlab {
namespace constants {

/// Unique root in (0,1) of (1-x)^(m-2) = 3x/(2-x), by bisection. The left
/// side falls and the right side rises on (0,1), so the bracket is certain.
double alpha(int m);

/// Defining-equation residual (1-x)^(m-2) - 3x/(2-x) at x.
double alpha_residual(int m, double x);

/// c_3 = 0.8616, c_4 = (3-sqrt 5)/2, c_5 = 2-sqrt 3, c_m = 1/(m-2) for m >= 6.
double c(int m);

/// a = (1-alpha)^(m-1)/alpha and b = (a^2 c + 2a - 1)/(2a(1+c)).
std::pair<double, double> ab(int m, double alpha_val);

/// Equality point of the first tau inequality:
/// (2 - (1-alpha)^(m-2)/alpha) / (1 - (1-alpha)^(m-2)).
double tau_star(int m, double alpha_val);

/// Known improved-bound table (3 <= m <= 8), consumed as data.
std::optional<double> beta_paper(int m);

/// True iff (1-x)^(m-2) < 3x/(2-x) at x = alpha_val, i.e. the aggregate
/// counting inequality is contradictory at this outdegree fraction.
bool theorem1_contradiction_holds(int m, double alpha_val);

struct Certificate {
    int theorem = 0;
    int m = 0;
    double alpha_used = 0.0;
    bool certified = false;
    // Theorem 1 evidence: residuals bracketing the root.
    double residual_at_alpha = 0.0;
    double residual_below = 0.0;
    // Theorem 2 evidence: grid of tau samples with interval envelopes.
    double tau_star = 0.0;
    std::int64_t grid_points = 0;
    double max_g = 0.0;        // largest sampled g value
    double max_envelope = 0.0; // largest per-interval upper bound
    std::optional<double> witness_tau; // sample with g >= 0 when failed
    std::string notes;
};

/// Certifies that alpha(m) + eps yields the Theorem 1 contradiction
/// (and embeds the residual just below the root, where it must vanish).
Certificate certify_theorem1(int m);

inline constexpr std::int64_t kDefaultGrid = 1'000'000;

/// Checks that g(tau) = tau(1-(1-a)^(m-3)) + (1-a)^(m-3) sqrt(b c (1-2 tau))
///                      - (2 - (1-a)^(m-2)/a)
/// is negative on every point of [tau*, 1/2], covering the gaps between grid
/// points with a per-interval envelope: the linear term is increasing and
/// the sqrt term decreasing, so evaluating them at opposite interval ends
/// bounds g from above. Throws GridTooCoarse when the envelope cannot
/// separate an interval that has no nonnegative sample.
Certificate certify_theorem2(int m, double alpha_val,
                             std::int64_t grid = kDefaultGrid);

/// Binary search for the smallest alpha certify_theorem2 accepts.
/// Derived, not a published-table value.
double smallest_certified_alpha(int m, std::int64_t grid = 100'000);

/// Principal real branch of w e^w = x for x >= 0, by Halley iteration.
double lambert_w0(double x);

/// W0(2(m-2.5)/3) / (m-2.5).
double lambert_bound(int m);

struct ShenBounds {
    double general = 0.0;               // 3 ln((2+sqrt 7)/3) / (m-3), m >= 4
    std::optional<double> large;        // 1/(m-73), m >= 74
};

ShenBounds shen_bounds(int m);

struct BoundSet {
    int m = 0;
    double alpha = 0.0;
    double alpha_residual = 0.0;
    double c = 0.0;
    std::optional<double> beta_paper;
    std::optional<double> a;        // at beta_paper
    std::optional<double> b;        // at beta_paper
    std::optional<double> tau_star; // at beta_paper
    double lambert_bound = 0.0;
    std::optional<double> shen_general;
    std::optional<double> shen_large;
    std::string best_known; // smallest of {alpha, shen_general, shen_large}
};

std::vector<BoundSet> bound_table(int m_from, int m_to);

} // namespace constants
} // namespace girthlab

#endif
