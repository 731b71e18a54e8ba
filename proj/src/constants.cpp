#include "girthlab/constants.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "girthlab/errors.hpp"

namespace girthlab {
namespace constants {

namespace {

void require_m(int m, int at_least = 3) {
    if (m < at_least)
        throw Error(ErrorCode::BadArgument,
                    "m must be >= " + std::to_string(at_least));
}

void require_alpha(double alpha_val) {
    if (!(alpha_val > 0.0 && alpha_val < 1.0))
        throw Error(ErrorCode::BadArgument, "alpha must lie in (0,1)");
}

} // namespace

double alpha_residual(int m, double x) {
    return std::pow(1.0 - x, m - 2) - 3.0 * x / (2.0 - x);
}

double alpha(int m) {
    require_m(m);
    double lo = 0.0, hi = 1.0;
    for (int iter = 0; iter < 200; ++iter) {
        double mid = 0.5 * (lo + hi);
        if (mid == lo || mid == hi)
            break;
        if (alpha_residual(m, mid) > 0.0)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

double c(int m) {
    require_m(m);
    switch (m) {
        case 3: return 0.8616; // published constant, consumed as a literal
        case 4: return (3.0 - std::sqrt(5.0)) / 2.0;
        case 5: return 2.0 - std::sqrt(3.0);
        default: return 1.0 / (m - 2);
    }
}

std::pair<double, double> ab(int m, double alpha_val) {
    require_m(m);
    require_alpha(alpha_val);
    double a = std::pow(1.0 - alpha_val, m - 1) / alpha_val;
    double cm = c(m);
    double b = (a * a * cm + 2.0 * a - 1.0) / (2.0 * a * (1.0 + cm));
    return {a, b};
}

double tau_star(int m, double alpha_val) {
    require_m(m);
    require_alpha(alpha_val);
    double decay = std::pow(1.0 - alpha_val, m - 2);
    double denom = 1.0 - decay;
    if (denom <= 0.0)
        throw Error(ErrorCode::DegenerateDenominator,
                    "1 - (1-alpha)^(m-2) must be positive");
    return (2.0 - decay / alpha_val) / denom;
}

std::optional<double> beta_paper(int m) {
    switch (m) {
        case 3: return 0.35296;
        case 4: return 0.28688;
        case 5: return 0.24647;
        case 6: return 0.21851;
        case 7: return 0.19732;
        case 8: return 0.18068;
        default: return std::nullopt;
    }
}

bool theorem1_contradiction_holds(int m, double alpha_val) {
    require_m(m);
    require_alpha(alpha_val);
    return alpha_residual(m, alpha_val) < 0.0;
}

Certificate certify_theorem1(int m) {
    require_m(m);
    constexpr double eps = 1e-9;
    Certificate cert;
    cert.theorem = 1;
    cert.m = m;
    double root = alpha(m);
    cert.alpha_used = root + eps;
    cert.residual_at_alpha = alpha_residual(m, root + eps);
    cert.residual_below = alpha_residual(m, root - eps);
    // Above the root the defining gap flips sign, which is exactly the
    // aggregate contradiction; just below it must not.
    cert.certified = cert.residual_at_alpha < 0.0 && cert.residual_below > 0.0;
    cert.notes = "counting contradiction holds at alpha(m)+1e-9 and "
                 "vanishes at alpha(m)-1e-9";
    return cert;
}

Certificate certify_theorem2(int m, double alpha_val, std::int64_t grid) {
    require_m(m);
    require_alpha(alpha_val);
    if (m > 8)
        throw Error(ErrorCode::BadArgument, "theorem 2 covers 3 <= m <= 8");
    if (grid < 2)
        throw Error(ErrorCode::BadArgument, "grid needs at least 2 points");

    Certificate cert;
    cert.theorem = 2;
    cert.m = m;
    cert.alpha_used = alpha_val;
    cert.grid_points = grid;

    const double ts = tau_star(m, alpha_val);
    cert.tau_star = ts;
    if (ts >= 0.5) {
        // The linear bound already forces tau > 1/2, impossible: nothing to scan.
        cert.certified = true;
        cert.max_g = -1.0;
        cert.max_envelope = -1.0;
        cert.notes = "interval (tau*, 1/2) is empty";
        return cert;
    }

    auto [a, b] = ab(m, alpha_val);
    (void)a;
    const double cm = c(m);
    const double bc = b * cm;
    const double head = std::pow(1.0 - alpha_val, m - 3); // (1-alpha)^(m-3)
    const double linear = 1.0 - head;
    const double rhs = 2.0 - std::pow(1.0 - alpha_val, m - 2) / alpha_val;

    auto tau_at = [&](std::int64_t i) {
        return ts + (0.5 - ts) * static_cast<double>(i) /
                        static_cast<double>(grid - 1);
    };
    auto sqrt_term = [&](double tau) {
        return head * std::sqrt(bc * std::max(0.0, 1.0 - 2.0 * tau));
    };

    double max_g = -std::numeric_limits<double>::infinity();
    double max_env = -std::numeric_limits<double>::infinity();
    std::optional<double> witness;
    double prev_tau = tau_at(0);
    double prev_sqrt = sqrt_term(prev_tau);
    max_g = prev_tau * linear + prev_sqrt - rhs;
    if (max_g >= 0.0)
        witness = prev_tau;
    for (std::int64_t i = 1; i < grid; ++i) {
        const double tau = tau_at(i);
        const double s = sqrt_term(tau);
        const double g = tau * linear + s - rhs;
        if (g > max_g)
            max_g = g;
        if (g >= 0.0 && !witness)
            witness = tau;
        // Envelope over [prev_tau, tau]: linear term at the right end,
        // sqrt term at the left end.
        const double env = tau * linear + prev_sqrt - rhs;
        if (env > max_env)
            max_env = env;
        prev_tau = tau;
        prev_sqrt = s;
    }

    cert.max_g = max_g;
    cert.max_envelope = max_env;
    cert.witness_tau = witness;
    if (witness) {
        cert.certified = false;
        cert.notes = "inequality satisfiable at sampled tau";
        return cert;
    }
    if (max_env < 0.0) {
        cert.certified = true;
        cert.notes = "negative on all interval envelopes";
        return cert;
    }
    throw Error(ErrorCode::GridTooCoarse,
                "no nonnegative sample but an interval envelope reaches " +
                    std::to_string(max_env) + "; increase the grid");
}

double smallest_certified_alpha(int m, std::int64_t grid) {
    require_m(m);
    if (m > 8)
        throw Error(ErrorCode::BadArgument, "theorem 2 covers 3 <= m <= 8");
    auto certified = [&](double x) {
        try {
            return certify_theorem2(m, x, grid).certified;
        } catch (const Error& e) {
            if (e.code() == ErrorCode::GridTooCoarse)
                return false; // boundary regime, treat as not yet certified
            throw;
        }
    };
    double hi = alpha(m); // tau* = 1/2 there, trivially certified
    double lo = hi / 2;
    while (!certified(hi))
        hi = std::min(0.999, hi * 1.01);
    while (certified(lo))
        lo /= 2;
    for (int iter = 0; iter < 60; ++iter) {
        double mid = 0.5 * (lo + hi);
        if (mid == lo || mid == hi)
            break;
        (certified(mid) ? hi : lo) = mid;
    }
    return hi;
}

double lambert_w0(double x) {
    if (x < 0.0)
        throw Error(ErrorCode::BadArgument, "lambert_w0 needs x >= 0");
    if (x == 0.0)
        return 0.0;
    const double e = std::exp(1.0);
    double w = x < e ? x / (1.0 + x) : std::log(x) - std::log(std::log(x));
    for (int iter = 0; iter < 100; ++iter) {
        const double ew = std::exp(w);
        const double f = w * ew - x;
        if (std::abs(f) <= 1e-15 * std::max(1.0, x))
            break;
        const double fp = ew * (w + 1.0);
        const double step = f / (fp - f * (w + 2.0) / (2.0 * (w + 1.0)));
        w -= step;
        if (std::abs(step) <= 1e-17 * std::max(1.0, std::abs(w)))
            break;
    }
    // Polish in extended precision so the returned double is the correctly
    // rounded root; plain double arithmetic leaves the residual near the
    // 1e-14 contract for x around 30.
    long double wl = w;
    const long double xl = x;
    for (int iter = 0; iter < 4; ++iter) {
        const long double ewl = std::exp(wl);
        const long double fl = wl * ewl - xl;
        const long double fpl = ewl * (wl + 1.0L);
        wl -= fl / (fpl - fl * (wl + 2.0L) / (2.0L * (wl + 1.0L)));
    }
    return static_cast<double>(wl);
}

double lambert_bound(int m) {
    require_m(m);
    const double shift = static_cast<double>(m) - 2.5;
    return lambert_w0(2.0 / 3.0 * shift) / shift;
}

ShenBounds shen_bounds(int m) {
    if (m < 4)
        throw Error(ErrorCode::BadArgument,
                    "shen_bounds needs m >= 4 (got m=" + std::to_string(m) + ")");
    ShenBounds bounds;
    bounds.general = 3.0 * std::log((2.0 + std::sqrt(7.0)) / 3.0) / (m - 3);
    if (m >= 74)
        bounds.large = 1.0 / (m - 73);
    return bounds;
}

std::vector<BoundSet> bound_table(int m_from, int m_to) {
    require_m(m_from);
    if (m_to < m_from)
        throw Error(ErrorCode::BadArgument, "empty m range");
    std::vector<BoundSet> rows;
    rows.reserve(m_to - m_from + 1);
    for (int m = m_from; m <= m_to; ++m) {
        BoundSet row;
        row.m = m;
        row.alpha = alpha(m);
        row.alpha_residual = alpha_residual(m, row.alpha);
        row.c = c(m);
        row.beta_paper = beta_paper(m);
        if (row.beta_paper) {
            auto [a, b] = ab(m, *row.beta_paper);
            row.a = a;
            row.b = b;
            row.tau_star = tau_star(m, *row.beta_paper);
        }
        row.lambert_bound = lambert_bound(m);
        row.best_known = "alpha";
        double best = row.alpha;
        if (m >= 4) {
            auto shen = shen_bounds(m);
            row.shen_general = shen.general;
            row.shen_large = shen.large;
            if (shen.general < best) {
                best = shen.general;
                row.best_known = "shen-general";
            }
            if (shen.large && *shen.large < best) {
                best = *shen.large;
                row.best_known = "shen-large";
            }
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

} // namespace constants
} // namespace girthlab
