// Foundation layer: log-domain special functions, error-controlled quadrature
// on finite and semi-infinite intervals, mass-based series truncation and
// finite-difference differentiation. Everything here is a pure function.
#pragma once

#include <cmath>
#include <cstddef>
#include <limits>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace linkops {

// ---------------------------------------------------------------------------
// configuration
// ---------------------------------------------------------------------------

/// Tolerances for one quadrature call. Defaults leave headroom above the
/// 1e-8 checks this library runs against.
struct QuadratureConfig {
    double abs_tol = 1e-10;
    double rel_tol = 1e-10;
    int max_panels = 20000;          ///< total accepted-panel budget per call
    double tail_mass_eps = 1e-12;    ///< integrand mass allowed beyond the truncation point

    void validate() const {
        if (!(abs_tol > 0.0) || !(rel_tol > 0.0))
            throw std::domain_error("QuadratureConfig: tolerances must be positive");
        if (!(tail_mass_eps > 0.0) || tail_mass_eps > 1e-6)
            throw std::domain_error("QuadratureConfig: tail_mass_eps must be in (0, 1e-6]");
        if (max_panels < 8)
            throw std::domain_error("QuadratureConfig: max_panels must be >= 8");
    }
};

/// Controls mass-based truncation of the operator series.
struct SeriesConfig {
    double mass_eps = 1e-12;         ///< stop once accumulated mass >= 1 - mass_eps
    int j_max = 20000;

    void validate() const {
        if (!(mass_eps > 0.0) || mass_eps > 1e-6)
            throw std::domain_error("SeriesConfig: mass_eps must be in (0, 1e-6]");
        if (j_max < 64)
            throw std::domain_error("SeriesConfig: j_max must be >= 64");
    }
};

struct IntegralResult {
    double value = 0.0;
    double err_est = 0.0;
};

struct SeriesResult {
    double value = 0.0;
    int j_used = 0;                  ///< last index included in the sum
};

// ---------------------------------------------------------------------------
// special functions
// ---------------------------------------------------------------------------

namespace detail {

// Lanczos approximation, g = 7, 9 coefficients. Relative accuracy on Gamma
// is a few ulp over the positive axis, which keeps ln Gamma well inside the
// 1e-13 budget the callers rely on.
inline constexpr double lanczos_g = 7.0;
inline constexpr double lanczos_coeff[9] = {
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
};

inline double log_gamma_lanczos(double x) {
    // valid for x >= 0.5
    const double z = x - 1.0;
    double acc = lanczos_coeff[0];
    for (int i = 1; i < 9; ++i) acc += lanczos_coeff[i] / (z + i);
    const double t = z + lanczos_g + 0.5;
    constexpr double half_log_two_pi = 0.91893853320467274178;  // ln(2*pi)/2
    return half_log_two_pi + (z + 0.5) * std::log(t) - t + std::log(acc);
}

}  // namespace detail

/// ln Gamma(x) for x > 0.
inline double log_gamma(double x) {
    if (!(x > 0.0))
        throw std::domain_error("log_gamma: argument must be positive, got " + std::to_string(x));
    if (x >= 0.5) return detail::log_gamma_lanczos(x);
    // reflection onto [0.5, inf): Gamma(x) Gamma(1-x) = pi / sin(pi x)
    constexpr double pi = 3.14159265358979323846;
    return std::log(pi / std::sin(pi * x)) - detail::log_gamma_lanczos(1.0 - x);
}

/// ln B(x, y) = ln Gamma(x) + ln Gamma(y) - ln Gamma(x + y), x, y > 0.
inline double log_beta(double x, double y) {
    if (!(x > 0.0) || !(y > 0.0))
        throw std::domain_error("log_beta: arguments must be positive");
    return log_gamma(x) + log_gamma(y) - log_gamma(x + y);
}

// ---------------------------------------------------------------------------
// quadrature
// ---------------------------------------------------------------------------

namespace detail {

struct QuadWork {
    int panels_used = 0;
    int max_panels = 0;
    double err_est = 0.0;
};

// Recursive adaptive Simpson. Accepts a panel when the two-half refinement
// moves the estimate by less than 15*tol, applying the standard Richardson
// correction on acceptance.
template <class F>
double adapt_simpson(const F& f, double a, double m, double b, double fa, double fm, double fb,
                     double whole, double tol, int depth, QuadWork& work) {
    const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    const double flm = f(lm), frm = f(rm);
    const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    const double delta = left + right - whole;
    if (depth <= 0 || std::abs(delta) <= 15.0 * tol) {
        if (++work.panels_used > work.max_panels)
            throw std::runtime_error("quadrature: panel budget exhausted before reaching tolerance");
        work.err_est += std::abs(delta) / 15.0;
        return left + right + delta / 15.0;
    }
    return adapt_simpson(f, a, lm, m, fa, flm, fm, left, 0.5 * tol, depth - 1, work) +
           adapt_simpson(f, m, rm, b, fm, frm, fb, right, 0.5 * tol, depth - 1, work);
}

template <class F>
double simpson_coarse(const F& f, double a, double b, double fa, double fm, double fb) {
    return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

}  // namespace detail

/// Adaptive Simpson integration of f over the finite interval [a, b].
template <class F>
IntegralResult integrate_adaptive(const F& f, double a, double b, const QuadratureConfig& cfg) {
    cfg.validate();
    if (!(b >= a)) throw std::domain_error("integrate_adaptive: requires b >= a");
    if (a == b) return {0.0, 0.0};
    detail::QuadWork work;
    work.max_panels = cfg.max_panels;
    const double m = 0.5 * (a + b);
    const double fa = f(a), fm = f(m), fb = f(b);
    const double whole = detail::simpson_coarse(f, a, b, fa, fm, fb);
    const double tol = std::max(cfg.abs_tol, cfg.rel_tol * std::abs(whole));
    const double v = detail::adapt_simpson(f, a, m, b, fa, fm, fb, whole, tol, 60, work);
    return {v, work.err_est};
}

/// Integrates f over [0, inf). The caller passes the location (center) and
/// scale (spread) of the dominant bump of the integrand; the truncation point
/// starts at center + max(10*spread, 1) and doubles until the evaluated decay
/// of the integrand indicates that the discarded tail is below tail_mass_eps.
/// Throws if the tail never decays (non-integrable input) or if the panel
/// budget runs out; the error message carries the achieved estimate.
template <class F>
IntegralResult integrate_semi_infinite(const F& f, double center, double spread,
                                       const QuadratureConfig& cfg) {
    cfg.validate();
    if (!(center >= 0.0)) throw std::domain_error("integrate_semi_infinite: center must be >= 0");
    if (!(spread > 0.0)) throw std::domain_error("integrate_semi_infinite: spread must be > 0");

    // T*|f(T)| bounds the tail mass for any integrand decaying at least as
    // fast as t^-2; probe two points to avoid accidental zeros.
    double T = center + std::max(10.0 * spread, 1.0);
    auto tail_ok = [&](double t) {
        const double m1 = std::abs(f(t)) * t;
        const double m2 = std::abs(f(1.43 * t)) * 1.43 * t;
        return std::max(m1, m2) < cfg.tail_mass_eps;
    };
    int doublings = 0;
    while (!tail_ok(T)) {
        if (++doublings > 64)
            throw std::runtime_error(
                "integrate_semi_infinite: integrand tail does not decay below tail_mass_eps "
                "(integral appears divergent or extremely heavy-tailed)");
        T *= 2.0;
    }

    // Geometric ladder of seed panels keeps the adaptive refinement aligned
    // with both the bump near `center` and a possibly slow power-law tail.
    const double scale = std::max(std::min(center, spread), std::min(1.0, T));
    std::vector<double> knots;
    knots.push_back(0.0);
    for (double p = scale / 8.0; p < T; p *= 2.0) {
        if (p > 0.0) knots.push_back(p);
        if (knots.size() > 80) break;
    }
    knots.push_back(T);

    detail::QuadWork work;
    work.max_panels = cfg.max_panels;

    // coarse pass to fix the relative-tolerance scale
    double coarse = 0.0;
    std::vector<double> fa(knots.size()), fm(knots.size()), fb(knots.size()), s0(knots.size());
    for (std::size_t i = 0; i + 1 < knots.size(); ++i) {
        const double a = knots[i], b = knots[i + 1], m = 0.5 * (a + b);
        fa[i] = f(a);
        fm[i] = f(m);
        fb[i] = f(b);
        s0[i] = detail::simpson_coarse(f, a, b, fa[i], fm[i], fb[i]);
        coarse += s0[i];
    }
    const double tol = std::max(cfg.abs_tol, cfg.rel_tol * std::abs(coarse));
    const double tol_per_panel = tol / static_cast<double>(knots.size() - 1);

    double total = 0.0;
    for (std::size_t i = 0; i + 1 < knots.size(); ++i) {
        const double a = knots[i], b = knots[i + 1], m = 0.5 * (a + b);
        total += detail::adapt_simpson(f, a, m, b, fa[i], fm[i], fb[i], s0[i], tol_per_panel, 60, work);
    }
    return {total, work.err_est + cfg.tail_mass_eps};
}

// ---------------------------------------------------------------------------
// series truncation
// ---------------------------------------------------------------------------

/// Sums term(j) for j = 0..J where J is the first index at which the
/// accumulated mass(j) reaches 1 - mass_eps. The mass sequence is expected to
/// be a (sub)probability sequence; callers pass the basis weights.
template <class Term, class Mass>
SeriesResult truncated_series_sum(const Term& term, const Mass& mass, const SeriesConfig& cfg) {
    cfg.validate();
    double sum = 0.0;
    double acc_mass = 0.0;
    for (int j = 0; j <= cfg.j_max; ++j) {
        sum += term(j);
        acc_mass += mass(j);
        if (acc_mass >= 1.0 - cfg.mass_eps) return {sum, j};
    }
    throw std::runtime_error("truncated_series_sum: mass did not reach 1 - mass_eps within j_max terms");
}

// ---------------------------------------------------------------------------
// numerical differentiation
// ---------------------------------------------------------------------------

/// Step size used by the oracle paths when none is specified.
inline double default_derivative_step(double x, int order) {
    return order <= 2 ? std::max(1e-4, 1e-3 * (1.0 + std::abs(x)))
                      : 1e-2 * (1.0 + std::abs(x));
}

namespace detail {

inline double binom(int k, int i) {
    double v = 1.0;
    for (int l = 0; l < i; ++l) v = v * (k - l) / (l + 1);
    return v;
}

// centred k-th difference quotient, nodes x + (k/2 - i) h
template <class F>
double central_quotient(const F& f, double x, int k, double h) {
    double s = 0.0;
    for (int i = 0; i <= k; ++i) {
        const double w = ((i % 2) ? -1.0 : 1.0) * binom(k, i);
        s += w * f(x + (0.5 * k - i) * h);
    }
    return s / std::pow(h, k);
}

// one-sided k-th difference quotient with second-order coefficients,
// nodes x .. x + (k+1) h; keeps the stencil inside [0, inf)
template <class F>
double forward_quotient(const F& f, double x, int k, double h) {
    static constexpr double coeff[4][6] = {
        {-1.5, 2.0, -0.5, 0.0, 0.0, 0.0},
        {2.0, -5.0, 4.0, -1.0, 0.0, 0.0},
        {-2.5, 9.0, -12.0, 7.0, -1.5, 0.0},
        {3.0, -14.0, 26.0, -24.0, 11.0, -2.0},
    };
    double s = 0.0;
    for (int i = 0; i <= k + 1; ++i) s += coeff[k - 1][i] * f(x + i * h);
    return s / std::pow(h, k);
}

}  // namespace detail

/// Finite-difference estimate of the order-th derivative of f at x >= 0 with
/// one Richardson step (h and h/2). Uses the centred stencil when it fits in
/// [0, inf), a forward stencil otherwise.
template <class F>
double numeric_derivative(const F& f, double x, int order, double h) {
    if (order < 1 || order > 4)
        throw std::domain_error("numeric_derivative: order must be in {1,...,4}");
    if (!(h > 0.0)) throw std::domain_error("numeric_derivative: step must be positive");
    if (x - order * h >= 0.0) {
        const double d1 = detail::central_quotient(f, x, order, h);
        const double d2 = detail::central_quotient(f, x, order, 0.5 * h);
        return (4.0 * d2 - d1) / 3.0;  // O(h^2) leading term cancelled
    }
    const double d1 = detail::forward_quotient(f, x, order, h);
    const double d2 = detail::forward_quotient(f, x, order, 0.5 * h);
    return (4.0 * d2 - d1) / 3.0;  // base stencil is O(h^2)
}

template <class F>
double numeric_derivative(const F& f, double x, int order) {
    return numeric_derivative(f, x, order, default_derivative_step(x, order));
}

// ---------------------------------------------------------------------------
// uniform evaluation grids
// ---------------------------------------------------------------------------

/// Closed uniform grid a, a+step, ..., b (end point included when it lands
/// within step*1e-9 of the arithmetic progression).
struct UniformGrid {
    double a = 0.0;
    double b = 1.0;
    double step = 0.1;

    void validate() const {
        if (!(a < b)) throw std::domain_error("grid: requires a < b");
        if (!(step > 0.0)) throw std::domain_error("grid: step must be positive");
        if ((b - a) / step > 1e7) throw std::domain_error("grid: more than 1e7 points requested");
    }
    std::size_t size() const {
        return static_cast<std::size_t>(std::floor((b - a) / step + 1e-9)) + 1;
    }
    double point(std::size_t i) const { return a + static_cast<double>(i) * step; }
    std::vector<double> points() const {
        std::vector<double> v(size());
        for (std::size_t i = 0; i < v.size(); ++i) v[i] = point(i);
        return v;
    }
};

}  // namespace linkops
