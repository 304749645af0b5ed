// Generalized rising/falling factorials with arithmetic step c and the basis
// functions p_{n,j} of the Baskakov (c > 0) and Szasz-Mirakjan (c = 0)
// families, including the derivative identity p' = n (p_{n+c,j-1} - p_{n+c,j}).
#pragma once

#include <cmath>
#include <stdexcept>
#include <string>

#include "linkops/numerics.hpp"

namespace linkops {

/// Family parameters: c = 0 selects the Szasz-Mirakjan regime, c > 0 the
/// Baskakov-type regime; n is the degree-like parameter.
struct ShapeParams {
    double c = 0.0;
    double n = 1.0;

    ShapeParams() = default;
    ShapeParams(double c_, double n_) : c(c_), n(n_) { validate(); }

    void validate() const {
        if (!(c >= 0.0))
            throw std::domain_error("ShapeParams: requires c >= 0, got c=" + std::to_string(c));
        if (!(n > c))
            throw std::domain_error("ShapeParams: requires n > c, got n=" + std::to_string(n) +
                                    ", c=" + std::to_string(c));
    }
};

/// Parameters of one operator evaluation: link parameter rho, Kantorovich
/// order k, and the truncation/quadrature tolerances.
struct OpConfig {
    double rho = 1.0;
    int k = 0;
    SeriesConfig series{};
    QuadratureConfig quad{};

    void validate() const {
        if (!(rho > 0.0)) throw std::domain_error("OpConfig: requires rho > 0");
        if (k < 0) throw std::domain_error("OpConfig: requires k >= 0");
        series.validate();
        quad.validate();
    }

    /// rho rounded to the nearest integer; throws unless rho is (numerically)
    /// a positive integer. The closed-form representation paths require this.
    int integer_rho() const {
        const double r = std::round(rho);
        if (!(r >= 1.0) || std::abs(rho - r) > 1e-9)
            throw std::domain_error(
                "OpConfig: this path requires rho to be a positive integer, got rho=" +
                std::to_string(rho));
        return static_cast<int>(r);
    }
};

// ---------------------------------------------------------------------------
// generalized factorials
// ---------------------------------------------------------------------------

/// ln of the rising factorial with step c: prod_{l=0}^{j-1} (a + c l).
inline double log_rising_factorial(double a, int j, double c) {
    if (j < 0) throw std::domain_error("log_rising_factorial: requires j >= 0");
    if (j == 0) return 0.0;
    if (!(a > 0.0)) throw std::domain_error("log_rising_factorial: requires a > 0");
    if (c == 0.0) return j * std::log(a);
    if (j <= 64) {
        double s = 0.0;
        for (int l = 0; l < j; ++l) s += std::log(a + c * l);
        return s;
    }
    return j * std::log(c) + log_gamma(a / c + j) - log_gamma(a / c);
}

/// ln of the falling factorial with step c: prod_{l=0}^{j-1} (a - c l).
/// Every factor must stay positive.
inline double log_falling_factorial(double a, int j, double c) {
    if (j < 0) throw std::domain_error("log_falling_factorial: requires j >= 0");
    if (j == 0) return 0.0;
    double s = 0.0;
    for (int l = 0; l < j; ++l) {
        const double factor = a - c * l;
        if (!(factor > 0.0))
            throw std::domain_error("log_falling_factorial: factor a - c*l is not positive at l=" +
                                    std::to_string(l));
        s += std::log(factor);
    }
    return s;
}

// ---------------------------------------------------------------------------
// basis functions
// ---------------------------------------------------------------------------

/// Basis function p_{n,j}(x). Negative j evaluates to 0 by convention, which
/// lets the derivative identity hold verbatim at j = 0.
inline double basis_p(const ShapeParams& sp, int j, double x) {
    if (j < 0) return 0.0;
    if (!(x >= 0.0)) throw std::domain_error("basis_p: requires x >= 0");
    if (j == 0) {
        if (sp.c == 0.0) return std::exp(-sp.n * x);
        return std::exp(-(sp.n / sp.c) * std::log1p(sp.c * x));
    }
    if (x == 0.0) return 0.0;
    if (sp.c == 0.0)
        return std::exp(j * std::log(sp.n) + j * std::log(x) - sp.n * x - log_gamma(j + 1.0));
    return std::exp(log_rising_factorial(sp.n, j, sp.c) - log_gamma(j + 1.0) + j * std::log(x) -
                    (sp.n / sp.c + j) * std::log1p(sp.c * x));
}

/// d/dx p_{n,j}(x) = n [ p_{n+c,j-1}(x) - p_{n+c,j}(x) ].
inline double basis_p_derivative(const ShapeParams& sp, int j, double x) {
    const ShapeParams up{sp.c, sp.n + sp.c};
    return sp.n * (basis_p(up, j - 1, x) - basis_p(up, j, x));
}

namespace detail {

// Location and scale of the normalized kernel t -> (m - c) p_{m,i}(t); used
// only to seed quadrature truncation. Falls back to crude values when the
// distribution has no finite variance.
struct KernelStats {
    double mean = 1.0;
    double sd = 1.0;
};

inline KernelStats basis_kernel_stats(double m, int i, double c) {
    KernelStats st;
    if (c == 0.0) {
        st.mean = (i + 1.0) / m;                // Gamma(i+1, m)
        st.sd = std::sqrt(i + 1.0) / m;
        return st;
    }
    const double beta = m / c - 1.0;            // scaled beta-prime shape
    const double alpha = i + 1.0;
    st.mean = beta > 1.0 ? alpha / ((beta - 1.0) * c) : (alpha / m) * 4.0 + 1.0;
    if (beta > 2.0) {
        const double var = alpha * (alpha + beta - 1.0) / ((beta - 2.0) * (beta - 1.0) * (beta - 1.0));
        st.sd = std::sqrt(var) / c;
    } else {
        st.sd = st.mean + 1.0;
    }
    return st;
}

}  // namespace detail

}  // namespace linkops
