#include "blochnorm/series.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "blochnorm/constants.hpp"
#include "blochnorm/special_functions.hpp"
#include "quad_rules.hpp"

namespace blochnorm::series {

namespace {

constexpr double kPiHalf = M_PI / 2.0;

// sum_{m<=M} a_m x^m with tail bound a_{M+1} x^{M+1} / (1-x), valid because
// a_m is strictly decreasing.  tol is relative to the running sum.
SeriesResult a_series_sum(double x, double tol, std::size_t max_terms) {
    double am = kPiHalf;  // a_0 = Gamma(1/2)Gamma(3/2) = pi/2
    double xm = 1.0;
    double sum = 0.0;
    for (std::size_t m = 0; m < max_terms; ++m) {
        sum += am * xm;
        const double md = static_cast<double>(m);
        am *= (md + 0.5) * (md + 1.5) / ((md + 1.0) * (md + 1.0));
        xm *= x;
        const double bound = am * xm / (1.0 - x);
        if (bound <= tol * sum) return {sum, m + 1, bound, true};
    }
    return {sum, max_terms, am * xm / (1.0 - x), false};
}

// Abel form (1-x) sum a_m x^m = b_0 + sum_{m>=1} b_m x^m, b_m = -a_{m-1}/(4m^2).
// All b_m (m >= 1) are negative and sum_{m>M} |b_m| telescopes to a_M - 1
// (a_m decreases to 1), so the dropped tail obeys
//   |sum_{m>M} b_m x^m| <= x^{M+1} (a_M - 1).
SeriesResult abel_sum(double x, double tol, std::size_t max_terms) {
    double am_prev = kPiHalf;  // a_{m-1}, starts at a_0
    double xm = 1.0;
    double sum = kPiHalf;      // b_0
    double comp = 0.0;         // Kahan carry; runs reach ~1e7 terms in scans
    for (std::size_t m = 1; m < max_terms; ++m) {
        const double md = static_cast<double>(m);
        xm *= x;
        const double y = -am_prev / (4.0 * md * md) * xm - comp;
        const double s = sum + y;
        comp = (s - sum) - y;
        sum = s;
        const double am = am_prev * (md - 0.5) * (md + 0.5) / (md * md);
        const double bound = xm * (am - 1.0);
        if (bound <= tol * sum) return {sum, m + 1, bound, true};
        am_prev = am;
    }
    return {sum, max_terms, xm * (am_prev - 1.0), false};
}

SeriesResult scale_result(SeriesResult r, double factor) {
    r.value *= factor;
    r.tail_bound *= std::abs(factor);
    return r;
}

// Direct k-sum in Pochhammer form, S(m) = sum_k (g1)_k^2 / (k! (c)_k) with
// c = n+a+m+3/2; relates to ksum_closed by a Gamma(c) scale.  The terms decay
// like k^-(m+3/2), so the loop is cut at trunc_k (or earlier once terms are
// negligible) and completed with the midpoint Euler-Maclaurin formula
//   sum_{k>K} f(k) = int_{K+1/2}^inf f + f'(K+1/2)/24 + O(f''').
// The integral is mapped by k = A/u^2 onto (0,1] and done with 32-point
// Gauss-Legendre; f' uses a central difference.
struct KsumScaled {
    double value = 0.0;
    double residual_est = 0.0;
    int terms = 0;
};

KsumScaled ksum_pochhammer_em(double g1, double c, int trunc_k) {
    KsumScaled out;
    double term = 1.0;
    double sum = 0.0;
    int count = 0;
    for (int k = 0; k < trunc_k; ++k) {
        sum += term;
        count = k + 1;
        const double kd = static_cast<double>(k);
        term *= (g1 + kd) * (g1 + kd) / ((kd + 1.0) * (c + kd));
        if (k >= 3 && term < 1e-15 * sum) break;
    }
    // Accumulated T_0..T_{count-1}; the midpoint rule for the remainder
    // starts at A = count - 1/2.
    const double A = static_cast<double>(count) - 0.5;
    const double lg_g1 = sf::log_gamma(g1);
    const double lg_c = sf::log_gamma(c);
    auto f = [&](double kk) {
        return std::exp(2.0 * (sf::log_gamma(g1 + kk) - lg_g1) - sf::log_gamma(kk + 1.0) -
                        sf::log_gamma(c + kk) + lg_c);
    };
    const detail::GaussRule& g = detail::gauss_legendre(32);
    double integral = 0.0;
    for (int i = 0; i < 32; ++i) {
        const double u = 0.5 * (g.x[i] + 1.0);
        if (u <= 0.0) continue;
        const double kk = A / (u * u);
        integral += 0.5 * g.w[i] * f(kk) * 2.0 * A / (u * u * u);
    }
    const double deriv = f(A + 0.5) - f(A - 0.5);
    const double d3 = f(A + 1.5) - 3.0 * f(A + 0.5) + 3.0 * f(A - 0.5) - f(A - 1.5);
    out.value = sum + integral + deriv / 24.0;
    out.residual_est = (7.0 / 5760.0) * std::abs(d3) + 1e-14 * integral;
    out.terms = count;
    return out;
}

}  // namespace

double coeff_a(int m) {
    if (m < 0) throw std::domain_error("coeff_a: m must be >= 0");
    const double md = static_cast<double>(m);
    return std::exp(sf::log_gamma(md + 0.5) + sf::log_gamma(md + 1.5) -
                    2.0 * sf::log_gamma(md + 1.0));
}

double coeff_a_ratio(int m) {
    if (m < 0) throw std::domain_error("coeff_a_ratio: m must be >= 0");
    const double md = static_cast<double>(m);
    return (md + 0.5) * (md + 1.5) / ((md + 1.0) * (md + 1.0));
}

double abel_coeff(int m) {
    if (m < 0) throw std::domain_error("abel_coeff: m must be >= 0");
    if (m == 0) return kPiHalf;
    const double md = static_cast<double>(m);
    return -coeff_a(m - 1) / (4.0 * md * md);
}

SeriesResult phi_eval(const Params& p, double x, double tol, std::size_t max_terms) {
    p.validate();
    if (!(x >= 0.0) || !(x < 1.0)) throw std::domain_error("phi_eval: x must lie in [0, 1)");
    const double na = p.npa();
    const double pref = std::exp(sf::log_gamma(na - 1.0) - 2.0 * sf::log_gamma(na / 2.0 + 1.0));
    if (x >= 0.9) return scale_result(abel_sum(x, tol, max_terms), pref);
    SeriesResult r = a_series_sum(x, tol, max_terms);
    return scale_result(r, pref * (1.0 - x));
}

SeriesResult l_series(const Params& p, double t, double tol, std::size_t max_terms) {
    p.validate();
    if (t == 0.0)
        throw std::domain_error("l_series: t = 0 is the Abel endpoint; use l_limit_zero");
    if (!(t > 0.0) || !(t <= kPiHalf))
        throw std::domain_error("l_series: t must lie in (0, pi/2]");
    const double ct = std::cos(t);
    const double x = ct * ct;
    const double Ca = compute_constants(p).C_alpha;
    if (x >= 0.9) return scale_result(abel_sum(x, tol, max_terms), Ca);
    const double st = std::sin(t);
    SeriesResult r = a_series_sum(x, tol, max_terms);
    return scale_result(r, Ca * st * st);
}

double l_limit_zero(const Params& p) { return compute_constants(p).C_alpha; }

double ksum_closed(const Params& p, int m) {
    p.validate();
    if (m < 0) throw std::domain_error("ksum_closed: m must be >= 0");
    const double md = static_cast<double>(m);
    return std::exp(sf::log_gamma(md + 0.5) - 2.0 * sf::log_gamma(md + 1.0 + p.npa() / 2.0));
}

double ksum_direct(const Params& p, int m, int trunc_k) {
    p.validate();
    if (m < 0 || trunc_k < 8) throw std::domain_error("ksum_direct: need m >= 0, trunc_k >= 8");
    const double na = p.npa();
    const double c = na + m + 1.5;
    const KsumScaled s = ksum_pochhammer_em((na + 1.0) / 2.0, c, trunc_k);
    return s.value * std::exp(-sf::log_gamma(c));
}

SeriesResult l_double_series(const Params& p, double t, double tol, std::size_t max_terms) {
    p.validate();
    if (!(t > 0.0) || !(t <= kPiHalf))
        throw std::domain_error("l_double_series: t must lie in (0, pi/2]");
    const double ct = std::cos(t);
    const double x = ct * ct;
    if (x > 0.999)
        throw std::domain_error("l_double_series: cos^2 t exceeds the 0.999 cap");

    const double na = p.npa();
    const double g1 = (na + 1.0) / 2.0;
    const double g2 = (na + 2.0) / 2.0;
    // (n+a+1) c_a k_a pi^2 = (n+a+1) Gamma(n+a+1)/Gamma(n+a-1); pi powers cancel.
    const double log_chain = std::log(na + 1.0) + sf::log_gamma(na + 1.0) - sf::log_gamma(na - 1.0);
    const double lg_na1 = sf::log_gamma(na - 1.0);
    const double lg_g2 = sf::log_gamma(g2);

    double sum = 0.0;
    double residual = 0.0;
    std::size_t rows = 0;
    double row = 0.0;
    const std::size_t row_cap = std::max<std::size_t>(8, max_terms);
    for (std::size_t m = 0; m < row_cap; ++m) {
        const double md = static_cast<double>(m);
        const double c = na + md + 1.5;
        const KsumScaled ks = ksum_pochhammer_em(g1, c, 420);
        const double log_binom2 =
            2.0 * (sf::log_gamma(g2 + md) - lg_g2 - sf::log_gamma(md + 1.0));
        const double log_coef = log_binom2 + lg_na1 + sf::log_gamma(md + 1.5) -
                                sf::log_gamma(c) + std::log(ks.value);
        const double xpow = (m == 0) ? 0.0 : md * std::log(x);
        const double rowval = std::exp(log_chain + log_coef + xpow + std::log1p(-x));
        sum += rowval;
        residual += rowval * (ks.residual_est / ks.value);
        row = rowval;
        rows = m + 1;
        // Row coefficients track a_m (ratio < 1), so rows decay at least
        // geometrically with ratio ~ x once m >= 2.
        if (m >= 4) {
            const double tail = rowval * x / (1.0 - x) * 1.5;
            if (tail + residual <= tol * sum) return {sum, rows, tail + residual, true};
        }
    }
    const double tail = row * x / (1.0 - x) * 1.5;
    return {sum, rows, tail + residual, false};
}

ScanResult scan_monotone(const Params& p, int grid_size) {
    p.validate();
    if (grid_size < 2) throw std::domain_error("scan_monotone: grid_size must be >= 2");
    const double eps = 1e-3;
    std::vector<double> ts(static_cast<std::size_t>(grid_size));
    for (int i = 0; i < grid_size; ++i)
        ts[static_cast<std::size_t>(i)] = eps + (kPiHalf - eps) * i / (grid_size - 1);

    ScanResult out;
    double prev = l_limit_zero(p);
    out.is_increasing = true;
    out.argmax = 0.0;
    out.max_value = prev;
    for (double t : ts) {
        const double v = l_series(p, t, 1e-11, 30000000).value;
        if (!(v > prev)) out.is_increasing = false;
        if (v > out.max_value) {
            out.max_value = v;
            out.argmax = t;
        }
        prev = v;
    }
    return out;
}

}  // namespace blochnorm::series
