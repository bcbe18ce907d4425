#pragma once

// Shared 1D quadrature rules (internal).

#include <cmath>
#include <cstddef>
#include <utility>
#include <vector>

namespace blochnorm::detail {

struct GaussRule {
    std::vector<double> x;  // nodes on (-1, 1)
    std::vector<double> w;
};

// Gauss-Legendre nodes/weights by Newton iteration on P_n (cached per order).
inline const GaussRule& gauss_legendre(int order) {
    static thread_local std::vector<GaussRule> cache(64);
    GaussRule& rule = cache.at(static_cast<std::size_t>(order));
    if (!rule.x.empty()) return rule;
    rule.x.resize(order);
    rule.w.resize(order);
    const int m = (order + 1) / 2;
    for (int i = 0; i < m; ++i) {
        double z = std::cos(M_PI * (i + 0.75) / (order + 0.5));
        double pp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p1 = 1.0, p2 = 0.0;
            for (int j = 0; j < order; ++j) {
                const double p3 = p2;
                p2 = p1;
                p1 = ((2.0 * j + 1.0) * z * p2 - j * p3) / (j + 1.0);
            }
            pp = order * (z * p1 - p2) / (z * z - 1.0);
            const double z1 = z;
            z = z1 - p1 / pp;
            if (std::abs(z - z1) < 1e-15) break;
        }
        rule.x[i] = -z;
        rule.x[order - 1 - i] = z;
        rule.w[i] = 2.0 / ((1.0 - z * z) * pp * pp);
        rule.w[order - 1 - i] = rule.w[i];
    }
    return rule;
}

// Panels of [A, B] graded geometrically toward A (levels_a) and B (levels_b):
// widths halve toward each graded endpoint so endpoint algebraic
// singularities are resolved to relative scale 2^-levels.
inline std::vector<std::pair<double, double>> graded_panels(double A, double B,
                                                            int levels_a, int levels_b) {
    std::vector<std::pair<double, double>> out;
    if (!(B > A)) return out;
    const double M = 0.5 * (A + B);
    std::vector<double> pts;
    pts.push_back(A);
    for (int j = levels_a; j >= 1; --j) {
        const double p = A + (M - A) * std::ldexp(1.0, -j);
        if (p > pts.back()) pts.push_back(p);
    }
    if (M > pts.back()) pts.push_back(M);
    std::vector<double> right;
    for (int j = levels_b; j >= 1; --j) {
        const double p = B - (B - M) * std::ldexp(1.0, -j);
        if (p > M && p < B) right.push_back(p);
    }
    for (auto it = right.rbegin(); it != right.rend(); ++it)
        if (*it > pts.back()) pts.push_back(*it);
    pts.push_back(B);
    for (std::size_t i = 0; i + 1 < pts.size(); ++i)
        if (pts[i + 1] > pts[i]) out.emplace_back(pts[i], pts[i + 1]);
    return out;
}

// Composite Gauss-Legendre over a panel list.
template <typename F>
double integrate_panels(const std::vector<std::pair<double, double>>& panels, int order, F&& f) {
    const GaussRule& g = gauss_legendre(order);
    double total = 0.0;
    for (const auto& [a, b] : panels) {
        const double hw = 0.5 * (b - a);
        const double mid = 0.5 * (a + b);
        double s = 0.0;
        for (int i = 0; i < order; ++i) s += g.w[i] * f(mid + hw * g.x[i]);
        total += hw * s;
    }
    return total;
}

// tanh-sinh (double exponential) rule on (0, 1); handles endpoint algebraic
// singularities.  Halves the step until the change drops below tol.
template <typename F>
double tanh_sinh_01(F&& f, double tol, int max_level = 12) {
    const double pi_half = M_PI / 2.0;
    auto eval = [&](double t) {
        const double sh = pi_half * std::sinh(t);
        const double x = 0.5 * (1.0 + std::tanh(sh));  // map to (0,1)
        const double ch = std::cosh(sh);
        const double w = 0.5 * pi_half * std::cosh(t) / (ch * ch);
        if (!(w > 1e-320) || !(x > 0.0) || !(x < 1.0)) return 0.0;
        return f(x) * w;
    };
    const double tmax = 6.55;
    double h = 1.0;
    double sum = eval(0.0);
    for (double t = h; t <= tmax; t += h) sum += eval(t) + eval(-t);
    double integral = h * sum;
    for (int level = 1; level <= max_level; ++level) {
        h *= 0.5;
        double add = 0.0;
        for (double t = h; t <= tmax; t += 2.0 * h) add += eval(t) + eval(-t);
        const double refined = 0.5 * integral + h * add;
        const double change = std::abs(refined - integral);
        integral = refined;
        if (level >= 3 && change <= tol * std::abs(integral)) break;
    }
    return integral;
}

}  // namespace blochnorm::detail
