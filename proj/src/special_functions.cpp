#include "blochnorm/special_functions.hpp"

#include <cmath>
#include <cstdlib>
#include <limits>

namespace blochnorm::sf {

namespace {

// Lanczos approximation, g = 607/128, 15 coefficients (Godfrey's set).
// Gives ~15 significant digits for lgamma on the positive axis.
constexpr double kLanczosG = 607.0 / 128.0;
constexpr double kLanczos[15] = {
    0.99999999999999709182,
    57.156235665862923517,
    -59.597960355475491248,
    14.136097974741747174,
    -0.49191381609762019978,
    0.33994649984811888699e-4,
    0.46523628927048575665e-4,
    -0.98374475304879564677e-4,
    0.15808870322491248884e-3,
    -0.21026444172410488319e-3,
    0.21743961811521264320e-3,
    -0.16431810653676389022e-3,
    0.84418223983852743293e-4,
    -0.26190838401581408670e-4,
    0.36899182659531622704e-5,
};
constexpr double kHalfLogTwoPi = 0.91893853320467274178;  // ln(2 pi)/2

}  // namespace

double log_gamma(double x) {
    if (!(x > 0.0)) throw std::domain_error("log_gamma: argument must be positive");
    // ln Gamma(x) = (x - 1/2) ln(x + g - 1/2) - (x + g - 1/2) + ln(2 pi)/2
    //             + ln S(x), with the Lanczos partial-fraction sum S.
    double s = kLanczos[0];
    for (int i = 1; i < 15; ++i) s += kLanczos[i] / (x + i - 1.0);
    const double base = x + kLanczosG - 0.5;
    return (x - 0.5) * std::log(base) - base + kHalfLogTwoPi + std::log(s);
}

double beta(double a, double b) {
    if (!(a > 0.0) || !(b > 0.0)) throw std::domain_error("beta: arguments must be positive");
    return std::exp(log_gamma(a) + log_gamma(b) - log_gamma(a + b));
}

double pochhammer(double a, int k) {
    if (k < 0) throw std::domain_error("pochhammer: k must be >= 0");
    double p = 1.0;
    for (int i = 0; i < k; ++i) p *= a + i;
    return p;
}

double gen_binom(double s, int k) {
    if (k < 0) throw std::domain_error("gen_binom: k must be >= 0");
    if (k < 40) {
        double p = 1.0;
        for (int i = 0; i < k; ++i) p *= (s + i) / (i + 1.0);
        return p;
    }
    // Large k: log space to dodge overflow; sign is positive whenever s > 0,
    // which is the only regime the library uses for large orders.
    return std::exp(log_gamma(s + k) - log_gamma(s) - log_gamma(k + 1.0));
}

double digamma(double x) {
    if (!(x > 0.0)) throw std::domain_error("digamma: argument must be positive");
    double acc = 0.0;
    while (x < 10.0) {
        acc -= 1.0 / x;
        x += 1.0;
    }
    // Asymptotic series: psi(x) ~ ln x - 1/(2x) - sum B_{2n}/(2n x^{2n}).
    const double inv = 1.0 / x;
    const double inv2 = inv * inv;
    static constexpr double kBern[7] = {
        1.0 / 12.0, -1.0 / 120.0, 1.0 / 252.0, -1.0 / 240.0,
        1.0 / 132.0, -691.0 / 32760.0, 1.0 / 12.0,
    };
    double r = std::log(x) - 0.5 * inv;
    double p = inv2;
    for (double bc : kBern) {
        r -= bc * p;
        p *= inv2;
    }
    return acc + r;
}

SeriesResult hyp2f1_truncated(const HypParams& p, double tol, std::size_t max_terms) {
    if (!(std::abs(p.z) < 1.0)) throw std::domain_error("hyp2f1_truncated: requires |z| < 1");
    if (!(tol > 0.0) || max_terms == 0)
        throw std::domain_error("hyp2f1_truncated: tol and max_terms must be positive");

    // Term recurrence T_{k+1} = T_k (a+k)(b+k) z / ((c+k)(k+1)).  After K
    // accumulated terms the dropped tail is bounded by |T_{K+1}| / (1 - r)
    // with r an upper bound on all later term ratios:
    //   |T_{j+1}/T_j| = |z| |1 + (P j + Q)/((c+j)(j+1))|,
    //   P = a+b-c-1, Q = ab-c,
    // and for j >= K+1 (with c + K + 1 > 0)
    //   |(P j + Q)/((c+j)(j+1))| <= mu (|P| + |Q|/(K+1)) / (K+2),
    //   mu = max_{j>=K+1} j/(c+j) = (K+1)/(c+K+1) if c < 0, else <= 1.
    const double z = p.z;
    double term = 1.0;
    double sum = 0.0;
    const double P = p.a + p.b - p.c - 1.0;
    const double Q = p.a * p.b - p.c;
    for (std::size_t k = 0; k < max_terms; ++k) {
        sum += term;
        const double kk = static_cast<double>(k);
        if (p.c + kk == 0.0)
            throw std::domain_error("hyp2f1_truncated: c is a non-positive integer");
        const double next = term * (p.a + kk) * (p.b + kk) / ((p.c + kk) * (kk + 1.0)) * z;
        const double K1 = kk + 1.0;
        if (p.c + K1 > 0.0) {
            const double mu = (p.c >= 0.0) ? 1.0 : K1 / (p.c + K1);
            const double r = std::abs(z) * (1.0 + mu * (std::abs(P) + std::abs(Q) / K1) / (K1 + 1.0));
            if (r < 1.0) {
                const double bound = std::abs(next) / (1.0 - r);
                if (bound <= tol)
                    return {sum, static_cast<std::size_t>(k + 1), bound, true};
            }
        }
        term = next;
    }
    // Budget exhausted: report the partial sum with a best-effort bound.
    double bound = std::numeric_limits<double>::infinity();
    const double r = std::abs(z) * (1.0 + (std::abs(P) + std::abs(Q)) / static_cast<double>(max_terms));
    if (r < 1.0) bound = std::abs(term) / (1.0 - r);
    return {sum, max_terms, bound, false};
}

double gauss_2f1_unit(double a, double b, double c) {
    const double d = c - a - b;
    if (!(d > 0.0)) throw std::domain_error("gauss_2f1_unit: requires c - a - b > 0");
    if (!(c > 0.0) || !(c - a > 0.0) || !(c - b > 0.0))
        throw std::domain_error("gauss_2f1_unit: requires c, c-a, c-b > 0");
    return std::exp(log_gamma(c) + log_gamma(d) - log_gamma(c - a) - log_gamma(c - b));
}

}  // namespace blochnorm::sf
