#include "blochnorm/quadrature.hpp"

#include <cmath>
#include <vector>

#include "blochnorm/special_functions.hpp"
#include "quad_rules.hpp"

namespace blochnorm::quad {

namespace {
constexpr double kTwoPi = 2.0 * M_PI;
}

CircleParseval circle_parseval(double s, double q, double tol) {
    if (!(s > 0.0)) throw std::domain_error("circle_parseval: s must be > 0");
    if (!(q >= 0.0) || !(q < 1.0)) throw std::domain_error("circle_parseval: q must lie in [0, 1)");
    CircleParseval out;

    // Series: terms tau_k = C(s/2+k-1,k)^2 q^{2k}; the ratio
    // ((s/2+k)/(k+1))^2 q^2 decreases to q^2, so once r < 1 the tail is
    // bounded by tau_{K+1}/(1-r).
    const double h = 0.5 * s;
    const double q2 = q * q;
    double term = 1.0;
    double sum = 0.0;
    for (int k = 0; k < 2000000; ++k) {
        sum += term;
        const double kd = static_cast<double>(k);
        const double next = term * ((h + kd) / (kd + 1.0)) * ((h + kd) / (kd + 1.0)) * q2;
        const double grow = 1.0 + std::max(0.0, h - 1.0) / (kd + 2.0);
        const double r = q2 * grow * grow;
        if (r < 1.0 && next / (1.0 - r) <= tol * sum) {
            out.series_tail_bound = kTwoPi * next / (1.0 - r);
            break;
        }
        term = next;
    }
    out.closed_series = kTwoPi * sum;

    // Periodic trapezoid with doubling; integrand is analytic and periodic,
    // so convergence is geometric with rate ~ -log q.
    auto f = [&](double th) {
        const double d2 = 1.0 - 2.0 * q * std::cos(th) + q2;
        return std::pow(d2, -0.5 * s);
    };
    int nn = 32;
    double prev = 0.0;
    double val = 0.0;
    std::uint64_t evals = 0;
    for (int it = 0; it < 18; ++it) {
        double acc = 0.0;
        for (int j = 0; j < nn; ++j) acc += f(kTwoPi * j / nn);
        evals += static_cast<std::uint64_t>(nn);
        val = kTwoPi * acc / nn;
        if (it > 0 && std::abs(val - prev) <= 0.5 * tol * std::abs(val)) break;
        prev = val;
        nn *= 2;
    }
    out.direct_quadrature = val;
    out.quad_evals = evals;
    return out;
}

RadialBeta radial_moment(double a, double s) {
    if (!(a > -1.0) || !(s > -1.0))
        throw std::domain_error("radial_moment: need a > -1 and s > -1");
    RadialBeta out;
    out.closed = 0.5 * sf::beta(0.5 * (a + 1.0), s + 1.0);
    // u = rho^2 removes the rho = 1 derivative singularity of (1-rho^2)^s;
    // tanh-sinh then absorbs the remaining endpoint powers of u and 1-u.
    out.quadrature = detail::tanh_sinh_01(
        [&](double u) {
            return 0.5 * std::pow(u, 0.5 * (a - 1.0)) * std::pow(1.0 - u, s);
        },
        1e-13);
    return out;
}

RadialBeta radial_beta(int k, double s) {
    if (k < 0) throw std::domain_error("radial_beta: k must be >= 0");
    return radial_moment(2.0 * k + 1.0, s);
}

MoebiusCheck moebius_identity_check(std::complex<double> z1, double c) {
    if (!(std::abs(z1) < 1.0)) throw std::domain_error("moebius_identity_check: |z1| must be < 1");
    if (!(c >= 0.0) || !(c < 1.0)) throw std::domain_error("moebius_identity_check: c must lie in [0, 1)");
    using cplx = std::complex<double>;
    MoebiusCheck out;
    const cplx zeta = (c - z1) / (1.0 - z1 * c);
    out.zeta = zeta;
    const cplx back = (c - zeta) / (1.0 - zeta * c);
    out.residual_involution = std::abs(back - z1);
    out.residual_kernel = std::abs((1.0 - z1 * c) - (1.0 - c * c) / (1.0 - zeta * c));
    const double az = std::abs(z1), azeta = std::abs(zeta);
    const double lhs_w = 1.0 - az * az;
    const double rhs_w = (1.0 - c * c) * (1.0 - azeta * azeta) / std::norm(1.0 - zeta * c);
    out.residual_weight = std::abs(lhs_w - rhs_w);

    // J = (1-c^2)^2/|1 - zeta c|^4 against the FD Jacobian determinant of the
    // R^2 -> R^2 map zeta -> z1 = (c - zeta)/(1 - zeta c).
    const double J_formula = (1.0 - c * c) * (1.0 - c * c) / std::pow(std::norm(1.0 - zeta * c), 2.0);
    const double hstep = 1e-5;
    auto map = [&](cplx w) { return (c - w) / (1.0 - w * c); };
    const cplx dx = (map(zeta + hstep) - map(zeta - hstep)) / (2.0 * hstep);
    const cplx dy = (map(zeta + cplx(0.0, hstep)) - map(zeta - cplx(0.0, hstep))) / (2.0 * hstep);
    const double J_fd = dx.real() * dy.imag() - dx.imag() * dy.real();
    out.jacobian_fd_residual = std::abs(J_formula - J_fd);
    return out;
}

InnerHyp::InnerHyp(double g) : g_(g), b_(g - 1.0) {
    if (!(b_ > 0.0)) throw std::domain_error("InnerHyp: requires g > 1 (i.e. n + alpha > 1)");
    // Euler transform: F(g,g;2g-1;y) = (1-y)^{-1} F(b,b;2b+1;y), b = g-1.
    // The transformed function has c-a-b = 1 and near y = 1 satisfies
    //   F(b,b;2b+1;y) = G(2b+1)/G(b+1)^2
    //     + G(2b+1)/G(b)^2 * w * sum_j (b+1)_j^2/(j!(j+1)!) w^j
    //         * [ln w - psi(j+1) - psi(j+2) + 2 psi(b+1+j)],  w = 1-y.
    lead_ = std::exp(sf::log_gamma(2.0 * b_ + 1.0) - 2.0 * sf::log_gamma(b_ + 1.0));
    fac2_ = std::exp(sf::log_gamma(2.0 * b_ + 1.0) - 2.0 * sf::log_gamma(b_));
    const int J = 140;
    cj_.resize(J);
    dj_.resize(J);
    double cc = 1.0;
    for (int j = 0; j < J; ++j) {
        cj_[j] = cc;
        dj_[j] = -sf::digamma(j + 1.0) - sf::digamma(j + 2.0) + 2.0 * sf::digamma(b_ + 1.0 + j);
        const double jd = static_cast<double>(j);
        cc *= ((b_ + 1.0 + jd) / (jd + 1.0)) * ((b_ + 1.0 + jd) / (jd + 2.0));
    }
    const int K = 600;
    direct_.resize(K);
    double t = 1.0;
    for (int k = 0; k < K; ++k) {
        direct_[k] = t;
        const double kd = static_cast<double>(k);
        t *= (g_ + kd) * (g_ + kd) / ((2.0 * g_ - 1.0 + kd) * (kd + 1.0));
    }
}

double InnerHyp::eval_from_w(double w) const {
    if (!(w > 0.0) || !(w > 1e-280))
        throw std::domain_error("InnerHyp: w must be positive (z1 on the cone point)");
    if (w >= 0.3) {
        const double y = 1.0 - w;
        double sum = 0.0;
        double yp = 1.0;
        for (std::size_t k = 0; k < direct_.size(); ++k) {
            const double add = direct_[k] * yp;
            sum += add;
            yp *= y;
            if (k > 8 && add < 1e-17 * sum) break;
        }
        return sum;
    }
    const double lw = std::log(w);
    double s = 0.0;
    double wp = 1.0;
    for (std::size_t j = 0; j < cj_.size(); ++j) {
        const double add = cj_[j] * wp * (lw + dj_[j]);
        s += add;
        wp *= w;
        if (j > 8 && cj_[j] * wp * (std::abs(lw) + std::abs(dj_[j])) < 1e-17 * std::abs(s)) break;
    }
    return (lead_ + fac2_ * w * s) / w;
}

double inner_disk_closed(const Params& p, std::complex<double> z1, double cos_t) {
    p.validate();
    const double na = p.npa();
    const InnerHyp hyp((na + 1.0) / 2.0);
    const double az2 = std::norm(z1);
    const double d2 = std::norm(1.0 - z1 * cos_t);
    const double w = std::norm(z1 - cos_t) / d2;  // 1 - y, cancellation-free
    const double pref = std::pow(1.0 - az2, na - 1.0) * std::pow(d2, -0.5 * (na + 1.0));
    return M_PI * pref * hyp.eval_from_w(w) / (na - 1.0);
}

namespace {

// One full tensor pass at a given grading depth / order.
double quad_I_pass(const Params& p, double cos_t, const InnerHyp& hyp, int levels, int order,
                   std::uint64_t& evals) {
    const double na = p.npa();
    const double uc = cos_t * cos_t;
    const double pref = M_PI / (na - 1.0);

    // u-panels: graded into the cone at u = cos^2 t from both sides, plus the
    // u = 0 (sqrt smoothness) and u = 1 (fractional weight) endpoints.  When
    // cos t ~ 0 the cone merges with the origin and needs the deep grading.
    const int deep0 = (uc < 1e-4) ? std::max(levels, 64) : 18;
    std::vector<std::pair<double, double>> up;
    for (auto& pr : detail::graded_panels(0.0, uc, 18, levels)) up.push_back(pr);
    for (auto& pr : detail::graded_panels(uc, 1.0, deep0, 16)) up.push_back(pr);
    const auto tp = detail::graded_panels(0.0, M_PI, levels, 4);

    const detail::GaussRule& gr = detail::gauss_legendre(order);
    double total = 0.0;
    for (const auto& [t0, t1] : tp) {
        const double thw = 0.5 * (t1 - t0);
        const double thm = 0.5 * (t1 + t0);
        for (int i = 0; i < order; ++i) {
            const double th = thm + thw * gr.x[i];
            const double wth = thw * gr.w[i];
            const double sh2 = std::sin(0.5 * th) * std::sin(0.5 * th);
            double acc = 0.0;
            for (const auto& [u0, u1] : up) {
                const double uw = 0.5 * (u1 - u0);
                const double um = 0.5 * (u1 + u0);
                for (int j = 0; j < order; ++j) {
                    const double u = um + uw * gr.x[j];
                    const double r = std::sqrt(u);
                    const double rc = r * cos_t;
                    // |1 - z1 c|^2 and |z1 - c|^2 in cancellation-free form.
                    const double d2 = (1.0 - rc) * (1.0 - rc) + 4.0 * rc * sh2;
                    const double dz2 = (r - cos_t) * (r - cos_t) + 4.0 * rc * sh2;
                    const double wq = dz2 / d2;  // = 1 - y exactly
                    const double G = std::sqrt(dz2) * std::pow(1.0 - u, na - 1.0) *
                                     std::pow(d2, -0.5 * (na + 1.0)) * hyp.eval_from_w(wq);
                    acc += uw * gr.w[j] * G;
                    ++evals;
                }
            }
            total += wth * acc;
        }
    }
    // x2 for the theta in (pi, 2pi) mirror, x1/2 from du = 2 r dr.
    return pref * total;
}

}  // namespace

QuadResult quad_I_2d(const Params& p, double t, double tol) {
    p.validate();
    if (!(t > 0.0) || !(t <= M_PI / 2.0))
        throw std::domain_error("quad_I_2d: t must lie in (0, pi/2]");
    if (!(p.npa() - 2.0 > -1.0)) throw std::domain_error("quad_I_2d: requires n + alpha > 1");
    const double cos_t = std::cos(t);
    const InnerHyp hyp((p.npa() + 1.0) / 2.0);
    QuadResult out;
    const double coarse = quad_I_pass(p, cos_t, hyp, 26, 10, out.evals);
    const double fine = quad_I_pass(p, cos_t, hyp, 32, 14, out.evals);
    out.value = fine;
    out.error_estimate = std::abs(fine - coarse);
    out.converged = out.error_estimate <= tol * std::abs(fine);
    return out;
}

}  // namespace blochnorm::quad
