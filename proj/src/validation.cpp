#include "blochnorm/validation.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdio>
#include <functional>
#include <random>

#include "blochnorm/constants.hpp"
#include "blochnorm/monte_carlo.hpp"
#include "blochnorm/quadrature.hpp"
#include "blochnorm/series.hpp"
#include "blochnorm/special_functions.hpp"

namespace blochnorm::validation {

namespace {

std::string fmt(const char* f, double a, double b = 0.0) {
    char buf[160];
    std::snprintf(buf, sizeof(buf), f, a, b);
    return buf;
}

struct Runner {
    std::vector<CheckResult> results;
    void add(const std::string& name, bool pass, std::string detail) {
        results.push_back({name, pass, std::move(detail)});
    }
    void guarded(const std::string& name, const std::function<std::pair<bool, std::string>()>& fn) {
        try {
            auto [pass, detail] = fn();
            add(name, pass, std::move(detail));
        } catch (const std::exception& e) {
            add(name, false, std::string("exception: ") + e.what());
        }
    }
};

}  // namespace

std::vector<CheckResult> run_all(const ValidateConfig& cfg) {
    Runner r;
    const Params& p = cfg.p;
    p.validate();
    std::mt19937_64 rng(cfg.seed);

    r.guarded("special_fn.gamma_recurrence", [&] {
        std::uniform_real_distribution<double> dist(0.1, 500.0);
        double worst = 0.0;
        for (int i = 0; i < 1000; ++i) {
            const double x = dist(rng);
            const double res =
                std::abs(std::expm1(sf::log_gamma(x + 1.0) - sf::log_gamma(x) - std::log(x)));
            worst = std::max(worst, res);
        }
        return std::make_pair(worst < 1e-12, fmt("max rel residual %.3g (tol 1e-12)", worst));
    });

    r.guarded("special_fn.pochhammer_log_gamma", [&] {
        std::uniform_real_distribution<double> da(0.05, 50.0);
        std::uniform_int_distribution<int> dk(0, 30);
        double worst = 0.0;
        for (int i = 0; i < 400; ++i) {
            const double a = da(rng);
            const int k = dk(rng);
            const double direct = sf::pochhammer(a, k);
            const double viag = std::exp(sf::log_gamma(a + k) - sf::log_gamma(a));
            worst = std::max(worst, std::abs(direct - viag) / viag);
        }
        return std::make_pair(worst < 1e-12, fmt("max rel diff %.3g (tol 1e-12)", worst));
    });

    r.guarded("special_fn.gen_binom_pochhammer", [&] {
        std::uniform_real_distribution<double> ds(0.05, 20.0);
        std::uniform_int_distribution<int> dk(0, 25);
        double worst = 0.0;
        for (int i = 0; i < 400; ++i) {
            const double s = ds(rng);
            const int k = dk(rng);
            double fact = 1.0;
            for (int j = 2; j <= k; ++j) fact *= j;
            const double lhs = sf::gen_binom(s, k);
            const double rhs = sf::pochhammer(s, k) / fact;
            worst = std::max(worst, std::abs(lhs - rhs) / std::abs(rhs));
        }
        return std::make_pair(worst < 1e-14, fmt("max rel diff %.3g (tol 1e-14)", worst));
    });

    r.guarded("special_fn.hyp2f1_monotone_to_gauss", [&] {
        const sf::HypParams hp{0.7, 0.9, 2.7, 1.0 - 1e-3};
        const SeriesResult s = sf::hyp2f1_truncated(hp, 1e-12, 200000);
        const double gauss = sf::gauss_2f1_unit(0.7, 0.9, 2.7);
        const bool below = s.value <= gauss * (1.0 + 1e-12);
        return std::make_pair(s.converged && below,
                              fmt("partial %.12g below Gauss limit %.12g", s.value, gauss));
    });

    r.guarded("special_fn.hyp2f1_known_values", [&] {
        const SeriesResult s1 = sf::hyp2f1_truncated({1.0, 1.0, 2.0, 0.5}, 1e-14, 100000);
        const SeriesResult s2 = sf::hyp2f1_truncated({0.5, 0.5, 1.5, 0.25}, 1e-14, 100000);
        const double e1 = std::abs(s1.value - 2.0 * std::log(2.0));
        const double e2 = std::abs(s2.value - M_PI / 3.0);
        const bool ok = e1 <= s1.tail_bound + 1e-13 && e2 <= s2.tail_bound + 1e-13;
        return std::make_pair(ok, fmt("errors %.3g, %.3g within bounds", e1, e2));
    });

    r.guarded("series.coeff_ratio_identity", [&] {
        double worst = 0.0;
        for (int m = 0; m <= 500; ++m) {
            const double lhs = series::coeff_a(m + 1);
            const double rhs = series::coeff_a(m) * series::coeff_a_ratio(m);
            worst = std::max(worst, std::abs(lhs - rhs) / rhs);
        }
        return std::make_pair(worst < 1e-13, fmt("max rel %.3g (tol 1e-13)", worst));
    });

    r.guarded("series.a_decreasing_above_one", [&] {
        double am = series::coeff_a(0);
        bool ok = true;
        for (int m = 0; m < 10000; ++m) {
            const double next = am * series::coeff_a_ratio(m);
            if (!(next < am) || !(next > 1.0)) ok = false;
            am = next;
        }
        return std::make_pair(ok, fmt("a_m strictly decreasing, > 1 up to m = 10^4 (a_1e4 = %.9g)", am));
    });

    r.guarded("series.abel_rearrangement", [&] {
        double worst = 0.0;
        for (double x : {0.1, 0.5, 0.9}) {
            const int M = 2000;
            double main = 0.0, am = series::coeff_a(0), xm = 1.0;
            for (int m = 0; m <= M; ++m) {
                main += am * xm;
                am *= series::coeff_a_ratio(m);
                xm *= x;
            }
            const double bound_main = am * xm;  // (1-x) * a_{M+1} x^{M+1} / (1-x)
            double abel = series::abel_coeff(0);
            xm = 1.0;
            for (int m = 1; m <= M; ++m) {
                xm *= x;
                abel += series::abel_coeff(m) * xm;
            }
            const double bound_abel = xm * (series::coeff_a(M) - 1.0);
            const double diff = std::abs((1.0 - x) * main - abel);
            const double budget = bound_main + bound_abel + 1e-12;
            worst = std::max(worst, diff / budget);
        }
        return std::make_pair(worst <= 1.0, fmt("max diff/budget %.3g (<= 1)", worst));
    });

    r.guarded("series.phi_bounded_by_phi0", [&] {
        const SeriesResult p0 = series::phi_eval(p, 0.0, 1e-12, 1000);
        bool ok = true;
        double worstx = 0.0;
        for (int i = 0; i < 100; ++i) {
            const double x = 0.0099 * (i + 1);
            const SeriesResult v = series::phi_eval(p, x, 1e-11, 2000000);
            if (!(v.value <= p0.value * (1.0 + 1e-11))) {
                ok = false;
                worstx = x;
            }
        }
        return std::make_pair(ok, ok ? fmt("phi(x) <= phi(0) = %.12g on 100-point grid", p0.value)
                                     : fmt("violated at x = %.4f", worstx));
    });

    r.guarded("series.phi_strictly_decreasing", [&] {
        bool ok = true;
        double prev = series::phi_eval(p, 0.0, 1e-12, 1000).value;
        double prev_bound = 0.0;
        for (int i = 0; i < 100; ++i) {
            const double x = 0.0099 * (i + 1);
            const SeriesResult v = series::phi_eval(p, x, 1e-12, 4000000);
            if (!(v.value - prev < -(v.tail_bound + prev_bound))) ok = false;
            prev = v.value;
            prev_bound = v.tail_bound;
        }
        return std::make_pair(ok, std::string(ok ? "finite differences negative beyond bounds"
                                                 : "monotonicity violated"));
    });

    r.guarded("series.ksum_direct_vs_closed", [&] {
        double worst = 0.0;
        for (int n : {2, 3, 5}) {
            for (double a : {-0.5, 0.0, 1.0, 3.7}) {
                const Params q{n, a};
                for (int m = 0; m <= 20; ++m) {
                    const double c = series::ksum_closed(q, m);
                    const double d = series::ksum_direct(q, m, 420);
                    worst = std::max(worst, std::abs(c - d) / c);
                }
            }
        }
        return std::make_pair(worst < 1e-8, fmt("max rel %.3g (tol 1e-8)", worst));
    });

    r.guarded("series.ksum_gauss_consistency", [&] {
        double worst = 0.0;
        for (int n : {2, 3, 5}) {
            for (double a : {-0.5, 0.0, 1.0, 3.7}) {
                const Params q{n, a};
                const double g1 = (q.npa() + 1.0) / 2.0;
                for (int m = 0; m <= 20; ++m) {
                    const double c = q.npa() + m + 1.5;
                    const double viag =
                        sf::gauss_2f1_unit(g1, g1, c) * std::exp(-sf::log_gamma(c));
                    const double closed = series::ksum_closed(q, m);
                    worst = std::max(worst, std::abs(viag - closed) / closed);
                }
            }
        }
        return std::make_pair(worst < 1e-10, fmt("max rel %.3g (tol 1e-10)", worst));
    });

    r.guarded("series.endpoint_identity", [&] {
        const SeriesResult l = series::l_series(p, M_PI / 2.0, 1e-13, 1000);
        const double ratio = l.value / series::l_limit_zero(p);
        const double res = std::abs(ratio / (M_PI / 2.0) - 1.0);
        return std::make_pair(res < 1e-12, fmt("l(pi/2)/l(0) = pi/2 rel residual %.3g", res));
    });

    r.guarded("series.double_vs_single", [&] {
        double worst = 0.0;
        for (double t : {0.5, 1.0, 1.4}) {
            const SeriesResult a = series::l_series(p, t, 1e-9, 4000000);
            const SeriesResult b = series::l_double_series(p, t, 1e-9, 100000);
            worst = std::max(worst, std::abs(a.value - b.value) / a.value);
        }
        return std::make_pair(worst < 1e-6, fmt("max rel %.3g (tol 1e-6)", worst));
    });

    r.guarded("constants.chain_residual_grid", [&] {
        double worst = 0.0;
        for (int n : {2, 3, 4, 5, 6}) {
            for (double a : {-0.5, 0.0, 1.25, 3.7}) {
                worst = std::max(worst, chain_consistency({n, a}));
            }
        }
        return std::make_pair(worst < 1e-12, fmt("max residual %.3g on 20-point grid", worst));
    });

    r.guarded("constants.depends_on_n_plus_alpha", [&] {
        const NormConstants a = compute_constants({2, 1.5});
        const NormConstants b = compute_constants({3, 0.5});
        const double res = std::max({std::abs(a.C_alpha / b.C_alpha - 1.0),
                                     std::abs(a.C_tilde / b.C_tilde - 1.0),
                                     std::abs(a.bloch_norm / b.bloch_norm - 1.0)});
        return std::make_pair(res < 1e-12, fmt("C, C~, bloch agree to %.3g across (2,1.5)/(3,0.5)", res));
    });

    r.guarded("constants.bound_check_scan", [&] {
        const series::ScanResult s = series::scan_monotone(p, 101);
        const bool ok = s.is_increasing && bound_check(p, s.max_value);
        return std::make_pair(ok, fmt("increasing, max %.12g in Theorem-1 bracket", s.max_value));
    });

    r.guarded("quad.circle_parseval", [&] {
        double worst = 0.0;
        for (double s : {2.0, 3.5, 5.0, 8.0}) {
            for (double q : {0.0, 0.3, 0.7, 0.95}) {
                const auto res = quad::circle_parseval(s, q, 1e-11);
                worst = std::max(worst,
                                 std::abs(res.closed_series - res.direct_quadrature) /
                                     res.closed_series);
            }
        }
        return std::make_pair(worst < 1e-8, fmt("max rel %.3g (tol 1e-8)", worst));
    });

    r.guarded("quad.radial_beta", [&] {
        double worst = 0.0;
        for (int k = 0; k <= 10; ++k) {
            for (double s : {-0.9, -0.5, 0.0, 0.5, 1.0, 2.5, 10.0}) {
                const auto res = quad::radial_beta(k, s);
                worst = std::max(worst, std::abs(res.closed - res.quadrature) / res.closed);
            }
        }
        return std::make_pair(worst < 1e-10, fmt("max rel %.3g (tol 1e-10)", worst));
    });

    r.guarded("quad.moebius_identities", [&] {
        std::uniform_real_distribution<double> dr(0.0, 0.995);
        std::uniform_real_distribution<double> dth(0.0, 2.0 * M_PI);
        std::uniform_real_distribution<double> dc(0.0, 0.99);
        double worst = 0.0;
        for (int i = 0; i < 1000; ++i) {
            const double rad = dr(rng), th = dth(rng), c = dc(rng);
            const std::complex<double> z1 = std::polar(rad, th);
            const auto m = quad::moebius_identity_check(z1, c);
            worst = std::max({worst, m.residual_involution, m.residual_kernel, m.residual_weight});
        }
        return std::make_pair(worst < 1e-12, fmt("max residual %.3g on 1000 points", worst));
    });

    r.guarded("quad.moebius_jacobian_fd", [&] {
        std::uniform_real_distribution<double> dr(0.0, 0.9);
        std::uniform_real_distribution<double> dth(0.0, 2.0 * M_PI);
        std::uniform_real_distribution<double> dc(0.0, 0.9);
        double worst = 0.0;
        for (int i = 0; i < 100; ++i) {
            const std::complex<double> z1 = std::polar(dr(rng), dth(rng));
            const auto m = quad::moebius_identity_check(z1, dc(rng));
            worst = std::max(worst, m.jacobian_fd_residual);
        }
        return std::make_pair(worst < 1e-6, fmt("max residual %.3g (tol 1e-6)", worst));
    });

    r.guarded("quad.quad2d_chain_vs_series", [&] {
        const NormConstants c = compute_constants(p);
        const double chain = std::exp(std::log(p.npa() + 1.0) + c.log_c_alpha + c.log_k_alpha);
        double worst = 0.0;
        for (double t : {0.3, 0.8, 1.3}) {
            const QuadResult I = quad::quad_I_2d(p, t, 1e-6);
            const double viaq = chain * I.value;
            const double vias = series::l_series(p, t, 1e-10, 4000000).value;
            worst = std::max(worst, std::abs(viaq - vias) / vias);
        }
        return std::make_pair(worst < 1e-4, fmt("max rel %.3g (tol 1e-4)", worst));
    });

    const McConfig mcfg{cfg.samples, cfg.seed, 65536};

    r.guarded("mc.ball_radius_moment", [&] {
        // E |z|^2 = n/(n+1) for the uniform ball in C^n.
        const std::uint64_t cnt = std::min<std::uint64_t>(cfg.samples, 400000);
        const auto pts = mc::sample_ball(p.n, cnt, mcfg);
        double s = 0.0, s2 = 0.0;
        bool inside = true;
        for (const auto& z : pts) {
            double m2 = 0.0;
            for (const auto& c : z) m2 += std::norm(c);
            if (!(m2 < 1.0)) inside = false;
            s += m2;
            s2 += m2 * m2;
        }
        const double N = static_cast<double>(cnt);
        const double mean = s / N;
        const double se = std::sqrt(std::max(0.0, s2 / N - mean * mean) / N);
        const double expect = static_cast<double>(p.n) / (p.n + 1.0);
        const bool ok = inside && std::abs(mean - expect) <= 3.0 * se;
        return std::make_pair(ok, fmt("mean |z|^2 = %.6f vs %.6f (3 s.e.)", mean, expect));
    });

    r.guarded("mc.determinism", [&] {
        const QuadResult a = mc::mc_l_full(p, 0.7, {100000, cfg.seed, 4096});
        const QuadResult b = mc::mc_l_full(p, 0.7, {100000, cfg.seed, 4096});
        const bool ok = a.value == b.value && a.std_error == b.std_error;
        return std::make_pair(ok, std::string(ok ? "bit-identical replay" : "mismatch"));
    });

    r.guarded("mc.mc_vs_series", [&] {
        double worstz = 0.0;
        for (double t : {0.4, 1.2}) {
            const QuadResult m = mc::mc_l_full(p, t, mcfg);
            const double s = series::l_series(p, t, 1e-10, 4000000).value;
            worstz = std::max(worstz, std::abs(m.value - s) / m.std_error);
        }
        return std::make_pair(worstz <= 3.0, fmt("max |est-series|/stderr = %.2f (<= 3)", worstz));
    });

    r.guarded("mc.orth_invariance", [&] {
        const auto oc = mc::orth_invariance_check(p, 0.6, mcfg);
        const double gap = std::abs(oc.lhs.value - oc.rhs.value);
        const double budget = 3.0 * (oc.lhs.std_error + oc.rhs.std_error);
        const double gap2 = std::abs(oc.rhs.value - oc.rhs_flipped.value);
        const double budget2 = 3.0 * (oc.rhs.std_error + oc.rhs_flipped.std_error);
        const bool ok = gap <= budget && gap2 <= budget2;
        return std::make_pair(ok, fmt("|lhs-rhs| = %.4g <= %.4g", gap, budget));
    });

    r.guarded("mc.orth_t0_pointwise", [&] {
        const auto oc = mc::orth_invariance_check(p, 0.0, {50000, cfg.seed, 4096});
        const double gap = std::abs(oc.lhs.value - oc.rhs.value);
        return std::make_pair(gap == 0.0, fmt("t = 0 integrands identical, diff = %.3g", gap));
    });

    r.guarded("mc.fubini_chain", [&] {
        const auto fc = mc::fubini_chain_check(p, 1.0, mcfg, 1e-3 * series::l_limit_zero(p));
        return std::make_pair(fc.pass, fmt("mc %.6f vs reduced %.6f", fc.mc_value, fc.reduced_value));
    });

    return r.results;
}

}  // namespace blochnorm::validation
