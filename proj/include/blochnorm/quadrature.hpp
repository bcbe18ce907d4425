#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "blochnorm/types.hpp"

namespace blochnorm::quad {

// Circle integral int_0^{2pi} dtheta / |1 - q e^{i theta}|^s, 0 <= q < 1,
// s > 0, via two independent routes: the Parseval series
// 2 pi sum_k C(s/2+k-1,k)^2 q^{2k} and periodic-trapezoid quadrature
// (exponentially convergent for this analytic integrand).
struct CircleParseval {
    double closed_series = 0.0;
    double direct_quadrature = 0.0;
    double series_tail_bound = 0.0;
    std::uint64_t quad_evals = 0;
};
CircleParseval circle_parseval(double s, double q, double tol = 1e-12);

// Radial integral int_0^1 rho^{2k+1} (1 - rho^2)^s drho = B(k+1, s+1)/2,
// s > -1, via the closed Beta form and tanh-sinh quadrature after u = rho^2.
struct RadialBeta {
    double closed = 0.0;
    double quadrature = 0.0;
};
RadialBeta radial_beta(int k, double s);

// Generic moment int_0^1 rho^a (1 - rho^2)^s drho = B((a+1)/2, s+1)/2 for
// a > -1, s > -1 (both routes).
RadialBeta radial_moment(double a, double s);

// Mobius disk substitution z1 = (c - zeta)/(1 - zeta c): residuals of the
// involution and of the two kernel/weight identities, plus the Jacobian
// (1-c^2)^2/|1 - zeta c|^4 against a central finite-difference Jacobian of
// the underlying R^2 -> R^2 map (step 1e-5).
struct MoebiusCheck {
    std::complex<double> zeta;
    double residual_involution = 0.0;
    double residual_kernel = 0.0;
    double residual_weight = 0.0;
    double jacobian_fd_residual = 0.0;
};
MoebiusCheck moebius_identity_check(std::complex<double> z1, double c);

// I(cos t, sin t) = int_{B^2} |z1 - cos t| (1-|z1|^2-|z2|^2)^{n+a-2}
//                   / |1 - z1 cos t - z2 sin t|^{n+a+1} dv_2,  t in (0, pi/2].
// The z2 integral is closed (Parseval series + radial Beta, summed as a
// hypergeometric); the z1 integral runs in polar coordinates with composite
// Gauss-Legendre in u = r^2 on panels graded into the |z1 - cos t| cone.
// error_estimate is the difference of two resolutions; converged reports
// whether it met tol.
QuadResult quad_I_2d(const Params& p, double t, double tol);

// Closed z2-integral for fixed z1 (exposed for direct verification):
// pi (1-|z1|^2)^{n+a-1} / |1-z1 c|^{n+a+1} * F(g,g;n+a;y)/(n+a-1) with
// g = (n+a+1)/2 and y = (1-|z1|^2)(1-c^2)/|1-z1 c|^2.
double inner_disk_closed(const Params& p, std::complex<double> z1, double cos_t);

// F(g, g; 2g-1; 1-w) for g > 1, evaluated stably from w = 1-y (direct series
// for w >= 0.3, logarithmic (1-y)-expansion otherwise).  Used by the inner
// closed form where c - a - b = -1 makes the series diverge like 1/w.
class InnerHyp {
  public:
    explicit InnerHyp(double g);
    double eval_from_w(double w) const;

  private:
    double g_, b_;
    double lead_, fac2_;
    std::vector<double> direct_;   // (g)_k^2 / ((2g-1)_k k!)
    std::vector<double> cj_, dj_;  // log-branch coefficients
};

}  // namespace blochnorm::quad
