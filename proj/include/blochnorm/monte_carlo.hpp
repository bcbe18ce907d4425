#pragma once

#include <complex>
#include <vector>

#include "blochnorm/types.hpp"

namespace blochnorm::mc {

using ComplexPoint = std::vector<std::complex<double>>;

// Worker count for chunk evaluation: BLOCHNORM_WORKERS if set, else
// hardware_concurrency clamped to [1, 8].  Results never depend on it.
int worker_count();

// Uniform (Lebesgue) samples on the unit ball of C^n: Gaussian direction,
// radius U^{1/(2n)}.  The stream is a pure function of (seed, chunk_size);
// chunk i is generated from its own counter-derived generator state.
std::vector<ComplexPoint> sample_ball(int n, std::uint64_t count, const McConfig& cfg);

// l(t) = (n+a+1) int |(1-w1)cos t + w2 sin t| / |w1-1|^{n+a+1} dv_a.
// Unbiased estimate over the uniform-ball stream.  The default estimator
// averages the integrand over a fixed family of Mobius-transported copies of
// each sample (exact automorphism Jacobians, mixture reweighting): the raw
// integrand is not square-integrable near w = e1, so the naive estimator's
// sample standard error badly understates its dispersion, while the
// transported mixture has bounded per-sample values and honest CLT behavior.
QuadResult mc_l_full(const Params& p, double t, const McConfig& cfg);

// The naive single-point estimator (kept for structural checks; its
// std_error is unreliable for tight gating -- see above).
QuadResult mc_l_full_plain(const Params& p, double t, const McConfig& cfg);

// L(xi_t) estimated in the pre-rotation form and the post-rotation form on
// the same sample stream; rhs_flipped evaluates the +z2 sin t sign variant
// (equal by the z2 -> -z2 symmetry).
struct OrthCheck {
    QuadResult lhs;
    QuadResult rhs;
    QuadResult rhs_flipped;
};
OrthCheck orth_invariance_check(const Params& p, double t, const McConfig& cfg);

// Verifies mc_l_full(t) against (n+a+1) c_a k_a quad_I_2d(t).
struct FubiniCheck {
    double mc_value = 0.0;
    double mc_std_error = 0.0;
    double reduced_value = 0.0;
    bool pass = false;
};
FubiniCheck fubini_chain_check(const Params& p, double t, const McConfig& cfg, double tol);

}  // namespace blochnorm::mc
