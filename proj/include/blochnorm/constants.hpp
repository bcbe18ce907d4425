#pragma once

#include "blochnorm/types.hpp"

namespace blochnorm {

// Closed-form constants attached to a parameter pair (n, alpha):
//   c_alpha   = Gamma(n+a+1) / (Gamma(a+1) pi^n)       (measure normalizer)
//   k_alpha   = pi^(n-2) Gamma(a+1) / Gamma(a+n-1)     (inner-ball constant)
//   C_alpha   = Gamma(n+a+2) / Gamma^2((n+a)/2 + 1)
//   C_tilde   = (pi/2) C_alpha                         (the proven norm)
//   bloch_norm = 1 + C_tilde
//   bound_low / bound_high: the two-sided bracket [pi/2, sqrt(pi^2+4)/2]*C_alpha.
// Log fields allow overflow-free composition when n + alpha is large.
struct NormConstants {
    double c_alpha = 0.0;
    double k_alpha = 0.0;
    double C_alpha = 0.0;
    double C_tilde = 0.0;
    double bloch_norm = 0.0;
    double bound_low = 0.0;
    double bound_high = 0.0;
    double log_c_alpha = 0.0;
    double log_k_alpha = 0.0;
    double log_C_alpha = 0.0;
};

NormConstants compute_constants(const Params& p);

// Relative residual between the proof's constant chain
//   (1+n+a) c_a k_a pi^2 Gamma(a+n-1)/Gamma^2((n+a)/2+1) Gamma(1/2)Gamma(3/2)
// and the closed form (pi/2) C_alpha.  Must vanish to ~1e-12.
double chain_consistency(const Params& p);

// True iff max l(t) from a monotonicity scan lies in the two-sided bracket
// (within 1e-9 C_alpha slack).
bool bound_check(const Params& p, double max_from_scan);

}  // namespace blochnorm
