#include "blochnorm/constants.hpp"

#include <cmath>

#include "blochnorm/special_functions.hpp"

namespace blochnorm {

namespace {
constexpr double kLogPi = 1.1447298858494001741;
}

NormConstants compute_constants(const Params& p) {
    p.validate();
    const double na = p.npa();
    NormConstants c;
    c.log_c_alpha = sf::log_gamma(na + 1.0) - sf::log_gamma(p.alpha + 1.0) - p.n * kLogPi;
    // For n = 2 the inner ball is zero-dimensional and k_alpha degenerates to
    // pi^0 Gamma(a+1)/Gamma(a+1) = 1; the formula already yields that.
    c.log_k_alpha = (p.n - 2) * kLogPi + sf::log_gamma(p.alpha + 1.0) - sf::log_gamma(p.alpha + p.n - 1.0);
    c.log_C_alpha = sf::log_gamma(na + 2.0) - 2.0 * sf::log_gamma(na / 2.0 + 1.0);
    c.c_alpha = std::exp(c.log_c_alpha);
    c.k_alpha = std::exp(c.log_k_alpha);
    c.C_alpha = std::exp(c.log_C_alpha);
    c.C_tilde = (M_PI / 2.0) * c.C_alpha;
    c.bloch_norm = 1.0 + c.C_tilde;
    c.bound_low = c.C_tilde;
    c.bound_high = 0.5 * std::sqrt(M_PI * M_PI + 4.0) * c.C_alpha;
    return c;
}

double chain_consistency(const Params& p) {
    p.validate();
    const double na = p.npa();
    // Both sides in log space; the pi powers inside c_alpha k_alpha pi^2
    // cancel exactly, so the chain reduces to
    //   (1+n+a) Gamma(n+a+1)/Gamma(n+a-1) * Gamma(a+n-1)/Gamma^2(..) * pi/2.
    const double log_ck = sf::log_gamma(na + 1.0) - sf::log_gamma(na - 1.0) - 2.0 * kLogPi;
    const double log_chain = std::log1p(na) + log_ck + 2.0 * kLogPi +
                             sf::log_gamma(na - 1.0) - 2.0 * sf::log_gamma(na / 2.0 + 1.0) +
                             sf::log_gamma(0.5) + sf::log_gamma(1.5);
    const double log_direct = std::log(M_PI / 2.0) + sf::log_gamma(na + 2.0) -
                              2.0 * sf::log_gamma(na / 2.0 + 1.0);
    return std::abs(std::expm1(log_chain - log_direct));
}

bool bound_check(const Params& p, double max_from_scan) {
    const NormConstants c = compute_constants(p);
    const double tol = 1e-9 * c.C_alpha;
    return max_from_scan >= c.bound_low - tol && max_from_scan <= c.bound_high + tol;
}

}  // namespace blochnorm
