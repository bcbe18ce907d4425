#pragma once

#include <cstddef>

#include "blochnorm/types.hpp"

namespace blochnorm::series {

// a_m = Gamma(m+1/2) Gamma(m+3/2) / (m!)^2.  Strictly decreasing, > 1, -> 1.
double coeff_a(int m);

// a_{m+1}/a_m = (m+1/2)(m+3/2)/(m+1)^2, always < 1.
double coeff_a_ratio(int m);

// Abel-rearranged coefficients: b_0 = a_0, b_m = a_m - a_{m-1} for m >= 1.
// Identity b_m = -a_{m-1}/(4 m^2), so b_m < 0 and |b_m| = O(m^-2).
double abel_coeff(int m);

// phi(x) = [Gamma(n+a-1)/Gamma^2((n+a)/2+1)] (1-x) sum_m a_m x^m on [0, 1).
// For x >= 0.9 the Abel form b_0 + sum b_m x^m replaces (1-x) sum a_m x^m.
// tol is relative to the running value.
SeriesResult phi_eval(const Params& p, double x, double tol, std::size_t max_terms);

// l(t) = C_alpha sin^2(t) sum_m a_m cos^{2m}(t) for t in (0, pi/2].
// t = 0 is rejected; use l_limit_zero for the endpoint.
SeriesResult l_series(const Params& p, double t, double tol, std::size_t max_terms);

// l(0) = C_alpha (Abel limit of the series as cos^2 t -> 1).
double l_limit_zero(const Params& p);

// Closed form of the inner k-sum:
//   sum_k C((n+a+1)/2+k-1, k)^2 k! / Gamma(k+n+a+m+3/2)
//     = Gamma(m+1/2) / Gamma^2(m+1+(n+a)/2).
double ksum_closed(const Params& p, int m);

// The same k-sum evaluated directly: trunc_k leading terms plus an
// Euler-Maclaurin completion of the remainder (the terms decay only like
// k^-(m+3/2), so plain truncation cannot reach testing accuracy at small m).
double ksum_direct(const Params& p, int m, int trunc_k);

// Double-series representation of l(t) built from the k- and m-expansions
// (no Gauss summation), times the constant chain (n+a+1) c_a k_a pi^2.
// Requires cos^2 t <= 0.999.
SeriesResult l_double_series(const Params& p, double t, double tol, std::size_t max_terms);

struct ScanResult {
    bool is_increasing = false;
    double argmax = 0.0;
    double max_value = 0.0;
};

// Evaluates l on a uniform t-grid over [1e-3, pi/2] plus the t = 0 endpoint
// and reports strict monotonicity and the maximizer.
ScanResult scan_monotone(const Params& p, int grid_size);

}  // namespace blochnorm::series
