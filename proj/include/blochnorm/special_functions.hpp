#pragma once

#include <cstddef>

#include "blochnorm/types.hpp"

namespace blochnorm::sf {

// ln Gamma(x) for x > 0.  Relative error <= 1e-13 on (0, 1e4].
double log_gamma(double x);

// B(a, b) = Gamma(a)Gamma(b)/Gamma(a+b), a, b > 0.  Evaluated in log space.
double beta(double a, double b);

// Rising factorial (a)_k = a (a+1) ... (a+k-1); (a)_0 = 1.
double pochhammer(double a, int k);

// Generalized binomial coefficient C(s+k-1, k) = (s)_k / k!.
double gen_binom(double s, int k);

// Digamma psi(x) for x > 0 (recurrence into the Bernoulli asymptotic range).
double digamma(double x);

struct HypParams {
    double a, b, c, z;
};

// Truncated Gauss hypergeometric series 2F1(a,b;c;z), |z| < 1.  Stops once a
// rigorous geometric bound on the dropped tail falls below tol; if max_terms
// is exhausted first, the partial value and its bound are returned with
// converged = false.
SeriesResult hyp2f1_truncated(const HypParams& p, double tol, std::size_t max_terms);

// Gauss summation 2F1(a,b;c;1) = Gamma(c)Gamma(c-a-b)/(Gamma(c-a)Gamma(c-b)),
// requires c - a - b > 0 and c, c-a, c-b > 0.
double gauss_2f1_unit(double a, double b, double c);

}  // namespace blochnorm::sf
