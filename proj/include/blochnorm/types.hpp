#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace blochnorm {

// Parameter pair (n, alpha): integer dimension n >= 2 of the complex ball,
// real weight exponent alpha > -1.  Everything downstream needs
// n + alpha - 1 > 0, which these bounds guarantee.
struct Params {
    int n = 2;
    double alpha = 0.0;

    void validate() const {
        if (n < 2) throw std::domain_error("Params: n must be >= 2");
        if (!(alpha > -1.0)) throw std::domain_error("Params: alpha must be > -1");
    }
    double npa() const { return static_cast<double>(n) + alpha; }
};

// Truncated-series evaluation: value plus a bound on the dropped tail.
// When a tolerance could not be met within the term budget, converged is
// false and value/tail_bound describe the partial sum actually computed.
struct SeriesResult {
    double value = 0.0;
    std::size_t terms_used = 0;
    double tail_bound = 0.0;
    bool converged = true;
};

// Result of a numerical integration oracle.  std_error is nonzero only for
// Monte Carlo estimates; error_estimate covers deterministic quadratures.
struct QuadResult {
    double value = 0.0;
    double error_estimate = 0.0;
    std::uint64_t evals = 0;
    double std_error = 0.0;
    bool converged = true;
};

// Monte Carlo configuration.  Estimates are a pure function of
// (samples, seed, chunk_size); the worker count never changes results.
struct McConfig {
    std::uint64_t samples = 1000000;
    std::uint64_t seed = 42;
    std::uint64_t chunk_size = 65536;
};

}  // namespace blochnorm
