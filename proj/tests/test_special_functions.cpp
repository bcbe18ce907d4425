#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "blochnorm/special_functions.hpp"

using namespace blochnorm;

namespace {
double rel(double got, double want) { return std::abs(got - want) / std::abs(want); }
}  // namespace

TEST_CASE("log_gamma known values") {
    CHECK(std::abs(sf::log_gamma(1.0)) < 1e-14);
    CHECK(rel(sf::log_gamma(5.0), std::log(24.0)) < 1e-14);
    CHECK(rel(sf::log_gamma(0.5), 0.5 * std::log(M_PI)) < 1e-14);
    // spot values across the contract range
    CHECK(rel(sf::log_gamma(1e4), 82099.717496442042) < 1e-13);
    CHECK(rel(sf::log_gamma(1e-3), 6.9071788853838535) < 1e-13);
    CHECK_THROWS_AS(sf::log_gamma(0.0), std::domain_error);
    CHECK_THROWS_AS(sf::log_gamma(-2.5), std::domain_error);
}

TEST_CASE("log_gamma recurrence property") {
    std::mt19937_64 rng(1234);
    std::uniform_real_distribution<double> dist(0.1, 500.0);
    for (int i = 0; i < 1000; ++i) {
        const double x = dist(rng);
        const double res = sf::log_gamma(x + 1.0) - sf::log_gamma(x) - std::log(x);
        CHECK(std::abs(std::expm1(res)) < 1e-12);
    }
}

TEST_CASE("beta") {
    CHECK(rel(sf::beta(1.0, 1.0), 1.0) < 1e-14);
    CHECK(rel(sf::beta(0.5, 0.5), M_PI) < 1e-14);
    CHECK(rel(sf::beta(2.0, 3.0), 1.0 / 12.0) < 1e-14);
    CHECK_THROWS_AS(sf::beta(-1.0, 2.0), std::domain_error);
}

TEST_CASE("pochhammer") {
    CHECK(sf::pochhammer(7.3, 0) == 1.0);
    CHECK(rel(sf::pochhammer(3.0, 4), 360.0) < 1e-15);
    CHECK(rel(sf::pochhammer(0.5, 2), 0.75) < 1e-15);
    std::mt19937_64 rng(99);
    std::uniform_real_distribution<double> da(0.05, 80.0);
    std::uniform_int_distribution<int> dk(0, 40);
    for (int i = 0; i < 300; ++i) {
        const double a = da(rng);
        const int k = dk(rng);
        const double viag = std::exp(sf::log_gamma(a + k) - sf::log_gamma(a));
        CHECK(rel(sf::pochhammer(a, k), viag) < 1e-12);
    }
}

TEST_CASE("gen_binom") {
    CHECK(sf::gen_binom(-3.7, 0) == 1.0);
    CHECK(rel(sf::gen_binom(2.0, 3), 4.0) < 1e-15);           // C(4,3)
    CHECK(rel(sf::gen_binom(1.5, 2), 15.0 / 8.0) < 1e-15);    // (3/2)(5/2)/2
    // gen_binom(s,k) == pochhammer(s,k)/k!
    for (int k = 0; k <= 25; ++k) {
        double fact = 1.0;
        for (int j = 2; j <= k; ++j) fact *= j;
        CHECK(rel(sf::gen_binom(4.25, k), sf::pochhammer(4.25, k) / fact) < 1e-14);
    }
    // large-order log-space path continuity
    CHECK(rel(sf::gen_binom(2.5, 60), std::exp(sf::log_gamma(62.5) - sf::log_gamma(2.5) -
                                               sf::log_gamma(61.0))) < 1e-12);
}

TEST_CASE("hyp2f1 truncated with tail bound") {
    const SeriesResult zero = sf::hyp2f1_truncated({1.3, -2.2, 0.7, 0.0}, 1e-12, 100);
    CHECK(zero.value == 1.0);

    const SeriesResult log2 = sf::hyp2f1_truncated({1.0, 1.0, 2.0, 0.5}, 1e-14, 100000);
    CHECK(log2.converged);
    CHECK(std::abs(log2.value - 2.0 * std::log(2.0)) <= log2.tail_bound + 1e-14);

    const SeriesResult asin = sf::hyp2f1_truncated({0.5, 0.5, 1.5, 0.25}, 1e-14, 100000);
    CHECK(asin.converged);
    CHECK(std::abs(asin.value - M_PI / 3.0) <= asin.tail_bound + 1e-14);

    CHECK_THROWS_AS(sf::hyp2f1_truncated({1.0, 1.0, 2.0, 1.5}, 1e-10, 100), std::domain_error);

    // budget exhaustion reports a partial, non-converged result
    const SeriesResult part = sf::hyp2f1_truncated({1.0, 1.0, 2.0, 0.99}, 1e-15, 5);
    CHECK(!part.converged);
    CHECK(part.terms_used == 5);
    CHECK(part.value > 1.0);
}

TEST_CASE("hyp2f1 tail bound is honest near z = 1") {
    // c - a - b > 1 so the series converges at z close to 1; partial sums of a
    // positive-term series increase toward the Gauss value.
    const double gauss = sf::gauss_2f1_unit(0.7, 0.9, 2.7);
    const SeriesResult s = sf::hyp2f1_truncated({0.7, 0.9, 2.7, 1.0 - 1e-3}, 1e-12, 500000);
    CHECK(s.converged);
    CHECK(s.value <= gauss * (1.0 + 1e-12));
}

TEST_CASE("gauss_2f1_unit") {
    CHECK(rel(sf::gauss_2f1_unit(0.5, 0.5, 1.5), M_PI / 2.0) < 1e-14);
    CHECK(rel(sf::gauss_2f1_unit(0.5, 0.5, 2.0), 4.0 / M_PI) < 1e-14);
    CHECK(rel(sf::gauss_2f1_unit(1.0, 1.0, 3.0), 2.0) < 1e-14);
    CHECK_THROWS_AS(sf::gauss_2f1_unit(1.0, 1.0, 2.0), std::domain_error);  // c-a-b = 0
    CHECK_THROWS_AS(sf::gauss_2f1_unit(3.0, 3.0, 2.0), std::domain_error);
}

TEST_CASE("digamma") {
    constexpr double kEulerGamma = 0.57721566490153286;
    CHECK(std::abs(sf::digamma(1.0) + kEulerGamma) < 1e-13);
    CHECK(std::abs(sf::digamma(0.5) + kEulerGamma + 2.0 * std::log(2.0)) < 1e-13);
    // recurrence psi(x+1) = psi(x) + 1/x
    for (double x : {0.25, 1.75, 9.5, 42.0}) {
        CHECK(std::abs(sf::digamma(x + 1.0) - sf::digamma(x) - 1.0 / x) < 1e-13);
    }
}
