#include "doctest.h"
#include "mvl/numkernel.hpp"

#include <algorithm>
#include <cmath>
#include <random>

using namespace mvl;

static const double SQRT_PI = std::sqrt(PI);

TEST_CASE("integrate_line: Gaussian integral on the real line") {
    auto f = [](cplx t) { return std::exp(-t * t); };
    auto r = integrate_line(f, 0.0, 8.0, 1e-12);
    CHECK(std::abs(r.value - SQRT_PI) < 1e-12);
    CHECK(r.truncation_error < 1e-12);
}

TEST_CASE("integrate_line: complete-the-square Gaussian") {
    // exp(-t^2 + 2it) integrates to sqrt(pi)*exp(-1)
    auto f = [](cplx t) { return std::exp(-t * t + cplx(0, 2) * t); };
    auto r = integrate_line(f, 0.0, 9.0, 1e-12);
    CHECK(std::abs(r.value - SQRT_PI * std::exp(-1.0)) < 1e-12);
}

TEST_CASE("integrate_line: offset independence for entire integrands") {
    auto f = [](cplx t) { return std::exp(-t * t); };
    cplx v0 = integrate_line(f, 0.0, 9.0, 1e-12).value;
    cplx vh = integrate_line(f, 0.5, 9.0, 1e-12).value;
    cplx v1 = integrate_line(f, 1.0, 9.0, 1e-12).value;
    CHECK(std::abs(v0 - SQRT_PI) < 1e-12);
    CHECK(std::abs(vh - v0) < 1e-11);
    CHECK(std::abs(v1 - v0) < 1e-11);
}

TEST_CASE("integrate_line: centered window") {
    auto f = [](cplx t) { return std::exp(-(t - 5.0) * (t - 5.0)); };
    auto r = integrate_line_centered(f, 0.0, 5.0, 8.0, 1e-12);
    CHECK(std::abs(r.value - SQRT_PI) < 1e-12);
}

TEST_CASE("sum_compensated: exact small cases") {
    std::vector<cplx> ones(10, cplx(1.0, 0.0));
    CHECK(sum_compensated(ones) == cplx(10.0, 0.0));
    CHECK(sum_compensated({}) == cplx(0.0, 0.0));
}

TEST_CASE("sum_compensated: alternating harmonic series reaches ln 2") {
    // expected value from the closed form ln 2 = 0.693147180559945...
    std::vector<cplx> terms;
    terms.reserve(1000000);
    for (long n = 1; n <= 1000000; ++n)
        terms.push_back(cplx((n % 2 ? 1.0 : -1.0) / double(n), 0.0));
    double v = sum_compensated(terms).real();
    CHECK(std::abs(v - 0.6931471805599453) < 1e-6);
    // and the compensated sum itself matches the pairing (1/(2k-1) - 1/2k)
    std::vector<cplx> paired;
    for (long k = 1; k <= 500000; ++k)
        paired.push_back(cplx(1.0 / (2 * k - 1) - 1.0 / (2 * k), 0.0));
    CHECK(std::abs(v - sum_compensated(paired).real()) < 1e-13);
}

TEST_CASE("sum_compensated: permutation stability on conditioned input") {
    std::mt19937_64 rng(12345);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    std::vector<cplx> terms(5000);
    for (auto& t : terms) t = cplx(u(rng), u(rng));
    cplx a = sum_compensated(terms);
    std::shuffle(terms.begin(), terms.end(), rng);
    cplx b = sum_compensated(terms);
    CHECK(std::abs(a - b) <= 1e-13 * (1.0 + std::abs(a)));
}

TEST_CASE("tail_estimate: basic contracts") {
    CHECK(tail_estimate(cplx(1, 0), cplx(1, 0), 2.0) == 0.0);

    // zeta(2) partials at N = 1000 and 2000
    double s1 = 0, s2 = 0;
    for (int n = 1; n <= 2000; ++n) {
        if (n <= 1000) s1 += 1.0 / (double(n) * n);
        s2 += 1.0 / (double(n) * n);
    }
    double est = tail_estimate(cplx(s1, 0), cplx(s2, 0), 2.0);
    double true_tail = PI * PI / 6.0 - s2;  // ~ 1/2000
    CHECK(est >= std::abs(s2 - s1));
    CHECK(est > 0.8 * true_tail);
    CHECK(est < 3.0 * true_tail);
}

TEST_CASE("tail_estimate: geometric series within factor 2") {
    // partial sums of sum 2^-n at B = 20 and 2B = 40
    double sB = 2.0 - std::pow(2.0, -19);   // sum_{n=0}^{19}
    double s2B = 2.0 - std::pow(2.0, -39);
    double true_tail_beyond_B = std::pow(2.0, -19);
    double est = tail_estimate(cplx(sB, 0), cplx(s2B, 0), 50.0);
    CHECK(est >= 0.5 * true_tail_beyond_B);
    CHECK(est <= 2.0 * true_tail_beyond_B);
}

TEST_CASE("tail_estimate: growing increments flagged") {
    CHECK_THROWS_AS(tail_estimate(cplx(10, 0), cplx(30, 0), 2.0, 5.0),
                    DivergenceSignal);
}

TEST_CASE("tail_estimate: never below last increment") {
    double est = tail_estimate(cplx(1.0, 0), cplx(1.25, 0), 3.0);
    CHECK(est >= 0.25);
}

TEST_CASE("policy and budget validation") {
    PrecisionPolicy p;
    CHECK_NOTHROW(p.validate());
    p.working_digits = 10;
    CHECK_THROWS(p.validate());
    SeriesBudget b;
    CHECK_NOTHROW(b.validate());
    b.contour_offset = 1.5;
    CHECK_THROWS(b.validate());
}
