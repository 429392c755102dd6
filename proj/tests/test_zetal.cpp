#include "doctest.h"
#include "mvl/zetal.hpp"
#include "mvl/specfun.hpp"

#include <cmath>
#include <random>

using namespace mvl;

TEST_CASE("riemann_zeta: frozen values and pole") {
    CHECK(std::abs(riemann_zeta(cplx(2, 0)) - cplx(PI * PI / 6.0, 0)) < 1e-13);
    CHECK(std::abs(riemann_zeta(cplx(0.5, 0)) - cplx(-1.4603545088095868129, 0)) < 1e-12);
    CHECK(std::abs(riemann_zeta(cplx(0.4, 2)) -
                   cplx(0.41215718038958037421, -0.29776040691207047005)) < 1e-12);
    CHECK(std::abs(riemann_zeta(cplx(0.5, 1000)) -
                   cplx(0.35633436719439605507, 0.93199783123299366512)) < 1e-11);
    CHECK(std::abs(riemann_zeta(cplx(0.5, 5000)) -
                   cplx(0.40684271363543255898, -0.69376415919808510245)) < 1e-10);
    // reflection branch
    CHECK(std::abs(riemann_zeta(cplx(-0.7, 0)) - cplx(-0.14623719172590804947, 0)) < 1e-13);
    CHECK(std::abs(riemann_zeta(cplx(-2.3, 4)) -
                   cplx(0.1060719413502696206, 0.29393128637802004356)) < 1e-12);
    CHECK(std::abs(riemann_zeta(cplx(-2, 0))) < 1e-14);  // trivial zero
    CHECK(std::abs(riemann_zeta(cplx(-1, 0)) - cplx(-1.0 / 12.0, 0)) < 1e-14);
    CHECK_THROWS_AS((void)riemann_zeta(cplx(1, 0)), PoleSignal);
}

TEST_CASE("riemann functional equation residual on a strip grid") {
    CHECK(riemann_fe_residual(cplx(0.3, 7)) < 1e-10);
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> ur(0.1, 0.9), ui(-40.0, 40.0);
    double worst = 0;
    for (int i = 0; i < 20; ++i) worst = std::max(worst, riemann_fe_residual({ur(rng), ui(rng)}));
    CHECK(worst < 1e-10);
}

TEST_CASE("hurwitz_zeta: values, pole residue") {
    cplx s(0.4, 2);
    CHECK(std::abs(hurwitz_zeta(s, 1.0) - riemann_zeta(s)) < 1e-14);
    CHECK(std::abs(hurwitz_zeta(cplx(2, 0), 0.5) - cplx(PI * PI / 2.0, 0)) < 1e-12);
    CHECK(std::abs(hurwitz_zeta(cplx(0.5, 3), 0.3) -
                   cplx(-1.4701339268676388718, -1.2700238816909224127)) < 1e-12);
    // simple pole at s = 1 of residue 1
    cplx near = hurwitz_zeta(cplx(1.0 + 1e-6, 0), 0.37);
    CHECK(std::abs(near * cplx(1e-6, 0) - cplx(1, 0)) < 1e-4);
    CHECK_THROWS_AS((void)hurwitz_zeta(cplx(1, 0), 0.37), PoleSignal);
    CHECK_THROWS(hurwitz_zeta(cplx(0.5, 0), -0.2));
}

TEST_CASE("lerch_zeta: frozen values across the plane") {
    // integer x reduces to Hurwitz
    CHECK(std::abs(lerch_zeta(cplx(1.7, 2), 0.4, 3.0) - hurwitz_zeta(cplx(1.7, 2), 0.4)) == 0.0);
    // alternating series: zeta(2,1,1/2) = (1 - 2^{-1}) zeta(2)
    CHECK(std::abs(lerch_zeta(cplx(2, 0), 1.0, 0.5) - cplx(PI * PI / 12.0, 0)) < 1e-13);
    struct Pt { cplx s; double w, x; cplx v; };
    const Pt pts[] = {
        {{1.5, 0}, 0.3, 0.7, {5.7656548438191624533, -0.45329105641418191669}},
        {{2.2, -3}, 0.85, 0.15, {1.0702307053737388617, -0.63872356873072193785}},
        {{-0.4, 1.3}, 0.5, 0.25, {-0.30698425875873737039, 1.7984444618411383103}},
        {{0.5, 5}, 0.05, -0.35, {-3.9136162765185928028, 1.8681871580555328038}},
        {{-0.9, -4.8}, 1.0, 0.45, {1.7913357745758376089, -1.3780998322044072078}},
        {{3.0, 0}, 0.2, 0.5, {124.49366411507503426, 0.0}},
    };
    for (const auto& p : pts)
        CHECK(std::abs(lerch_zeta(p.s, p.w, p.x) - p.v) < 1e-11 * std::max(1.0, std::abs(p.v)));
}

TEST_CASE("lerch transformation formula residual") {
    CHECK(lerch_fe_residual(cplx(1.5, 0), 0.3, 0.7) < 1e-10);
    std::mt19937_64 rng(2024);
    std::uniform_real_distribution<double> ur(0.0, 1.0);
    double worst = 0;
    for (int i = 0; i < 100; ++i) {
        cplx s(1.0 + ur(rng), -5.0 + 10.0 * ur(rng));
        double w = 0.05 + 0.9 * ur(rng), x = 0.05 + 0.9 * ur(rng);
        worst = std::max(worst, lerch_fe_residual(s, w, x));
    }
    CHECK(worst < 1e-10);
}

TEST_CASE("dirichlet_L: trivial character, Catalan, inversion, convexity scan") {
    auto t1 = characters(1);
    cplx s(0.6, 2.5);
    CHECK(std::abs(dirichlet_L(s, t1, 0) - riemann_zeta(s)) < 1e-13);
    CHECK_THROWS_AS((void)dirichlet_L(cplx(1, 0), t1, 0), PoleSignal);

    // L(2, chi_4) for the odd character mod 4 is Catalan's constant
    auto t4 = characters(4);
    for (int j = 0; j < t4.count(); ++j)
        if (t4.parity[j] == 1)
            CHECK(std::abs(dirichlet_L(cplx(2, 0), t4, j) - cplx(0.91596559417721901505, 0)) <
                  1e-12);

    // Hurwitz-Dirichlet inversion: zeta(s, a/c) = c^s/phi(c) sum chibar(a) L(s, chi)
    for (i64 c = 2; c <= 20; ++c) {
        auto tab = characters(c);
        for (i64 a = 1; a < c; ++a) {
            if (gcd_i64(a, c) != 1) continue;
            CompensatedAccumulator acc;
            for (int j = 0; j < tab.count(); ++j)
                acc.add(std::conj(tab.values[j][a]) * dirichlet_L(s, tab, j));
            cplx recon = std::exp(s * std::log(double(c))) * acc.value() / double(euler_phi(c));
            CHECK(std::abs(recon - hurwitz_zeta(s, double(a) / double(c))) < 1e-10);
        }
    }

    // central values stay below a generous convexity-shaped envelope
    for (i64 c = 2; c <= 100; ++c) {
        auto tab = characters(c);
        for (int j = 0; j < tab.count(); ++j) {
            if (j == tab.principal_index) continue;
            double v = std::abs(dirichlet_L(cplx(0.5, 0), tab, j));
            CHECK(v <= 10.0 * std::pow(double(c), 0.35));
        }
    }
}

TEST_CASE("epsilon factors") {
    CHECK(std::abs(epsilon_factor(+1, 0, cplx(1, 0))) < 1e-15);
    CHECK(std::abs(epsilon_factor(+1, 0, cplx(0.5, 0)) - cplx(std::sqrt(2.0), 0)) < 1e-14);
    CHECK(std::abs(epsilon_factor(+1, 1, cplx(0.5, 0)) - cplx(0, std::sqrt(2.0))) < 1e-14);
    CHECK(std::abs(epsilon_factor(-1, 1, cplx(0.5, 0)) - cplx(0, -std::sqrt(2.0))) < 1e-14);
    CHECK(std::abs(epsilon_factor_centered(+1, 0) - cplx(1, 0)) == 0.0);
    CHECK(std::abs(epsilon_factor_centered(+1, 1) - cplx(0, 1)) == 0.0);
    CHECK(std::abs(epsilon_factor_centered(-1, 1) - cplx(0, -1)) == 0.0);
}

TEST_CASE("kloosterman_zeta: c = 1 reduces to zeta in every representation") {
    cplx s(0.5, 3);
    cplx z = riemann_zeta(s);
    CHECK(std::abs(kloosterman_zeta(KRepr::character, +1, s, 1) - z) < 1e-10);
    CHECK(std::abs(kloosterman_zeta(KRepr::character, -1, s, 1) - z) < 1e-10);
    CHECK(std::abs(kloosterman_zeta(KRepr::hurwitz_fe, +1, s, 1) - z) < 1e-12);
    cplx sm(-1.5, 1);
    CHECK(std::abs(kloosterman_zeta(KRepr::dual, +1, sm, 1) - riemann_zeta(sm)) < 1e-10);
    CHECK(std::abs(kloosterman_zeta(KRepr::series, +1, cplx(2.5, 0), 1) -
                   riemann_zeta(cplx(2.5, 0))) < 1e-10);
}

TEST_CASE("kloosterman_zeta: representation cross-checks") {
    // series vs hurwitz_fe
    CHECK(std::abs(kloosterman_zeta(KRepr::series, +1, cplx(1.5, 0), 5) -
                   kloosterman_zeta(KRepr::hurwitz_fe, +1, cplx(1.5, 0), 5)) < 1e-9);
    // hurwitz_fe vs character
    CHECK(std::abs(kloosterman_zeta(KRepr::hurwitz_fe, -1, cplx(0.5, 0), 7) -
                   kloosterman_zeta(KRepr::character, -1, cplx(0.5, 0), 7)) < 1e-9);
    // dual vs hurwitz_fe at Re s < 0
    for (i64 c : {2, 4, 6, 9}) {
        for (int sign : {+1, -1}) {
            cplx s(-1.5, 0.8);
            CHECK(std::abs(kloosterman_zeta(KRepr::dual, sign, s, c) -
                           kloosterman_zeta(KRepr::hurwitz_fe, sign, s, c)) < 1e-9);
        }
    }
    // entirety probe: hurwitz_fe vs character across the strip
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> ur(0.0, 1.0);
    for (int i = 0; i < 6; ++i) {
        cplx s(-0.4 + 2.2 * ur(rng), -3.0 + 6.0 * ur(rng));
        if (std::abs(s) < 0.05 || std::abs(s - cplx(1, 0)) < 0.05) continue;
        i64 c = 2 + i64(rng() % 11);
        int sign = (rng() & 1) ? +1 : -1;
        CHECK(std::abs(kloosterman_zeta(KRepr::hurwitz_fe, sign, s, c) -
                       kloosterman_zeta(KRepr::character, sign, s, c)) < 1e-9);
    }
    // strip violations signal
    CHECK_THROWS(kloosterman_zeta(KRepr::series, +1, cplx(0.8, 0), 5));
    CHECK_THROWS(kloosterman_zeta(KRepr::dual, +1, cplx(0.5, 0), 5));
}

TEST_CASE("L_delta: base cases and dual-route agreement") {
    CHECK(std::abs(L_delta(0, 1) - cplx(-1.4603545088095868129, 0)) < 1e-11);
    CHECK(std::abs(L_delta(1, 1)) == 0.0);
    // gcd(m, c) > 1 kills every character value
    CHECK(std::abs(L_delta(0, 2, 2)) == 0.0);
    for (i64 c = 1; c <= 30; ++c) {
        CHECK(std::abs(L_delta(0, c) - L_delta_via_kzeta(0, c)) < 1e-9);
        CHECK(std::abs(L_delta(1, c) - L_delta_via_kzeta(1, c)) < 1e-9);
    }
}

TEST_CASE("K_sw_n: closed forms and sign independence") {
    cplx s(0.5, 1.2), w(2, 5);
    cplx expect = gamma_fn(w) * 2.0 * std::cos(PI * w / 2.0) * riemann_zeta(s);
    CHECK(std::abs(K_sw_n(+1, s, w, 1) - expect) < 1e-10 * std::abs(expect));
    // only even characters mod 2
    CHECK(std::abs(K_sw_n(+1, s, w, 2) - K_sw_n(-1, s, w, 2)) == 0.0);
    CHECK_THROWS_AS((void)K_sw_n(+1, s, cplx(0, 0), 3), PoleSignal);
    CHECK_THROWS_AS((void)K_sw_n(+1, s, cplx(-2, 0), 3), PoleSignal);
    // crude-bound shape scan
    for (i64 n = 1; n <= 50; ++n) {
        double v = std::abs(K_sw_n(+1, cplx(0.5, 0), cplx(2, 5), n));
        CHECK(v <= 500.0 * std::pow(std::abs(cplx(2, 5)), 1.5) * std::pow(double(n), 0.35));
    }
}
