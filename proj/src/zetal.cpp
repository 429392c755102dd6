#include "mvl/zetal.hpp"
#include "mvl/specfun.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace mvl {

namespace {

constexpr double TWO_PI = 2.0 * PI;

// B_{2k}/(2k)! for k = 1..24
constexpr double BERN_FACT[] = {
    0.0833333333333333333,
    -0.00138888888888888889,
    0.0000330687830687830688,
    -8.2671957671957672e-7,
    2.0876756987868099e-8,
    -5.28419013868749318e-10,
    1.33825365306846788e-11,
    -3.38968029632258287e-13,
    8.58606205627784456e-15,
    -2.17486869855806187e-16,
    5.50900282836022952e-18,
    -1.39544646858125233e-19,
    3.53470703962946747e-21,
    -8.95351742703754685e-23,
    2.26795245233768306e-24,
    -5.74479066887220245e-26,
    1.4551724756148649e-27,
    -3.68599494066531018e-29,
    9.33673425709504467e-31,
    -2.36502241570062993e-32,
    5.9906717624821343e-34,
    -1.51745488446829026e-35,
    3.84375812545418823e-37,
    -9.73635307264669104e-39,
};

// t^{-s} for t > 0 through one real log
inline cplx real_pow_ms(double t, cplx s) {
    double l = std::log(t);
    return std::polar(std::exp(-s.real() * l), -s.imag() * l);
}

}  // namespace

cplx hurwitz_zeta(cplx s, double w) {
    if (!(w > 0)) throw std::invalid_argument("hurwitz_zeta: w must be > 0");
    if (std::abs(s - cplx(1, 0)) < 1e-8) throw PoleSignal("hurwitz_zeta: pole at s = 1");
    if (s.real() <= -1.0)
        throw std::domain_error("hurwitz_zeta: Euler-Maclaurin order supports Re s > -1 only");

    const int N = std::max(40, int(std::ceil(1.3 * std::abs(s.imag()))));
    CompensatedAccumulator acc;
    for (int n = 0; n < N; ++n) acc.add(real_pow_ms(n + w, s));
    cplx sum = acc.value();

    const double T = N + w;
    const double lt = std::log(T);
    sum += std::polar(std::exp((1.0 - s.real()) * lt), -s.imag() * lt) / (s - 1.0);
    sum += 0.5 * real_pow_ms(T, s);
    // correction terms B_{2k}/(2k)! (s)_{2k-1} T^{-s-2k+1}
    cplx poch = s;
    cplx tp = real_pow_ms(T, s + 1.0);
    for (int k = 1; k <= 12; ++k) {
        sum += BERN_FACT[k - 1] * poch * tp;
        poch *= (s + double(2 * k - 1)) * (s + double(2 * k));
        tp /= T * T;
    }
    return sum;
}

cplx riemann_zeta(cplx s) {
    if (std::abs(s - cplx(1, 0)) < 1e-8) throw PoleSignal("riemann_zeta: pole at s = 1");
    if (s.real() >= -0.5) return hurwitz_zeta(s, 1.0);
    // zeta(s) = 2^s pi^{s-1} sin(pi s/2) Gamma(1-s) zeta(1-s)
    cplx chi = std::exp(s * std::log(2.0) + (s - 1.0) * std::log(PI) + log_sin_pi(s / 2.0) +
                        log_gamma(1.0 - s));
    return chi * hurwitz_zeta(1.0 - s, 1.0);
}

double riemann_fe_residual(cplx s) {
    cplx lhs = riemann_zeta(1.0 - s);
    cplx factor = std::exp(std::log(2.0) - s * std::log(TWO_PI) + log_gamma(s) + log_cos_pi(s / 2.0));
    return std::abs(lhs - factor * riemann_zeta(s));
}

cplx lerch_zeta(cplx s, double w, double x) {
    if (!(w > 0) || w > 1.0) throw std::invalid_argument("lerch_zeta: w must lie in (0, 1]");
    double xr = x - std::round(x);  // in [-1/2, 1/2)
    if (std::abs(xr) < 1e-12) return hurwitz_zeta(s, w);

    const int K = 24;
    const int N = std::max(64, int(std::ceil(4.0 * std::abs(s))));
    CompensatedAccumulator acc;
    for (int n = 0; n < N; ++n) acc.add(unit_e(xr * n) * real_pow_ms(n + w, s));
    cplx sum = acc.value();

    const double T = N + w;
    const double sigma = std::copysign(1.0, xr);
    const double gamma = 1.0 / (TWO_PI * std::abs(xr));
    const cplx phaseN = unit_e(xr * N);

    // tail integral: int_N^inf e(x u)(u+w)^{-s} du rotated onto u = N + i sigma v,
    // then v = gamma tau so the exponential weight becomes e^{-tau}
    const double m0 = std::exp(-s.real() * std::log(T));
    auto g = [&](cplx z) {
        double tau = z.real();
        return std::exp(-tau) * std::exp(-s * std::log(cplx(T, sigma * gamma * tau)));
    };
    double tolq = 1e-13 * m0 * (1.0 + std::abs(s.imag()));
    cplx J = integrate_line_centered(g, 0.0, 22.5, 22.5, tolq).value;
    sum += cplx(0, sigma) * phaseN * gamma * J;

    // Euler-Maclaurin boundary terms at u = N for f(u) = e(x u)(u+w)^{-s}
    // f^(j)(N) = e(x N) sum_i C(j,i) (2 pi i x)^{j-i} (-1)^i (s)_i T^{-s-i}
    std::vector<cplx> pw(2 * K);  // (-1)^i (s)_i T^{-s-i}
    pw[0] = real_pow_ms(T, s);
    for (int i = 1; i < 2 * K; ++i) pw[i] = pw[i - 1] * (-(s + double(i - 1)) / T);
    std::vector<cplx> zp(2 * K);  // (2 pi i x)^p
    zp[0] = 1.0;
    for (int p = 1; p < 2 * K; ++p) zp[p] = zp[p - 1] * cplx(0, TWO_PI * xr);
    static const auto binom = [] {
        std::vector<std::vector<double>> b(48, std::vector<double>(48, 0.0));
        for (int j = 0; j < 48; ++j) {
            b[j][0] = 1.0;
            for (int i = 1; i <= j; ++i) b[j][i] = b[j - 1][i - 1] + (i < j ? b[j - 1][i] : 0.0);
        }
        return b;
    }();

    sum += 0.5 * phaseN * pw[0];
    for (int k = 1; k <= K; ++k) {
        int j = 2 * k - 1;
        cplx deriv(0, 0);
        for (int i = 0; i <= j; ++i) deriv += binom[j][i] * zp[j - i] * pw[i];
        sum -= BERN_FACT[k - 1] * phaseN * deriv;
    }
    return sum;
}

double lerch_fe_residual(cplx s, double w, double x) {
    if (!(x > 0) || x >= 1) throw std::invalid_argument("lerch_fe_residual: x must lie in (0, 1)");
    cplx lhs = lerch_zeta(1.0 - s, w, x);
    cplx pref = std::exp(log_gamma(s) - s * std::log(TWO_PI));
    cplx rhs = pref * (unit_e(s / 4.0 - x * w) * lerch_zeta(s, x, -w) +
                       unit_e(-s / 4.0 + w * (1.0 - x)) * lerch_zeta(s, 1.0 - x, w));
    return std::abs(lhs - rhs);
}

cplx dirichlet_L(cplx s, const CharacterTable& tab, int index) {
    if (index < 0 || index >= tab.count()) throw std::invalid_argument("dirichlet_L: bad index");
    if (index == tab.principal_index && std::abs(s - cplx(1, 0)) < 1e-8)
        throw PoleSignal("dirichlet_L: principal character pole at s = 1");
    const i64 c = tab.modulus;
    CompensatedAccumulator acc;
    for (i64 a = 1; a <= c; ++a) {
        cplx chi = tab.values[index][a % c];
        if (chi == cplx(0, 0)) continue;
        acc.add(chi * hurwitz_zeta(s, double(a) / double(c)));
    }
    return real_pow_ms(double(c), s) * acc.value();
}

cplx epsilon_factor(int sign, int chi_parity, cplx s) {
    if (chi_parity == 0) return 2.0 * std::cos(PI * s / 2.0);
    cplx v = 2.0 * cplx(0, 1) * std::sin(PI * s / 2.0);
    return sign >= 0 ? v : -v;
}

cplx epsilon_factor_centered(int sign, int chi_parity) {
    if (chi_parity == 0) return {1.0, 0.0};
    return sign >= 0 ? cplx(0, 1) : cplx(0, -1);
}

namespace {

// direct truncated series sum_{n=1}^N coeff[n mod c] n^{-s}, with N chosen so
// that the summation-by-parts tail bound of the mean-free part meets `tol`;
// the periodic-mean tail is restored exactly through Hurwitz zeta.
cplx periodic_dirichlet_sum(const std::vector<cplx>& coeff, cplx s, double tol, long n_cap) {
    const long c = static_cast<long>(coeff.size());
    const double sigma = s.real();
    cplx mean(0, 0);
    for (const cplx& v : coeff) mean += v;
    mean /= double(c);

    cplx prefix(0, 0);
    double fluct_peak = 0, coeff_peak = 0;
    for (long r = 0; r < c; ++r) {
        prefix += coeff[r] - mean;
        fluct_peak = std::max(fluct_peak, std::abs(prefix));
        coeff_peak = std::max(coeff_peak, std::abs(coeff[r] - mean));
    }
    const double M = 2.0 * fluct_peak + coeff_peak;
    long N = long(std::ceil(std::pow(std::max(1.0, M * (1.0 + std::abs(s) / sigma) / tol),
                                     1.0 / sigma)));
    N = std::clamp(N, 4 * c, n_cap);
    N = ((N + c - 1) / c) * c;

    CompensatedAccumulator acc;
    for (long n = 1; n <= N; ++n) {
        const cplx& a = coeff[n % c];
        if (a != cplx(0, 0)) acc.add(a * real_pow_ms(double(n), s));
    }
    cplx sum = acc.value();
    if (mean != cplx(0, 0)) sum += mean * hurwitz_zeta(s, double(N + 1));
    return sum;
}

}  // namespace

cplx kloosterman_zeta(KRepr repr, int sign, cplx s, i64 c, const SeriesBudget& budget) {
    if (c < 1) throw std::invalid_argument("kloosterman_zeta: c must be >= 1");
    budget.validate();
    const int sgn = sign >= 0 ? 1 : -1;

    switch (repr) {
        case KRepr::series: {
            if (s.real() <= 1.0)
                throw std::domain_error("kloosterman_zeta: series representation needs Re s > 1");
            std::vector<cplx> coeff(c);
            for (i64 r = 0; r < c; ++r) coeff[r] = kloosterman(1, sgn * r, c);
            // the period mean of S(1, +-n; c) vanishes, so the mean-restoring
            // Hurwitz term in the helper is identically zero here and the
            // truncation is controlled by the bounded mean-free partial sums
            return periodic_dirichlet_sum(coeff, s, 2e-10, 80000000L);
        }
        case KRepr::hurwitz_fe: {
            if (c == 1) return riemann_zeta(s);
            cplx s1 = 1.0 - s;
            if (std::abs(s1 - cplx(1, 0)) < 1e-8)
                throw PoleSignal("kloosterman_zeta: hurwitz_fe formula singular at s = 0");
            if (s1.real() <= -1.0)
                throw std::domain_error("kloosterman_zeta: hurwitz_fe needs Re s < 2");
            cplx pref = std::exp(log_gamma(s1) - s1 * std::log(TWO_PI));
            cplx ep = unit_e(s1 / 4.0), em = unit_e(-s1 / 4.0);
            CompensatedAccumulator acc;
            for (i64 a = 1; a < c; ++a) {
                if (gcd_i64(a, c) != 1) continue;
                double ab = double(mod_inverse(a, c));
                acc.add(unit_e(sgn * ab / double(c)) *
                        (ep * hurwitz_zeta(s1, double(a) / double(c)) +
                         em * hurwitz_zeta(s1, double(c - a) / double(c))));
            }
            return pref * acc.value();
        }
        case KRepr::character: {
            cplx s1 = 1.0 - s;
            if (std::abs(s1 - cplx(1, 0)) < 1e-8)
                throw PoleSignal("kloosterman_zeta: character formula singular at s = 0");
            auto tab = characters(c);
            CompensatedAccumulator acc;
            for (int j = 0; j < tab.count(); ++j)
                acc.add(tab.gauss[j] * epsilon_factor(sgn, tab.parity[j], s1) *
                        dirichlet_L(s1, tab, j));
            cplx pref = std::exp(log_gamma(s1) + s1 * std::log(double(c) / TWO_PI));
            return pref * acc.value() / double(euler_phi(c));
        }
        case KRepr::dual: {
            if (s.real() >= 0.0)
                throw std::domain_error(
                    "kloosterman_zeta: dual representation needs Re s < 0 (absolute convergence)");
            cplx s1 = 1.0 - s;
            // sum'_{(n,c)=1} e(-+ nbar/c)/(in)^{s1} folded over +-n
            cplx ep = unit_e(s1 / 4.0), em = unit_e(-s1 / 4.0);
            std::vector<cplx> coeff(c);
            for (i64 r = 0; r < c; ++r) {
                if (gcd_i64(r, c) != 1 && c > 1) continue;
                double rb = double(mod_inverse(r % c, c));
                coeff[r] = unit_e(-sgn * rb / double(c)) * em + unit_e(sgn * rb / double(c)) * ep;
            }
            cplx inner = periodic_dirichlet_sum(coeff, s1, 2e-10, 50000000L);
            return std::exp(log_gamma(s1) + s1 * std::log(double(c) / TWO_PI)) * inner;
        }
    }
    throw std::logic_error("kloosterman_zeta: unknown representation");
}

cplx L_delta(int delta, i64 c, i64 m) {
    if (delta != 0 && delta != 1) throw std::invalid_argument("L_delta: delta must be 0 or 1");
    if (c < 1 || m < 1) throw std::invalid_argument("L_delta: c, m must be >= 1");
    // When (m, c) = d > 1 the twisted phase e(m abar / c) only depends on the
    // residue mod c0 = c/d, so the average runs over characters mod c0 twisted
    // by m0 = m/d, with the n-sum still restricted to (n, c) = 1 (an Euler
    // factor 1 - chi(p) p^{-1/2} for each prime p | c; it is trivially 1 for
    // p | c0 where chi(p) = 0).  For d = 1 this reduces to the plain
    // character average mod c.
    const i64 d = gcd_i64(m, c);
    const i64 c0 = c / d, m0 = m / d;
    std::vector<i64> primes;
    {
        i64 r = c;
        for (i64 p = 2; p * p <= r; ++p)
            if (r % p == 0) {
                primes.push_back(p);
                while (r % p == 0) r /= p;
            }
        if (r > 1) primes.push_back(r);
    }
    auto tab = characters(c0);
    CompensatedAccumulator acc;
    for (int j = 0; j < tab.count(); ++j) {
        if (tab.parity[j] != delta) continue;
        cplx chim = tab.values[j][m0 % c0];
        if (chim == cplx(0, 0)) continue;
        cplx Lval = dirichlet_L(cplx(0.5, 0), tab, j);
        for (i64 p : primes)
            Lval *= 1.0 - tab.values[j][p % c0] / std::sqrt(double(p));
        acc.add(std::conj(chim) * tab.gauss[j] * Lval);
    }
    return acc.value() / (std::sqrt(double(c)) * double(euler_phi(c0)));
}

cplx L_delta_via_kzeta(int delta, i64 c) {
    if (delta != 0 && delta != 1) throw std::invalid_argument("L_delta: delta must be 0 or 1");
    // K_{+-}(1/2; c) = c (L_0(c) +- i L_1(c))
    cplx kp = kloosterman_zeta(KRepr::hurwitz_fe, +1, cplx(0.5, 0), c);
    cplx km = kloosterman_zeta(KRepr::hurwitz_fe, -1, cplx(0.5, 0), c);
    if (delta == 0) return (kp + km) / (2.0 * double(c));
    return (kp - km) / (cplx(0, 2.0) * double(c));
}

cplx K_sw_n(int sign, cplx s, cplx w, i64 n) {
    if (n < 1) throw std::invalid_argument("K_sw_n: n must be >= 1");
    if (w.real() < 0.5 && std::abs(w - std::round(w.real())) < 1e-10 && std::round(w.real()) <= 0.0)
        throw PoleSignal("K_sw_n: Gamma pole in w");
    const int sgn = sign >= 0 ? 1 : -1;
    auto tab = characters(n);
    CompensatedAccumulator acc;
    for (int j = 0; j < tab.count(); ++j)
        acc.add(tab.gauss[j] * epsilon_factor(sgn, tab.parity[j], -w) * dirichlet_L(s, tab, j));
    cplx pref = std::exp(log_gamma(w) + (s - 1.0) * std::log(double(n)));
    return pref * acc.value() / double(euler_phi(n));
}

}  // namespace mvl
