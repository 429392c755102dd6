#include "mvl/explicit.hpp"

#include "mvl/specfun.hpp"
#include "mvl/zetal.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <map>
#include <memory>
#include <mutex>
#include <sstream>

namespace mvl {

namespace {

constexpr double TWO_PI = 2.0 * PI;
const double SQRT_PI = std::sqrt(PI);
const double ZETA_32 = 2.6123753486854883;  // zeta(3/2), tail bookkeeping only

cplx i_pow(int delta) { return delta ? cplx(0, 1) : cplx(1, 0); }

// Everything below exp(-46) of the peak is outside the window.
double window_halfwidth(const TestWeight& w) { return 6.8 * w.Pi; }

// --------------------------------------------------------------------------
// zeta(k + 1/2, x) for k = 1..kmax in a single Euler-Maclaurin pass: the
// inner n-sum tables need ~10^7 of these, so the shared powers of 1/(j+x)
// matter.  Absolute accuracy ~1e-14 for x in (0, 1].
// --------------------------------------------------------------------------
void hurwitz_half_ladder(double x, int kmax, double* out) {
    const int N = 28;
    // B_{2i}/(2i)! for i = 1..9
    static const double BERN[9] = {1.0 / 6 / 2,          -1.0 / 30 / 24,
                                   1.0 / 42 / 720,       -1.0 / 30 / 40320,
                                   5.0 / 66 / 3628800,   -691.0 / 2730 / 479001600,
                                   7.0 / 6 / 87178291200.0,
                                   -3617.0 / 510 / 20922789888000.0,
                                   43867.0 / 798 / 6402373705728000.0};
    for (int k = 0; k < kmax; ++k) out[k] = 0.0;
    for (int j = 0; j < N; ++j) {
        double iw = 1.0 / (x + j);
        double v = std::sqrt(iw) * iw;  // (x+j)^{-3/2}
        for (int k = 0; k < kmax; ++k) {
            out[k] += v;
            v *= iw;
        }
    }
    const double W = x + N, iW = 1.0 / W, iW2 = iW * iW;
    double ws = std::sqrt(iW) * iW;  // W^{-s} at s = 3/2
    for (int k = 0; k < kmax; ++k) {
        double s = k + 1.5;
        out[k] += W * ws / (s - 1.0) + 0.5 * ws;
        double poch = s;        // (s)_{2i-1}, starting at i = 1
        double q = ws * iW;     // W^{-s-2i+1} at i = 1
        for (int i = 0; i < 9; ++i) {
            if (i > 0) {
                poch *= (s + 2 * i - 1) * (s + 2 * i);
                q *= iW2;
            }
            out[k] += BERN[i] * poch * q;
        }
        ws *= iW;
    }
}

// --------------------------------------------------------------------------
// s-independent inner-sum tables for A_breve: for each modulus c and
// expansion order k,
//   S_plus(c, k) = sum_{n > B/c, (n,c)=1} e(m nbar/c) n^{-k-1/2}
//                = c^{-k-1/2} sum_{(r,c)=1} e(m rbar/c) zeta(k+1/2, r/c)
//                  - sum_{n <= B/c, (n,c)=1} e(m nbar/c) n^{-k-1/2},
// the pairs cn <= B being reserved for direct evaluation of Theta_breve.
// The minus-sign table is the entrywise conjugate.
// --------------------------------------------------------------------------
constexpr int KMAX_TABLE = 12;

struct ATable {
    i64 m = 1;
    long c_max = 0;
    i64 B = 0;  // direct-part cutoff on cn
    std::vector<std::array<cplx, KMAX_TABLE>> Sp;  // indexed by c, k-1
};

std::shared_ptr<const ATable> a_table(i64 m, long c_max) {
    static std::map<std::pair<i64, long>, std::shared_ptr<const ATable>> cache;
    static std::mutex mu;
    {
        std::lock_guard<std::mutex> lk(mu);
        auto it = cache.find({m, c_max});
        if (it != cache.end()) return it->second;
    }
    auto tab = std::make_shared<ATable>();
    tab->m = m;
    tab->c_max = c_max;
    tab->B = 40 * m;
    tab->Sp.assign(c_max + 1, {});
    double lad[KMAX_TABLE];
    for (i64 c = 1; c <= c_max; ++c) {
        std::array<cplx, KMAX_TABLE> acc{};
        for (i64 r = 1; r <= c; ++r) {
            if (c > 1 && gcd_i64(r, c) != 1) continue;
            cplx phase = 1.0;
            if (c > 1) {
                i64 rb = mod_inverse(r, c);
                phase = unit_e(double((m % c) * rb % c) / double(c));
            }
            hurwitz_half_ladder(double(r) / double(c), KMAX_TABLE, lad);
            for (int k = 0; k < KMAX_TABLE; ++k) acc[k] += phase * lad[k];
        }
        // scale by c^{-k-1/2}
        double ic = 1.0 / double(c);
        double sc = std::sqrt(ic) * ic;
        for (int k = 0; k < KMAX_TABLE; ++k) {
            acc[k] *= sc;
            sc *= ic;
        }
        // remove the direct-part head n <= B/c
        for (i64 n = 1; n * c <= tab->B; ++n) {
            if (c > 1 && gcd_i64(n, c) != 1) continue;
            cplx phase = 1.0;
            if (c > 1) {
                i64 nb = mod_inverse(n, c);
                phase = unit_e(double((m % c) * nb % c) / double(c));
            }
            double in = 1.0 / double(n);
            double pw = std::sqrt(in) * in;
            for (int k = 0; k < KMAX_TABLE; ++k) {
                acc[k] -= phase * pw;
                pw *= in;
            }
        }
        tab->Sp[c] = acc;
    }
    std::lock_guard<std::mutex> lk(mu);
    cache[{m, c_max}] = tab;
    return tab;
}

void require_axis(cplx s, const char* who) {
    if (std::abs(s.real()) > 1e-8)
        throw std::domain_error(std::string(who) + ": Re s must be 0");
}

}  // namespace

cplx weight_eval(const TestWeight& w, cplx t) {
    if (std::abs(t.imag()) > 1.0 + 1e-12)
        throw std::domain_error("weight_eval: weight only defined on |Im t| <= 1");
    if (!(w.Pi > 0)) throw std::invalid_argument("weight_eval: Pi must be > 0");
    cplx u = (t - w.T) / w.Pi;
    cplx val = std::exp(-u * u);
    if (w.variant == WeightVariant::modified)
        val *= (t * t + 0.25) / (t * t + 4.0);
    return val;
}

ABreveResult a_breve_full(int delta, cplx s, i64 m, const SeriesBudget& budget) {
    budget.validate();
    if (delta != 0 && delta != 1) throw std::invalid_argument("a_breve: delta must be 0 or 1");
    if (m < 1) throw std::invalid_argument("a_breve: m must be >= 1");
    require_axis(s, "a_breve");
    const int kmax = std::min(budget.k_max, KMAX_TABLE);
    auto tab = a_table(m, budget.c_max);

    // direct pairs cn <= B: full Theta_breve
    CompensatedAccumulator dp, dm;
    for (i64 c = 1; c <= tab->B && c <= budget.c_max; ++c) {
        cplx cs = std::exp(s * std::log(double(c)));
        for (i64 n = 1; n * c <= tab->B; ++n) {
            if (c > 1 && gcd_i64(n, c) != 1) continue;
            cplx phase = 1.0;
            if (c > 1) {
                i64 nb = mod_inverse(n, c);
                phase = unit_e(double((m % c) * nb % c) / double(c));
            }
            double zarg = TWO_PI * double(m) / (double(c) * double(n));
            cplx base = cs / std::sqrt(double(c) * double(n));
            dp.add(base * phase * theta_breve(s, cplx(0, -zarg), 1e-13));
            dm.add(base * std::conj(phase) * theta_breve(s, cplx(0, zarg), 1e-13));
        }
    }

    // tail pairs: Theta_breve expanded to kmax terms against the tables
    std::vector<cplx> accp(kmax, cplx(0, 0)), accm(kmax, cplx(0, 0));
    for (i64 c = 1; c <= budget.c_max; ++c) {
        const auto& S = tab->Sp[c];
        double ic = 1.0 / double(c);
        cplx u = std::exp(s * std::log(double(c))) * std::sqrt(ic);  // c^{s-1/2}
        for (int k = 0; k < kmax; ++k) {
            u *= ic;  // c^{s-k-1/2}
            accp[k] += u * S[k];
            accm[k] += u * std::conj(S[k]);
        }
    }
    cplx expn = 0.0;
    const cplx zi = cplx(0, TWO_PI * double(m));  // 2 pi i m
    cplx zik = 1.0;
    cplx poch = 1.0;
    double ak = 1.0;
    double sgn_d = delta ? -1.0 : 1.0;
    for (int k = 1; k <= kmax; ++k) {
        zik *= zi;
        poch *= (double(k) - s);
        ak *= double(2 * k - 1) / double(2 * k);
        double par = (k % 2) ? -1.0 : 1.0;  // (-1)^k from the minus branch of z
        expn += (ak / poch) * zik * (par * accp[k - 1] + sgn_d * accm[k - 1]);
    }

    ABreveResult res;
    res.value = (dp.value() + sgn_d * dm.value() + expn) *
                std::exp(-0.5 * s * std::log(double(m)));
    // c-truncation (leading k = 1 piece, both signs) and expansion-order tails
    double abs1s = std::abs(1.0 - s);
    res.tail = 2.0 * (PI * double(m) / abs1s) * ZETA_32 * 2.0 / std::sqrt(double(budget.c_max));
    double akn = ak * double(2 * kmax + 1) / double(2 * kmax + 2);
    double pochn = std::abs(poch) * std::abs(double(kmax + 1) - s);
    res.tail += 2.0 * akn * std::pow(TWO_PI * double(m), kmax + 1) / pochn * 3.0 *
                std::pow(double(tab->B), -kmax - 0.5);
    return res;
}

cplx a_breve(int delta, cplx s, i64 m, const SeriesBudget& budget) {
    return a_breve_full(delta, s, m, budget).value;
}

ABreveResult a_breve_brute(int delta, cplx s, i64 m, i64 c_range, i64 n_range) {
    if (delta != 0 && delta != 1) throw std::invalid_argument("a_breve_brute: delta must be 0 or 1");
    require_axis(s, "a_breve_brute");
    CompensatedAccumulator acc;
    double sgn_d = delta ? -1.0 : 1.0;
    for (i64 c = 1; c <= c_range; ++c) {
        cplx cs = std::exp(s * std::log(double(c)));
        for (i64 n = 1; n <= n_range; ++n) {
            if (c > 1 && gcd_i64(n, c) != 1) continue;
            cplx phase = 1.0;
            if (c > 1) {
                i64 nb = mod_inverse(n, c);
                phase = unit_e(double((m % c) * nb % c) / double(c));
            }
            double zarg = TWO_PI * double(m) / (double(c) * double(n));
            cplx base = cs / std::sqrt(double(c) * double(n));
            acc.add(base * phase * theta_breve(s, cplx(0, -zarg), 1e-13));
            acc.add(sgn_d * base * std::conj(phase) * theta_breve(s, cplx(0, zarg), 1e-13));
        }
    }
    ABreveResult res;
    res.value = acc.value() * std::exp(-0.5 * s * std::log(double(m)));
    double abs1s = std::abs(1.0 - s);
    res.tail = 2.0 * (PI * double(m) / abs1s) * ZETA_32 * 2.0 *
               (1.0 / std::sqrt(double(c_range)) + 1.0 / std::sqrt(double(n_range)));
    return res;
}

std::array<cplx, 2> l_delta_pair(i64 c, i64 m) {
    if (c < 1 || m < 1) throw std::invalid_argument("l_delta_pair: c, m must be >= 1");
    static std::map<std::pair<i64, i64>, std::array<cplx, 2>> cache;
    static std::mutex mu;
    {
        std::lock_guard<std::mutex> lk(mu);
        auto it = cache.find({c, m});
        if (it != cache.end()) return it->second;
    }
    std::array<cplx, 2> res{cplx(0, 0), cplx(0, 0)};
    if (c == 1) {
        res[0] = riemann_zeta(cplx(0.5, 0));
    } else {
        // parity combination of the m-twisted Hurwitz representation of the
        // Kloosterman-zeta values at 1/2:  K_{+-}(1/2; c) = c (L_0 +- i L_1).
        // The Hurwitz route is valid for every c, including (m, c) > 1: the
        // functional equation is applied per residue a, and the twist only
        // enters through the phase e(m abar / c).  A character average over
        // the full modulus c would silently drop the (m, c) > 1 moduli
        // (conj(chi)(m) = 0 there), which is wrong: the matching character
        // form runs over characters mod c/(m, c); see L_delta.
        const cplx s1(0.5, 0.0);
        cplx pref = std::exp(log_gamma(s1) - s1 * std::log(TWO_PI));
        cplx ep = unit_e(s1 / 4.0), em = unit_e(-s1 / 4.0);
        CompensatedAccumulator kp, km;
        for (i64 a = 1; a < c; ++a) {
            if (gcd_i64(a, c) != 1) continue;
            i64 ab = mod_inverse(a, c);
            cplx phase = unit_e(double((m % c) * ab % c) / double(c));
            cplx base = ep * hurwitz_zeta(s1, double(a) / double(c)) +
                        em * hurwitz_zeta(s1, double(c - a) / double(c));
            kp.add(phase * base);
            km.add(std::conj(phase) * base);
        }
        cplx Kp = pref * kp.value(), Km = pref * km.value();
        res[0] = (Kp + Km) / (2.0 * double(c));
        res[1] = (Kp - Km) / (cplx(0, 2.0) * double(c));
    }
    std::lock_guard<std::mutex> lk(mu);
    cache[{c, m}] = res;
    return res;
}

namespace {

TermValue term_D(const TestWeight& w, i64 m) {
    double lm = std::log(double(m));
    auto f = [&](cplx t) {
        return std::exp(cplx(0, -1) * t * lm) * weight_eval(w, t) *
               std::tanh(PI * t) * t;
    };
    double tol = 1e-12 * (1.0 + w.Pi * (std::abs(w.T) + 1.0));
    auto r = integrate_line_centered(f, 0.0, w.T, window_halfwidth(w), tol);
    double pref = 1.0 / (PI * PI * std::sqrt(double(m)));
    return {r.value * pref, (r.quadrature_error + r.truncation_error) * pref};
}

TermValue term_E(const TestWeight& w, i64 m) {
    const double z12 = riemann_zeta(cplx(0.5, 0)).real();
    auto f = [&](cplx t) {
        cplx two_it = 2.0 * cplx(0, 1) * t;
        cplx num = riemann_zeta(0.5 + two_it);
        double den2 = std::norm(riemann_zeta(1.0 + two_it));
        cplx tau = (m == 1) ? cplx(1, 0) : divisor_tau(cplx(0, 1) * t, m);
        return tau * (z12 * num / den2) * weight_eval(w, t);
    };
    double tol = 1e-12 * (1.0 + w.Pi);
    double W = window_halfwidth(w);
    LineIntegral r;
    if (w.T > W) {  // disjoint windows around +-T
        auto rp = integrate_line_centered(f, 0.0, w.T, W, tol);
        auto rm = integrate_line_centered(f, 0.0, -w.T, W, tol);
        r.value = rp.value + rm.value;
        r.quadrature_error = rp.quadrature_error + rm.quadrature_error;
        r.truncation_error = rp.truncation_error + rm.truncation_error;
    } else {
        r = integrate_line(f, 0.0, w.T + W, tol);
    }
    double pref = 2.0 / PI;
    return {r.value * pref, (r.quadrature_error + r.truncation_error) * pref};
}

TermValue term_Eprime(const TestWeight& w, i64 m) {
    cplx tau = (m == 1) ? cplx(1, 0) : divisor_tau(cplx(0.25, 0), m);
    cplx v = 2.0 * tau * weight_eval(w, cplx(0, -0.25)) / riemann_zeta(cplx(1.5, 0));
    return {v, 1e-15 * std::abs(v)};
}

TermValue term_A0(int delta, const TestWeight& w, i64 m) {
    double lm = std::log(double(m));
    auto f = [&](cplx t) {
        return std::exp(cplx(0, 1) * t * lm) * weight_eval(w, t) *
               gamma_factor(delta, GammaKind::plain, 0.5 - 2.0 * cplx(0, 1) * t) *
               std::tanh(PI * t) * t;
    };
    double tol = 1e-12 * (1.0 + w.Pi * (std::abs(w.T) + 1.0));
    auto r = integrate_line_centered(f, 0.0, w.T, window_halfwidth(w), tol);
    cplx pref = 2.0 * i_pow(delta) / (PI * PI * std::sqrt(double(m)));
    return {r.value * pref,
            (r.quadrature_error + r.truncation_error) * std::abs(pref)};
}

TermValue term_A1breve(int delta, const TestWeight& w, i64 m, const SeriesBudget& budget) {
    // substituted t -> -t so the window sits at +T
    double series_tail = 0.0;
    auto f = [&, m](cplx u) {
        auto ab = a_breve_full(delta, -2.0 * cplx(0, 1) * u, m, budget);
        cplx g = gamma_factor(1, GammaKind::plain, -2.0 * cplx(0, 1) * u);
        series_tail = std::max(series_tail, ab.tail * std::abs(g * u));
        return -u * weight_eval(w, u) * ab.value * g;
    };
    double tol = 1e-11 * (1.0 + w.Pi);
    auto r = integrate_line_centered(f, 0.0, w.T, window_halfwidth(w), tol);
    cplx pref = 2.0 / (PI * PI * i_pow(delta));
    double tail = (r.quadrature_error + r.truncation_error + series_tail * SQRT_PI * w.Pi) *
                  std::abs(pref);
    return {r.value * pref, tail};
}

TermValue term_Anatural(int delta, const TestWeight& w, i64 m, const SeriesBudget& budget) {
    double series_tail = 0.0;
    auto f = [&, m](cplx t) {
        auto ab = a_breve_full(delta, 2.0 * cplx(0, 1) * t, m, budget);
        cplx g = gamma_factor(delta, GammaKind::natural, 2.0 * cplx(0, 1) * t);
        series_tail = std::max(series_tail, ab.tail * std::abs(g * t));
        return t * weight_eval(w, t) * ab.value * g;
    };
    double tol = 1e-11 * (1.0 + w.Pi);
    auto r = integrate_line_centered(f, 0.0, w.T, window_halfwidth(w), tol);
    cplx pref = i_pow(delta) / (PI * SQRT_PI * cplx(0, 1));
    double tail = (r.quadrature_error + r.truncation_error + series_tail * SQRT_PI * w.Pi) *
                  std::abs(pref);
    return {r.value * pref, tail};
}

TermValue term_K(TermName which, int delta, const TestWeight& w, i64 m,
                 const SeriesBudget& budget) {
    const double a = budget.contour_offset;
    if (a < 0.75 || a > 1.0)
        throw std::domain_error(
            "term: contour_offset must lie in [0.75, 1] (gamma-factor poles "
            "approach the line below that)");
    const bool is_k1 = (which == TermName::K1);
    const double center = is_k1 ? -w.T : w.T;
    const double lm2 = 0.5 * std::log(double(m));
    const double W = window_halfwidth(w);
    const double tolc = 1e-13 * (1.0 + w.Pi * std::sqrt(std::abs(w.T) + 1.0));

    CompensatedAccumulator acc;
    double maxc = 0.0, qerr = 0.0, last = 0.0;
    int below = 0;
    i64 c_stop = budget.c_max;
    bool converged = false;
    for (i64 c = 1; c <= budget.c_max; ++c) {
        cplx L = l_delta_pair(c, m)[delta];
        if (L == cplx(0, 0)) continue;
        double Lc = std::log(double(c)) - lm2;  // log(c/sqrt m)
        auto f = [&](cplx uu) {
            double u = uu.real();
            cplx t(u, a);
            cplx s = 2.0 * cplx(0, 1) * t;  // -2a + 2iu
            cplx g = is_k1 ? gamma_factor(1, GammaKind::plain, s)
                           : gamma_factor(delta, GammaKind::natural, s);
            cplx ph = weight_eval(w, is_k1 ? -t : t);
            return std::exp(cplx(0, 2.0 * u * Lc)) * ph * g * t;
        };
        auto r = integrate_line_centered(f, 0.0, center, W, tolc);
        double damp = std::exp(-2.0 * a * Lc);
        cplx contrib = L * damp * r.value;
        acc.add(contrib);
        qerr += std::abs(L) * damp * (r.quadrature_error + r.truncation_error);
        last = std::abs(contrib);
        maxc = std::max(maxc, last);
        if (c > 2 + i64(2.0 * std::sqrt(double(m))) && last < 1e-15 * maxc + 1e-300) {
            if (++below >= 10) {
                c_stop = c;
                converged = true;
                break;
            }
        } else {
            below = 0;
        }
    }
    cplx pref = is_k1 ? 4.0 / (PI * PI * i_pow(delta))
                      : 2.0 * i_pow(delta) / (PI * SQRT_PI * cplx(0, 1));
    double tail = qerr + 20.0 * double(c_stop) * 1e-15 * maxc;
    if (!converged) tail += last * double(budget.c_max);  // hit c_max while still moving
    return {acc.value() * pref, tail * std::abs(pref)};
}

}  // namespace

TermValue term(TermName name, int delta, const TestWeight& w, i64 m,
               const SeriesBudget& budget) {
    if (delta != 0 && delta != 1) throw std::invalid_argument("term: delta must be 0 or 1");
    if (m < 1) throw std::invalid_argument("term: m must be >= 1");
    budget.validate();
    switch (name) {
        case TermName::D: return term_D(w, m);
        case TermName::E: return term_E(w, m);
        case TermName::Eprime: return term_Eprime(w, m);
        case TermName::A0: return term_A0(delta, w, m);
        case TermName::A1breve: return term_A1breve(delta, w, m, budget);
        case TermName::Anatural: return term_Anatural(delta, w, m, budget);
        case TermName::K1:
        case TermName::Knatural: return term_K(name, delta, w, m, budget);
    }
    throw std::invalid_argument("term: unknown term");
}

TermBreakdown rhs_total(int delta, const TestWeight& w, i64 m, const SeriesBudget& budget) {
    TermBreakdown b;
    auto d = term(TermName::D, delta, w, m, budget);
    b.D = d.value; b.tail_D = d.tail;
    if (delta == 0) {
        auto e = term(TermName::E, delta, w, m, budget);
        b.E = e.value; b.tail_E = e.tail;
        auto ep = term(TermName::Eprime, delta, w, m, budget);
        b.Eprime = ep.value; b.tail_Eprime = ep.tail;
    }
    auto a0 = term(TermName::A0, delta, w, m, budget);
    b.A0 = a0.value; b.tail_A0 = a0.tail;
    auto a1 = term(TermName::A1breve, delta, w, m, budget);
    b.A1breve = a1.value; b.tail_A1breve = a1.tail;
    auto an = term(TermName::Anatural, delta, w, m, budget);
    b.Anatural = an.value; b.tail_Anatural = an.tail;
    auto k1 = term(TermName::K1, delta, w, m, budget);
    b.K1 = k1.value; b.tail_K1 = k1.tail;
    auto kn = term(TermName::Knatural, delta, w, m, budget);
    b.Knatural = kn.value; b.tail_Knatural = kn.tail;
    b.total = b.D - b.E - b.Eprime + b.A0 + b.A1breve + b.Anatural + b.K1 + b.Knatural;
    b.combined_tail = b.tail_D + b.tail_E + b.tail_Eprime + b.tail_A0 +
                      b.tail_A1breve + b.tail_Anatural + b.tail_K1 + b.tail_Knatural;
    return b;
}

std::string TermBreakdown::serialize() const {
    std::ostringstream o;
    o << std::scientific << std::setprecision(17);
    auto line = [&](const char* name, cplx v, double t) {
        o << name << ' ' << v.real() << ' ' << v.imag() << ' ' << t << '\n';
    };
    line("D", D, tail_D);
    line("E", E, tail_E);
    line("Eprime", Eprime, tail_Eprime);
    line("A0", A0, tail_A0);
    line("A1breve", A1breve, tail_A1breve);
    line("Anatural", Anatural, tail_Anatural);
    line("K1", K1, tail_K1);
    line("Knatural", Knatural, tail_Knatural);
    line("total", total, combined_tail);
    return o.str();
}

SmoothPrediction smooth_prediction(double T, double Pi) {
    return {Pi * T / (PI * SQRT_PI), 2.0 * Pi * std::sqrt(T) / PI};
}

double sharp_prediction(SharpKind kind, double T, double H) {
    const double p32 = PI * SQRT_PI;
    switch (kind) {
        case SharpKind::full:
            return T * T / (PI * PI) + 8.0 * std::pow(T, 1.5) / (3.0 * p32);
        case SharpKind::delta_restricted:
            return T * T / (2.0 * PI * PI) + 4.0 * std::pow(T, 1.5) / (3.0 * p32);
        case SharpKind::window:
            if (H < 0 || H > T / 3.0)
                throw std::domain_error("sharp_prediction: window requires 0 <= H <= T/3");
            return 2.0 * H * T / (PI * PI) +
                   4.0 * (std::pow(T + H, 1.5) - std::pow(T - H, 1.5)) / (3.0 * p32);
    }
    throw std::invalid_argument("sharp_prediction: unknown kind");
}

std::vector<AsymptoticRow> asymptotic_table(int delta, const std::vector<double>& T_list,
                                            const std::function<double(double)>& Pi_rule,
                                            const SeriesBudget& budget) {
    std::vector<AsymptoticRow> rows;
    for (double T : T_list) {
        AsymptoticRow row;
        row.T = T;
        row.Pi = Pi_rule(T);
        TestWeight w{T, row.Pi, WeightVariant::modified};
        auto b = rhs_total(delta, w, 1, budget);
        row.rhs = b.total;
        row.tail = b.combined_tail;
        if (delta == 0) {
            TestWeight wp{T, row.Pi, WeightVariant::plain};
            auto e = term(TermName::E, 0, wp, 1, budget);
            row.E_col = e.value.real();
            row.tail += e.tail;
        }
        row.value = b.total.real() + row.E_col;
        // D column follows the asymptotic machinery's D(T, Pi), i.e. the
        // plain Gaussian weight (= sqrt(pi) Pi T / pi^2 up to exp(-2 pi T))
        TestWeight wd{T, row.Pi, WeightVariant::plain};
        row.D_col = term_D(wd, 1).value.real();
        row.Knat_col = b.Knatural.real();
        row.prediction = smooth_prediction(T, row.Pi).total();
        row.residual_normalized = (row.value - row.prediction) * std::sqrt(T) / row.Pi;
        rows.push_back(row);
    }
    return rows;
}

SecondaryFit fit_secondary(const std::vector<AsymptoticRow>& rows) {
    double sxx = 0, sxy = 0;
    for (const auto& r : rows) {
        double x = r.Pi * std::sqrt(r.T);
        double y = r.value - smooth_prediction(r.T, r.Pi).main;
        sxx += x * x;
        sxy += x * y;
    }
    SecondaryFit fit;
    if (sxx == 0) return fit;
    fit.coefficient = sxy / sxx;
    if (rows.size() > 1) {
        double ss = 0;
        for (const auto& r : rows) {
            double x = r.Pi * std::sqrt(r.T);
            double y = r.value - smooth_prediction(r.T, r.Pi).main;
            double e = y - fit.coefficient * x;
            ss += e * e;
        }
        fit.uncertainty = std::sqrt(ss / (double(rows.size() - 1) * sxx));
    }
    return fit;
}

}  // namespace mvl
