// Acceptance gate: eight end-to-end criteria, one pass/fail line each.
// Exit status 0 only if every criterion passes.

#include <cmath>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "mvl/arith.hpp"
#include "mvl/bessel.hpp"
#include "mvl/explicit.hpp"
#include "mvl/numkernel.hpp"
#include "mvl/specfun.hpp"
#include "mvl/spectral.hpp"
#include "mvl/zetal.hpp"

using namespace mvl;

namespace {

bool all_ok = true;

void line(int idx, const char* name, bool ok, const std::string& detail) {
    std::printf("criterion %d (%s): %s  [%s]\n", idx, name, ok ? "PASS" : "FAIL",
                detail.c_str());
    std::fflush(stdout);
    all_ok = all_ok && ok;
}

std::string g(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.3g", v);
    return buf;
}

// ---- criterion 1: identity floor -----------------------------------------

void criterion_identity_floor() {
    std::mt19937_64 rng(1);
    auto uni = [&](double a, double b) {
        return a + (b - a) * std::uniform_real_distribution<double>(0, 1)(rng);
    };
    double lerch = 0;
    for (int i = 0; i < 100; ++i)
        lerch = std::max(lerch, lerch_fe_residual(cplx(uni(0.3, 2.5), uni(-15, 15)),
                                                  uni(0.05, 0.95), uni(0.05, 0.95)));
    double kum = 0, kumb = 0;
    for (int i = 0; i < 100; ++i) {
        const cplx a(uni(-3, 3), uni(-3, 3)), gm(uni(0.3, 4), uni(-3, 3));
        const cplx z(uni(-8, 8), uni(-8, 8));
        kum = std::max(kum, kummer_transform_residual(a, gm, z));
        kumb = std::max(kumb, kummer_transform_residual_breve(a, gm, z));
    }
    double rec = 0;
    int done = 0;
    while (done < 500) {
        const i64 c = 2 + static_cast<i64>(rng() % 4000);
        const i64 n = 1 + static_cast<i64>(rng() % 4000);
        if (gcd_i64(n, c) != 1) continue;
        rec = std::max(rec, reciprocity_check(n, c, (rng() & 1) ? 1 : -1));
        ++done;
    }
    double rie = 0;
    for (int i = 0; i < 20; ++i)
        rie = std::max(rie, riemann_fe_residual(cplx(uni(-0.5, 1.5), uni(-20, 20))));
    const bool ok = lerch < 1e-10 && kum < 1e-12 && kumb < 1e-12 && rec < 1e-12 &&
                    rie < 1e-10;
    line(1, "identity floor", ok,
         "lerch " + g(lerch) + " kummer " + g(kum) + " regularized " + g(kumb) +
             " reciprocity " + g(rec) + " riemann " + g(rie));
}

// ---- criterion 2: arithmetic floor ---------------------------------------

void criterion_arithmetic_floor() {
    const double s113 = std::abs(kloosterman(1, 1, 3) - cplx(-1.0, 0.0));
    double weil_excess = -1e300;
    for (i64 c = 1; c <= 200; ++c)
        for (i64 m = 1; m <= 4; ++m)
            for (i64 n = 1; n <= 4; ++n)
                weil_excess = std::max(
                    weil_excess, std::abs(kloosterman(m, n, c)) - weil_bound(m, n, c));
    double gauss_dev = 0;
    for (i64 c = 2; c <= 50; ++c) {
        const auto tab = characters(c);
        for (int j = 0; j < tab.count(); ++j)
            if (tab.primitive[j])
                gauss_dev = std::max(gauss_dev,
                                     std::abs(std::abs(tab.gauss[j]) - std::sqrt(double(c))));
    }
    double ortho = 0;
    for (i64 c = 2; c <= 30; ++c) {
        const auto tab = characters(c);
        const double phi = static_cast<double>(euler_phi(c));
        for (int i = 0; i < tab.count(); ++i)
            for (int j = 0; j < tab.count(); ++j) {
                cplx acc = 0;
                for (i64 a = 0; a < c; ++a) acc += tab.chi(i)[a] * std::conj(tab.chi(j)[a]);
                ortho = std::max(ortho, std::abs(acc - (i == j ? cplx(phi) : cplx(0))));
            }
    }
    const bool ok = s113 < 1e-12 && weil_excess <= 1e-9 && gauss_dev < 1e-10 &&
                    ortho < 1e-12;
    line(2, "arithmetic floor", ok,
         "S(1,1;3) " + g(s113) + " weil excess " + g(weil_excess) + " gauss " +
             g(gauss_dev) + " orthogonality " + g(ortho));
}

// ---- criterion 3: Fourier-transform lemmas -------------------------------

void criterion_fourier() {
    std::mt19937_64 rng(3);
    auto uni = [&](double a, double b) {
        return a + (b - a) * std::uniform_real_distribution<double>(0, 1)(rng);
    };
    struct Probe {
        FourierKind kind;
        OracleKind okind;
        int sign;
        double re_lo, re_hi;
        bool pos_y;
    };
    const std::vector<Probe> probes = {
        {FourierKind::A_minus, OracleKind::A, -1, 0.78, 0.93, false},
        {FourierKind::N_plus, OracleKind::N, +1, 0.78, 0.93, true},
        {FourierKind::N_minus, OracleKind::N, -1, 0.78, 0.93, false},
        {FourierKind::W, OracleKind::W, +1, 0.15, 0.85, false},
    };
    double worst = 0;
    for (const auto& p : probes) {
        for (int i = 0; i < 20; ++i) {
            const cplx s(uni(p.re_lo, p.re_hi), uni(-1.5, 1.5));
            const cplx nu(0.0, uni(0.2, 2.0));
            double y = uni(0.6, 3.0);
            if (!p.pos_y && (rng() & 1)) y = -y;
            try {
                const cplx closed = fourier_closed(p.kind, s, nu, y);
                const auto oracle = fourier_oracle(p.okind, p.sign, s, nu, y);
                worst = std::max(worst,
                                 std::abs(closed - oracle.value) - oracle.error_budget);
            } catch (const PoleSignal&) {
                --i;
            }
        }
    }
    const cplx s(0.8, 0.4), nu(0.0, 0.7);
    const double v0 = std::abs(fourier_closed(FourierKind::N_minus, s, nu, 32.0));
    const double v1 = std::abs(fourier_closed(FourierKind::N_minus, s, nu, 64.0));
    const double slope = std::log(v1 / v0) / std::log(2.0);
    const double slope_dev = std::abs(slope - (std::real(s) - 2.0));
    const bool ok = worst < 1e-6 && slope_dev < 0.1;
    line(3, "fourier transform lemmas", ok,
         "closed-vs-oracle excess " + g(std::max(worst, 0.0)) + " decay slope " +
             g(slope) + " expected " + g(std::real(s) - 2.0));
}

// ---- criterion 4: representation agreement -------------------------------

void criterion_representations() {
    double kz = 0;
    for (i64 c = 1; c <= 20; ++c) {
        for (int sign : {+1, -1}) {
            kz = std::max(kz, std::abs(kloosterman_zeta(KRepr::series, sign, cplx(1.5, 0.4), c) -
                                       kloosterman_zeta(KRepr::hurwitz_fe, sign, cplx(1.5, 0.4), c)));
            kz = std::max(kz, std::abs(kloosterman_zeta(KRepr::hurwitz_fe, sign, cplx(0.5, 0.3), c) -
                                       kloosterman_zeta(KRepr::character, sign, cplx(0.5, 0.3), c)));
            kz = std::max(kz, std::abs(kloosterman_zeta(KRepr::dual, sign, cplx(-1.5, 0.8), c) -
                                       kloosterman_zeta(KRepr::hurwitz_fe, sign, cplx(-1.5, 0.8), c)));
        }
    }
    double ld = 0;
    for (i64 c = 1; c <= 50; ++c)
        for (int delta : {0, 1})
            ld = std::max(ld, std::abs(L_delta(delta, c) - L_delta_via_kzeta(delta, c)));
    double z1 = 0;
    for (const cplx s : {cplx(0.5, 3.0), cplx(1.5, 0.4), cplx(0.3, -2.0)})
        for (int sign : {+1, -1})
            z1 = std::max(z1, std::abs(kloosterman_zeta(KRepr::hurwitz_fe, sign, s, 1) -
                                       riemann_zeta(s)));
    const bool ok = kz < 1e-9 && ld < 1e-9 && z1 < 1e-10;
    line(4, "representation agreement", ok,
         "K-zeta cross " + g(kz) + " L_delta dual " + g(ld) + " c=1 vs zeta " + g(z1));
}

// ---- criterion 5: trace-formula residual ---------------------------------

void criterion_trace(const std::vector<MaassForm>& forms) {
    const GaussianH h{12.0, 2.0};
    const double H = trace_identity_term(h);
    double worst_margin = -1e300;
    bool ok = true;
    for (int delta : {0, 1}) {
        for (auto [m, n] : std::vector<std::pair<i64, i64>>{{1, 1}, {1, 2}, {2, 3}}) {
            const auto r = kuznetsov_sides(delta, m, n, h, forms, {});
            const double allowance = r.tail_budget + 1e-3 * std::abs(H);
            ok = ok && std::abs(r.residual) <= allowance;
            worst_margin = std::max(worst_margin, std::abs(r.residual) - allowance);
        }
    }
    line(5, "trace formula residual", ok,
         "worst |residual|-allowance " + g(worst_margin) + " over (1,1),(1,2),(2,3) x both parities");
}

// ---- criterion 6: explicit-formula residual ------------------------------

void criterion_explicit(const std::vector<MaassForm>& forms) {
    const TestWeight w{12.0, 2.0, WeightVariant::modified};
    bool ok = true;
    double worst_rel = 0;
    for (auto [delta, m] : std::vector<std::pair<int, i64>>{{0, 1}, {1, 1}, {0, 2}, {1, 2}}) {
        const auto b = rhs_total(delta, w, m, {});
        const auto mean = lhs_mean(delta, w, forms, m);
        const double resid = std::abs(mean.value - b.total);
        const double allowance = b.combined_tail + mean.tail + 1e-2 * std::abs(b.D);
        ok = ok && resid <= allowance;
        worst_rel = std::max(worst_rel, resid / std::abs(b.D));
    }
    line(6, "explicit formula residual", ok,
         "worst residual / |D| = " + g(worst_rel) +
             " (target 1e-2) over parities x twists m=1,2");
}

// ---- criterion 7: asymptotic reproduction --------------------------------

void criterion_asymptotics() {
    const std::vector<double> T_list = {100.0, 400.0, 1600.0};
    auto pi_rule = [](double T) { return std::sqrt(T); };
    double d_rel = 0, exponent = 0;
    std::string coeff_note;
    const double cand[3] = {2.0 / PI, 2.0 * riemann_zeta(cplx(0.5, 0)).real() / PI, 0.0};
    for (int delta : {0, 1}) {
        const auto rows = asymptotic_table(delta, T_list, pi_rule, {});
        std::vector<double> xs, ys;
        for (const auto& r : rows) {
            const double main = r.Pi * r.T / (PI * std::sqrt(PI));
            d_rel = std::max(d_rel, std::abs(r.D_col - main) / main);
            if (delta == 0) {
                xs.push_back(std::log(r.T));
                ys.push_back(std::log(std::abs(r.value - main) / r.Pi));
            }
        }
        const auto fit = fit_secondary(rows);
        int best = 0;
        for (int i = 1; i < 3; ++i)
            if (std::abs(fit.coefficient - cand[i]) < std::abs(fit.coefficient - cand[best]))
                best = i;
        const char* names[3] = {"2/pi", "2*zeta(1/2)/pi", "0"};
        coeff_note += " delta=" + std::to_string(delta) + " coeff " + g(fit.coefficient) +
                      "~" + names[best];
        if (delta == 0) {
            // least-squares slope of ln(|value - main|/Pi) against ln T
            double sx = 0, sy = 0, sxx = 0, sxy = 0;
            const double n = static_cast<double>(xs.size());
            for (size_t i = 0; i < xs.size(); ++i) {
                sx += xs[i]; sy += ys[i]; sxx += xs[i] * xs[i]; sxy += xs[i] * ys[i];
            }
            exponent = (n * sxy - sx * sy) / (n * sxx - sx * sx);
        }
    }
    // window-calculus telescoping: dyadic windows tile (0, T]
    const double T = 81.0;
    double sum = 0;
    for (int j = 0; j <= 40; ++j)
        sum += sharp_prediction(SharpKind::window, 0.75 * T * std::pow(2.0, -j),
                                0.25 * T * std::pow(2.0, -j));
    const double tele = std::abs(sum - sharp_prediction(SharpKind::delta_restricted, T)) /
                        (T * T);
    const bool ok = d_rel < 1e-6 && std::abs(exponent - 0.5) < 0.05 && tele < 1e-10;
    line(7, "asymptotic reproduction", ok,
         "D rel dev " + g(d_rel) + " secondary exponent " + g(exponent) + " telescoping " +
             g(tele) + coeff_note);
}

// ---- criterion 8: determinism --------------------------------------------

std::string determinism_transcript(const std::vector<MaassForm>& forms) {
    std::string out;
    char buf[64];
    auto put = [&](cplx v) {
        std::snprintf(buf, sizeof buf, "%.17g %.17g;", v.real(), v.imag());
        out += buf;
    };
    std::mt19937_64 rng(5);
    auto uni = [&](double a, double b) {
        return a + (b - a) * std::uniform_real_distribution<double>(0, 1)(rng);
    };
    for (int i = 0; i < 10; ++i)
        put(lerch_zeta(cplx(uni(-1, 2), uni(-3, 3)), uni(0.1, 0.9), uni(0.1, 0.9)));
    const TestWeight w{12.0, 2.0, WeightVariant::modified};
    const auto b = rhs_total(1, w, 1, {});
    put(b.D); put(b.A0); put(b.A1breve); put(b.Anatural); put(b.K1); put(b.Knatural);
    put(b.total);
    const auto r = kuznetsov_sides(1, 1, 1, GaussianH{12.0, 2.0}, forms, {});
    put(cplx(r.residual, r.tail_budget));
    put(cplx(r.kb_plus, r.kb_minus));
    return out;
}

void criterion_determinism(const std::vector<MaassForm>& forms) {
    const std::string a = determinism_transcript(forms);
    const std::string b = determinism_transcript(forms);
    line(8, "determinism", a == b,
         a == b ? "repeated run byte-identical" : "transcripts differ");
}

}  // namespace

int main() {
    std::printf("acceptance gate: eight criteria\n");
    const auto forms = load_dataset(MVL_DATASET_PATH);
    criterion_identity_floor();
    criterion_arithmetic_floor();
    criterion_fourier();
    criterion_representations();
    criterion_trace(forms);
    criterion_explicit(forms);
    criterion_asymptotics();
    criterion_determinism(forms);
    std::printf("overall: %s\n", all_ok ? "PASS" : "FAIL");
    return all_ok ? 0 : 1;
}
