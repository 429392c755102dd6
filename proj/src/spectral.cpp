#include "mvl/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "mvl/arith.hpp"
#include "mvl/bessel.hpp"
#include "mvl/specfun.hpp"
#include "mvl/zetal.hpp"

namespace mvl {

double MaassForm::lambda(i64 n) const {
    if (n < 1 || n > static_cast<i64>(coeffs.size()))
        throw std::out_of_range("MaassForm::lambda: n = " + std::to_string(n) +
                                " outside stored range 1.." + std::to_string(coeffs.size()));
    return coeffs[static_cast<size_t>(n - 1)];
}

// ---------------------------------------------------------------------------
// dataset loading
// ---------------------------------------------------------------------------

std::vector<MaassForm> load_dataset(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DatasetError("cannot open dataset file: " + path);
    std::vector<MaassForm> forms;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.find_first_not_of(" \t\r\n") == std::string::npos) continue;
        auto fail = [&](const std::string& what) {
            throw DatasetError("line " + std::to_string(lineno) + ": " + what);
        };
        nlohmann::json j;
        try {
            j = nlohmann::json::parse(line);
        } catch (const std::exception& e) {
            fail(std::string("parse error: ") + e.what());
        }
        if (!j.is_object()) fail("expected an object");
        for (const char* key : {"t", "parity", "omega", "coeffs"})
            if (!j.contains(key)) fail(std::string("missing field '") + key + "'");
        MaassForm f;
        if (!j["t"].is_number()) fail("'t' must be a number");
        f.t = j["t"].get<double>();
        if (!(f.t > 0)) fail("'t' must be positive");
        if (!j["parity"].is_number_integer()) fail("'parity' must be an integer");
        f.parity = j["parity"].get<int>();
        if (f.parity != 0 && f.parity != 1) fail("'parity' must be 0 or 1");
        if (!j["omega"].is_number()) fail("'omega' must be a number");
        f.omega = j["omega"].get<double>();
        if (!(f.omega > 0)) fail("'omega' must be positive");
        if (!j["coeffs"].is_array()) fail("'coeffs' must be an array");
        for (const auto& v : j["coeffs"]) {
            if (!v.is_number()) fail("'coeffs' entries must be numbers");
            f.coeffs.push_back(v.get<double>());
        }
        if (f.coeffs.size() < 10) fail("'coeffs' must hold at least 10 eigenvalues");
        if (std::abs(f.coeffs[0] - 1.0) > 1e-9) fail("'coeffs[0]' (lambda(1)) must equal 1");
        if (j.contains("lvalues")) {
            if (!j["lvalues"].is_array()) fail("'lvalues' must be an array");
            for (const auto& e : j["lvalues"]) {
                for (const char* key : {"re", "im", "lre", "lim"})
                    if (!e.contains(key) || !e[key].is_number())
                        fail("'lvalues' entries need numeric re/im/lre/lim");
                f.lvalues.emplace_back(cplx(e["re"].get<double>(), e["im"].get<double>()),
                                       cplx(e["lre"].get<double>(), e["lim"].get<double>()));
            }
        }
        forms.push_back(std::move(f));
    }
    std::sort(forms.begin(), forms.end(),
              [](const MaassForm& a, const MaassForm& b) { return a.t < b.t; });
    for (size_t i = 1; i < forms.size(); ++i)
        if (std::abs(forms[i].t - forms[i - 1].t) < 1e-9)
            throw DatasetError("duplicate spectral parameter t = " +
                               std::to_string(forms[i].t));
    return forms;
}

ValidationReport validate_form(const MaassForm& f) {
    ValidationReport rep;
    const i64 N = static_cast<i64>(f.coeffs.size());
    for (i64 m = 2; m * 2 <= N; ++m) {
        for (i64 n = m; m * n <= N; ++n) {
            double rhs = 0;
            for (i64 d = 1; d <= std::min(m, n); ++d)
                if (m % d == 0 && n % d == 0) rhs += f.lambda(m * n / (d * d));
            double dev = std::abs(f.lambda(m) * f.lambda(n) - rhs);
            if (dev > rep.max_deviation) rep.max_deviation = dev;
            if (dev > 1e-6 && rep.violations.size() < 20) {
                std::ostringstream os;
                os << "lambda(" << m << ")*lambda(" << n << ") deviates by " << dev;
                rep.violations.push_back(os.str());
            }
        }
    }
    return rep;
}

// ---------------------------------------------------------------------------
// special L-values via a smoothed approximate functional equation
// ---------------------------------------------------------------------------

namespace {

cplx log_gamma_factor(const MaassForm& f, cplx w) {
    const cplx it(0.0, f.t);
    const double a = static_cast<double>(f.parity);
    return -w * std::log(PI) + log_gamma((w + a + it) / 2.0) +
           log_gamma((w + a - it) / 2.0);
}

// F_w(y) = (1/2 pi i) int_{(A)} exp(u^2/9) (gamma(w+u)/gamma(w)) y^{-u} du/u,
// the smoothing kernel of the functional-equation split; decays like
// exp(-(9/4) log^2(y/q)) past the analytic conductor scale q.
cplx afe_kernel(const MaassForm& f, cplx w, cplx lgw, double y, double q) {
    const double A = std::clamp(4.5 * std::log(std::max(y / q, 1.0)) + 2.0, 2.0, 24.0);
    const double ly = std::log(y);
    auto g = [&](cplx z) {
        const cplx u(A, std::real(z));
        return std::exp(u * u / 9.0 + log_gamma_factor(f, w + u) - lgw - u * ly) / u;
    };
    return integrate_line(g, 0.0, 18.0, 1e-13).value / (2.0 * PI);
}

double conductor_scale(const MaassForm& f, cplx s) {
    const cplx it(0.0, f.t);
    return std::sqrt((std::abs(s + it) + 3.0) * (std::abs(s - it) + 3.0)) / (2.0 * PI);
}

}  // namespace

cplx lvalue_special(const MaassForm& f, cplx s, double split) {
    if (!(split > 0)) throw std::invalid_argument("lvalue_special: split must be positive");
    const double q = conductor_scale(f, s);
    const i64 needed =
        static_cast<i64>(std::ceil(15.0 * q * std::max(split, 1.0 / split))) + 5;
    if (static_cast<i64>(f.coeffs.size()) < needed) throw InsufficientCoefficients(needed);
    const cplx lgs = log_gamma_factor(f, s);
    const cplx lg1s = log_gamma_factor(f, 1.0 - s);
    const cplx eps = (f.parity ? -1.0 : 1.0) * std::exp(lg1s - lgs);
    CompensatedAccumulator acc;
    int quiet = 0;
    for (i64 n = 1; n <= needed; ++n) {
        const double nn = static_cast<double>(n);
        const cplx f1 = afe_kernel(f, s, lgs, nn / split, q);
        const cplx f2 = afe_kernel(f, 1.0 - s, lg1s, nn * split, q);
        acc.add(f.lambda(n) *
                (std::pow(nn, -s) * f1 + eps * std::pow(nn, s - 1.0) * f2));
        quiet = (std::abs(f1) < 1e-13 && std::abs(f2) < 1e-13) ? quiet + 1 : 0;
        if (n > 8 && quiet >= 3) break;
    }
    return acc.value();
}

cplx lvalue_completed(const MaassForm& f, cplx s, double split) {
    return std::exp(log_gamma_factor(f, s)) * lvalue_special(f, s, split);
}

// ---------------------------------------------------------------------------
// the weighted spectral mean
// ---------------------------------------------------------------------------

namespace {

// int_{tmax}^infty t exp(-((t-c)/w)^2) dt
double gaussian_tail_moment(double c, double w, double tmax) {
    const double a = (tmax - c) / w;
    return w * w / 2.0 * std::exp(-a * a) + c * std::sqrt(PI) * w / 2.0 * std::erfc(a);
}

}  // namespace

SpectralMean lhs_mean(int delta, const TestWeight& w, const std::vector<MaassForm>& forms,
                      i64 m) {
    if (forms.empty()) throw std::invalid_argument("lhs_mean: empty dataset");
    double tmax = 0;
    for (const auto& f : forms) tmax = std::max(tmax, f.t);
    const double beyond = 0.5 * std::erfc((tmax - w.T) / w.Pi);
    if (beyond > 0.10)
        throw std::runtime_error("lhs_mean: " + std::to_string(beyond * 100) +
                                 "% of the weight mass lies beyond the dataset t_max = " +
                                 std::to_string(tmax));
    CompensatedAccumulator acc;
    for (const auto& f : forms) {
        if (f.parity != delta) continue;
        const cplx st(0.5, f.t);
        const cplx Lp = lvalue_special(f, st);
        const cplx Lm = lvalue_special(f, std::conj(st));
        acc.add(f.omega * f.lambda(m) *
                (Lp * weight_eval(w, cplx(f.t, 0)) + Lm * weight_eval(w, cplx(-f.t, 0))));
    }
    SpectralMean out;
    out.value = acc.value();
    // completeness budget: Weyl-law density of harmonic weight ~ t/pi^2 per
    // unit t, |lambda(m)| <= tau(m), |L| estimated by 3
    out.tail = 3.0 * static_cast<double>(divisor_count(m)) *
               (2.0 / (PI * PI)) * gaussian_tail_moment(w.T, w.Pi, tmax);
    return out;
}

// ---------------------------------------------------------------------------
// the two sides of the trace identity
// ---------------------------------------------------------------------------

cplx h_eval(const GaussianH& h, cplx t) {
    const cplx a = (t - h.center) / h.width;
    const cplx b = (t + h.center) / h.width;
    return std::exp(-a * a) + std::exp(-b * b);
}

double trace_identity_term(const GaussianH& h) {
    auto f = [&](cplx z) {
        const double t = std::real(z);
        return h_eval(h, t) * std::tanh(PI * t) * t;
    };
    const double W = h.center + 6.8 * h.width;
    return std::real(integrate_line(f, 0.0, W, 1e-13).value) / (PI * PI);
}

cplx trace_bessel_transform(int sign, double x, const GaussianH& h) {
    // shifted line Im t = 3/8: the integrand is analytic in 0 <= Im t < 1/2
    // and the shift makes the transform O(x^{3/4}) as x -> 0
    const double off = 0.375;
    auto f = [&](cplx t) {
        return h_eval(h, t) * B_pm_cz(sign, cplx(0, 1) * t, cplx(x, 0)) *
               std::tanh(PI * t) * t;
    };
    const double W = h.center + 6.8 * h.width;
    return integrate_line(f, off, W, 1e-12).value * (2.0 / (PI * PI));
}

namespace {

double kloosterman_side(int sign, i64 m, i64 n, const GaussianH& h,
                        const SeriesBudget& budget, double& tail) {
    const double x0 = 4.0 * PI * std::sqrt(static_cast<double>(m) * static_cast<double>(n));
    CompensatedAccumulator acc;
    double max_probe = 0, env_stop = 0, recent = 0;
    int below = 0;
    i64 c_stop = budget.c_max;
    for (i64 c = 1; c <= budget.c_max; ++c) {
        const i64 nn = sign > 0 ? n % c : (c - n % c) % c;
        const double S = std::real(kloosterman(m, nn, c));
        const double x = x0 / c;
        const cplx H = trace_bessel_transform(sign, x, h);
        acc.add(cplx(S / static_cast<double>(c) * std::real(H), 0));
        // the test function's Gaussian Fourier profile makes H(x0/c) decay
        // super-polynomially in log c; once the Weil-bound majorant of six
        // consecutive terms drops below 1e-10 of the peak the remainder is
        // dominated by the quadrature noise floor of the transform
        const double probe = weil_bound(m, n, c) / static_cast<double>(c) * std::abs(H);
        max_probe = std::max(max_probe, probe);
        if (probe < 1e-10 * std::max(max_probe, 1e-30)) {
            ++below;
            recent = std::max(recent, probe);
            env_stop = std::max(env_stop, std::abs(H) / std::pow(x, 0.75));
        } else {
            below = 0;
            recent = 0;
            env_stop = 0;
        }
        if (below >= 6 && c > 4) {
            c_stop = c;
            break;
        }
    }
    // Tail: |S(m,+-n;c)| <= tau(c) sqrt(gcd) sqrt(c) (Weil) and
    // |H(x)| <= E x^{3/4} anchored at the stopping region give terms
    // <= E x0^{3/4} tau(c) c^{-5/4}, summable; plus a cushion of the last
    // below-threshold terms for the quadrature noise floor.
    const double C = static_cast<double>(c_stop);
    tail = env_stop * std::pow(x0, 0.75) * 4.0 * std::pow(C, -0.25) * (std::log(C) + 5.2) +
           10.0 * recent;
    return std::real(acc.value());
}

}  // namespace

TraceReport kuznetsov_sides(int delta, i64 m, i64 n, const GaussianH& h,
                            const std::vector<MaassForm>& forms,
                            const SeriesBudget& budget) {
    if (delta != 0 && delta != 1) throw std::invalid_argument("kuznetsov_sides: delta");
    TraceReport rep;
    double tmax = 0;
    CompensatedAccumulator cusp;
    for (const auto& f : forms) {
        tmax = std::max(tmax, f.t);
        if (f.parity != delta) continue;
        cusp.add(2.0 * f.omega * std::real(h_eval(h, cplx(f.t, 0))) * f.lambda(m) *
                 f.lambda(n));
    }
    rep.cusp = std::real(cusp.value());
    if (delta == 0) {
        auto f = [&](cplx z) {
            const double t = std::real(z);
            if (std::abs(t) < 1e-12) return cplx(0, 0);
            const cplx it(0, t);
            const double zsq = std::norm(riemann_zeta(cplx(1.0, 2.0 * t)));
            return h_eval(h, t) * divisor_tau(it, m) * divisor_tau(it, n) / zsq;
        };
        const double W = h.center + 6.8 * h.width;
        rep.eisen = 2.0 * std::real(integrate_line(f, 0.0, W, 1e-13).value) / PI;
    }
    rep.diag = (m == n) ? trace_identity_term(h) : 0.0;
    double tail_p = 0, tail_m = 0;
    rep.kb_plus = kloosterman_side(+1, m, n, h, budget, tail_p);
    rep.kb_minus = kloosterman_side(-1, m, n, h, budget, tail_m);
    const double sgn = (delta == 0) ? 1.0 : -1.0;
    rep.residual = (rep.cusp + rep.eisen) - (rep.diag + rep.kb_plus + sgn * rep.kb_minus);
    // completeness of the cuspidal sum beyond the dataset
    const double cusp_tail = 2.0 * static_cast<double>(divisor_count(m)) *
                             static_cast<double>(divisor_count(n)) / (PI * PI) *
                             (gaussian_tail_moment(h.center, h.width, tmax) +
                              gaussian_tail_moment(-h.center, h.width, tmax));
    rep.tail_budget = tail_p + tail_m + cusp_tail;
    return rep;
}

}  // namespace mvl
