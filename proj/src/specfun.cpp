#include "mvl/specfun.hpp"

#include <boost/multiprecision/cpp_complex.hpp>

#include <cmath>

namespace mvl {

namespace {

using c50 = boost::multiprecision::cpp_complex_50;
using c100 = boost::multiprecision::cpp_complex_100;

constexpr double TWO_PI = 2.0 * PI;

bool near_nonpositive_integer(cplx z, double eps = 1e-12) {
    if (z.real() > 0.5) return false;
    double r = std::round(z.real());
    return r <= 0.0 && std::abs(z.real() - r) < eps && std::abs(z.imag()) < eps;
}

// Stirling tail coefficients B_{2n} / (2n (2n-1))
constexpr double STIRLING[] = {
    1.0 / 12, -1.0 / 360, 1.0 / 1260, -1.0 / 1680, 1.0 / 1188,
    -691.0 / 360360, 1.0 / 156, -3617.0 / 122400, 43867.0 / 244188,
    -174611.0 / 125400,
};

cplx log_gamma_stirling(cplx z) {
    // valid for Re z >= 12
    cplx lg = (z - 0.5) * std::log(z) - z + 0.5 * std::log(TWO_PI);
    cplx zi = 1.0 / z, zp = zi;
    cplx z2 = zi * zi;
    for (double c : STIRLING) {
        lg += c * zp;
        zp *= z2;
    }
    return lg;
}

}  // namespace

cplx unit_e(double x) {
    return std::polar(1.0, TWO_PI * x);
}

cplx unit_e(cplx x) {
    return std::exp(cplx(0, TWO_PI) * x);
}

namespace {
// exp(w) - 1 without cancellation near w = 0
cplx cexpm1(cplx w) {
    double ex = std::expm1(w.real());
    double cy = std::cos(w.imag()), sy = std::sin(w.imag());
    double s2 = std::sin(0.5 * w.imag());
    return {ex * cy - 2.0 * s2 * s2, (ex + 1.0) * sy};
}
}  // namespace

cplx log_sin_pi(cplx z) {
    // sin(pi z) = (i/2) e^{-i pi z} (1 - e^{2 i pi z})   for Im z >= 0
    if (z.imag() < 0) return std::conj(log_sin_pi(std::conj(z)));
    return cplx(-std::log(2.0), PI / 2) - cplx(0, PI) * z +
           std::log(-cexpm1(cplx(0, TWO_PI) * z));
}

cplx log_cos_pi(cplx z) {
    return log_sin_pi(z + 0.5);
}

cplx log_gamma(cplx z) {
    if (near_nonpositive_integer(z))
        throw PoleSignal("log_gamma: pole at nonpositive integer");
    if (z.real() < 0.5)
        return std::log(PI) - log_sin_pi(z) - log_gamma(1.0 - z);
    cplx shift(0, 0);
    while (z.real() < 12.0) {
        shift += std::log(z);
        z += 1.0;
    }
    return log_gamma_stirling(z) - shift;
}

cplx gamma_fn(cplx z) {
    return std::exp(log_gamma(z));
}

cplx recip_gamma(cplx z) {
    if (near_nonpositive_integer(z)) return {0.0, 0.0};
    return std::exp(-log_gamma(z));
}

cplx gamma_ratio(cplx a, cplx b) {
    return std::exp(log_gamma(a) - log_gamma(b));
}

cplx axis_pow(int sign, double x, cplx s) {
    if (!(x > 0)) throw std::invalid_argument("axis_pow: x must be positive");
    // (sign i x)^s = e(sign s/4) x^s
    return unit_e(cplx(0.25 * sign) * s) * std::exp(s * std::log(x));
}

cplx iy_pow(double y, cplx s) {
    if (y == 0) throw std::invalid_argument("iy_pow: y must be nonzero");
    return axis_pow(y > 0 ? +1 : -1, std::abs(y), s);
}

cplx branch_pow(cplx z, cplx s) {
    if (z == cplx(0, 0)) throw std::invalid_argument("branch_pow: zero base");
    if (std::abs(z.real()) <= 1e-14 * std::abs(z.imag()))
        return iy_pow(z.imag(), s);
    return std::exp(s * std::log(z));
}

namespace {

template <class C>
C phi_series_impl(C a, C g, C z, bool breve, double tol, double& cancel) {
    // term_{n+1} = term_n * (a+n) z / ((g+n)(n+1)); breve drops the constant 1
    C term = breve ? a * z / g : C(1);
    C sum = term;
    double maxterm = std::abs(static_cast<std::complex<double>>(term));
    int consecutive = 0;
    int start = breve ? 1 : 0;
    for (int n = start; n < 10000; ++n) {
        term *= (a + C(n)) * z / ((g + C(n)) * C(n + 1));
        sum += term;
        double at = std::abs(static_cast<std::complex<double>>(term));
        double as = std::abs(static_cast<std::complex<double>>(sum));
        maxterm = std::max(maxterm, at);
        if (at < tol * (as + 1e-300)) {
            if (++consecutive >= 3) break;
        } else {
            consecutive = 0;
        }
    }
    double as = std::abs(static_cast<std::complex<double>>(sum));
    cancel = maxterm / (as + 1e-300);
    return sum;
}

cplx phi_series(cplx a, cplx g, cplx z, bool breve, double tol) {
    if (near_nonpositive_integer(g))
        throw PoleSignal("kummer_phi: gamma at a nonpositive integer");
    double cancel = 0;
    if (std::abs(z) <= 0.5) {
        cplx v = phi_series_impl<cplx>(a, g, z, breve, tol, cancel);
        if (cancel < 10.0) return v;
    }
    // escalate: ~50 then ~100 digits
    {
        c50 v = phi_series_impl<c50>(c50(a.real(), a.imag()), c50(g.real(), g.imag()),
                                     c50(z.real(), z.imag()), breve, tol * 1e-25, cancel);
        if (cancel < 1e25)
            return {static_cast<double>(v.real()), static_cast<double>(v.imag())};
    }
    c100 v = phi_series_impl<c100>(c100(a.real(), a.imag()), c100(g.real(), g.imag()),
                                   c100(z.real(), z.imag()), breve, tol * 1e-60, cancel);
    return {static_cast<double>(v.real()), static_cast<double>(v.imag())};
}

}  // namespace

cplx kummer_phi(cplx alpha, cplx gamma, cplx z, double tol) {
    return phi_series(alpha, gamma, z, false, tol);
}

cplx kummer_phi_breve(cplx alpha, cplx gamma, cplx z, double tol) {
    if (z == cplx(0, 0)) return {0.0, 0.0};
    return phi_series(alpha, gamma, z, true, tol);
}

namespace {
double transform_residual_impl(cplx alpha, cplx gamma, cplx z, bool breve) {
    if (near_nonpositive_integer(gamma))
        throw PoleSignal("kummer transform: gamma at a nonpositive integer");
    double cancel = 0;
    c50 a(alpha.real(), alpha.imag()), g(gamma.real(), gamma.imag()), w(z.real(), z.imag());
    c50 lhs = phi_series_impl<c50>(a, g, w, breve, 1e-40, cancel);
    c50 rhs = exp(w) * phi_series_impl<c50>(g - a, g, -w, breve, 1e-40, cancel);
    if (breve) rhs += exp(w) - c50(1);
    return static_cast<double>(abs(lhs - rhs));
}
}  // namespace

double kummer_transform_residual(cplx alpha, cplx gamma, cplx z) {
    return transform_residual_impl(alpha, gamma, z, false);
}

double kummer_transform_residual_breve(cplx alpha, cplx gamma, cplx z) {
    return transform_residual_impl(alpha, gamma, z, true);
}

cplx theta_breve(cplx s, cplx z, double tol) {
    if (s.real() > 0.5 && std::abs(s - std::round(s.real())) < 1e-12)
        throw PoleSignal("theta_breve: s at a positive integer");
    return kummer_phi_breve(0.5, 1.0 - s, z, tol);
}

cplx psi_variant(PsiKind kind, cplx alpha, cplx gamma, cplx z) {
    if (near_nonpositive_integer(1.0 - gamma) || near_nonpositive_integer(gamma - 1.0))
        throw PoleSignal("psi_variant: Gamma(1-gamma) or Gamma(gamma-1) at a pole");
    const cplx c1 = gamma_fn(1.0 - gamma) * recip_gamma(1.0 + alpha - gamma);
    const cplx c2 = gamma_fn(gamma - 1.0) * recip_gamma(alpha);
    if (kind == PsiKind::zero)
        return c1 + c2 * branch_pow(z, 1.0 - gamma);
    cplx zarg = z;
    bool breve = false;
    switch (kind) {
        case PsiKind::U: break;
        case PsiKind::plus: zarg = -z; break;
        case PsiKind::minus: zarg = z; break;
        case PsiKind::breve_plus: zarg = -z; breve = true; break;
        case PsiKind::breve_minus: zarg = z; breve = true; break;
        default: break;
    }
    auto phi = [&](cplx a, cplx g, cplx w) {
        return breve ? kummer_phi_breve(a, g, w) : kummer_phi(a, g, w);
    };
    return c1 * phi(alpha, gamma, zarg) +
           c2 * branch_pow(z, 1.0 - gamma) * phi(1.0 + alpha - gamma, 2.0 - gamma, zarg);
}

cplx gamma_factor(int delta, GammaKind kind, cplx s) {
    if (delta != 0 && delta != 1)
        throw std::invalid_argument("gamma_factor: delta must be 0 or 1");
    if (kind == GammaKind::plain) {
        if (near_nonpositive_integer(s, 1e-8))
            throw PoleSignal("gamma_factor: Gamma(s) pole");
        // evaluated in log space: trig factors overflow on tall contours
        cplx lg = -s * std::log(TWO_PI) + log_gamma(s);
        if (delta == 0) return std::exp(lg + log_cos_pi(0.5 * s));
        return cplx(0, 1) * std::exp(lg + log_sin_pi(0.5 * s));
    }
    // natural kind: Gamma(1/2-s)/Gamma(1-s) * (tan(pi s/2) +- 1)
    if (near_nonpositive_integer(0.5 - s, 1e-8))
        throw PoleSignal("gamma_factor: Gamma(1/2-s) pole");
    double odd_dist = std::abs(std::remainder(s.real() - 1.0, 2.0));
    if (std::abs(s.imag()) < 1e-8 && odd_dist < 1e-8)
        throw PoleSignal("gamma_factor: tan(pi s/2) pole");
    cplx tn;
    if (std::abs(s.imag()) > 30.0) {
        // tan -> +-i with exponentially small correction
        cplx u = std::exp(cplx(0, PI) * (s.imag() > 0 ? s : -s));
        cplx t = cplx(0, 1) * (1.0 - u) / (1.0 + u);
        tn = s.imag() > 0 ? t : -t;
    } else {
        tn = std::tan(0.5 * PI * s);
    }
    cplx ratio = std::exp(log_gamma(0.5 - s) - log_gamma(1.0 - s));
    return ratio * (delta == 0 ? tn + 1.0 : tn - 1.0);
}

cplx gamma_pair(cplx alpha, cplx beta) {
    if (near_nonpositive_integer(alpha) || near_nonpositive_integer(alpha - beta))
        throw PoleSignal("gamma_pair: pole");
    return std::exp(log_gamma(alpha) + log_gamma(alpha - beta));
}

}  // namespace mvl
