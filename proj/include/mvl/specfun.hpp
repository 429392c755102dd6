#pragma once

// Complex log-gamma, Kummer confluent hypergeometric functions and their
// regularized variants, the Tricomi-type combinations Psi/Psi_0/Psi_breve,
// and the two gamma-factor families used by the contour terms.

#include "mvl/numkernel.hpp"

namespace mvl {

struct PoleSignal : std::runtime_error {
    explicit PoleSignal(const std::string& what) : std::runtime_error(what) {}
};

// e(x) = exp(2 pi i x)
cplx unit_e(double x);
cplx unit_e(cplx x);

// Principal-branch log Gamma (Stirling with recurrence shift; reflection for
// Re z < 1/2).  Throws PoleSignal at nonpositive integers.
cplx log_gamma(cplx z);
cplx gamma_fn(cplx z);
// 1/Gamma(z); zero at the poles of Gamma.
cplx recip_gamma(cplx z);
// Gamma(a)/Gamma(b) evaluated in log space.
cplx gamma_ratio(cplx a, cplx b);

// Overflow-safe log sin(pi z) and log cos(pi z) (some branch; intended for
// exponentiation or for differences of logs).
cplx log_sin_pi(cplx z);
cplx log_cos_pi(cplx z);

// Branch convention for powers on the imaginary axis:
//   (sign * i * x)^s = e(sign * s/4) * x^s   for x > 0.
// Every (iy)^s and z^{1-gamma} with z on the axis goes through here.
cplx axis_pow(int sign, double x, cplx s);
// (iy)^s for real y != 0.
cplx iy_pow(double y, cplx s);
// z^s: axis convention when z is purely imaginary, principal branch otherwise.
cplx branch_pow(cplx z, cplx s);

// Kummer Phi(alpha, gamma; z) by its power series (precision escalated on
// cancellation), and the regularized Phi_breve = Phi - 1 summed without the
// constant term.
cplx kummer_phi(cplx alpha, cplx gamma, cplx z, double tol = 1e-15);
cplx kummer_phi_breve(cplx alpha, cplx gamma, cplx z, double tol = 1e-15);

// Residual of the Kummer transformation Phi(a,g;z) - e^z Phi(g-a,g;-z),
// and of its regularized variant Phi_breve(a,g;z) - e^z Phi_breve(g-a,g;-z)
// - (e^z - 1).  Both sides are formed in ~50-digit arithmetic so the returned
// residual is meaningful below the double roundoff of the values themselves.
double kummer_transform_residual(cplx alpha, cplx gamma, cplx z);
double kummer_transform_residual_breve(cplx alpha, cplx gamma, cplx z);

// Theta_breve_s(z) = Phi_breve(1/2, 1-s; z); s must avoid {1, 2, 3, ...}.
cplx theta_breve(cplx s, cplx z, double tol = 1e-15);

enum class PsiKind { U, plus, minus, zero, breve_plus, breve_minus };

// U:           c1 * Phi(a,g;z)       + c2 * z^{1-g} * Phi(1+a-g,2-g;z)
// plus/minus:  c1 * Phi(a,g;-+z)     + c2 * z^{1-g} * Phi(1+a-g,2-g;-+z)
// zero:        c1                    + c2 * z^{1-g}
// breve_pm:    Phi replaced by Phi_breve in plus/minus
// with c1 = Gamma(1-g)/Gamma(1+a-g), c2 = Gamma(g-1)/Gamma(a).
cplx psi_variant(PsiKind kind, cplx alpha, cplx gamma, cplx z);

enum class GammaKind { plain, natural };

// plain  delta=0: (2pi)^{-s} Gamma(s) cos(pi s/2)
// plain  delta=1: (2pi)^{-s} Gamma(s) i sin(pi s/2)
// natural:        Gamma(1/2-s)/Gamma(1-s) * (tan(pi s/2) +- 1), + for delta=0
cplx gamma_factor(int delta, GammaKind kind, cplx s);

// Gamma(alpha, beta) := Gamma(alpha) * Gamma(alpha - beta)
cplx gamma_pair(cplx alpha, cplx beta);

}  // namespace mvl
