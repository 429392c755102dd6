#pragma once

// Bessel functions of complex order, the oscillatory/exponential kernel pair
// B^{+-}, smooth-cutoff regularization, and the closed-form Fourier
// transforms of those kernels together with a direct-quadrature oracle.

#include "mvl/numkernel.hpp"

namespace mvl {

enum class BesselKind { J, I, K };

// Power series with compensated summation; working precision escalated with
// the argument to absorb the exponential cancellation (J ~ e^x, K ~ e^{2x}).
// K = pi (I_{-nu} - I_nu)/(2 sin pi nu); near-integer nu signals.
cplx bessel(BesselKind kind, cplx nu, double x);
// same series continued to complex argument with Re z > 0 (tail-contour use)
cplx bessel_cz(BesselKind kind, cplx nu, cplx z);

// B^+ = pi (J_{-2nu} - J_{2nu})/(2 sin pi nu),  B^- = 2 cos(pi nu) K_{2nu}
cplx B_pm(int sign, cplx nu, double x);
cplx B_pm_cz(int sign, cplx nu, cplx z);

// Smooth cutoff: 1 on (0,1], 0 on [2,inf), exp(-p/t) glue in between.
// Profile 0 is the default; profile 1 is a second admissible shape used to
// verify that regularized results do not depend on the cutoff.
double mollifier_w(double x, int profile = 0);
// Mellin transform wtilde(s) = 1/s + int_1^2 w(x) x^{s-1} dx (entire except
// the simple pole at s = 0 with residue 1).
cplx mellin_w(cplx s, int profile = 0);

// P_nu(x) = (x/2)^nu / Gamma(nu+1), the leading series term of J and I
cplx P_nu(cplx nu, double x);
// R_nu = pi (P_{-2nu} - P_{2nu})/(2 sin pi nu)
cplx R_nu(cplx nu, double x);
// M^{+-}_nu(x) = B^{+-}_nu(x) - w(x^2/4) R_nu(x); O(x^2) as x -> 0
cplx regularized_M(int sign, cplx nu, double x, int profile = 0);

// Closed forms of the Fourier transforms
//   A^{+-}_{s,nu}(y)   = int_0^inf B^{+-}(2 sqrt x) e^{-ixy} x^{-s-nu} dx
//   W_{s,nu}(y)        = same with w(x) R(2 sqrt x)
//   N^{+-} = A^{+-} - W (transform of the regularized kernel)
// A_plus/A_minus require 3/4 < Re s < 1 for y != 0 and fall back to the
// y = 0 evaluation (1/4 < Re s < 1) when y vanishes; A_zero_* are the y = 0
// values; A0 is the two-term Psi_0 combination; W needs 0 < Re s < 1;
// W_zero needs Re s < 1; A_breve_* carry the regularized Kummer series and
// are profile-independent.
enum class FourierKind {
    A_plus,
    A_minus,
    A_zero_plus,
    A_zero_minus,
    A0,
    W,
    W_zero,
    N_plus,
    N_minus,
    A_breve_plus,
    A_breve_minus,
};

cplx fourier_closed(FourierKind kind, cplx s, cplx nu, double y, int profile = 0);

enum class OracleKind { A, N, W };

struct OracleResult {
    cplx value{};
    double error_budget = 0;  // quadrature residuals + truncation bounds
};

// Direct adaptive quadrature of the defining integral.  The exponentially
// decaying kernel (sign -) is accepted everywhere in 0 < Re s < 1; the
// oscillatory kernel (sign +) only for kinds N (y != 0) and W, where the
// integrand is absolutely integrable for 3/4 < Re s < 1; anything else is
// refused.
OracleResult fourier_oracle(OracleKind kind, int sign, cplx s, cplx nu, double y,
                            int profile = 0);

}  // namespace mvl
