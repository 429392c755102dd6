#pragma once

// Riemann / Hurwitz / Lerch zeta functions with their functional equations,
// Dirichlet L-values through Hurwitz zeta, the Kloosterman-zeta sums
// K_{+-}(s; c) in four representations, and the character averages L_delta.

#include "mvl/arith.hpp"
#include "mvl/numkernel.hpp"

namespace mvl {

// Euler-Maclaurin Hurwitz zeta, any w > 0; valid for Re s > -1, s != 1.
cplx hurwitz_zeta(cplx s, double w);

// zeta(s) = hurwitz_zeta(s, 1); reflected through the functional equation
// for Re s < -0.5.  Accurate for |Im s| up to ~5000.
cplx riemann_zeta(cplx s);

// Lerch zeta  zeta(s, w, x) = sum_{n >= 0} e(x n)/(n + w)^s, w in (0, 1],
// x real (periodic mod 1).  Integer x falls back to Hurwitz.
cplx lerch_zeta(cplx s, double w, double x);

// Residual of the Lerch transformation formula at (s, w, x), 0 < x < 1:
//   zeta(1-s,w,x) - Gamma(s)(2pi)^{-s} { e(s/4 - xw) zeta(s,x,-w)
//                                      + e(-s/4 + w(1-x)) zeta(s,1-x,w) }
double lerch_fe_residual(cplx s, double w, double x);

// Residual of the Riemann functional equation
//   zeta(1-s) - 2 (2pi)^{-s} Gamma(s) cos(pi s/2) zeta(s)
double riemann_fe_residual(cplx s);

// L(s, chi) = c^{-s} sum_a chi(a) zeta(s, a/c); pole signal for principal
// chi at s = 1.
cplx dirichlet_L(cplx s, const CharacterTable& tab, int index);

enum class KRepr { series, hurwitz_fe, character, dual };

// K_{+-}(s; c) = sum_{n>=1} S(1, +-n; c) n^{-s}  (series; Re s > 1), with
// three continuations:
//   hurwitz_fe: K(1-s) via e(+-abar/c)-twisted Hurwitz zeta values
//   character:  K(1-s) via Gauss sums, epsilon factors and Dirichlet L
//   dual:       K(1-s) = Gamma(s) (c/2pi)^s sum'_{(n,c)=1} e(-+nbar/c)/(in)^s
// All are evaluated at the *argument s you pass*; each representation
// applies its own defining formula at that point.
cplx kloosterman_zeta(KRepr repr, int sign, cplx s, i64 c, const SeriesBudget& budget = {});

// epsilon factor of the character functional equation:
//   chi even: 2 cos(pi s/2);  chi odd: +-2i sin(pi s/2)
cplx epsilon_factor(int sign, int chi_parity, cplx s);
// centered variant (s = 1/2 combination): even -> 1, odd -> +-i
cplx epsilon_factor_centered(int sign, int chi_parity);

// L_delta(m; c): with d = (m, c), c0 = c/d, m0 = m/d,
//   (1/(sqrt c * phi(c0))) sum_{chi mod c0, parity delta} conj(chi)(m0)
//   tau(chi) L(1/2, chi) prod_{p | c} (1 - chi(p) p^{-1/2}),
// by the direct character sum.  For (m, c) = 1 this is the plain average
// (1/(sqrt c * phi(c))) sum conj(chi)(m) tau(chi) L(1/2, chi) over chi mod c.
cplx L_delta(int delta, i64 c, i64 m = 1);
// Production route: parity combination of K_{+-}(1/2; c) in the Hurwitz
// representation (m = 1 only).
cplx L_delta_via_kzeta(int delta, i64 c);

// K_{+-}(s, w; n) = Gamma(w) n^{s-1}/phi(n) * sum_chi tau(chi)
// epsilon_{+-}(-w, chi) L(s, chi)
cplx K_sw_n(int sign, cplx s, cplx w, i64 n);

}  // namespace mvl
