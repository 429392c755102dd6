#pragma once

// The eight-term explicit formula for smoothed mean values of special
// L-values: Gaussian test weights, the regularized double series
// A_breve_delta(m; s), the character-average coefficients L_delta(m; c), the
// individual terms D, E, E', A^0, A-breve^1, A-breve^natural, K^1,
// K^natural, the two-term smoothed asymptotics, and the secondary-term
// probe table.

#include <array>
#include <functional>
#include <string>
#include <vector>

#include "mvl/arith.hpp"
#include "mvl/numkernel.hpp"

namespace mvl {

enum class WeightVariant { plain, modified };

// phi(t) = exp(-(t-T)^2/Pi^2), optionally damped by (t^2+1/4)/(t^2+4) so
// that phi(+-i/2) = 0; analytic on |Im t| <= 1.
struct TestWeight {
    double T = 0;
    double Pi = 1;
    WeightVariant variant = WeightVariant::modified;
};

cplx weight_eval(const TestWeight& w, cplx t);

// A_breve_delta(m; s) = sum_{+-} (+-)^delta sum_c (c/sqrt m)^s
//   sum_{(n,c)=1} e(+- m nbar/c)/sqrt(cn) * Theta_breve_s(-+ 2 pi i m/cn),
// for Re s = 0.  Evaluated by summing the first few (c, n) pairs directly
// and expanding Theta_breve to k_max terms elsewhere, with the inner n-sums
// tabulated exactly through Hurwitz zeta values (s-independent tables).
struct ABreveResult {
    cplx value{};
    double tail = 0;  // c-truncation + expansion-order estimate
};
ABreveResult a_breve_full(int delta, cplx s, i64 m = 1, const SeriesBudget& budget = {});
cplx a_breve(int delta, cplx s, i64 m = 1, const SeriesBudget& budget = {});
// reference double sum over c <= c_range, n <= n_range (test oracle)
ABreveResult a_breve_brute(int delta, cplx s, i64 m, i64 c_range, i64 n_range);

// L_delta(m; c) and L_{1-delta}(m; c) together, via the twisted Hurwitz
// route (parity combination of e(+- m abar/c)-twisted Hurwitz zeta values
// at 1/2).  Valid for every c, including gcd(m, c) > 1, where the average
// degenerates to characters mod c/(m, c) with extra Euler factors (see
// L_delta in zetal.hpp); those moduli carry nonzero mass and must not be
// skipped.
std::array<cplx, 2> l_delta_pair(i64 c, i64 m = 1);

enum class TermName { D, E, Eprime, A0, A1breve, Anatural, K1, Knatural };

struct TermValue {
    cplx value{};
    double tail = 0;
};
TermValue term(TermName name, int delta, const TestWeight& w, i64 m = 1,
               const SeriesBudget& budget = {});

struct TermBreakdown {
    cplx D{}, E{}, Eprime{}, A0{}, A1breve{}, Anatural{}, K1{}, Knatural{};
    double tail_D = 0, tail_E = 0, tail_Eprime = 0, tail_A0 = 0, tail_A1breve = 0,
           tail_Anatural = 0, tail_K1 = 0, tail_Knatural = 0;
    cplx total{};          // parity-dependent signed sum
    double combined_tail = 0;
    std::string serialize() const;
};
// delta = 0: D - E - E' + A0 + A1 + An + K1 + Kn;  delta = 1: no E terms.
TermBreakdown rhs_total(int delta, const TestWeight& w, i64 m = 1,
                        const SeriesBudget& budget = {});

// Pi T/(pi sqrt pi) + 2 Pi sqrt(T)/pi
struct SmoothPrediction {
    double main = 0;
    double secondary = 0;
    double total() const { return main + secondary; }
};
SmoothPrediction smooth_prediction(double T, double Pi);

enum class SharpKind { full, delta_restricted, window };
// full: T^2/pi^2 + 8 T^{3/2}/(3 pi^{3/2});  delta_restricted: half the main
// term, 4 T^{3/2}/(3 pi^{3/2});  window: 2HT/pi^2
// + 4((T+H)^{3/2} - (T-H)^{3/2})/(3 pi^{3/2}), requires H <= T/3.
double sharp_prediction(SharpKind kind, double T, double H = 0);

struct AsymptoticRow {
    double T = 0, Pi = 0;
    cplx rhs{};           // eight-term total (modified weight)
    double E_col = 0;     // E(T, Pi) with the plain weight (delta = 0 only)
    double value = 0;     // Re rhs + E_col: the quantity with the asymptotic
    double D_col = 0;     // plain-weight diagonal integral (~ Pi T / pi^{3/2})
    double Knat_col = 0;
    double prediction = 0;
    double residual_normalized = 0;  // (value - prediction) sqrt(T)/Pi
    double tail = 0;
};
std::vector<AsymptoticRow> asymptotic_table(int delta, const std::vector<double>& T_list,
                                            const std::function<double(double)>& Pi_rule,
                                            const SeriesBudget& budget = {});

// Least-squares coefficient of Pi sqrt(T) in (value - main term) over the
// rows, with a residual-based uncertainty; candidates worth comparing are
// 2/pi, 2 zeta(1/2)/pi and 0.
struct SecondaryFit {
    double coefficient = 0;
    double uncertainty = 0;
};
SecondaryFit fit_secondary(const std::vector<AsymptoticRow>& rows);

}  // namespace mvl
