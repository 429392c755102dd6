#pragma once

// Spectral-side machinery: the Maass cusp form dataset (line-delimited JSON),
// Hecke-relation validation, special L-values by a smoothed approximate
// functional equation, the weighted spectral mean that the explicit formula
// evaluates, and the two sides of the Kuznetsov trace formula as an
// end-to-end consistency check of the dataset normalization.

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "mvl/explicit.hpp"
#include "mvl/numkernel.hpp"

namespace mvl {

struct MaassForm {
    double t = 0;                  // spectral parameter, > 0
    int parity = 0;                // 0 even, 1 odd
    double omega = 0;              // |rho(1)|^2 / cosh(pi t), > 0
    std::vector<double> coeffs;    // Hecke eigenvalues lambda(1..N), lambda(1)=1
    // optional precomputed values (s, L(s,f)) for cross-checks
    std::vector<std::pair<cplx, cplx>> lvalues;

    double lambda(i64 n) const;    // 1-based, throws if out of range
};

struct DatasetError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Parse a line-delimited JSON dataset; forms are returned sorted by t.
// Malformed lines, invalid fields, and duplicate spectral parameters
// (within 1e-9) raise DatasetError with the offending line number.
std::vector<MaassForm> load_dataset(const std::string& path);

struct ValidationReport {
    double max_deviation = 0;                // worst Hecke-relation violation
    std::vector<std::string> violations;     // entries exceeding tolerance
    bool ok(double tol = 1e-6) const { return max_deviation <= tol; }
};
// Check lambda(m) lambda(n) = sum_{d | (m,n)} lambda(mn/d^2) for all pairs
// with mn within the stored coefficient range.
ValidationReport validate_form(const MaassForm& f);

// Thrown when the stored coefficients cannot support the requested L-value;
// carries the length that would suffice.
struct InsufficientCoefficients : std::runtime_error {
    i64 needed;
    explicit InsufficientCoefficients(i64 n)
        : std::runtime_error("insufficient coefficients; need " + std::to_string(n)),
          needed(n) {}
};

// L(s, f) by a smoothed approximate functional equation for the completed
// function Lambda(s) = pi^{-s} Gamma((s+a+it)/2) Gamma((s+a-it)/2) L(s),
// a = parity, with Lambda(s) = (-1)^parity Lambda(1-s).  split is the
// balance point X of the two sums; the result is X-independent up to the
// stated accuracy (~1e-7) for X within a factor ~2 of 1.
cplx lvalue_special(const MaassForm& f, cplx s, double split = 1.0);
// completed function (for reflection checks)
cplx lvalue_completed(const MaassForm& f, cplx s, double split = 1.0);

struct SpectralMean {
    cplx value{};      // genuinely complex: the weight is one-sided, so the
                       // conjugate-pair terms do not cancel Im L(1/2+it_f)
    double tail = 0;   // completeness budget beyond the dataset's t_max
};
// sum over forms of parity delta of
//   omega_f lambda_f(m) (L(1/2+it_f) phi(t_f) + L(1/2-it_f) phi(-t_f)),
// the quantity the eight-term formula computes.  Throws if more than 10% of
// the weight's mass lies beyond the dataset's largest t.
SpectralMean lhs_mean(int delta, const TestWeight& w, const std::vector<MaassForm>& forms,
                      i64 m = 1);

// even, entire test function h(t) = e^{-((t-c)/w)^2} + e^{-((t+c)/w)^2}
struct GaussianH {
    double center = 10;
    double width = 2;
};
cplx h_eval(const GaussianH& h, cplx t);

// (1/pi^2) int h(t) tanh(pi t) t dt
double trace_identity_term(const GaussianH& h);
// (2/pi^2) int h(t) B^{sign}_{it}(x) tanh(pi t) t dt, evaluated on the
// shifted line Im t = 3/8 for x^{3/4} decay as x -> 0
cplx trace_bessel_transform(int sign, double x, const GaussianH& h);

struct TraceReport {
    double cusp = 0;       // 2 sum_{parity delta} omega_f h(t_f) lambda(m) lambda(n)
    double eisen = 0;      // 2(1-delta) (1/pi) int h tau_it(m) tau_it(n)/|zeta(1+2it)|^2
    double diag = 0;       // [m == n] (1/pi^2) int h tanh(pi t) t dt
    double kb_plus = 0;    // sum_c S(m,n;c)/c H^+(4 pi sqrt(mn)/c)
    double kb_minus = 0;   // sum_c S(m,-n;c)/c H^-(...), entering with (-1)^delta
    double residual = 0;   // (cusp + eisen) - (diag + kb_plus + (-1)^delta kb_minus)
    double tail_budget = 0;
};
// Both sides of the parity-projected trace identity
//   2 Delta_delta(m,n) + 2(1-delta) Xi(m,n)
//     = [m=n] H + KB^+(m,n) + (-1)^delta KB^-(m,n).
TraceReport kuznetsov_sides(int delta, i64 m, i64 n, const GaussianH& h,
                            const std::vector<MaassForm>& forms,
                            const SeriesBudget& budget = {});

}  // namespace mvl
