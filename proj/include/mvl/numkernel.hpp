#pragma once

// Precision policy, line quadrature, compensated summation and tail
// estimation.  Everything here is a pure function of its inputs; all
// reductions are carried out in a fixed order so repeated runs are
// bit-identical.

#include <complex>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace mvl {

using cplx = std::complex<double>;

inline constexpr double PI = 3.14159265358979323846264338327950288;

struct PrecisionPolicy {
    int working_digits = 15;     // decimal digits carried by the evaluation
    double target_tol = 1e-12;   // absolute/relative tolerance for results
    int max_digits = 120;        // escalation cap

    void validate() const {
        if (working_digits < 15) throw std::invalid_argument("PrecisionPolicy: working_digits < 15");
        if (!(target_tol > 0)) throw std::invalid_argument("PrecisionPolicy: target_tol <= 0");
        if (max_digits < working_digits) throw std::invalid_argument("PrecisionPolicy: max_digits < working_digits");
    }
};

enum class TailMode { weil_bound, richardson, fixed };

struct SeriesBudget {
    long c_max = 10000;          // outer modulus cutoff
    int k_max = 6;               // hypergeometric expansion depth
    int quad_nodes = 256;        // baseline node count for line quadrature
    double contour_offset = 1.0; // imaginary shift of the integration line
    TailMode tail_mode = TailMode::weil_bound;

    void validate() const {
        if (c_max < 1 || k_max < 1 || quad_nodes < 1)
            throw std::invalid_argument("SeriesBudget: cutoffs must be >= 1");
        if (contour_offset < -1.0 || contour_offset > 1.0)
            throw std::invalid_argument("SeriesBudget: contour_offset outside [-1, 1]");
    }
};

struct QuadratureFailure : std::runtime_error {
    cplx last_estimate, previous_estimate;
    QuadratureFailure(cplx last, cplx prev)
        : std::runtime_error("integrate_line: adaptive refinement failed to converge"),
          last_estimate(last), previous_estimate(prev) {}
};

struct DivergenceSignal : std::runtime_error {
    DivergenceSignal() : std::runtime_error("tail_estimate: successive increments are growing") {}
};

struct LineIntegral {
    cplx value{};
    double quadrature_error = 0;  // residual of the last adaptive refinement
    double truncation_error = 0;  // estimated mass beyond the truncated line
};

// Integral of f(offset*i + u) du over |u| <= half_width.  The integrand is
// assumed analytic on the line and decaying at the endpoints; the endpoint
// decay rate is sampled to estimate the truncated tail.
LineIntegral integrate_line(const std::function<cplx(cplx)>& f,
                            double offset, double half_width, double tol);

// Convenience: center the window at `center` on the shifted line.
LineIntegral integrate_line_centered(const std::function<cplx(cplx)>& f,
                                     double offset, double center,
                                     double half_width, double tol);

// Neumaier-compensated sum in the given order (the one and only reduction
// order used anywhere in the library).
cplx sum_compensated(const std::vector<cplx>& terms);
double sum_compensated_real(const std::vector<double>& terms);

// Streaming flavour for loops that do not want to materialize terms.
class CompensatedAccumulator {
  public:
    void add(cplx term);
    cplx value() const { return sum_ + comp_; }

  private:
    cplx sum_{0.0, 0.0};
    cplx comp_{0.0, 0.0};
};

// Remaining-tail estimate from two partial sums at budgets B and 2B assuming
// terms ~ n^{-decay_exponent_hint}.  Never smaller than the last observed
// increment.  If prev_increment is supplied (increment observed between B/2
// and B) and the increments grow, the series is flagged as divergent.
double tail_estimate(cplx partial_at_B, cplx partial_at_2B,
                     double decay_exponent_hint,
                     double prev_increment = -1.0);

}  // namespace mvl
