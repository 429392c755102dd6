#include "mvl/numkernel.hpp"

#include <algorithm>
#include <array>
#include <cmath>

namespace mvl {

namespace {

// 20-point Gauss-Legendre rule on [-1, 1], nodes by Newton iteration on
// P_20.  Computed once; the iteration is deterministic.
struct GLRule {
    std::array<double, 20> x{}, w{};
    GLRule() {
        const int n = 20;
        for (int i = 0; i < n; ++i) {
            double t = std::cos(PI * (i + 0.75) / (n + 0.5));
            for (int it = 0; it < 100; ++it) {
                double p0 = 1.0, p1 = t;
                for (int k = 2; k <= n; ++k) {
                    double p2 = ((2 * k - 1) * t * p1 - (k - 1) * p0) / k;
                    p0 = p1;
                    p1 = p2;
                }
                double dp = n * (t * p1 - p0) / (t * t - 1.0);
                double dt = p1 / dp;
                t -= dt;
                if (std::abs(dt) < 1e-16) break;
            }
            double p0 = 1.0, p1 = t;
            for (int k = 2; k <= n; ++k) {
                double p2 = ((2 * k - 1) * t * p1 - (k - 1) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            double dp = n * (t * p1 - p0) / (t * t - 1.0);
            x[i] = t;
            w[i] = 2.0 / ((1.0 - t * t) * dp * dp);
        }
    }
};

const GLRule& gl20() {
    static const GLRule r;
    return r;
}

cplx panel(const std::function<cplx(cplx)>& f, double offset, double a, double b) {
    const GLRule& r = gl20();
    const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
    CompensatedAccumulator acc;
    for (int i = 0; i < 20; ++i)
        acc.add(half * r.w[i] * f(cplx(mid + half * r.x[i], offset)));
    return acc.value();
}

struct AdaptState {
    const std::function<cplx(cplx)>* f;
    double offset;
    double tol;
    int evals = 0;
};

// Recursive bisection: accept a panel when whole vs halves agree.  Panels are
// processed left to right so the reduction order is fixed.
cplx refine(AdaptState& st, double a, double b, cplx whole, int depth, double& err) {
    const double m = 0.5 * (a + b);
    cplx left = panel(*st.f, st.offset, a, m);
    cplx right = panel(*st.f, st.offset, m, b);
    st.evals += 40;
    double diff = std::abs(left + right - whole);
    if (diff < st.tol || depth >= 28) {
        if (depth >= 28 && diff > 64 * st.tol)
            throw QuadratureFailure(left + right, whole);
        err += diff;
        return left + right;
    }
    cplx lv = refine(st, a, m, left, depth + 1, err);
    cplx rv = refine(st, m, b, right, depth + 1, err);
    return lv + rv;
}

// Endpoint tail estimate: sample the decay rate just inside each endpoint and
// extend exponentially.
double endpoint_tail(const std::function<cplx(cplx)>& f, double offset,
                     double a, double b) {
    double tail = 0;
    const double d = 0.01 * (b - a);
    for (int side = 0; side < 2; ++side) {
        double edge = side == 0 ? a : b;
        double inner = side == 0 ? a + d : b - d;
        double fe = std::abs(f(cplx(edge, offset)));
        double fi = std::abs(f(cplx(inner, offset)));
        if (fe <= 0) continue;
        if (fi > fe) {
            // decaying toward the edge: local rate lambda = ln(fi/fe)/d
            double lambda = std::log(fi / fe) / d;
            tail += fe / lambda;
        } else {
            // no decay detected; be pessimistic over one panel width
            tail += fe * (b - a) * 0.05;
        }
    }
    return tail;
}

}  // namespace

LineIntegral integrate_line_centered(const std::function<cplx(cplx)>& f,
                                     double offset, double center,
                                     double half_width, double tol) {
    if (!(half_width > 0) || !(tol > 0))
        throw std::invalid_argument("integrate_line: half_width and tol must be positive");
    const double a = center - half_width, b = center + half_width;
    // Initial split into 8 panels keeps the accept test honest for integrands
    // whose bisection happens to hit a symmetry zero.
    const int n0 = 8;
    AdaptState st{&f, offset, tol / n0, 0};
    LineIntegral out;
    CompensatedAccumulator acc;
    double err = 0;
    for (int i = 0; i < n0; ++i) {
        double pa = a + (b - a) * i / n0, pb = a + (b - a) * (i + 1) / n0;
        cplx whole = panel(f, offset, pa, pb);
        acc.add(refine(st, pa, pb, whole, 0, err));
    }
    out.value = acc.value();
    out.quadrature_error = err;
    out.truncation_error = endpoint_tail(f, offset, a, b);
    return out;
}

LineIntegral integrate_line(const std::function<cplx(cplx)>& f,
                            double offset, double half_width, double tol) {
    return integrate_line_centered(f, offset, 0.0, half_width, tol);
}

void CompensatedAccumulator::add(cplx term) {
    // Neumaier update, component-wise.
    auto upd = [](double& s, double& c, double x) {
        double t = s + x;
        if (std::abs(s) >= std::abs(x))
            c += (s - t) + x;
        else
            c += (x - t) + s;
        s = t;
    };
    double sr = sum_.real(), si = sum_.imag();
    double cr = comp_.real(), ci = comp_.imag();
    upd(sr, cr, term.real());
    upd(si, ci, term.imag());
    sum_ = {sr, si};
    comp_ = {cr, ci};
}

cplx sum_compensated(const std::vector<cplx>& terms) {
    CompensatedAccumulator acc;
    for (cplx t : terms) acc.add(t);
    return acc.value();
}

double sum_compensated_real(const std::vector<double>& terms) {
    CompensatedAccumulator acc;
    for (double t : terms) acc.add({t, 0.0});
    return acc.value().real();
}

double tail_estimate(cplx partial_at_B, cplx partial_at_2B,
                     double decay_exponent_hint, double prev_increment) {
    const double d = std::abs(partial_at_2B - partial_at_B);
    if (prev_increment >= 0 && d > prev_increment * (1 + 1e-12) && d > 0)
        throw DivergenceSignal();
    if (d == 0) return 0.0;
    double est = d;
    if (decay_exponent_hint > 1.0) {
        // terms ~ n^{-p}: block sums over dyadic ranges shrink by 2^{1-p}
        double theta = std::pow(2.0, 1.0 - decay_exponent_hint);
        est = std::max(d, d * theta / (1.0 - theta));
    }
    return est;
}

}  // namespace mvl
