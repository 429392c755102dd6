// Python bindings for the mean-value toolkit: special functions, arithmetic
// sums, zeta/L evaluators, Bessel kernels and their Fourier transforms, the
// eight-term explicit formula, and the spectral-side machinery.

#include <pybind11/complex.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "mvl/arith.hpp"
#include "mvl/bessel.hpp"
#include "mvl/explicit.hpp"
#include "mvl/numkernel.hpp"
#include "mvl/specfun.hpp"
#include "mvl/spectral.hpp"
#include "mvl/zetal.hpp"

namespace py = pybind11;
using namespace mvl;

PYBIND11_MODULE(_core, mod) {
    mod.doc() = "numerical engine for mean values of Maass-form special L-values";

    py::register_exception<PoleSignal>(mod, "PoleSignal");
    py::register_exception<DatasetError>(mod, "DatasetError");
    py::register_exception<InsufficientCoefficients>(mod, "InsufficientCoefficientsError");
    py::register_exception<QuadratureFailure>(mod, "QuadratureFailureError");
    py::register_exception<DivergenceSignal>(mod, "DivergenceSignalError");

    // ---- kernel -----------------------------------------------------------
    py::enum_<TailMode>(mod, "TailMode")
        .value("weil_bound", TailMode::weil_bound)
        .value("richardson", TailMode::richardson)
        .value("fixed", TailMode::fixed);
    py::class_<SeriesBudget>(mod, "SeriesBudget")
        .def(py::init<>())
        .def_readwrite("c_max", &SeriesBudget::c_max)
        .def_readwrite("k_max", &SeriesBudget::k_max)
        .def_readwrite("quad_nodes", &SeriesBudget::quad_nodes)
        .def_readwrite("contour_offset", &SeriesBudget::contour_offset)
        .def_readwrite("tail_mode", &SeriesBudget::tail_mode)
        .def("validate", &SeriesBudget::validate);
    py::class_<LineIntegral>(mod, "LineIntegral")
        .def_readonly("value", &LineIntegral::value)
        .def_readonly("quadrature_error", &LineIntegral::quadrature_error)
        .def_readonly("truncation_error", &LineIntegral::truncation_error);
    mod.def("integrate_line",
            [](const std::function<cplx(cplx)>& f, double offset, double half_width,
               double tol) { return integrate_line(f, offset, half_width, tol); },
            py::arg("f"), py::arg("offset"), py::arg("half_width"), py::arg("tol") = 1e-12);
    mod.def("sum_compensated", &sum_compensated, py::arg("terms"));
    mod.def("tail_estimate", &tail_estimate, py::arg("partial_at_B"),
            py::arg("partial_at_2B"), py::arg("decay_exponent_hint"),
            py::arg("prev_increment") = -1.0);

    // ---- special functions ------------------------------------------------
    mod.def("log_gamma", &log_gamma, py::arg("z"));
    mod.def("kummer_phi", &kummer_phi, py::arg("alpha"), py::arg("gamma"), py::arg("z"),
            py::arg("tol") = 1e-15);
    mod.def("kummer_phi_breve", &kummer_phi_breve, py::arg("alpha"), py::arg("gamma"),
            py::arg("z"), py::arg("tol") = 1e-15);
    mod.def("theta_breve", &theta_breve, py::arg("s"), py::arg("z"),
            py::arg("tol") = 1e-15);
    py::enum_<GammaKind>(mod, "GammaKind")
        .value("plain", GammaKind::plain)
        .value("natural", GammaKind::natural);
    mod.def("gamma_factor", &gamma_factor, py::arg("delta"), py::arg("kind"),
            py::arg("s"));

    // ---- arithmetic -------------------------------------------------------
    mod.def("euler_phi", &euler_phi, py::arg("c"));
    mod.def("kloosterman", &kloosterman, py::arg("m"), py::arg("n"), py::arg("c"));
    mod.def("weil_bound", &weil_bound, py::arg("m"), py::arg("n"), py::arg("c"));
    mod.def("divisor_tau", &divisor_tau, py::arg("nu"), py::arg("n"));

    // ---- zeta and L -------------------------------------------------------
    mod.def("riemann_zeta", &riemann_zeta, py::arg("s"));
    mod.def("hurwitz_zeta", &hurwitz_zeta, py::arg("s"), py::arg("w"));
    mod.def("lerch_zeta", &lerch_zeta, py::arg("s"), py::arg("w"), py::arg("x"));
    mod.def("lerch_fe_residual", &lerch_fe_residual, py::arg("s"), py::arg("w"),
            py::arg("x"));
    py::enum_<KRepr>(mod, "KRepr")
        .value("series", KRepr::series)
        .value("hurwitz_fe", KRepr::hurwitz_fe)
        .value("character", KRepr::character)
        .value("dual", KRepr::dual);
    mod.def("kloosterman_zeta", &kloosterman_zeta, py::arg("repr"), py::arg("sign"),
            py::arg("s"), py::arg("c"), py::arg("budget") = SeriesBudget{});
    mod.def("l_delta", &L_delta, py::arg("delta"), py::arg("c"), py::arg("m") = 1);

    // ---- Bessel kernels and transforms ------------------------------------
    mod.def("B_pm", &B_pm, py::arg("sign"), py::arg("nu"), py::arg("x"));
    mod.def("mollifier_w", &mollifier_w, py::arg("x"), py::arg("profile") = 0);
    py::enum_<FourierKind>(mod, "FourierKind")
        .value("A_plus", FourierKind::A_plus)
        .value("A_minus", FourierKind::A_minus)
        .value("A_zero_plus", FourierKind::A_zero_plus)
        .value("A_zero_minus", FourierKind::A_zero_minus)
        .value("A0", FourierKind::A0)
        .value("W", FourierKind::W)
        .value("W_zero", FourierKind::W_zero)
        .value("N_plus", FourierKind::N_plus)
        .value("N_minus", FourierKind::N_minus)
        .value("A_breve_plus", FourierKind::A_breve_plus)
        .value("A_breve_minus", FourierKind::A_breve_minus);
    mod.def("fourier_closed", &fourier_closed, py::arg("kind"), py::arg("s"),
            py::arg("nu"), py::arg("y"), py::arg("profile") = 0);

    // ---- explicit formula -------------------------------------------------
    py::enum_<WeightVariant>(mod, "WeightVariant")
        .value("plain", WeightVariant::plain)
        .value("modified", WeightVariant::modified);
    py::class_<TestWeight>(mod, "TestWeight")
        .def(py::init([](double T, double Pi, WeightVariant v) {
                 return TestWeight{T, Pi, v};
             }),
             py::arg("T"), py::arg("Pi"), py::arg("variant") = WeightVariant::modified)
        .def_readwrite("T", &TestWeight::T)
        .def_readwrite("Pi", &TestWeight::Pi)
        .def_readwrite("variant", &TestWeight::variant);
    mod.def("weight_eval", &weight_eval, py::arg("w"), py::arg("t"));
    py::class_<TermBreakdown>(mod, "TermBreakdown")
        .def_readonly("D", &TermBreakdown::D)
        .def_readonly("E", &TermBreakdown::E)
        .def_readonly("Eprime", &TermBreakdown::Eprime)
        .def_readonly("A0", &TermBreakdown::A0)
        .def_readonly("A1breve", &TermBreakdown::A1breve)
        .def_readonly("Anatural", &TermBreakdown::Anatural)
        .def_readonly("K1", &TermBreakdown::K1)
        .def_readonly("Knatural", &TermBreakdown::Knatural)
        .def_readonly("total", &TermBreakdown::total)
        .def_readonly("combined_tail", &TermBreakdown::combined_tail)
        .def("serialize", &TermBreakdown::serialize);
    mod.def("rhs_total", &rhs_total, py::arg("delta"), py::arg("weight"),
            py::arg("m") = 1, py::arg("budget") = SeriesBudget{});
    py::class_<SmoothPrediction>(mod, "SmoothPrediction")
        .def_readonly("main", &SmoothPrediction::main)
        .def_readonly("secondary", &SmoothPrediction::secondary)
        .def("total", &SmoothPrediction::total);
    mod.def("smooth_prediction", &smooth_prediction, py::arg("T"), py::arg("Pi"));
    py::enum_<SharpKind>(mod, "SharpKind")
        .value("full", SharpKind::full)
        .value("delta_restricted", SharpKind::delta_restricted)
        .value("window", SharpKind::window);
    mod.def("sharp_prediction", &sharp_prediction, py::arg("kind"), py::arg("T"),
            py::arg("H") = 0.0);

    // ---- spectral side ----------------------------------------------------
    py::class_<MaassForm>(mod, "MaassForm")
        .def_readonly("t", &MaassForm::t)
        .def_readonly("parity", &MaassForm::parity)
        .def_readonly("omega", &MaassForm::omega)
        .def_readonly("coeffs", &MaassForm::coeffs)
        .def_readonly("lvalues", &MaassForm::lvalues)
        .def("lam", &MaassForm::lambda, py::arg("n"));
    mod.def("load_dataset", &load_dataset, py::arg("path"));
    py::class_<ValidationReport>(mod, "ValidationReport")
        .def_readonly("max_deviation", &ValidationReport::max_deviation)
        .def_readonly("violations", &ValidationReport::violations)
        .def("ok", &ValidationReport::ok, py::arg("tol") = 1e-6);
    mod.def("validate_form", &validate_form, py::arg("form"));
    mod.def("lvalue_special", &lvalue_special, py::arg("form"), py::arg("s"),
            py::arg("split") = 1.0);
    py::class_<SpectralMean>(mod, "SpectralMean")
        .def_readonly("value", &SpectralMean::value)
        .def_readonly("tail", &SpectralMean::tail);
    mod.def("lhs_mean", &lhs_mean, py::arg("delta"), py::arg("weight"),
            py::arg("forms"), py::arg("m") = 1);
    py::class_<GaussianH>(mod, "GaussianH")
        .def(py::init([](double center, double width) {
                 return GaussianH{center, width};
             }),
             py::arg("center") = 10.0, py::arg("width") = 2.0)
        .def_readwrite("center", &GaussianH::center)
        .def_readwrite("width", &GaussianH::width);
    py::class_<TraceReport>(mod, "TraceReport")
        .def_readonly("cusp", &TraceReport::cusp)
        .def_readonly("eisen", &TraceReport::eisen)
        .def_readonly("diag", &TraceReport::diag)
        .def_readonly("kb_plus", &TraceReport::kb_plus)
        .def_readonly("kb_minus", &TraceReport::kb_minus)
        .def_readonly("residual", &TraceReport::residual)
        .def_readonly("tail_budget", &TraceReport::tail_budget);
    mod.def("kuznetsov_sides", &kuznetsov_sides, py::arg("delta"), py::arg("m"),
            py::arg("n"), py::arg("h"), py::arg("forms"),
            py::arg("budget") = SeriesBudget{});
}
