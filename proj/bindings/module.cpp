#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "relalt/alterations.hpp"
#include "relalt/errors.hpp"
#include "relalt/hamilton_jacobi.hpp"
#include "relalt/metric.hpp"
#include "relalt/report.hpp"
#include "relalt/run_config.hpp"
#include "relalt/sepvar.hpp"

namespace py = pybind11;
using namespace relalt;

PYBIND11_MODULE(_core, m) {
    m.doc() = "Relativistic alteration factors and separated-solution checks";

    // Base first: translators run last-registered-first, so the specific
    // exception types below win over the generic one.
    auto err = py::register_exception<Error>(m, "DomainError");
    py::register_exception<InvalidInput>(m, "InvalidInputError", err.ptr());
    py::register_exception<HorizonError>(m, "HorizonViolation", err.ptr());
    py::register_exception<SuperluminalError>(m, "SuperluminalVelocity", err.ptr());
    py::register_exception<FrameMismatchError>(m, "FrameMismatch", err.ptr());
    py::register_exception<PoleCrossingError>(m, "PoleCrossing", err.ptr());
    py::register_exception<ConvergenceError>(m, "ConvergenceFailure", err.ptr());

    py::enum_<Frame>(m, "Frame").value("s", Frame::s).value("m", Frame::m);
    py::enum_<FactorKind>(m, "FactorKind")
        .value("gravitational", FactorKind::gravitational)
        .value("kinematic", FactorKind::kinematic)
        .value("composed", FactorKind::composed);
    py::enum_<QuantityKind>(m, "QuantityKind")
        .value("frequency_hz", QuantityKind::frequency_hz)
        .value("energy_j", QuantityKind::energy_j)
        .value("mass_kg", QuantityKind::mass_kg)
        .value("separation_constant_per_s", QuantityKind::separation_constant_per_s);
    py::enum_<OperatorKind>(m, "OperatorKind")
        .value("laplacian", OperatorKind::laplacian)
        .value("schrodinger_with_potential", OperatorKind::schrodinger_with_potential)
        .value("custom_matrix", OperatorKind::custom_matrix);

    py::class_<Constants>(m, "Constants")
        .def(py::init<>())
        .def_readwrite("G", &Constants::G)
        .def_readwrite("c", &Constants::c)
        .def_readwrite("h_planck", &Constants::h_planck)
        .def_static("codata2018", &Constants::codata2018)
        .def_static("from_json_file", &Constants::from_json_file)
        .def_static("from_json_text", &Constants::from_json_text)
        .def("validate", &Constants::validate);

    py::class_<GravitationalSource>(m, "GravitationalSource")
        .def(py::init<double, double>(), py::arg("mass"), py::arg("radius"))
        .def_readonly("mass", &GravitationalSource::mass)
        .def_readonly("radius", &GravitationalSource::radius);

    py::class_<KinematicFrame>(m, "KinematicFrame")
        .def(py::init<double>(), py::arg("velocity"))
        .def_readonly("velocity", &KinematicFrame::velocity);

    py::class_<AlterationFactor>(m, "AlterationFactor")
        .def_static("from_lambda", &AlterationFactor::from_lambda, py::arg("lambda_"),
                    py::arg("kind") = FactorKind::composed)
        .def_static("from_gamma", &AlterationFactor::from_gamma, py::arg("gamma"),
                    py::arg("kind") = FactorKind::composed)
        .def_static("identity", &AlterationFactor::identity,
                    py::arg("kind") = FactorKind::composed)
        .def_property_readonly("lambda_", &AlterationFactor::lambda)
        .def_property_readonly("gamma", &AlterationFactor::gamma)
        .def_property_readonly("kind", &AlterationFactor::kind);

    m.def("schwarzschild_lambda", &schwarzschild_lambda, py::arg("source"),
          py::arg("constants") = Constants{});
    m.def("special_lambda", &special_lambda, py::arg("frame"),
          py::arg("constants") = Constants{});
    m.def("compose", &compose);
    m.def("time_s_from_m", &time_s_from_m);
    m.def("time_m_from_s", &time_m_from_s);

    py::class_<MeasuredQuantity>(m, "MeasuredQuantity")
        .def(py::init<double, QuantityKind, Frame>(), py::arg("value"), py::arg("kind"),
             py::arg("frame"))
        .def_readonly("value", &MeasuredQuantity::value)
        .def_readonly("kind", &MeasuredQuantity::kind)
        .def_readonly("frame", &MeasuredQuantity::frame);

    m.def("alter_energy_gap", &alter_energy_gap);
    m.def("alter_frequency", &alter_frequency);
    m.def("alter_mass", &alter_mass);
    m.def("alter_separation_constant", &alter_separation_constant);
    m.def("fractional_shift", &fractional_shift);
    m.def("alter", &alter);

    py::class_<Grid1D>(m, "Grid1D")
        .def(py::init<double, int>(), py::arg("length"), py::arg("points"))
        .def_readonly("length", &Grid1D::length)
        .def_readonly("points", &Grid1D::points)
        .def_property_readonly("spacing", &Grid1D::spacing)
        .def("node", &Grid1D::node);

    py::class_<SeparatingOperator>(m, "SeparatingOperator")
        .def_static("laplacian", &SeparatingOperator::laplacian, py::arg("grid"),
                    py::arg("k_const") = 1.0)
        .def_static(
            "schrodinger",
            py::overload_cast<const Grid1D&, std::vector<double>, double>(
                &SeparatingOperator::schrodinger),
            py::arg("grid"), py::arg("potential_nodes"), py::arg("k_const") = 1.0)
        .def_static(
            "schrodinger_fn",
            py::overload_cast<const Grid1D&, const std::function<double(double)>&,
                              double>(&SeparatingOperator::schrodinger),
            py::arg("grid"), py::arg("potential"), py::arg("k_const") = 1.0)
        .def_static("custom", &SeparatingOperator::custom, py::arg("dense"),
                    py::arg("n"), py::arg("k_const") = 1.0)
        .def_property_readonly("kind", &SeparatingOperator::kind)
        .def_property_readonly("size", &SeparatingOperator::size)
        .def_property_readonly("k_const", &SeparatingOperator::k_const)
        .def("entry", &SeparatingOperator::entry)
        .def("apply", [](const SeparatingOperator& op, const std::vector<double>& x) {
            return op.apply(x);
        });

    py::class_<SeparatedSolution>(m, "SeparatedSolution")
        .def(py::init([](double sep_constant, double k_const, std::vector<double> mode,
                         Frame frame) {
                 return SeparatedSolution{sep_constant, k_const, std::move(mode), frame};
             }),
             py::arg("sep_constant"), py::arg("k_const"), py::arg("mode"),
             py::arg("frame") = Frame::s)
        .def_readonly("sep_constant", &SeparatedSolution::sep_constant)
        .def_readonly("k_const", &SeparatedSolution::k_const)
        .def_readonly("mode", &SeparatedSolution::mode)
        .def_readonly("frame", &SeparatedSolution::frame)
        .def("rate", &SeparatedSolution::rate);

    m.def("eigenmodes", &eigenmodes, py::arg("op"), py::arg("count"));
    m.def("separation_constant", &separation_constant);
    m.def("eigen_residual", &eigen_residual);
    m.def("temporal_factor", &temporal_factor, py::arg("sep_constant"),
          py::arg("k_const"), py::arg("t"));

    py::class_<FrameScalingRecord>(m, "FrameScalingRecord")
        .def_readonly("mode_index", &FrameScalingRecord::mode_index)
        .def_readonly("lambda_s", &FrameScalingRecord::lambda_s)
        .def_readonly("gamma", &FrameScalingRecord::gamma)
        .def_readonly("lambda_m", &FrameScalingRecord::lambda_m)
        .def_readonly("abs_err", &FrameScalingRecord::abs_err)
        .def_readonly("rel_err", &FrameScalingRecord::rel_err)
        .def_readonly("fd_lambda_m", &FrameScalingRecord::fd_lambda_m)
        .def_readonly("fd_rel_err", &FrameScalingRecord::fd_rel_err)
        .def_readonly("pass_", &FrameScalingRecord::pass)
        .def("__repr__",
             [](const FrameScalingRecord& r) { return to_json_record(r); });

    m.def("verify_frame_scaling", &verify_frame_scaling, py::arg("sol_s"),
          py::arg("factor"), py::arg("mode_index") = 0,
          py::arg("tol_scaling") = 1e-12, py::arg("tol_fd") = 1e-6);
    m.def("residual_operator_equation",
          [](const SeparatingOperator& op, const SeparatedSolution& sol,
             const std::vector<double>& times) {
              return residual_operator_equation(op, sol, times);
          });

    py::class_<HJFamily>(m, "HJFamily")
        .def(py::init<double, double, double, Frame>(), py::arg("amplitude"),
             py::arg("integration_constant"), py::arg("mass"),
             py::arg("frame") = Frame::s)
        .def_static("with_explicit_lambda1", &HJFamily::with_explicit_lambda1,
                    py::arg("amplitude"), py::arg("integration_constant"),
                    py::arg("mass"), py::arg("lambda1"), py::arg("frame") = Frame::s)
        .def_property_readonly("amplitude", &HJFamily::amplitude)
        .def_property_readonly("integration_constant", &HJFamily::integration_constant)
        .def_property_readonly("mass", &HJFamily::mass)
        .def_property_readonly("lambda1", &HJFamily::lambda1)
        .def_property_readonly("frame", &HJFamily::frame)
        .def_property_readonly("pole_time", &HJFamily::pole_time)
        .def("spatial", &HJFamily::spatial)
        .def("temporal", &HJFamily::temporal)
        .def("action", &HJFamily::action)
        .def("d_dr", &HJFamily::d_dr)
        .def("d_dt", &HJFamily::d_dt)
        .def("to_m_frame", &HJFamily::to_m_frame);

    m.def("hj_closed_family", &hj_closed_family, py::arg("amplitude"),
          py::arg("integration_constant"), py::arg("mass"));
    m.def("hj_residual",
          [](const HJFamily& fam, const std::vector<double>& r_samples,
             const std::vector<double>& t_samples) {
              return hj_residual(fam, r_samples, t_samples);
          });

    py::class_<HJMassRecord>(m, "HJMassRecord")
        .def_readonly("gamma", &HJMassRecord::gamma)
        .def_readonly("mass_s", &HJMassRecord::mass_s)
        .def_readonly("mass_m", &HJMassRecord::mass_m)
        .def_readonly("lambda1_s", &HJMassRecord::lambda1_s)
        .def_readonly("lambda1_m", &HJMassRecord::lambda1_m)
        .def_readonly("lhs", &HJMassRecord::lhs)
        .def_readonly("rhs", &HJMassRecord::rhs)
        .def_readonly("abs_err", &HJMassRecord::abs_err)
        .def_readonly("rel_err", &HJMassRecord::rel_err)
        .def_readonly("pass_", &HJMassRecord::pass)
        .def("__repr__", [](const HJMassRecord& r) { return to_json_record(r); });

    m.def("hj_mass_invariance", &hj_mass_invariance, py::arg("mass_s"),
          py::arg("factor"), py::arg("tol") = 1e-12);
    m.def("hj_mass_alteration", &hj_mass_alteration, py::arg("mass_s"),
          py::arg("factor"));
}
