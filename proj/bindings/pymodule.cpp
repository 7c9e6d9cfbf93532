#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "weakspin/calibration.hpp"
#include "weakspin/config.hpp"
#include "weakspin/constants.hpp"
#include "weakspin/errors.hpp"
#include "weakspin/planner.hpp"
#include "weakspin/propagation.hpp"
#include "weakspin/spin.hpp"
#include "weakspin/wavepacket.hpp"

namespace py = pybind11;
namespace ws = weakspin;

PYBIND11_MODULE(_weakspin, m) {
    m.doc() = "Weak-measurement Stern-Gerlach beam simulation";

    py::register_exception<ws::Error>(m, "WeakspinError");

    py::class_<ws::PhysicalConstants>(m, "PhysicalConstants")
        .def_readonly("hbar", &ws::PhysicalConstants::hbar)
        .def_readonly("bohr_magneton", &ws::PhysicalConstants::bohr_magneton)
        .def_readonly("amu", &ws::PhysicalConstants::amu)
        .def_readonly("helium4_mass", &ws::PhysicalConstants::helium4_mass)
        .def_readonly("metastable_he_moment",
                      &ws::PhysicalConstants::metastable_he_moment);
    m.def("constants", &ws::constants, "SI constants used across the library");

    py::class_<ws::ExperimentParams>(m, "ExperimentParams")
        .def(py::init<>())
        .def_readwrite("theta", &ws::ExperimentParams::theta)
        .def_readwrite("phi", &ws::ExperimentParams::phi)
        .def_readwrite("B0", &ws::ExperimentParams::B0)
        .def_readwrite("dBdz", &ws::ExperimentParams::dBdz)
        .def_readwrite("delta_t", &ws::ExperimentParams::delta_t)
        .def_readwrite("sigma", &ws::ExperimentParams::sigma)
        .def_readwrite("flight_distance", &ws::ExperimentParams::flight_distance)
        .def_readwrite("beam_velocity", &ws::ExperimentParams::beam_velocity)
        .def_readwrite("mass", &ws::ExperimentParams::mass)
        .def_readwrite("moment", &ws::ExperimentParams::moment)
        .def("flight_time", &ws::ExperimentParams::flight_time)
        .def("kick_wavenumber", &ws::ExperimentParams::kick_wavenumber)
        .def("kick_velocity", &ws::ExperimentParams::kick_velocity);

    py::class_<ws::spin::Spinor3>(m, "Spinor3")
        .def_readwrite("c_plus", &ws::spin::Spinor3::c_plus)
        .def_readwrite("c_zero", &ws::spin::Spinor3::c_zero)
        .def_readwrite("c_minus", &ws::spin::Spinor3::c_minus)
        .def("norm_squared", &ws::spin::Spinor3::norm_squared);
    m.def("make_spinor", &ws::spin::make_spinor, py::arg("theta"),
          py::arg("phi"), "Pre-selected spin-1 state at polar angles");
    m.def("post_selector", &ws::spin::post_selector,
          "Bra the beam is projected onto after the weak stage");
    m.def("inner", &ws::spin::inner, py::arg("bra"), py::arg("ket"));
    m.def(
        "weak_value",
        [](double theta, double phi) {
            return ws::spin::weak_value(theta, phi).value;
        },
        py::arg("theta"), py::arg("phi"),
        "Weak value of the z spin component between the selections");
    m.def("weak_value_ratio_check", &ws::spin::weak_value_ratio_check,
          py::arg("theta"), py::arg("phi"),
          "Difference between the matrix-element route and the closed form");

    m.def(
        "spread_at",
        [](double sigma, double t, double mass) {
            return ws::wavepacket::spread_at(ws::wavepacket::WavePacket{sigma},
                                             t, mass);
        },
        py::arg("sigma"), py::arg("t"), py::arg("mass"),
        "Free-evolution width of a Gaussian packet");

    py::class_<ws::wavepacket::DetectorProfile>(m, "DetectorProfile")
        .def_readonly("z_grid", &ws::wavepacket::DetectorProfile::z_grid)
        .def_readonly("density", &ws::wavepacket::DetectorProfile::density)
        .def_readonly("mean", &ws::wavepacket::DetectorProfile::mean)
        .def_readonly("rms_width", &ws::wavepacket::DetectorProfile::rms_width)
        .def_readonly("peak", &ws::wavepacket::DetectorProfile::peak)
        .def_readonly("total_weight",
                      &ws::wavepacket::DetectorProfile::total_weight)
        .def_readonly("limit", &ws::wavepacket::DetectorProfile::limit);

    m.def("first_order_detector_density",
          py::overload_cast<const ws::ExperimentParams&>(
              &ws::wavepacket::first_order_detector_density),
          py::arg("params"));
    m.def("first_order_detector_density",
          py::overload_cast<const ws::ExperimentParams&,
                            const std::vector<double>&>(
              &ws::wavepacket::first_order_detector_density),
          py::arg("params"), py::arg("z_grid"));
    m.def("first_order_mean", &ws::wavepacket::first_order_mean,
          py::arg("params"));
    m.def("validity_ratio", &ws::wavepacket::validity_ratio, py::arg("params"));
    m.def("default_grid", &ws::wavepacket::default_grid, py::arg("params"),
          py::arg("n") = 4096, py::arg("halfwidths") = 8.0);

    m.def("exact_detector_density",
          py::overload_cast<const ws::ExperimentParams&>(
              &ws::propagation::exact_detector_density),
          py::arg("params"));
    m.def("exact_detector_density",
          py::overload_cast<const ws::ExperimentParams&,
                            const std::vector<double>&>(
              &ws::propagation::exact_detector_density),
          py::arg("params"), py::arg("z_grid"));
    m.def("exact_selection_amplitude",
          &ws::propagation::exact_selection_amplitude, py::arg("params"));
    m.def("truncated_expansion_amplitude",
          &ws::propagation::truncated_expansion_amplitude, py::arg("params"),
          py::arg("order"));

    py::class_<ws::propagation::InequalityRow>(m, "InequalityRow")
        .def_readonly("order", &ws::propagation::InequalityRow::order)
        .def_readonly("versus_overlap",
                      &ws::propagation::InequalityRow::versus_overlap)
        .def_readonly("versus_first_order",
                      &ws::propagation::InequalityRow::versus_first_order)
        .def_readonly("holds", &ws::propagation::InequalityRow::holds);
    py::class_<ws::propagation::InequalityReport>(m, "InequalityReport")
        .def_readonly("limit", &ws::propagation::InequalityReport::limit)
        .def_readonly("threshold",
                      &ws::propagation::InequalityReport::threshold)
        .def_readonly("rows", &ws::propagation::InequalityReport::rows)
        .def_readonly("all_hold", &ws::propagation::InequalityReport::all_hold);
    m.def("check_inequalities", &ws::propagation::check_inequalities,
          py::arg("params"), py::arg("n_max"), py::arg("threshold") = 0.1);

    py::class_<ws::calibration::LimitScan>(m, "LimitScan")
        .def_readonly("L_values", &ws::calibration::LimitScan::L_values)
        .def_readonly("mean_exact", &ws::calibration::LimitScan::mean_exact)
        .def_readonly("mean_first_order",
                      &ws::calibration::LimitScan::mean_first_order)
        .def_readonly("deviation", &ws::calibration::LimitScan::deviation);
    m.attr("DEFAULT_DEVIATION_TOLERANCE") =
        ws::calibration::default_deviation_tolerance;
    m.def("limit_of", &ws::calibration::limit_of, py::arg("params"));
    m.def("limit_gradient_only", &ws::calibration::limit_gradient_only,
          py::arg("params"));
    m.def("gradient_for_limit", &ws::calibration::gradient_for_limit,
          py::arg("L"), py::arg("theta"), py::arg("sigma"), py::arg("delta_t"),
          py::arg("moment") = ws::constants().metastable_he_moment);
    m.def("default_geometry", &ws::calibration::default_geometry,
          py::arg("theta") = 2.9);
    m.def("default_limit_grid", &ws::calibration::default_limit_grid);
    m.def("mean_deviation_at", &ws::calibration::mean_deviation_at,
          py::arg("base"), py::arg("L"));
    m.def("scan_limits", &ws::calibration::scan_limits, py::arg("base"),
          py::arg("L_grid"));
    m.def("max_limit_from_scan", &ws::calibration::max_limit_from_scan,
          py::arg("scan"), py::arg("deviation_tolerance"));
    m.def("find_max_limit", &ws::calibration::find_max_limit, py::arg("base"),
          py::arg("deviation_tolerance") =
              ws::calibration::default_deviation_tolerance);

    py::class_<ws::planner::PlanResult>(m, "PlanResult")
        .def_readonly("displacement", &ws::planner::PlanResult::displacement)
        .def_readonly("limit", &ws::planner::PlanResult::limit)
        .def_readonly("evolved_width", &ws::planner::PlanResult::evolved_width)
        .def_readonly("post_selection_probability",
                      &ws::planner::PlanResult::post_selection_probability)
        .def_readonly("detector_pitch",
                      &ws::planner::PlanResult::detector_pitch)
        .def_readonly("margin", &ws::planner::PlanResult::margin)
        .def_readonly("resolvable", &ws::planner::PlanResult::resolvable);
    py::class_<ws::planner::Resolvability>(m, "Resolvability")
        .def_readonly("resolvable", &ws::planner::Resolvability::resolvable)
        .def_readonly("margin", &ws::planner::Resolvability::margin);
    py::class_<ws::planner::VelocityRow>(m, "VelocityRow")
        .def_readonly("velocity", &ws::planner::VelocityRow::velocity)
        .def_readonly("displacement", &ws::planner::VelocityRow::displacement)
        .def_readonly("evolved_width", &ws::planner::VelocityRow::evolved_width)
        .def_readonly("peak_density", &ws::planner::VelocityRow::peak_density);
    py::class_<ws::planner::ThetaRow>(m, "ThetaRow")
        .def_readonly("theta", &ws::planner::ThetaRow::theta)
        .def_readonly("displacement", &ws::planner::ThetaRow::displacement)
        .def_readonly("gradient", &ws::planner::ThetaRow::gradient)
        .def_readonly("limit", &ws::planner::ThetaRow::limit)
        .def_readonly("post_selection_probability",
                      &ws::planner::ThetaRow::post_selection_probability)
        .def_readonly("inequalities_hold",
                      &ws::planner::ThetaRow::inequalities_hold);

    m.attr("DEFAULT_DETECTOR_PITCH") = ws::planner::default_detector_pitch;
    m.def("displacement", &ws::planner::displacement, py::arg("params"),
          py::arg("L"));
    m.def("displacement_two_ways", &ws::planner::displacement_two_ways,
          py::arg("params"));
    m.def("resolvability", &ws::planner::resolvability, py::arg("plan"),
          py::arg("detector_pitch"));
    m.def("velocity_sweep", &ws::planner::velocity_sweep, py::arg("params"),
          py::arg("v_grid"), py::arg("L"));
    m.def("theta_sweep", &ws::planner::theta_sweep, py::arg("params"),
          py::arg("theta_grid"), py::arg("hold_L_fixed"));
    m.def("plan", &ws::planner::plan, py::arg("params"), py::arg("L"),
          py::arg("detector_pitch") = ws::planner::default_detector_pitch);
}
