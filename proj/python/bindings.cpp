#include <pybind11/complex.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "inls/analysis.hpp"
#include "inls/experiments.hpp"

namespace py = pybind11;
using namespace inls;

PYBIND11_MODULE(_core, m) {
    m.doc() = "1-D defocusing inhomogeneous NLS laboratory (odd data, sine-spectral)";

    py::class_<Grid, GridPtr>(m, "Grid")
        .def_readonly("L", &Grid::L)
        .def_readonly("N", &Grid::N)
        .def_readonly("dx", &Grid::dx)
        .def_readonly("nodes", &Grid::nodes)
        .def_readonly("wavenumbers", &Grid::wavenumbers);

    py::class_<PhysParams>(m, "PhysParams")
        .def_readonly("alpha", &PhysParams::alpha)
        .def_readonly("b", &PhysParams::b)
        .def_readonly("s_c", &PhysParams::s_c)
        .def_readonly("mass_critical_alpha", &PhysParams::mass_critical_alpha)
        .def_readonly("scattering_warning", &PhysParams::scattering_warning);

    py::class_<State>(m, "State")
        .def_readonly("t", &State::t)
        .def_readonly("grid", &State::grid)
        .def_readwrite("values", &State::values);

    py::enum_<InitialKind>(m, "InitialKind")
        .value("odd_gaussian", InitialKind::odd_gaussian)
        .value("sine_packet", InitialKind::sine_packet)
        .value("sine_mode", InitialKind::sine_mode)
        .value("file", InitialKind::file);

    py::class_<InitialSpec>(m, "InitialSpec")
        .def(py::init<>())
        .def_readwrite("kind", &InitialSpec::kind)
        .def_readwrite("amplitude", &InitialSpec::amplitude)
        .def_readwrite("width", &InitialSpec::width)
        .def_readwrite("center", &InitialSpec::center)
        .def_readwrite("wavenumber", &InitialSpec::wavenumber)
        .def_readwrite("mode", &InitialSpec::mode)
        .def_readwrite("path", &InitialSpec::path);

    py::class_<Schedule>(m, "Schedule")
        .def(py::init<>())
        .def_readwrite("dt", &Schedule::dt)
        .def_readwrite("t_max", &Schedule::t_max)
        .def_readwrite("output_every", &Schedule::output_every)
        .def_readwrite("checkpoint_every", &Schedule::checkpoint_every);

    py::class_<ObservableSample>(m, "ObservableSample")
        .def_readonly("t", &ObservableSample::t)
        .def_readonly("mass", &ObservableSample::mass)
        .def_readonly("e_kin", &ObservableSample::e_kin)
        .def_readonly("e_pot", &ObservableSample::e_pot)
        .def_readonly("e_total", &ObservableSample::e_total)
        .def_readonly("h1", &ObservableSample::h1)
        .def_readonly("hsc", &ObservableSample::hsc)
        .def_readonly("l2_local", &ObservableSample::l2_local)
        .def_readonly("linf_local", &ObservableSample::linf_local)
        .def_readonly("morawetz", &ObservableSample::morawetz);

    py::class_<Trajectory>(m, "Trajectory")
        .def_readonly("samples", &Trajectory::samples)
        .def_readonly("states", &Trajectory::states)
        .def_readonly("wall_alarm", &Trajectory::wall_alarm)
        .def_readonly("origin_limited", &Trajectory::origin_limited);

    py::class_<HardyReport>(m, "HardyReport")
        .def_readonly("p", &HardyReport::p)
        .def_readonly("lhs", &HardyReport::lhs)
        .def_readonly("rhs", &HardyReport::rhs)
        .def_readonly("sharp_constant", &HardyReport::sharp_constant)
        .def_readonly("ratio", &HardyReport::ratio);

    py::class_<AdmissiblePair>(m, "AdmissiblePair")
        .def_readonly("s", &AdmissiblePair::s)
        .def_readonly("q", &AdmissiblePair::q)
        .def_readonly("r", &AdmissiblePair::r);

    m.def("make_grid", &make_grid, py::arg("L"), py::arg("N"));
    m.def("make_params", &make_params, py::arg("alpha"), py::arg("b"));
    m.def("sample_initial", &sample_initial, py::arg("spec"), py::arg("grid"));
    m.def("free_propagate", py::overload_cast<const State&, double>(&free_propagate),
          py::arg("state"), py::arg("dt"));
    m.def("strang_step",
          py::overload_cast<const State&, double, const PhysParams&>(&strang_step),
          py::arg("state"), py::arg("dt"), py::arg("params"));
    m.def(
        "evolve",
        [](const State& u0, const Schedule& sch, const PhysParams& params,
           bool linear_only, int store_state_every) {
            EvolveOptions opts;
            opts.linear_only = linear_only;
            opts.store_state_every = store_state_every;
            return evolve(u0, sch, params, opts);
        },
        py::arg("state"), py::arg("schedule"), py::arg("params"),
        py::arg("linear_only") = false, py::arg("store_state_every") = 0);
    m.def("mass", &mass);
    m.def("energy", [](const State& st, const PhysParams& p) {
        EnergyParts e = energy(st, p);
        return py::make_tuple(e.kinetic, e.potential, e.total);
    });
    m.def(
        "sobolev_norm",
        [](const State& st, double s, const std::string& kind) {
            return sobolev_norm(st, s,
                                kind == "homogeneous" ? NormKind::homogeneous
                                                      : NormKind::inhomogeneous);
        },
        py::arg("state"), py::arg("s"), py::arg("kind") = "homogeneous");
    m.def("hardy_ratio",
          py::overload_cast<const State&, double>(&hardy_ratio), py::arg("state"),
          py::arg("p"));
    m.def("admissible_pairs", &admissible_pairs, py::arg("s"), py::arg("r_values"));
    m.def("scale_state", &scale_state, py::arg("state"), py::arg("lambda_"),
          py::arg("params"));
    m.def("morawetz", &morawetz);
    m.def("save_checkpoint", &save_checkpoint);
    m.def("load_checkpoint", &load_checkpoint);
}
