// Copyright 2026 The QVision Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include "qvision/config.hpp"
#include "qvision/cortex_v1.hpp"
#include "qvision/errors.hpp"
#include "qvision/phototransduction.hpp"
#include "qvision/quantum_core.hpp"
#include "qvision/quantum_encoding.hpp"
#include "qvision/scenarios.hpp"
#include "qvision/visual_pathways.hpp"

namespace py = pybind11;
using namespace qvision;

namespace {

py::dict artifacts_to_dict(const Artifacts &artifacts) {
    py::dict out;
    for (const auto &[name, bytes] : artifacts) {
        out[py::str(name)] = py::bytes(bytes);
    }
    return out;
}

}  // namespace

PYBIND11_MODULE(_qvision, m) {
    m.doc() = "Quantum-teleportation model of the visual pathway";

    py::register_exception<ConfigError>(m, "ConfigError", PyExc_ValueError);
    py::register_exception<IoError>(m, "IoError", PyExc_OSError);

    py::class_<Rng>(m, "Rng")
        .def(py::init<std::uint64_t>(), py::arg("seed"))
        .def("uniform", &Rng::uniform)
        .def_static("derive", &Rng::derive, py::arg("seed"), py::arg("stream"));

    py::class_<Qubit>(m, "Qubit")
        .def(py::init<Complex, Complex>(), py::arg("omega0"), py::arg("omega1"))
        .def_static("zero", &Qubit::zero)
        .def_static("one", &Qubit::one)
        .def_property_readonly("omega0", &Qubit::omega0)
        .def_property_readonly("omega1", &Qubit::omega1)
        .def("prob0", &Qubit::prob0)
        .def("prob1", &Qubit::prob1)
        .def("__repr__", [](const Qubit &q) {
            return "Qubit(" + py::repr(py::cast(q.omega0())).cast<std::string>() + ", " +
                   py::repr(py::cast(q.omega1())).cast<std::string>() + ")";
        });

    py::enum_<BellOutcome>(m, "BellOutcome")
        .value("PsiPlus", BellOutcome::PsiPlus)
        .value("PsiMinus", BellOutcome::PsiMinus)
        .value("PhiPlus", BellOutcome::PhiPlus)
        .value("PhiMinus", BellOutcome::PhiMinus);

    m.def("make_epr", [] {
        StateVector s = make_epr();
        return std::vector<Complex>(s.amplitudes().begin(), s.amplitudes().end());
    });
    m.def(
        "teleport",
        [](const Qubit &q, Rng &rng) {
            TeleportResult r = teleport(q, rng);
            return py::make_tuple(r.outcome, r.output);
        },
        py::arg("state"), py::arg("rng"));
    m.def("fidelity", &fidelity, py::arg("a"), py::arg("b"));
    m.def("random_qubit", &random_qubit, py::arg("rng"));

    m.def("cgmp_hydrolysis_rate", [](std::uint64_t n) { return cgmp_hydrolysis_rate(n); }, py::arg("photons"));
    m.def("membrane_potential", &membrane_potential, py::arg("intensity"));
    m.def("glutamate_release", &glutamate_release, py::arg("potential_mv"));

    py::enum_<GateKind>(m, "GateKind").value("Not", GateKind::Not).value("And", GateKind::And).value("Or", GateKind::Or);
    m.def(
        "gate_eval",
        [](GateKind kind, const std::vector<bool> &inputs) { return gate_eval(BoolGate(kind, inputs.size()), inputs); },
        py::arg("kind"), py::arg("inputs"));

    py::enum_<Eye>(m, "Eye").value("Left", Eye::Left).value("Right", Eye::Right);
    py::enum_<Hemiretina>(m, "Hemiretina").value("Nasal", Hemiretina::Nasal).value("Temporal", Hemiretina::Temporal);
    py::enum_<CellClass>(m, "CellClass").value("X", CellClass::X).value("Y", CellClass::Y).value("W", CellClass::W);
    m.def(
        "route_fiber",
        [](Eye eye, Hemiretina h, CellClass c) {
            LgnAssignment a = route_fiber(make_fiber(0, eye, h, 0.0, c));
            return py::make_tuple(std::string(to_string(a.side())), a.lamina(), std::string(to_string(a.division())));
        },
        py::arg("eye"), py::arg("hemiretina"), py::arg("cell_class"));

    m.def("precode", &precode, py::arg("potential_mv"));
    m.def("decode_potential", &decode_potential, py::arg("state"));
    m.def(
        "transfer",
        [](const Qubit &q, bool shielded, double elapsed_s, Rng &rng) {
            TransferResult r = transfer(TeleportChannel(0, 1, shielded, elapsed_s), q, rng);
            return py::make_tuple(r.received, r.outcome, r.fidelity);
        },
        py::arg("state"), py::arg("shielded"), py::arg("elapsed_s"), py::arg("rng"));

    m.def(
        "run_echo",
        [](const std::string &locus, double dt_s, double floor) {
            CollapseLocus l = locus == "retina" ? CollapseLocus::Retina : CollapseLocus::Cortex;
            if (locus != "retina" && locus != "cortex") {
                throw std::invalid_argument("locus must be 'retina' or 'cortex'");
            }
            EchoResult r = run_echo(EchoSetup::for_locus(l, dt_s, floor));
            return py::make_tuple(r.echo_amplitude, r.detected);
        },
        py::arg("locus"), py::arg("dt_s") = 1e-6, py::arg("floor") = 0.01);

    m.def(
        "gao_distinguish",
        [](double t_p, double t_c, double delta_min, std::optional<int> bit, Complex w0, Complex w1, Rng &rng) {
            GaoInput input = bit ? GaoInput{Definite{*bit}} : GaoInput{Superposition{w0, w1}};
            GaoReport r = gao_distinguish({t_p, t_c, delta_min}, input, rng);
            return py::make_tuple(std::string(to_string(r.label)), r.perceived_at, r.collapsed_to);
        },
        py::arg("t_p"), py::arg("t_c"), py::arg("delta_min"), py::arg("bit") = py::none(), py::arg("omega0") = 0.0,
        py::arg("omega1") = 0.0, py::arg("rng"));

    m.def(
        "run_scenario",
        [](const std::string &scenario, const std::string &config_text, std::optional<std::uint64_t> seed,
           std::optional<std::string> image) {
            auto s = parse_scenario(scenario);
            if (!s) {
                throw ConfigError("unknown scenario '" + scenario + "'");
            }
            ScenarioConfig cfg = ScenarioConfig::parse(*s, config_text);
            if (seed) {
                cfg.set_seed(*seed);
            }
            if (image) {
                cfg.set_input_image(*image);
            }
            return artifacts_to_dict(run_scenario(cfg));
        },
        py::arg("scenario"), py::arg("config") = "", py::arg("seed") = py::none(), py::arg("image") = py::none(),
        "Runs a scenario and returns {file name: bytes}.");
}
