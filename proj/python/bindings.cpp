// Copyright 2026 The qdiscord Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <pybind11/complex.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <utility>

#include "qdiscord/bloch.hpp"
#include "qdiscord/choi.hpp"
#include "qdiscord/discord.hpp"
#include "qdiscord/errors.hpp"
#include "qdiscord/states.hpp"
#include "qdiscord/xstate.hpp"

namespace py = pybind11;
using namespace qdiscord;

namespace {

using ComplexArray = py::array_t<cplx, py::array::c_style | py::array::forcecast>;

template <std::size_t N>
CMat<N> to_cmat(const ComplexArray& arr) {
  if (arr.ndim() != 2 || arr.shape(0) != static_cast<py::ssize_t>(N) || arr.shape(1) != static_cast<py::ssize_t>(N))
    throw py::value_error("expected a " + std::to_string(N) + "x" + std::to_string(N) + " array");
  CMat<N> m;
  auto r = arr.unchecked<2>();
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j) m(i, j) = r(i, j);
  return m;
}

template <std::size_t N>
ComplexArray to_array(const CMat<N>& m) {
  ComplexArray arr({N, N});
  auto w = arr.mutable_unchecked<2>();
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j) w(i, j) = m(i, j);
  return arr;
}

DensityMatrix4 to_state(const ComplexArray& arr) { return DensityMatrix4::from_matrix(to_cmat<4>(arr)); }

Method parse_method(const std::string& name) {
  if (name == "stationary") return Method::stationary;
  if (name == "oracle") return Method::oracle;
  if (name == "xstate" || name == "xstate_analytic") return Method::xstate_analytic;
  throw py::value_error("unknown method '" + name + "'");
}

py::tuple angles_tuple(MeasurementAngles a) { return py::make_tuple(a.theta, a.phi); }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Two-qubit quantum discord";

  static py::exception<Error> base(m, "QDiscordError", PyExc_ValueError);
  py::register_exception<InvalidState>(m, "InvalidState", base.ptr());
  py::register_exception<SingularMarginal>(m, "SingularMarginal", base.ptr());
  py::register_exception<NotApplicable>(m, "NotApplicable", base.ptr());
  py::register_exception<DomainError>(m, "DomainError", base.ptr());
  py::register_exception<DegenerateOutcome>(m, "DegenerateOutcome", base.ptr());
  py::register_exception<ParseError>(m, "ParseError", base.ptr());

  py::class_<StationaryPoint>(m, "StationaryPoint")
      .def_property_readonly("theta", [](const StationaryPoint& p) { return p.angles.theta; })
      .def_property_readonly("phi", [](const StationaryPoint& p) { return p.angles.phi; })
      .def_readonly("objective", &StationaryPoint::objective)
      .def_readonly("grad_norm", &StationaryPoint::grad_norm)
      .def_property_readonly("cls", [](const StationaryPoint& p) { return to_string(p.cls); })
      .def("__repr__", [](const StationaryPoint& p) {
        return "StationaryPoint(cls=" + to_string(p.cls) + ", theta=" + std::to_string(p.angles.theta) +
               ", phi=" + std::to_string(p.angles.phi) + ", objective=" + std::to_string(p.objective) + ")";
      });

  py::class_<DiscordReport>(m, "DiscordReport")
      .def_readonly("mutual_info", &DiscordReport::mutual_info)
      .def_readonly("classical_corr", &DiscordReport::classical_corr)
      .def_readonly("discord", &DiscordReport::discord)
      .def_property_readonly("optimal", [](const DiscordReport& r) { return angles_tuple(r.optimal); })
      .def_readonly("stationary_points", &DiscordReport::stationary_points)
      .def_property_readonly("method", [](const DiscordReport& r) { return to_string(r.method); })
      .def_readonly("singular_marginal", &DiscordReport::singular_marginal)
      .def_readonly("fell_back", &DiscordReport::fell_back)
      .def_readonly("oracle_delta", &DiscordReport::oracle_delta)
      .def("__repr__", [](const DiscordReport& r) {
        return "DiscordReport(I=" + std::to_string(r.mutual_info) + ", C=" + std::to_string(r.classical_corr) +
               ", Q=" + std::to_string(r.discord) + ", method=" + to_string(r.method) + ")";
      });

  m.def(
      "discord",
      [](const ComplexArray& rho, const std::string& method, bool verify, bool allow_fallback,
         std::pair<int, int> oracle_grid, int threads) {
        DiscordOptions o;
        o.method = parse_method(method);
        o.verify = verify;
        o.allow_fallback = allow_fallback;
        o.oracle_theta = oracle_grid.first;
        o.oracle_phi = oracle_grid.second;
        o.solver.threads = threads;
        const DensityMatrix4 state = to_state(rho);
        py::gil_scoped_release release;
        return discord(state, o);
      },
      py::arg("rho"), py::arg("method") = "stationary", py::arg("verify") = false, py::arg("allow_fallback") = false,
      py::arg("oracle_grid") = std::pair<int, int>{64, 128}, py::arg("threads") = 1);

  m.def("mutual_information", [](const ComplexArray& rho) { return mutual_information(to_state(rho)); });
  m.def(
      "conditional_entropy",
      [](const ComplexArray& rho, double theta, double phi) {
        return conditional_entropy_direct(to_state(rho), {theta, phi});
      },
      py::arg("rho"), py::arg("theta"), py::arg("phi"));
  m.def(
      "grid_oracle",
      [](const ComplexArray& rho, int n_theta, int n_phi, int threads) {
        const OracleResult r = grid_oracle(to_state(rho), n_theta, n_phi, threads);
        return py::make_tuple(r.classical_corr, angles_tuple(r.best));
      },
      py::arg("rho"), py::arg("n_theta") = 64, py::arg("n_phi") = 128, py::arg("threads") = 1);

  m.def(
      "decompose",
      [](const ComplexArray& rho) {
        const CJDecomposition d = decompose(to_state(rho));
        const AffineChannel ch = affine_from_kraus(d.kraus);
        py::list kraus;
        for (const auto& k : d.kraus.operators) kraus.append(to_array(k));
        py::dict out;
        out["gamma"] = d.gamma;
        out["basis_rotation"] = to_array(d.basis_rotation);
        out["kraus"] = kraus;
        out["eta"] = ch.eta;
        out["c"] = py::make_tuple(ch.c.x, ch.c.y, ch.c.z);
        out["completeness_residual"] = d.kraus.completeness_residual();
        out["reconstructed"] = to_array(reconstruct(d).matrix());
        return out;
      },
      py::arg("rho"));

  m.def(
      "stationary_points",
      [](const ComplexArray& rho, int threads) {
        const CJDecomposition d = decompose(to_state(rho));
        SolverOptions o;
        o.threads = threads;
        auto pts = find_stationary_points(affine_from_kraus(d.kraus), d.gamma, o);
        for (auto& p : pts) p.angles = fold_angles(to_original_frame(d.basis_rotation, p.angles));
        return pts;
      },
      py::arg("rho"), py::arg("threads") = 1);

  m.def("is_x_state", [](const ComplexArray& rho) { return is_x_state(to_state(rho)); });
  m.def("H_func", &H_func, py::arg("x"), py::arg("k"));
  m.def("G_func", &G_func, py::arg("x"), py::arg("k"));
  m.def("binary_entropy", &binary_entropy, py::arg("p"));

  m.def("counterexample_state", [] { return to_array(counterexample_state().matrix()); });
  m.def("counterexample_state_printed", [] { return to_array(counterexample_state_printed().matrix()); });
  m.def("bell_diagonal", [](double x, double y, double z) { return to_array(bell_diagonal(x, y, z).matrix()); });
  m.def("werner", [](double p) { return to_array(werner(p).matrix()); });
  m.def(
      "x_state",
      [](double r11, double r22, double r33, double r44, cplx r14, cplx r23) {
        return to_array(x_state(r11, r22, r33, r44, r14, r23).matrix());
      },
      py::arg("r11"), py::arg("r22"), py::arg("r33"), py::arg("r44"), py::arg("r14"), py::arg("r23"));
  m.def(
      "random_state", [](std::uint64_t seed, int rank) { return to_array(random_state(seed, rank).matrix()); },
      py::arg("seed"), py::arg("rank") = 4);
  m.def("named_state", [](const std::string& spec) { return to_array(resolve_named_state(spec).rho.matrix()); });
  m.def("parse_density_matrix", [](const std::string& text) {
    return to_array(parse_density_matrix(text).rho.matrix());
  });
  m.def("serialize_density_matrix",
        [](const ComplexArray& rho) { return serialize_density_matrix(to_state(rho)); });
}
