// Copyright 2026 The superactivation-sim Authors
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

#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "superact/protocol.hpp"
#include "superact/report.hpp"

namespace py = pybind11;
using namespace superact;

namespace {

SystemLayout layout_from_pairs(const std::vector<std::pair<std::string, Eigen::Index>>& fs) {
    std::vector<Factor> factors;
    factors.reserve(fs.size());
    for (const auto& [label, dim] : fs) factors.push_back({label, dim});
    return SystemLayout(std::move(factors));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Numerical demonstration of quantum channel capacity superactivation";
    m.attr("__version__") = kVersion;

    py::class_<SystemLayout>(m, "SystemLayout")
        .def(py::init(&layout_from_pairs), py::arg("factors"))
        .def("total_dim", &SystemLayout::total_dim)
        .def("__eq__", &SystemLayout::operator==);

    py::class_<PureState>(m, "PureState")
        .def(py::init<CVec, SystemLayout>(), py::arg("amplitudes"), py::arg("layout"))
        .def_readonly("amplitudes", &PureState::amplitudes)
        .def_readonly("layout", &PureState::layout)
        .def("projector", &PureState::projector);

    py::class_<DensityMatrix>(m, "DensityMatrix")
        .def(py::init<CMat, SystemLayout>(), py::arg("matrix"), py::arg("layout"))
        .def_readonly("matrix", &DensityMatrix::matrix)
        .def_readonly("layout", &DensityMatrix::layout)
        .def("dim", &DensityMatrix::dim);

    py::class_<KrausChannel>(m, "KrausChannel")
        .def(py::init<std::vector<CMat>>(), py::arg("kraus_ops"))
        .def_readonly("kraus_ops", &KrausChannel::kraus_ops)
        .def_readonly("in_dim", &KrausChannel::in_dim)
        .def_readonly("out_dim", &KrausChannel::out_dim);

    py::class_<EntropyReport>(m, "EntropyReport")
        .def_readonly("entropy_bits", &EntropyReport::entropy_bits)
        .def_readonly("spectrum", &EntropyReport::spectrum)
        .def_readonly("clipped_mass", &EntropyReport::clipped_mass);

    py::class_<CoherentInfoReport>(m, "CoherentInfoReport")
        .def_readonly("s_b", &CoherentInfoReport::s_b)
        .def_readonly("s_ab", &CoherentInfoReport::s_ab)
        .def_readonly("i_c", &CoherentInfoReport::i_c);

    py::class_<PptResult>(m, "PptResult")
        .def_readonly("is_ppt", &PptResult::is_ppt)
        .def_readonly("min_eigenvalue", &PptResult::min_eigenvalue);

    py::class_<Q1Result>(m, "Q1Result")
        .def_readonly("best_ic", &Q1Result::best_ic)
        .def_readonly("best_input", &Q1Result::best_input)
        .def_readonly("iterate_trace", &Q1Result::iterate_trace);

    py::class_<ProtocolReport>(m, "ProtocolReport")
        .def_readonly("d", &ProtocolReport::d)
        .def_readonly("p", &ProtocolReport::p)
        .def_readonly("fidelity_psi0", &ProtocolReport::fidelity_psi0)
        .def_readonly("i_c", &ProtocolReport::i_c)
        .def_readonly("branch_success", &ProtocolReport::branch_success)
        .def_readonly("branch_erased", &ProtocolReport::branch_erased)
        .def_readonly("ppt_bound_flags", &ProtocolReport::ppt_bound_flags)
        .def_property_readonly("final_ab", [](const ProtocolReport& r) {
            return r.final_ab ? py::cast(r.final_ab->matrix) : py::object(py::none());
        });

    // qmat
    m.def("kron", &kron, py::arg("a"), py::arg("b"));
    m.def(
        "partial_trace",
        [](const CMat& mat, const SystemLayout& lay, const std::vector<std::string>& keep) {
            return partial_trace(mat, lay, keep);
        },
        py::arg("m"), py::arg("layout"), py::arg("keep"));
    m.def("partial_transpose", &partial_transpose, py::arg("m"), py::arg("layout"),
          py::arg("transpose_on"));
    m.def("hermitian_eigenvalues", &hermitian_eigenvalues, py::arg("m"));
    m.def("trace_norm", &trace_norm, py::arg("m"));

    // states
    m.def("bell", &bell, py::arg("phase"));
    m.def("classically_correlated", &classically_correlated);
    m.def("hiding_flags", &hiding_flags, py::arg("d"));
    m.def("flagged_bell", &flagged_bell, py::arg("d"));
    m.def("twisted_private_state", &twisted_private_state, py::arg("shield"), py::arg("v"));
    m.def("fidelity_with_pure", &fidelity_with_pure, py::arg("rho"), py::arg("psi"));

    // channels
    m.def("erasure_channel", &erasure_channel, py::arg("p"), py::arg("d"));
    m.def("identity_channel", &identity_channel, py::arg("d"));
    m.def("apply_channel", &apply, py::arg("channel"), py::arg("rho"), py::arg("target"));
    m.def(
        "choi", [](const KrausChannel& ch) { return choi(ch).matrix; }, py::arg("channel"));
    m.def("is_ppt", &is_ppt, py::arg("rho"), py::arg("split"), py::arg("tol") = 1e-9);
    m.def("ppt_distinguishability_bound", &ppt_distinguishability_bound, py::arg("r0"),
          py::arg("r1"), py::arg("split"));

    // capacity
    m.def("von_neumann_entropy", &von_neumann_entropy, py::arg("rho"));
    m.def("coherent_information_state", &coherent_information_state, py::arg("rho"),
          py::arg("b_labels"));
    m.def("channel_coherent_information", &channel_coherent_information, py::arg("channel"),
          py::arg("input"));
    m.def("q1_search", &q1_search, py::arg("channel"), py::arg("restarts") = 8,
          py::arg("max_iters") = 200, py::arg("seed") = 42);

    // protocol
    m.def("run_protocol", &run_protocol, py::arg("d"), py::arg("p"));
    m.def("run_protocol_full_simulation", &run_protocol_full_simulation, py::arg("d"),
          py::arg("p"));
    m.def("untwist", &untwist, py::arg("rho"), py::arg("v"));
    m.def("sweep", &sweep, py::arg("d_values"), py::arg("p_values"));
}
