// Copyright 2026 The uqram Authors
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
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "uqram/circuit.h"
#include "uqram/harness.h"
#include "uqram/permutation.h"
#include "uqram/registers.h"
#include "uqram/simulator.h"

namespace py = pybind11;
using namespace uqram;

namespace {

MemoryConfig to_memory(const QramParams &params, std::vector<std::uint64_t> words) {
    return make_memory(params, std::move(words));
}

py::array_t<std::uint64_t> targets_array(const PermutationTable &table) {
    auto t = table.targets();
    return py::array_t<std::uint64_t>(static_cast<py::ssize_t>(t.size()), t.data());
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Universal QRAM construction, decomposition, and verification.";

    py::register_exception<std::length_error>(m, "DimensionTooLarge", PyExc_ValueError);

    py::class_<QramParams>(m, "QramParams")
        .def_readonly("n_addresses", &QramParams::n_addresses)
        .def_readonly("word_bits", &QramParams::word_bits)
        .def_readonly("addr_qubits", &QramParams::addr_qubits)
        .def_readonly("out_qubits", &QramParams::out_qubits)
        .def_readonly("mem_qubits", &QramParams::mem_qubits)
        .def_readonly("total_qubits", &QramParams::total_qubits)
        .def_property_readonly("hilbert_dim", &QramParams::hilbert_dim)
        .def_property_readonly("block_size", &QramParams::block_size)
        .def_property_readonly("num_blocks", &QramParams::num_blocks)
        .def("__eq__", [](const QramParams &a, const QramParams &b) { return a == b; })
        .def("__repr__", [](const QramParams &p) {
            return "QramParams(n=" + std::to_string(p.n_addresses) + ", k=" + std::to_string(p.word_bits) + ")";
        });

    m.attr("DEFAULT_MAX_QUBITS") = kDefaultMaxQubits;
    m.def("make_params", &make_params, py::arg("n_addresses"), py::arg("word_bits"),
          py::arg("max_qubits") = kDefaultMaxQubits);

    m.def("parse_memory", [](const QramParams &p, const std::string &text) { return parse_memory(p, text).words; });
    m.def("memory_index", [](const QramParams &p, std::vector<std::uint64_t> words) {
        return memory_index(p, to_memory(p, std::move(words)));
    });
    m.def("encode_basis",
          [](const QramParams &p, std::vector<std::uint64_t> words, std::uint64_t addr, std::uint64_t out) {
              return encode_basis(p, to_memory(p, std::move(words)), addr, out).value;
          },
          py::arg("params"), py::arg("mem"), py::arg("addr"), py::arg("out"));
    m.def("decode_basis", [](const QramParams &p, std::uint64_t index) {
        auto t = decode_basis(p, BasisIndex{index});
        return py::make_tuple(t.mem.words, t.addr, t.out);
    });
    m.def("qram_map", [](const QramParams &p, std::uint64_t index) { return qram_map(p, BasisIndex{index}).value; });

    py::class_<PermutationTable>(m, "PermutationTable")
        .def(py::init([](std::vector<std::uint64_t> targets) { return PermutationTable(std::move(targets)); }))
        .def_static("identity", &PermutationTable::identity)
        .def_property_readonly("dim", &PermutationTable::dim)
        .def_property_readonly("targets", &targets_array)
        .def("__len__", &PermutationTable::dim)
        .def("__getitem__",
             [](const PermutationTable &t, std::uint64_t i) {
                 if (i >= t.dim()) {
                     throw py::index_error();
                 }
                 return t[i];
             })
        .def("__eq__", [](const PermutationTable &a, const PermutationTable &b) { return a == b; })
        .def("to_json", &permutation_to_json);

    m.def("build_permutation", &build_permutation, py::call_guard<py::gil_scoped_release>());
    m.def("build_block", [](const QramParams &p, std::vector<std::uint64_t> words) {
        return build_block(p, to_memory(p, std::move(words)));
    });
    m.def("is_permutation", &is_permutation);
    m.def("is_involution", &is_involution);
    m.def("verify_semantics", [](const QramParams &p, const PermutationTable &t) {
        auto r = verify_semantics(p, t);
        return py::dict(py::arg("checked") = r.checked, py::arg("mismatches") = r.mismatches);
    });
    m.def("unitarity_residual", &unitarity_residual);
    m.def("count_constraints", [](const QramParams &p, bool complete) {
        auto r = count_constraints(p, complete);
        return py::dict(py::arg("constrained_basis_count") = r.constrained_basis_count,
                        py::arg("unconstrained_basis_count") = r.unconstrained_basis_count,
                        py::arg("residual_real_params") = r.residual_real_params);
    }, py::arg("params"), py::arg("complete"));

    py::class_<McxGate>(m, "McxGate")
        .def(py::init<std::vector<unsigned>, std::vector<unsigned>, unsigned>(), py::arg("pos"), py::arg("neg"),
             py::arg("target"))
        .def_readonly("pos_controls", &McxGate::pos_controls)
        .def_readonly("neg_controls", &McxGate::neg_controls)
        .def_readonly("target", &McxGate::target)
        .def("__eq__", [](const McxGate &a, const McxGate &b) { return a == b; });

    py::class_<Circuit>(m, "Circuit")
        .def(py::init<unsigned>(), py::arg("n_qubits"))
        .def_property_readonly("n_qubits", &Circuit::n_qubits)
        .def_property_readonly("gates", &Circuit::gates)
        .def("append", &Circuit::append)
        .def("__len__", &Circuit::size)
        .def("__eq__", [](const Circuit &a, const Circuit &b) { return a == b; });

    m.def("decompose_qram", &decompose_qram);
    m.def("decompose_qrom", [](const QramParams &p, std::vector<std::uint64_t> words) {
        return decompose_qrom(p, to_memory(p, std::move(words)));
    });
    m.def("gate_to_permutation", &gate_to_permutation);
    m.def("compose", &compose, py::arg("circuit"), py::arg("max_qubits") = kDefaultMaxQubits,
          py::call_guard<py::gil_scoped_release>());
    m.def("export_circuit", py::overload_cast<const Circuit &, std::string_view>(&export_circuit),
          py::arg("circuit"), py::arg("format"));
    m.def("parse_circuit_json", &parse_circuit_json);
    m.def("gate_count_report", [](const QramParams &p) {
        auto r = gate_count_report(p);
        return py::dict(py::arg("universal") = r.universal, py::arg("qrom_max") = r.qrom_max,
                        py::arg("generic_estimate") = r.generic_estimate);
    });

    py::class_<StateVector>(m, "StateVector")
        .def_static("basis", &StateVector::basis)
        .def_property_readonly("n_qubits", &StateVector::n_qubits)
        .def_property_readonly("amplitudes",
                               [](const StateVector &s) {
                                   auto a = s.amplitudes();
                                   return py::array_t<Amplitude>(static_cast<py::ssize_t>(a.size()), a.data());
                               })
        .def("norm_squared", &StateVector::norm_squared)
        .def("apply_permutation", &StateVector::apply_permutation)
        .def("apply_h", &StateVector::apply_h)
        .def("apply_phase_flip",
             [](StateVector &s, std::vector<unsigned> pos, std::vector<unsigned> neg) {
                 s.apply_phase_flip(pos, neg);
             },
             py::arg("pos_controls"), py::arg("neg_controls"));

    m.def("run_grover",
          [](const QramParams &p, std::vector<std::uint64_t> data, std::uint64_t target, std::uint64_t iterations) {
              auto mem = to_memory(p, std::move(data));
              py::gil_scoped_release release;
              return run_grover(p, mem, target, iterations).probs;
          },
          py::arg("params"), py::arg("data"), py::arg("target_value"), py::arg("iterations"));
    m.def("optimal_iterations", &optimal_iterations);

    py::class_<VerificationRow>(m, "VerificationRow")
        .def_readonly("n_addresses", &VerificationRow::n_addresses)
        .def_readonly("word_bits", &VerificationRow::word_bits)
        .def_readonly("total_qubits", &VerificationRow::total_qubits)
        .def_readonly("hilbert_dim", &VerificationRow::hilbert_dim)
        .def_readonly("permutation_ok", &VerificationRow::permutation_ok)
        .def_readonly("involution_ok", &VerificationRow::involution_ok)
        .def_readonly("semantics_mismatches", &VerificationRow::semantics_mismatches)
        .def_readonly("composition_ok", &VerificationRow::composition_ok)
        .def_readonly("unitarity_residual", &VerificationRow::unitarity_residual)
        .def_readonly("seconds", &VerificationRow::seconds)
        .def_readonly("error", &VerificationRow::error)
        .def_property_readonly("passed", &VerificationRow::passed);

    m.def("default_verification_pairs", [] {
        std::vector<std::pair<std::uint64_t, unsigned>> out;
        for (auto p : default_verification_pairs()) {
            out.emplace_back(p.n, p.k);
        }
        return out;
    });
    m.def("run_verification_suite",
          [](const std::vector<std::pair<std::uint64_t, unsigned>> &pairs, unsigned max_qubits) {
              std::vector<QramPair> qp;
              for (auto [n, k] : pairs) {
                  qp.push_back({n, k});
              }
              py::gil_scoped_release release;
              return run_verification_suite(qp, max_qubits);
          },
          py::arg("pairs"), py::arg("max_qubits") = kDefaultMaxQubits);
    m.def("report_to_json", &report_to_json);
    m.def("run_qrom_equivalence", [](const QramParams &p, std::uint64_t trials, std::uint64_t seed) {
        auto r = run_qrom_equivalence(p, trials, seed);
        return py::dict(py::arg("configs_checked") = r.configs_checked, py::arg("failures") = r.failures,
                        py::arg("exhaustive") = r.exhaustive);
    }, py::arg("params"), py::arg("trials"), py::arg("seed") = 0);

#ifdef UQRAM_VERSION
    m.attr("__version__") = UQRAM_VERSION;
#else
    m.attr("__version__") = "dev";
#endif
}
