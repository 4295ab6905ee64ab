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

#ifndef UQRAM_CIRCUIT_H_
#define UQRAM_CIRCUIT_H_

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "uqram/permutation.h"
#include "uqram/registers.h"

namespace uqram {

/// Multi-controlled X. Fires when every pos control is |1> and every neg
/// control is |0>, flipping the target. Control lists are kept sorted.
struct McxGate {
    std::vector<unsigned> pos_controls;
    std::vector<unsigned> neg_controls;
    unsigned target = 0;

    McxGate() = default;
    McxGate(std::vector<unsigned> pos, std::vector<unsigned> neg, unsigned tgt);

    size_t num_controls() const { return pos_controls.size() + neg_controls.size(); }
    /// Throws std::invalid_argument on overlapping or out-of-range qubits.
    void validate(unsigned n_qubits) const;

    bool operator==(const McxGate &) const = default;
};

class Circuit {
   public:
    explicit Circuit(unsigned n_qubits = 0) : n_qubits_(n_qubits) {}

    unsigned n_qubits() const { return n_qubits_; }
    const std::vector<McxGate> &gates() const { return gates_; }
    size_t size() const { return gates_.size(); }

    void append(McxGate gate);

    bool operator==(const Circuit &) const = default;

   private:
    unsigned n_qubits_;
    std::vector<McxGate> gates_;
};

/// The data-independent decomposition: one C^{log2 N + 1}X per (address,
/// bit), ordered address-major.
Circuit decompose_qram(const QramParams &params);

/// The data-dependent baseline on address + output qubits only: a gate for
/// each set data bit. Qubit numbering matches the low qubits of the full layout.
Circuit decompose_qrom(const QramParams &params, const MemoryConfig &data);

PermutationTable gate_to_permutation(const McxGate &gate, unsigned n_qubits);

/// Applies gates in order (first gate acts first). Throws std::length_error
/// above max_qubits.
PermutationTable compose(const Circuit &circuit, unsigned max_qubits = kDefaultMaxQubits);

enum class CircuitFormat { kJson, kQasm };

CircuitFormat parse_circuit_format(std::string_view name);
std::string export_circuit(const Circuit &circuit, CircuitFormat format);
std::string export_circuit(const Circuit &circuit, std::string_view format);
Circuit parse_circuit_json(const std::string &text);

struct GateCountReport {
    std::uint64_t universal = 0;
    std::uint64_t qrom_max = 0;
    /// 4^n: order-of-magnitude gate count for synthesizing a generic n-qubit
    /// unitary. An estimate, not a synthesis result.
    std::uint64_t generic_estimate = 0;
};

GateCountReport gate_count_report(const QramParams &params);

}  // namespace uqram

#endif  // UQRAM_CIRCUIT_H_
