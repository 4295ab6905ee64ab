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

#include "uqram/circuit.h"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "json.hpp"
#include "uqram/parallel.h"

namespace uqram {

McxGate::McxGate(std::vector<unsigned> pos, std::vector<unsigned> neg, unsigned tgt)
    : pos_controls(std::move(pos)), neg_controls(std::move(neg)), target(tgt) {
    std::sort(pos_controls.begin(), pos_controls.end());
    std::sort(neg_controls.begin(), neg_controls.end());
}

void McxGate::validate(unsigned n_qubits) const {
    std::vector<unsigned> all = pos_controls;
    all.insert(all.end(), neg_controls.begin(), neg_controls.end());
    all.push_back(target);
    std::sort(all.begin(), all.end());
    if (std::adjacent_find(all.begin(), all.end()) != all.end()) {
        throw std::invalid_argument("gate controls and target must be distinct qubits");
    }
    if (all.back() >= n_qubits) {
        throw std::invalid_argument("gate touches qubit " + std::to_string(all.back()) + " but circuit has " +
                                    std::to_string(n_qubits));
    }
}

void Circuit::append(McxGate gate) {
    std::sort(gate.pos_controls.begin(), gate.pos_controls.end());
    std::sort(gate.neg_controls.begin(), gate.neg_controls.end());
    gate.validate(n_qubits_);
    gates_.push_back(std::move(gate));
}

namespace {

// Address controls selecting addr: bit b set -> control on |1>, else on |0>.
void add_address_controls(const QramParams &params, std::uint64_t addr, std::vector<unsigned> &pos,
                          std::vector<unsigned> &neg) {
    for (unsigned b = 0; b < params.addr_qubits; b++) {
        ((addr >> b) & 1 ? pos : neg).push_back(address_qubit(params, b));
    }
}

struct GateMasks {
    std::uint64_t care;
    std::uint64_t want;
    std::uint64_t flip;
};

GateMasks masks_of(const McxGate &gate) {
    GateMasks m{0, 0, std::uint64_t{1} << gate.target};
    for (unsigned q : gate.pos_controls) {
        m.care |= std::uint64_t{1} << q;
        m.want |= std::uint64_t{1} << q;
    }
    for (unsigned q : gate.neg_controls) {
        m.care |= std::uint64_t{1} << q;
    }
    return m;
}

}  // namespace

Circuit decompose_qram(const QramParams &params) {
    Circuit c(params.total_qubits);
    for (std::uint64_t a = 0; a < params.n_addresses; a++) {
        for (unsigned j = 0; j < params.word_bits; j++) {
            std::vector<unsigned> pos, neg;
            add_address_controls(params, a, pos, neg);
            pos.push_back(memory_qubit(params, a, j));
            c.append(McxGate(std::move(pos), std::move(neg), output_qubit(params, j)));
        }
    }
    return c;
}

Circuit decompose_qrom(const QramParams &params, const MemoryConfig &data) {
    validate_memory(params, data);
    Circuit c(params.addr_qubits + params.out_qubits);
    for (std::uint64_t a = 0; a < params.n_addresses; a++) {
        for (unsigned j = 0; j < params.word_bits; j++) {
            if (((data.words[a] >> j) & 1) == 0) {
                continue;
            }
            std::vector<unsigned> pos, neg;
            add_address_controls(params, a, pos, neg);
            c.append(McxGate(std::move(pos), std::move(neg), output_qubit(params, j)));
        }
    }
    return c;
}

PermutationTable gate_to_permutation(const McxGate &gate, unsigned n_qubits) {
    if (n_qubits > kAbsoluteMaxQubits) {
        throw std::length_error("too many qubits for a permutation table");
    }
    gate.validate(n_qubits);
    GateMasks m = masks_of(gate);
    std::vector<std::uint64_t> targets(std::uint64_t{1} << n_qubits);
    for (std::uint64_t i = 0; i < targets.size(); i++) {
        targets[i] = (i & m.care) == m.want ? i ^ m.flip : i;
    }
    return PermutationTable(std::move(targets));
}

PermutationTable compose(const Circuit &circuit, unsigned max_qubits) {
    if (circuit.n_qubits() > std::min(max_qubits, kAbsoluteMaxQubits)) {
        throw std::length_error("circuit on " + std::to_string(circuit.n_qubits()) + " qubits exceeds the " +
                                std::to_string(max_qubits) + "-qubit cap");
    }
    std::vector<GateMasks> masks;
    masks.reserve(circuit.size());
    for (const auto &g : circuit.gates()) {
        masks.push_back(masks_of(g));
    }
    std::vector<std::uint64_t> targets(std::uint64_t{1} << circuit.n_qubits());
    // Each basis state's trajectory through the gate list is independent.
    parallel_for(targets.size(), [&](std::uint64_t begin, std::uint64_t end) {
        for (std::uint64_t i = begin; i < end; i++) {
            std::uint64_t s = i;
            for (const auto &m : masks) {
                if ((s & m.care) == m.want) {
                    s ^= m.flip;
                }
            }
            targets[i] = s;
        }
    });
    return PermutationTable(std::move(targets));
}

CircuitFormat parse_circuit_format(std::string_view name) {
    if (name == "json") {
        return CircuitFormat::kJson;
    }
    if (name == "qasm") {
        return CircuitFormat::kQasm;
    }
    throw std::invalid_argument("unknown circuit format '" + std::string(name) + "' (expected json or qasm)");
}

namespace {

std::string to_json(const Circuit &circuit) {
    nlohmann::json gates = nlohmann::json::array();
    for (const auto &g : circuit.gates()) {
        gates.push_back({{"pos", g.pos_controls}, {"neg", g.neg_controls}, {"target", g.target}});
    }
    nlohmann::json j{{"n_qubits", circuit.n_qubits()}, {"gates", std::move(gates)}};
    return j.dump(2) + "\n";
}

// Negative controls become X conjugations around a positively controlled X.
std::string to_qasm(const Circuit &circuit) {
    std::ostringstream out;
    out << "OPENQASM 3.0;\n";
    out << "include \"stdgates.inc\";\n";
    out << "qubit[" << circuit.n_qubits() << "] q;\n";
    for (const auto &g : circuit.gates()) {
        out << "\n";
        for (unsigned q : g.neg_controls) {
            out << "x q[" << q << "];\n";
        }
        std::vector<unsigned> controls = g.pos_controls;
        controls.insert(controls.end(), g.neg_controls.begin(), g.neg_controls.end());
        std::sort(controls.begin(), controls.end());
        if (controls.empty()) {
            out << "x q[" << g.target << "];\n";
        } else {
            out << "ctrl(" << controls.size() << ") @ x ";
            for (unsigned q : controls) {
                out << "q[" << q << "], ";
            }
            out << "q[" << g.target << "];\n";
        }
        for (unsigned q : g.neg_controls) {
            out << "x q[" << q << "];\n";
        }
    }
    return out.str();
}

}  // namespace

std::string export_circuit(const Circuit &circuit, CircuitFormat format) {
    switch (format) {
        case CircuitFormat::kJson:
            return to_json(circuit);
        case CircuitFormat::kQasm:
            return to_qasm(circuit);
    }
    throw std::invalid_argument("unknown circuit format");
}

std::string export_circuit(const Circuit &circuit, std::string_view format) {
    return export_circuit(circuit, parse_circuit_format(format));
}

Circuit parse_circuit_json(const std::string &text) {
    auto j = nlohmann::json::parse(text);
    Circuit c(j.at("n_qubits").get<unsigned>());
    for (const auto &g : j.at("gates")) {
        c.append(McxGate(g.at("pos").get<std::vector<unsigned>>(), g.at("neg").get<std::vector<unsigned>>(),
                         g.at("target").get<unsigned>()));
    }
    return c;
}

GateCountReport gate_count_report(const QramParams &params) {
    if (2 * params.total_qubits >= 64) {
        throw std::overflow_error("generic gate estimate 4^n overflows 64 bits");
    }
    GateCountReport r;
    r.universal = params.n_addresses * params.word_bits;
    r.qrom_max = params.n_addresses * params.word_bits;
    r.generic_estimate = std::uint64_t{1} << (2 * params.total_qubits);
    return r;
}

}  // namespace uqram
