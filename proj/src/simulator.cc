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

#include "uqram/simulator.h"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <stdexcept>

#include "uqram/parallel.h"

namespace uqram {
namespace {

std::uint64_t bit_mask(std::span<const unsigned> qubits, unsigned n_qubits) {
    std::uint64_t m = 0;
    for (unsigned q : qubits) {
        if (q >= n_qubits) {
            throw std::out_of_range("qubit " + std::to_string(q) + " out of range");
        }
        m |= std::uint64_t{1} << q;
    }
    return m;
}

}  // namespace

StateVector StateVector::basis(unsigned n_qubits, std::uint64_t index) {
    if (n_qubits > kAbsoluteMaxQubits) {
        throw std::length_error("too many qubits for a dense statevector");
    }
    std::uint64_t dim = std::uint64_t{1} << n_qubits;
    if (index >= dim) {
        throw std::out_of_range("basis index " + std::to_string(index) + " out of range");
    }
    std::vector<Amplitude> amps(dim);
    amps[index] = 1.0;
    return StateVector(n_qubits, std::move(amps));
}

double StateVector::norm_squared() const {
    double s = 0.0;
    for (const auto &a : amps_) {
        s += std::norm(a);
    }
    return s;
}

void StateVector::apply_permutation(const PermutationTable &table) {
    if (table.dim() != dim()) {
        throw std::invalid_argument("permutation dimension does not match state");
    }
    std::vector<Amplitude> next(dim());
    auto t = table.targets();
    parallel_for(dim(), [&](std::uint64_t begin, std::uint64_t end) {
        for (std::uint64_t i = begin; i < end; i++) {
            next[t[i]] = amps_[i];
        }
    });
    amps_.swap(next);
}

void StateVector::apply_h(unsigned qubit) {
    if (qubit >= n_qubits_) {
        throw std::out_of_range("qubit " + std::to_string(qubit) + " out of range");
    }
    const double r = std::numbers::sqrt2 / 2;
    const std::uint64_t stride = std::uint64_t{1} << qubit;
    // Butterfly k pairs (lo, lo | stride) where lo has the qubit bit clear.
    parallel_for(dim() / 2, [&](std::uint64_t begin, std::uint64_t end) {
        for (std::uint64_t k = begin; k < end; k++) {
            std::uint64_t lo = ((k & ~(stride - 1)) << 1) | (k & (stride - 1));
            std::uint64_t hi = lo | stride;
            Amplitude a = amps_[lo];
            Amplitude b = amps_[hi];
            amps_[lo] = r * (a + b);
            amps_[hi] = r * (a - b);
        }
    });
}

void StateVector::apply_phase_flip(std::span<const unsigned> pos_controls, std::span<const unsigned> neg_controls) {
    std::uint64_t pos = bit_mask(pos_controls, n_qubits_);
    std::uint64_t neg = bit_mask(neg_controls, n_qubits_);
    if (pos & neg) {
        throw std::invalid_argument("phase flip control sets overlap");
    }
    const std::uint64_t care = pos | neg;
    parallel_for(dim(), [&](std::uint64_t begin, std::uint64_t end) {
        for (std::uint64_t i = begin; i < end; i++) {
            if ((i & care) == pos) {
                amps_[i] = -amps_[i];
            }
        }
    });
}

void StateVector::scale(Amplitude factor) {
    for (auto &a : amps_) {
        a *= factor;
    }
}

GroverOracle::GroverOracle(const QramParams &params, std::uint64_t target_value)
    : GroverOracle(params, target_value, std::make_shared<const PermutationTable>(build_permutation(params))) {}

GroverOracle::GroverOracle(const QramParams &params, std::uint64_t target_value,
                           std::shared_ptr<const PermutationTable> qram)
    : params_(params), target_value_(target_value), qram_(std::move(qram)) {
    if (target_value > params.word_mask()) {
        throw std::invalid_argument("target value " + std::to_string(target_value) + " does not fit in " +
                                    std::to_string(params.word_bits) + " bits");
    }
    if (!qram_ || qram_->dim() != params.hilbert_dim()) {
        throw std::invalid_argument("QRAM table does not match parameters");
    }
    if (!is_involution(*qram_)) {
        throw std::logic_error("QRAM table is not self-inverse; cannot reuse it for uncomputation");
    }
    for (unsigned j = 0; j < params.word_bits; j++) {
        ((target_value >> j) & 1 ? pos_ : neg_).push_back(output_qubit(params, j));
    }
}

void GroverOracle::apply(StateVector &state) const {
    state.apply_permutation(*qram_);
    state.apply_phase_flip(pos_, neg_);
    state.apply_permutation(*qram_);
}

GroverDiffusion::GroverDiffusion(const QramParams &params) : params_(params) {
    for (unsigned b = 0; b < params.addr_qubits; b++) {
        address_qubits_.push_back(address_qubit(params, b));
    }
}

void GroverDiffusion::apply(StateVector &state) const {
    // H (I - 2|0><0|) H = I - 2|s><s|; the trailing -1 gives 2|s><s| - I.
    for (unsigned q : address_qubits_) {
        state.apply_h(q);
    }
    state.apply_phase_flip({}, address_qubits_);
    for (unsigned q : address_qubits_) {
        state.apply_h(q);
    }
    state.scale(-1.0);
}

AddressDistribution address_marginals(const QramParams &params, const StateVector &state) {
    if (state.dim() != params.hilbert_dim()) {
        throw std::invalid_argument("state dimension does not match parameters");
    }
    AddressDistribution dist;
    dist.probs.assign(params.n_addresses, 0.0);
    auto amps = state.amplitudes();
    for (std::uint64_t i = 0; i < amps.size(); i++) {
        dist.probs[(i >> params.word_bits) & (params.n_addresses - 1)] += std::norm(amps[i]);
    }
    return dist;
}

AddressDistribution run_grover(const QramParams &params, const MemoryConfig &data, std::uint64_t target_value,
                               std::uint64_t iterations) {
    validate_memory(params, data);
    // Memory written by bit flips from |0...0>, i.e. straight into the basis state.
    StateVector state = StateVector::basis(params.total_qubits, encode_basis(params, data, 0, 0).value);
    for (unsigned b = 0; b < params.addr_qubits; b++) {
        state.apply_h(address_qubit(params, b));
    }
    GroverOracle oracle(params, target_value);
    GroverDiffusion diffusion(params);
    for (std::uint64_t k = 0; k < iterations; k++) {
        oracle.apply(state);
        diffusion.apply(state);
    }
    return address_marginals(params, state);
}

std::uint64_t optimal_iterations(std::uint64_t n_addresses, std::uint64_t n_marked) {
    if (n_marked == 0 || n_marked > n_addresses) {
        throw std::invalid_argument("marked count must be in [1, N]");
    }
    if (n_marked == n_addresses) {
        return 0;
    }
    double k = std::floor(std::numbers::pi / 4 *
                          std::sqrt(static_cast<double>(n_addresses) / static_cast<double>(n_marked)));
    return std::max<std::uint64_t>(1, static_cast<std::uint64_t>(k));
}

std::string distribution_to_csv(const AddressDistribution &dist) {
    std::string out = "address,probability\n";
    char buf[64];
    for (size_t a = 0; a < dist.probs.size(); a++) {
        std::snprintf(buf, sizeof buf, "%zu,%.12g\n", a, dist.probs[a]);
        out += buf;
    }
    return out;
}

}  // namespace uqram
