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

#ifndef UQRAM_SIMULATOR_H_
#define UQRAM_SIMULATOR_H_

#include <complex>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "uqram/permutation.h"
#include "uqram/registers.h"

namespace uqram {

using Amplitude = std::complex<double>;

/// Dense statevector over n qubits, qubit p = bit 2^p of the basis index.
class StateVector {
   public:
    static StateVector basis(unsigned n_qubits, std::uint64_t index);

    unsigned n_qubits() const { return n_qubits_; }
    std::uint64_t dim() const { return amps_.size(); }
    std::span<const Amplitude> amplitudes() const { return amps_; }
    Amplitude operator[](std::uint64_t i) const { return amps_[i]; }
    double norm_squared() const;

    /// new[targets[i]] = old[i].
    void apply_permutation(const PermutationTable &table);
    void apply_h(unsigned qubit);
    /// Negates amplitudes whose pos bits are all 1 and neg bits all 0.
    void apply_phase_flip(std::span<const unsigned> pos_controls, std::span<const unsigned> neg_controls);
    void scale(Amplitude factor);

   private:
    StateVector(unsigned n_qubits, std::vector<Amplitude> amps) : n_qubits_(n_qubits), amps_(std::move(amps)) {}

    unsigned n_qubits_;
    std::vector<Amplitude> amps_;
};

/// U_QRAM . U_check . U_QRAM on the full register. The second U_QRAM stands in
/// for its adjoint, which is checked to be the same operator at construction.
class GroverOracle {
   public:
    GroverOracle(const QramParams &params, std::uint64_t target_value);
    GroverOracle(const QramParams &params, std::uint64_t target_value,
                 std::shared_ptr<const PermutationTable> qram);

    void apply(StateVector &state) const;

    std::uint64_t target_value() const { return target_value_; }
    const PermutationTable &qram() const { return *qram_; }

   private:
    QramParams params_;
    std::uint64_t target_value_;
    std::shared_ptr<const PermutationTable> qram_;
    std::vector<unsigned> pos_;
    std::vector<unsigned> neg_;
};

/// 2|s><s| - I on the address register (identity elsewhere), with |s> the
/// uniform address superposition.
class GroverDiffusion {
   public:
    explicit GroverDiffusion(const QramParams &params);

    void apply(StateVector &state) const;

   private:
    QramParams params_;
    std::vector<unsigned> address_qubits_;
};

struct AddressDistribution {
    std::vector<double> probs;
};

/// Marginal probability of each address value.
AddressDistribution address_marginals(const QramParams &params, const StateVector &state);

/// Loads data into memory, puts the address into uniform superposition with
/// output |0>, then runs `iterations` rounds of diffusion after oracle.
AddressDistribution run_grover(const QramParams &params, const MemoryConfig &data, std::uint64_t target_value,
                               std::uint64_t iterations);

/// floor(pi/4 sqrt(N/M)), at least 1 while N > M; 0 when everything is marked.
std::uint64_t optimal_iterations(std::uint64_t n_addresses, std::uint64_t n_marked);

/// "address,probability" CSV, 12 significant digits.
std::string distribution_to_csv(const AddressDistribution &dist);

}  // namespace uqram

#endif  // UQRAM_SIMULATOR_H_
