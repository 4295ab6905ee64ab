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

#ifndef UQRAM_PERMUTATION_H_
#define UQRAM_PERMUTATION_H_

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "uqram/registers.h"

namespace uqram {

/// A 0/1 permutation unitary stored as a basis-index map: column i of the
/// matrix has its single 1 in row targets[i].
class PermutationTable {
   public:
    PermutationTable() = default;
    explicit PermutationTable(std::vector<std::uint64_t> targets) : targets_(std::move(targets)) {}

    static PermutationTable identity(std::uint64_t dim);

    std::uint64_t dim() const { return targets_.size(); }
    std::uint64_t operator[](std::uint64_t i) const { return targets_[i]; }
    std::span<const std::uint64_t> targets() const { return targets_; }

    bool operator==(const PermutationTable &) const = default;

   private:
    std::vector<std::uint64_t> targets_;
};

/// The full QRAM unitary assembled block by block from the direct-sum form:
///   U = (+)_mem [ (+)_a ( X^{m_a^{K-1}} (x) ... (x) X^{m_a^0} ) ].
/// Deliberately does not route through qram_map.
PermutationTable build_permutation(const QramParams &params);

/// The N*2^K block acting on (address, output) for one memory configuration.
PermutationTable build_block(const QramParams &params, const MemoryConfig &mem);

bool is_permutation(const PermutationTable &table);
/// targets[targets[i]] == i for every i. Out-of-range targets fail the check.
bool is_involution(const PermutationTable &table);

struct SemanticsReport {
    std::uint64_t checked = 0;
    std::uint64_t mismatches = 0;
};

/// Compares every entry against qram_map. Throws std::invalid_argument when
/// the table dimension does not match params.
SemanticsReport verify_semantics(const QramParams &params, const PermutationTable &table);

/// Largest dimension accepted by unitarity_residual.
inline constexpr std::uint64_t kMaxDenseDim = std::uint64_t{1} << 13;

/// max |U U^dagger - I| over all entries, computed on the dense matrix in
/// double precision. Throws std::length_error above kMaxDenseDim; use
/// is_permutation for exact checks at that scale.
double unitarity_residual(const PermutationTable &table);

/// Free-parameter accounting for the complete (|y> arbitrary) and the
/// incomplete (|y>=|0> only) QRAM specifications.
struct ConstraintReport {
    std::uint64_t constrained_basis_count = 0;
    std::uint64_t unconstrained_basis_count = 0;
    /// Real dimension of U(d) on the unconstrained subspace, d^2.
    std::uint64_t residual_real_params = 0;

    bool operator==(const ConstraintReport &) const = default;
};

ConstraintReport count_constraints(const QramParams &params, bool complete);

// Export. Binary layout: "UQRM", u16 version, u16 qubit count, 8 reserved
// bytes, then dim little-endian u64 targets.
inline constexpr std::uint16_t kPermutationFormatVersion = 1;
inline constexpr std::uint64_t kMaxJsonDim = 4096;

void write_permutation_binary(const PermutationTable &table, std::ostream &out);
PermutationTable read_permutation_binary(std::istream &in);

/// {"dim": D, "targets": [...]}. Throws std::length_error when D > kMaxJsonDim.
std::string permutation_to_json(const PermutationTable &table);
PermutationTable permutation_from_json(const std::string &text);

}  // namespace uqram

#endif  // UQRAM_PERMUTATION_H_
