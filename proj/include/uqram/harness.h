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

#ifndef UQRAM_HARNESS_H_
#define UQRAM_HARNESS_H_

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "uqram/registers.h"

namespace uqram {

struct QramPair {
    std::uint64_t n = 0;
    unsigned k = 0;

    bool operator==(const QramPair &) const = default;
};

/// The ten (N, K) pairs of the published verification table.
std::vector<QramPair> default_verification_pairs();

/// Parses "2:1,4:2,...".
std::vector<QramPair> parse_pairs(const std::string &text);

struct VerificationRow {
    std::uint64_t n_addresses = 0;
    unsigned word_bits = 0;
    unsigned total_qubits = 0;
    std::uint64_t hilbert_dim = 0;
    bool permutation_ok = false;
    bool involution_ok = false;
    std::uint64_t semantics_mismatches = 0;
    bool composition_ok = false;
    /// Only computed for dimensions up to kMaxDenseDim.
    std::optional<double> unitarity_residual;
    double seconds = 0.0;
    /// Set when the row could not be run at all (e.g. over the qubit cap).
    std::string error;

    bool passed() const {
        return error.empty() && permutation_ok && involution_ok && semantics_mismatches == 0 && composition_ok;
    }

    bool operator==(const VerificationRow &) const = default;
};

/// Builds the table for each pair and runs the exact checks plus, when
/// small enough, the dense unitarity metric. A failing pair does not stop
/// the suite.
std::vector<VerificationRow> run_verification_suite(const std::vector<QramPair> &pairs,
                                                    unsigned max_qubits = kDefaultMaxQubits);

bool all_passed(const std::vector<VerificationRow> &rows);

std::string report_to_json(const std::vector<VerificationRow> &rows);
std::vector<VerificationRow> report_from_json(const std::string &text);
std::string report_to_csv(const std::vector<VerificationRow> &rows);
/// Fixed-width human-readable table.
std::string report_to_text(const std::vector<VerificationRow> &rows);

struct QromEquivalenceReport {
    std::uint64_t configs_checked = 0;
    std::uint64_t failures = 0;
    bool exhaustive = false;
};

/// Largest N*K for which every memory configuration is enumerated.
inline constexpr unsigned kExhaustiveMemoryBits = 8;

/// compose(decompose_qrom(data)) against build_block(data): every data
/// configuration when N*K <= 8, otherwise `trials` seeded random ones.
QromEquivalenceReport run_qrom_equivalence(const QramParams &params, std::uint64_t trials, std::uint64_t seed = 0);

struct CommutationReport {
    std::uint64_t orders_checked = 0;
    std::uint64_t failures = 0;
};

/// Composes decompose_qram under `orders` seeded random gate orderings and
/// compares each against build_permutation.
CommutationReport run_commutation_check(const QramParams &params, std::uint64_t orders, std::uint64_t seed = 0);

/// Uniform random memory configuration.
template <typename Rng>
MemoryConfig random_memory(const QramParams &params, Rng &rng) {
    MemoryConfig mem;
    mem.words.resize(params.n_addresses);
    for (auto &w : mem.words) {
        w = rng() & params.word_mask();
    }
    return mem;
}

}  // namespace uqram

#endif  // UQRAM_HARNESS_H_
