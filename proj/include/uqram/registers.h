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

#ifndef UQRAM_REGISTERS_H_
#define UQRAM_REGISTERS_H_

#include <cstdint>
#include <compare>
#include <string>
#include <string_view>
#include <vector>

namespace uqram {

/// Largest register width (in qubits) for which explicit tables are built
/// unless the caller raises the cap.
inline constexpr unsigned kDefaultMaxQubits = 24;

/// Hard ceiling on any cap: basis indices must fit in a 64-bit word.
inline constexpr unsigned kAbsoluteMaxQubits = 62;

/// QRAM dimensions for N addresses holding K-bit words.
///
/// Basis index layout, most significant first:
///   [ memory: N*K bits | address: log2(N) bits | output: K bits ]
/// Within memory, words[0] occupies the top K bits. Qubit p is the bit of
/// weight 2^p in a basis index.
struct QramParams {
    std::uint64_t n_addresses = 0;
    unsigned word_bits = 0;
    unsigned addr_qubits = 0;
    unsigned out_qubits = 0;
    unsigned mem_qubits = 0;
    unsigned total_qubits = 0;

    std::uint64_t hilbert_dim() const { return std::uint64_t{1} << total_qubits; }
    /// Size of one per-memory-configuration block, N * 2^K.
    std::uint64_t block_size() const { return std::uint64_t{1} << (addr_qubits + out_qubits); }
    std::uint64_t num_blocks() const { return std::uint64_t{1} << mem_qubits; }
    std::uint64_t word_mask() const { return (std::uint64_t{1} << word_bits) - 1; }

    bool operator==(const QramParams &) const = default;
};

/// Validates (N, K) and fills in the derived register sizes.
/// Throws std::invalid_argument if N is not a power of two >= 2, K < 1, or the
/// total width exceeds max_qubits.
QramParams make_params(std::uint64_t n_addresses, unsigned word_bits, unsigned max_qubits = kDefaultMaxQubits);

/// The N data words stored in the memory register.
struct MemoryConfig {
    std::vector<std::uint64_t> words;

    bool operator==(const MemoryConfig &) const = default;
};

/// Checks length and word range; throws std::invalid_argument.
void validate_memory(const QramParams &params, const MemoryConfig &mem);
MemoryConfig make_memory(const QramParams &params, std::vector<std::uint64_t> words);

/// Parses "1,0,3,2" (exactly N decimal words).
MemoryConfig parse_memory(const QramParams &params, std::string_view text);
std::string format_memory(const MemoryConfig &mem);

/// Packs the words into the integer held by the memory register.
std::uint64_t memory_index(const QramParams &params, const MemoryConfig &mem);
MemoryConfig memory_from_index(const QramParams &params, std::uint64_t mem_index);

struct BasisIndex {
    std::uint64_t value = 0;

    auto operator<=>(const BasisIndex &) const = default;
};

struct BasisTriple {
    MemoryConfig mem;
    std::uint64_t addr = 0;
    std::uint64_t out = 0;

    bool operator==(const BasisTriple &) const = default;
};

BasisIndex encode_basis(const QramParams &params, const MemoryConfig &mem, std::uint64_t addr, std::uint64_t out);
BasisTriple decode_basis(const QramParams &params, BasisIndex index);

/// Reference semantics: |a>|y>|mem> -> |a>|y XOR mem[a]>|mem>.
BasisIndex qram_map(const QramParams &params, BasisIndex index);

// Qubit positions of each register line.
unsigned output_qubit(const QramParams &params, unsigned bit);
unsigned address_qubit(const QramParams &params, unsigned bit);
unsigned memory_qubit(const QramParams &params, std::uint64_t addr, unsigned bit);

}  // namespace uqram

#endif  // UQRAM_REGISTERS_H_
