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

#include "uqram/registers.h"

#include <bit>
#include <charconv>
#include <stdexcept>

namespace uqram {

QramParams make_params(std::uint64_t n_addresses, unsigned word_bits, unsigned max_qubits) {
    if (max_qubits > kAbsoluteMaxQubits) {
        throw std::invalid_argument("qubit cap " + std::to_string(max_qubits) + " exceeds the 64-bit index limit of " +
                                    std::to_string(kAbsoluteMaxQubits));
    }
    if (n_addresses < 2 || !std::has_single_bit(n_addresses)) {
        throw std::invalid_argument("number of addresses must be a power of two >= 2, got " +
                                    std::to_string(n_addresses));
    }
    if (word_bits < 1) {
        throw std::invalid_argument("word size must be at least 1 bit");
    }
    // N*K <= total <= cap, so bounding both factors first keeps the product exact.
    if (n_addresses > max_qubits || word_bits > max_qubits) {
        throw std::invalid_argument("register width exceeds the " + std::to_string(max_qubits) + "-qubit cap");
    }
    QramParams p;
    p.n_addresses = n_addresses;
    p.word_bits = word_bits;
    p.addr_qubits = static_cast<unsigned>(std::countr_zero(n_addresses));
    p.out_qubits = word_bits;
    p.mem_qubits = static_cast<unsigned>(n_addresses) * word_bits;
    p.total_qubits = p.addr_qubits + p.out_qubits + p.mem_qubits;
    if (p.total_qubits > max_qubits) {
        throw std::invalid_argument("N=" + std::to_string(n_addresses) + ", K=" + std::to_string(word_bits) +
                                    " needs " + std::to_string(p.total_qubits) + " qubits; cap is " +
                                    std::to_string(max_qubits));
    }
    return p;
}

void validate_memory(const QramParams &params, const MemoryConfig &mem) {
    if (mem.words.size() != params.n_addresses) {
        throw std::invalid_argument("memory needs exactly " + std::to_string(params.n_addresses) + " words, got " +
                                    std::to_string(mem.words.size()));
    }
    for (size_t a = 0; a < mem.words.size(); a++) {
        if (mem.words[a] > params.word_mask()) {
            throw std::invalid_argument("word " + std::to_string(a) + " = " + std::to_string(mem.words[a]) +
                                        " does not fit in " + std::to_string(params.word_bits) + " bits");
        }
    }
}

MemoryConfig make_memory(const QramParams &params, std::vector<std::uint64_t> words) {
    MemoryConfig mem{std::move(words)};
    validate_memory(params, mem);
    return mem;
}

MemoryConfig parse_memory(const QramParams &params, std::string_view text) {
    MemoryConfig mem;
    size_t pos = 0;
    while (true) {
        size_t comma = text.find(',', pos);
        std::string_view field = text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
        while (!field.empty() && field.front() == ' ') {
            field.remove_prefix(1);
        }
        while (!field.empty() && field.back() == ' ') {
            field.remove_suffix(1);
        }
        std::uint64_t word = 0;
        auto [end, ec] = std::from_chars(field.data(), field.data() + field.size(), word);
        if (field.empty() || ec != std::errc() || end != field.data() + field.size()) {
            throw std::invalid_argument("bad memory word '" + std::string(field) + "' in '" + std::string(text) + "'");
        }
        mem.words.push_back(word);
        if (comma == std::string_view::npos) {
            break;
        }
        pos = comma + 1;
    }
    validate_memory(params, mem);
    return mem;
}

std::string format_memory(const MemoryConfig &mem) {
    std::string out;
    for (size_t a = 0; a < mem.words.size(); a++) {
        if (a) {
            out += ',';
        }
        out += std::to_string(mem.words[a]);
    }
    return out;
}

std::uint64_t memory_index(const QramParams &params, const MemoryConfig &mem) {
    validate_memory(params, mem);
    std::uint64_t index = 0;
    for (std::uint64_t w : mem.words) {
        index = (index << params.word_bits) | w;
    }
    return index;
}

MemoryConfig memory_from_index(const QramParams &params, std::uint64_t mem_index) {
    if (mem_index >= params.num_blocks()) {
        throw std::out_of_range("memory index " + std::to_string(mem_index) + " out of range");
    }
    MemoryConfig mem;
    mem.words.resize(params.n_addresses);
    for (std::uint64_t a = params.n_addresses; a-- > 0;) {
        mem.words[a] = mem_index & params.word_mask();
        mem_index >>= params.word_bits;
    }
    return mem;
}

BasisIndex encode_basis(const QramParams &params, const MemoryConfig &mem, std::uint64_t addr, std::uint64_t out) {
    if (addr >= params.n_addresses) {
        throw std::out_of_range("address " + std::to_string(addr) + " out of range");
    }
    if (out > params.word_mask()) {
        throw std::out_of_range("output value " + std::to_string(out) + " out of range");
    }
    std::uint64_t m = memory_index(params, mem);
    return BasisIndex{m * params.block_size() + (addr << params.word_bits) + out};
}

BasisTriple decode_basis(const QramParams &params, BasisIndex index) {
    if (index.value >= params.hilbert_dim()) {
        throw std::out_of_range("basis index " + std::to_string(index.value) + " out of range");
    }
    BasisTriple t;
    t.out = index.value & params.word_mask();
    t.addr = (index.value >> params.word_bits) & (params.n_addresses - 1);
    t.mem = memory_from_index(params, index.value / params.block_size());
    return t;
}

BasisIndex qram_map(const QramParams &params, BasisIndex index) {
    BasisTriple t = decode_basis(params, index);
    return encode_basis(params, t.mem, t.addr, t.out ^ t.mem.words[t.addr]);
}

unsigned output_qubit(const QramParams &params, unsigned bit) {
    if (bit >= params.word_bits) {
        throw std::out_of_range("output bit out of range");
    }
    return bit;
}

unsigned address_qubit(const QramParams &params, unsigned bit) {
    if (bit >= params.addr_qubits) {
        throw std::out_of_range("address bit out of range");
    }
    return params.out_qubits + bit;
}

unsigned memory_qubit(const QramParams &params, std::uint64_t addr, unsigned bit) {
    if (addr >= params.n_addresses || bit >= params.word_bits) {
        throw std::out_of_range("memory cell out of range");
    }
    auto slot = static_cast<unsigned>(params.n_addresses - 1 - addr);
    return params.out_qubits + params.addr_qubits + slot * params.word_bits + bit;
}

}  // namespace uqram
