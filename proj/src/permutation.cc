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

#include "uqram/permutation.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstring>
#include <istream>
#include <limits>
#include <ostream>
#include <stdexcept>

#include "json.hpp"
#include "uqram/parallel.h"

namespace uqram {
namespace {

// Kronecker product of single-qubit permutations, most significant factor
// first: the sub-block X^{m^{K-1}} (x) ... (x) X^{m^0} as a map on [0, 2^K).
void tensor_flip_block(std::uint64_t word, unsigned word_bits, std::vector<std::uint64_t> &out) {
    out.assign(1, 0);
    for (unsigned j = word_bits; j-- > 0;) {
        std::uint64_t flip = (word >> j) & 1;
        size_t n = out.size();
        out.resize(2 * n);
        // (A (x) B)[2i + b] = 2 A[i] + B[b], filled back to front so A stays intact.
        for (size_t i = n; i-- > 0;) {
            std::uint64_t a = out[i];
            out[2 * i] = 2 * a + flip;
            out[2 * i + 1] = 2 * a + (1 - flip);
        }
    }
}

// Direct sum over addresses of the per-address sub-blocks, written at `base`.
void write_block(const QramParams &params, std::uint64_t mem_index, std::uint64_t base,
                 std::vector<std::uint64_t> &scratch, std::uint64_t *targets) {
    const std::uint64_t sub = std::uint64_t{1} << params.word_bits;
    for (std::uint64_t a = 0; a < params.n_addresses; a++) {
        auto shift = static_cast<unsigned>((params.n_addresses - 1 - a) * params.word_bits);
        std::uint64_t word = (mem_index >> shift) & params.word_mask();
        tensor_flip_block(word, params.word_bits, scratch);
        std::uint64_t offset = base + a * sub;
        for (std::uint64_t y = 0; y < sub; y++) {
            targets[offset + y - base] = offset + scratch[y];
        }
    }
}

}  // namespace

PermutationTable PermutationTable::identity(std::uint64_t dim) {
    std::vector<std::uint64_t> t(dim);
    for (std::uint64_t i = 0; i < dim; i++) {
        t[i] = i;
    }
    return PermutationTable(std::move(t));
}

PermutationTable build_permutation(const QramParams &params) {
    const std::uint64_t block = params.block_size();
    std::vector<std::uint64_t> targets(params.hilbert_dim());
    // Blocks are written in memory-configuration order; each worker owns a
    // contiguous run of blocks.
    parallel_for(params.num_blocks() * block, [&](std::uint64_t begin, std::uint64_t end) {
        std::vector<std::uint64_t> scratch;
        std::uint64_t first = begin / block;
        std::uint64_t last = (end + block - 1) / block;
        for (std::uint64_t m = first; m < last; m++) {
            std::uint64_t base = m * block;
            if (base < begin) {
                continue;  // owned by the previous worker
            }
            write_block(params, m, base, scratch, targets.data() + base);
        }
    });
    return PermutationTable(std::move(targets));
}

PermutationTable build_block(const QramParams &params, const MemoryConfig &mem) {
    std::uint64_t m = memory_index(params, mem);
    std::vector<std::uint64_t> targets(params.block_size());
    std::vector<std::uint64_t> scratch;
    write_block(params, m, 0, scratch, targets.data());
    return PermutationTable(std::move(targets));
}

bool is_permutation(const PermutationTable &table) {
    std::vector<bool> seen(table.dim(), false);
    for (std::uint64_t t : table.targets()) {
        if (t >= table.dim() || seen[t]) {
            return false;
        }
        seen[t] = true;
    }
    return true;
}

bool is_involution(const PermutationTable &table) {
    auto t = table.targets();
    std::uint64_t bad = parallel_count(t.size(), [&](std::uint64_t begin, std::uint64_t end) {
        std::uint64_t n = 0;
        for (std::uint64_t i = begin; i < end; i++) {
            n += t[i] >= t.size() || t[t[i]] != i;
        }
        return n;
    });
    return bad == 0;
}

SemanticsReport verify_semantics(const QramParams &params, const PermutationTable &table) {
    if (table.dim() != params.hilbert_dim()) {
        throw std::invalid_argument("table dimension " + std::to_string(table.dim()) + " does not match " +
                                    std::to_string(params.hilbert_dim()));
    }
    auto t = table.targets();
    SemanticsReport report;
    report.checked = t.size();
    report.mismatches = parallel_count(t.size(), [&](std::uint64_t begin, std::uint64_t end) {
        std::uint64_t n = 0;
        for (std::uint64_t i = begin; i < end; i++) {
            n += t[i] != qram_map(params, BasisIndex{i}).value;
        }
        return n;
    });
    return report;
}

double unitarity_residual(const PermutationTable &table) {
    const std::uint64_t d = table.dim();
    if (d > kMaxDenseDim) {
        throw std::length_error("dimension " + std::to_string(d) + " too large for a dense unitarity check");
    }
    // Dense U, row-major: U[r][c] = 1 iff targets[c] == r.
    std::vector<double> u(d * d, 0.0);
    for (std::uint64_t c = 0; c < d; c++) {
        if (table[c] >= d) {
            return std::numeric_limits<double>::infinity();
        }
        u[table[c] * d + c] = 1.0;
    }
    // Row r of U U^T is sum_k U[r][k] * U[:, k]^T; only nonzero U[r][k] contribute.
    double worst = 0.0;
    std::vector<double> row(d);
    for (std::uint64_t r = 0; r < d; r++) {
        std::fill(row.begin(), row.end(), 0.0);
        const double *ur = &u[r * d];
        for (std::uint64_t k = 0; k < d; k++) {
            if (ur[k] == 0.0) {
                continue;
            }
            for (std::uint64_t c = 0; c < d; c++) {
                row[c] += ur[k] * u[c * d + k];
            }
        }
        for (std::uint64_t c = 0; c < d; c++) {
            worst = std::max(worst, std::abs(row[c] - (r == c ? 1.0 : 0.0)));
        }
    }
    return worst;
}

ConstraintReport count_constraints(const QramParams &params, bool complete) {
    ConstraintReport report;
    if (complete) {
        report.constrained_basis_count = params.hilbert_dim();
        return report;
    }
    // Only |a>|0>|mem> inputs are pinned: one per (mem, a).
    report.constrained_basis_count = params.num_blocks() * params.n_addresses;
    report.unconstrained_basis_count = params.hilbert_dim() - report.constrained_basis_count;
    std::uint64_t free_dim = report.unconstrained_basis_count;
    if (free_dim != 0 && free_dim > std::numeric_limits<std::uint64_t>::max() / free_dim) {
        throw std::overflow_error("residual parameter count overflows 64 bits");
    }
    report.residual_real_params = free_dim * free_dim;
    return report;
}

namespace {

constexpr char kMagic[4] = {'U', 'Q', 'R', 'M'};

void put_le(std::ostream &out, std::uint64_t v, int bytes) {
    char buf[8];
    for (int b = 0; b < bytes; b++) {
        buf[b] = static_cast<char>((v >> (8 * b)) & 0xff);
    }
    out.write(buf, bytes);
}

std::uint64_t get_le(std::istream &in, int bytes) {
    unsigned char buf[8];
    if (!in.read(reinterpret_cast<char *>(buf), bytes)) {
        throw std::runtime_error("truncated permutation file");
    }
    std::uint64_t v = 0;
    for (int b = bytes; b-- > 0;) {
        v = (v << 8) | buf[b];
    }
    return v;
}

}  // namespace

void write_permutation_binary(const PermutationTable &table, std::ostream &out) {
    if (!std::has_single_bit(table.dim())) {
        throw std::invalid_argument("binary export needs a power-of-two dimension");
    }
    out.write(kMagic, 4);
    put_le(out, kPermutationFormatVersion, 2);
    put_le(out, static_cast<std::uint64_t>(std::countr_zero(table.dim())), 2);
    put_le(out, 0, 8);
    for (std::uint64_t t : table.targets()) {
        put_le(out, t, 8);
    }
    if (!out) {
        throw std::runtime_error("failed writing permutation file");
    }
}

PermutationTable read_permutation_binary(std::istream &in) {
    char magic[4];
    if (!in.read(magic, 4) || std::memcmp(magic, kMagic, 4) != 0) {
        throw std::runtime_error("not a UQRM permutation file");
    }
    std::uint64_t version = get_le(in, 2);
    if (version != kPermutationFormatVersion) {
        throw std::runtime_error("unsupported permutation file version " + std::to_string(version));
    }
    std::uint64_t qubits = get_le(in, 2);
    get_le(in, 8);
    if (qubits > kAbsoluteMaxQubits) {
        throw std::runtime_error("permutation file declares too many qubits");
    }
    std::vector<std::uint64_t> targets(std::uint64_t{1} << qubits);
    for (auto &t : targets) {
        t = get_le(in, 8);
    }
    return PermutationTable(std::move(targets));
}

std::string permutation_to_json(const PermutationTable &table) {
    if (table.dim() > kMaxJsonDim) {
        throw std::length_error("JSON export is limited to dimension " + std::to_string(kMaxJsonDim));
    }
    nlohmann::json j;
    j["dim"] = table.dim();
    j["targets"] = std::vector<std::uint64_t>(table.targets().begin(), table.targets().end());
    return j.dump();
}

PermutationTable permutation_from_json(const std::string &text) {
    auto j = nlohmann::json::parse(text);
    auto targets = j.at("targets").get<std::vector<std::uint64_t>>();
    if (targets.size() != j.at("dim").get<std::uint64_t>()) {
        throw std::runtime_error("permutation JSON: dim does not match target count");
    }
    return PermutationTable(std::move(targets));
}

}  // namespace uqram
