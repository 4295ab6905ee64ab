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

// Test-only reference: Grover search with explicit dense matrices built
// straight from the QRAM definition. Shares no code with the simulator.

#ifndef UQRAM_TESTS_DENSE_ORACLE_H_
#define UQRAM_TESTS_DENSE_ORACLE_H_

#include <cmath>
#include <complex>
#include <cstdint>
#include <vector>

namespace dense_oracle {

using C = std::complex<double>;
using Matrix = std::vector<std::vector<C>>;
using Vector = std::vector<C>;

struct Layout {
    std::uint64_t n;  // addresses
    unsigned k;       // word bits
    std::uint64_t sub() const { return std::uint64_t{1} << k; }
    std::uint64_t block() const { return n * sub(); }
    std::uint64_t dim(std::uint64_t mem_configs) const { return mem_configs * block(); }
};

inline Vector mat_vec(const Matrix &m, const Vector &v) {
    Vector out(v.size());
    for (size_t r = 0; r < m.size(); r++) {
        for (size_t c = 0; c < v.size(); c++) {
            out[r] += m[r][c] * v[c];
        }
    }
    return out;
}

// Restricted to one memory configuration (the memory register is never
// touched by any operator in the search), so the working space is N * 2^K.
// QRAM: |a, y> -> |a, y ^ data[a]>.
inline Matrix qram_matrix(const Layout &l, const std::vector<std::uint64_t> &data) {
    Matrix u(l.block(), std::vector<C>(l.block()));
    for (std::uint64_t a = 0; a < l.n; a++) {
        for (std::uint64_t y = 0; y < l.sub(); y++) {
            u[a * l.sub() + (y ^ data[a])][a * l.sub() + y] = 1.0;
        }
    }
    return u;
}

// -1 where the output register equals target.
inline Matrix check_matrix(const Layout &l, std::uint64_t target) {
    Matrix u(l.block(), std::vector<C>(l.block()));
    for (std::uint64_t i = 0; i < l.block(); i++) {
        u[i][i] = (i % l.sub()) == target ? -1.0 : 1.0;
    }
    return u;
}

// (2|s><s| - I) on the address factor, identity on the output factor.
inline Matrix diffusion_matrix(const Layout &l) {
    Matrix u(l.block(), std::vector<C>(l.block()));
    for (std::uint64_t a = 0; a < l.n; a++) {
        for (std::uint64_t b = 0; b < l.n; b++) {
            double v = 2.0 / static_cast<double>(l.n) - (a == b ? 1.0 : 0.0);
            for (std::uint64_t y = 0; y < l.sub(); y++) {
                u[a * l.sub() + y][b * l.sub() + y] = v;
            }
        }
    }
    return u;
}

// Probability of each address after `iterations` rounds, starting from the
// uniform address superposition with output 0.
inline std::vector<double> grover_probs(const Layout &l, const std::vector<std::uint64_t> &data,
                                        std::uint64_t target, int iterations) {
    Vector v(l.block());
    for (std::uint64_t a = 0; a < l.n; a++) {
        v[a * l.sub()] = 1.0 / std::sqrt(static_cast<double>(l.n));
    }
    Matrix q = qram_matrix(l, data), chk = check_matrix(l, target), d = diffusion_matrix(l);
    for (int it = 0; it < iterations; it++) {
        v = mat_vec(d, mat_vec(q, mat_vec(chk, mat_vec(q, v))));
    }
    std::vector<double> probs(l.n);
    for (std::uint64_t i = 0; i < l.block(); i++) {
        probs[i / l.sub()] += std::norm(v[i]);
    }
    return probs;
}

// sin^2((2k+1) theta), sin(theta) = sqrt(M/N): total probability on marked items.
inline double closed_form_success(std::uint64_t n, std::uint64_t marked, int iterations) {
    double theta = std::asin(std::sqrt(static_cast<double>(marked) / static_cast<double>(n)));
    double s = std::sin((2 * iterations + 1) * theta);
    return s * s;
}

}  // namespace dense_oracle

#endif  // UQRAM_TESTS_DENSE_ORACLE_H_
