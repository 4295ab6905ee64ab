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
#include <numbers>
#include <random>
#include <stdexcept>

#include "dense_oracle.h"
#include "gtest/gtest.h"
#include "uqram/harness.h"

using namespace uqram;

namespace {

constexpr double kNormTol = 1e-12;
constexpr double kProbTol = 1e-9;
const double kInvSqrt2 = 1.0 / std::numbers::sqrt2;

void expect_amp(Amplitude actual, Amplitude expected, double tol = kNormTol) {
    EXPECT_NEAR(actual.real(), expected.real(), tol);
    EXPECT_NEAR(actual.imag(), expected.imag(), tol);
}

// Uniform address superposition with output |0> and the given memory.
StateVector uniform_address_state(const QramParams &p, const MemoryConfig &mem) {
    auto s = StateVector::basis(p.total_qubits, encode_basis(p, mem, 0, 0).value);
    for (unsigned b = 0; b < p.addr_qubits; b++) {
        s.apply_h(address_qubit(p, b));
    }
    return s;
}

}  // namespace

TEST(simulator, init_basis) {
    auto s = StateVector::basis(2, 0);
    ASSERT_EQ(s.dim(), 4u);
    expect_amp(s[0], 1.0);
    expect_amp(s[3], 0.0);
    auto t = StateVector::basis(1, 1);
    expect_amp(t[0], 0.0);
    expect_amp(t[1], 1.0);
    auto u = StateVector::basis(4, 9);
    for (std::uint64_t i = 0; i < 16; i++) {
        expect_amp(u[i], i == 9 ? 1.0 : 0.0);
    }
    EXPECT_THROW(StateVector::basis(2, 4), std::out_of_range);
}

TEST(simulator, apply_permutation) {
    auto p = make_params(2, 1);
    auto u = build_permutation(p);
    auto s = StateVector::basis(4, 8);
    s.apply_permutation(PermutationTable::identity(16));
    expect_amp(s[8], 1.0);
    s.apply_permutation(u);
    expect_amp(s[9], 1.0);
    expect_amp(s[8], 0.0);
    s.apply_permutation(u);
    expect_amp(s[8], 1.0);
    EXPECT_THROW(s.apply_permutation(PermutationTable::identity(8)), std::invalid_argument);
}

TEST(simulator, hadamard) {
    auto s = StateVector::basis(1, 0);
    s.apply_h(0);
    expect_amp(s[0], kInvSqrt2);
    expect_amp(s[1], kInvSqrt2);
    s.apply_h(0);
    expect_amp(s[0], 1.0);
    expect_amp(s[1], 0.0);
    auto t = StateVector::basis(1, 1);
    t.apply_h(0);
    expect_amp(t[0], kInvSqrt2);
    expect_amp(t[1], -kInvSqrt2);
    EXPECT_THROW(t.apply_h(1), std::out_of_range);
}

TEST(simulator, hadamard_on_middle_qubit) {
    // |101> with H on qubit 1 -> (|101> + |111>)/sqrt2.
    auto s = StateVector::basis(3, 5);
    s.apply_h(1);
    expect_amp(s[5], kInvSqrt2);
    expect_amp(s[7], kInvSqrt2);
    EXPECT_NEAR(s.norm_squared(), 1.0, kNormTol);
}

TEST(simulator, phase_flip) {
    auto s = StateVector::basis(1, 0);
    s.apply_h(0);
    std::vector<unsigned> q0{0};
    s.apply_phase_flip(q0, {});
    expect_amp(s[0], kInvSqrt2);
    expect_amp(s[1], -kInvSqrt2);
    s.apply_phase_flip(q0, {});
    expect_amp(s[1], kInvSqrt2);
    s.apply_phase_flip({}, {});
    expect_amp(s[0], -kInvSqrt2);
    expect_amp(s[1], -kInvSqrt2);
    EXPECT_THROW(s.apply_phase_flip(q0, q0), std::invalid_argument);
    std::vector<unsigned> q5{5};
    EXPECT_THROW(s.apply_phase_flip(q5, {}), std::out_of_range);
}

TEST(simulator, norm_preserved_random_sequences) {
    std::mt19937_64 rng(21);
    for (int seq = 0; seq < 1000; seq++) {
        unsigned n = 1 + rng() % 13;
        auto s = StateVector::basis(n, rng() & ((1ull << n) - 1));
        std::vector<std::uint64_t> perm(1ull << n);
        for (std::uint64_t i = 0; i < perm.size(); i++) {
            perm[i] = i;
        }
        for (int op = 0; op < 6; op++) {
            switch (rng() % 3) {
                case 0:
                    s.apply_h(rng() % n);
                    break;
                case 1: {
                    std::vector<unsigned> pos, neg;
                    for (unsigned q = 0; q < n; q++) {
                        int r = rng() % 4;
                        if (r == 0) pos.push_back(q);
                        if (r == 1) neg.push_back(q);
                    }
                    s.apply_phase_flip(pos, neg);
                    break;
                }
                default:
                    std::shuffle(perm.begin(), perm.end(), rng);
                    s.apply_permutation(PermutationTable(perm));
            }
            ASSERT_NEAR(s.norm_squared(), 1.0, kNormTol);
        }
    }
}

TEST(simulator, oracle_example_n2k1) {
    auto p = make_params(2, 1);
    MemoryConfig mem{{0, 1}};
    auto s = uniform_address_state(p, mem);
    GroverOracle(p, 1).apply(s);
    expect_amp(s[encode_basis(p, mem, 0, 0).value], kInvSqrt2);
    expect_amp(s[encode_basis(p, mem, 1, 0).value], -kInvSqrt2);
    EXPECT_NEAR(std::norm(s[encode_basis(p, mem, 0, 1).value]) + std::norm(s[encode_basis(p, mem, 1, 1).value]), 0.0,
                kNormTol);
}

TEST(simulator, oracle_nothing_marked) {
    auto p = make_params(4, 1);
    MemoryConfig mem{{0, 0, 0, 0}};
    auto s = uniform_address_state(p, mem);
    auto before = std::vector<Amplitude>(s.amplitudes().begin(), s.amplitudes().end());
    GroverOracle(p, 1).apply(s);
    for (std::uint64_t i = 0; i < s.dim(); i++) {
        expect_amp(s[i], before[i]);
    }
}

TEST(simulator, oracle_twice_is_identity) {
    auto p = make_params(4, 2);
    std::mt19937_64 rng(4);
    auto s = uniform_address_state(p, random_memory(p, rng));
    s.apply_h(output_qubit(p, 1));  // put something in the output register too
    auto before = std::vector<Amplitude>(s.amplitudes().begin(), s.amplitudes().end());
    GroverOracle oracle(p, 2);
    oracle.apply(s);
    oracle.apply(s);
    for (std::uint64_t i = 0; i < s.dim(); i++) {
        expect_amp(s[i], before[i]);
    }
}

TEST(simulator, oracle_rejects_bad_inputs) {
    auto p = make_params(2, 1);
    EXPECT_THROW(GroverOracle(p, 2), std::invalid_argument);
    std::vector<std::uint64_t> cycle(16);
    for (std::uint64_t i = 0; i < 16; i++) {
        cycle[i] = (i + 1) % 16;
    }
    EXPECT_THROW(GroverOracle(p, 1, std::make_shared<const PermutationTable>(cycle)), std::logic_error);
    EXPECT_THROW(GroverOracle(p, 1, std::make_shared<const PermutationTable>(PermutationTable::identity(8))),
                 std::invalid_argument);
}

TEST(simulator, phase_kickback_exhaustive) {
    for (auto [n, k] : {std::pair<std::uint64_t, unsigned>{2, 1}, {2, 2}, {4, 1}, {4, 2}}) {
        auto p = make_params(n, k);
        auto table = std::make_shared<const PermutationTable>(build_permutation(p));
        for (std::uint64_t target = 0; target <= p.word_mask(); target++) {
            GroverOracle oracle(p, target, table);
            for (std::uint64_t m = 0; m < p.num_blocks(); m++) {
                auto mem = memory_from_index(p, m);
                auto s = uniform_address_state(p, mem);
                oracle.apply(s);
                double out_zero = 0.0;
                for (std::uint64_t a = 0; a < n; a++) {
                    Amplitude amp = s[encode_basis(p, mem, a, 0).value];
                    double sign = mem.words[a] == target ? -1.0 : 1.0;
                    ASSERT_NEAR(amp.real(), sign / std::sqrt(static_cast<double>(n)), kNormTol);
                    ASSERT_NEAR(amp.imag(), 0.0, kNormTol);
                    out_zero += std::norm(amp);
                }
                ASSERT_NEAR(out_zero, 1.0, kNormTol);
            }
        }
    }
}

TEST(simulator, diffusion_examples) {
    auto p = make_params(4, 1);
    MemoryConfig mem{{0, 0, 0, 0}};
    GroverDiffusion diffusion(p);

    auto s = uniform_address_state(p, mem);
    auto before = std::vector<Amplitude>(s.amplitudes().begin(), s.amplitudes().end());
    diffusion.apply(s);
    for (std::uint64_t i = 0; i < s.dim(); i++) {
        expect_amp(s[i], before[i]);
    }

    // (1/2, 1/2, 1/2, -1/2) -> (0, 0, 0, 1).
    auto t = uniform_address_state(p, mem);
    std::vector<unsigned> a_both{address_qubit(p, 0), address_qubit(p, 1)};
    t.apply_phase_flip(a_both, {});
    diffusion.apply(t);
    for (std::uint64_t a = 0; a < 4; a++) {
        expect_amp(t[encode_basis(p, mem, a, 0).value], a == 3 ? 1.0 : 0.0);
    }
    diffusion.apply(t);
    diffusion.apply(t);
    expect_amp(t[encode_basis(p, mem, 3, 0).value], 1.0);
}

TEST(simulator, run_grover_examples) {
    auto p4 = make_params(4, 1);
    auto d = run_grover(p4, {{0, 0, 1, 0}}, 1, 1);
    EXPECT_NEAR(d.probs[2], 1.0, kProbTol);
    EXPECT_NEAR(d.probs[2], dense_oracle::closed_form_success(4, 1, 1), kProbTol);
    auto dense = dense_oracle::grover_probs({4, 1}, {0, 0, 1, 0}, 1, 1);
    for (int a = 0; a < 4; a++) {
        EXPECT_NEAR(d.probs[a], dense[a], kProbTol);
    }

    auto zero = run_grover(p4, {{0, 0, 1, 0}}, 1, 0);
    for (double pr : zero.probs) {
        EXPECT_NEAR(pr, 0.25, kProbTol);
    }

    auto p16 = make_params(16, 1);
    MemoryConfig one_marked{std::vector<std::uint64_t>(16, 0)};
    one_marked.words[11] = 1;
    auto big = run_grover(p16, one_marked, 1, 3);
    EXPECT_NEAR(big.probs[11], 0.9613, 1e-3);
    EXPECT_NEAR(big.probs[11], dense_oracle::closed_form_success(16, 1, 3), kProbTol);
}

TEST(simulator, grover_matches_dense_oracle) {
    std::mt19937_64 rng(17);
    for (auto [n, k] : {std::pair<std::uint64_t, unsigned>{2, 2}, {4, 1}, {4, 2}, {8, 1}}) {
        auto p = make_params(n, k);
        for (int trial = 0; trial < 5; trial++) {
            auto data = random_memory(p, rng);
            std::uint64_t target = rng() & p.word_mask();
            for (int iters = 0; iters <= 3; iters++) {
                auto got = run_grover(p, data, target, iters);
                auto want = dense_oracle::grover_probs({n, k}, data.words, target, iters);
                for (std::uint64_t a = 0; a < n; a++) {
                    ASSERT_NEAR(got.probs[a], want[a], kProbTol);
                }
            }
        }
    }
}

TEST(simulator, grover_matches_closed_form) {
    for (std::uint64_t n : {2, 4, 8, 16}) {
        for (std::uint64_t marked : {1, 2}) {
            auto p = make_params(n, 1);
            MemoryConfig data{std::vector<std::uint64_t>(n, 0)};
            for (std::uint64_t m = 0; m < marked; m++) {
                data.words[(m * 5 + 1) % n] = 1;
            }
            auto s = uniform_address_state(p, data);
            GroverOracle oracle(p, 1);
            GroverDiffusion diffusion(p);
            for (int k = 0; k <= 5; k++) {
                auto d = address_marginals(p, s);
                double success = 0.0, total = 0.0;
                for (std::uint64_t a = 0; a < n; a++) {
                    total += d.probs[a];
                    if (data.words[a] == 1) {
                        success += d.probs[a];
                    }
                }
                EXPECT_NEAR(total, 1.0, kNormTol);
                EXPECT_NEAR(success, dense_oracle::closed_form_success(n, marked, k), kProbTol)
                    << "N=" << n << " M=" << marked << " k=" << k;
                oracle.apply(s);
                diffusion.apply(s);
            }
        }
    }
}

TEST(simulator, optimal_iterations_examples) {
    EXPECT_EQ(optimal_iterations(4, 1), 1u);
    EXPECT_EQ(optimal_iterations(16, 1), 3u);
    EXPECT_EQ(optimal_iterations(8, 8), 0u);
    EXPECT_EQ(optimal_iterations(2, 1), 1u);
    EXPECT_EQ(optimal_iterations(4, 3), 1u);
    EXPECT_THROW(optimal_iterations(4, 0), std::invalid_argument);
}

TEST(simulator, distribution_csv) {
    AddressDistribution d{{0.0, 1.0 / 3.0}};
    EXPECT_EQ(distribution_to_csv(d), "address,probability\n0,0\n1,0.333333333333\n");
}
