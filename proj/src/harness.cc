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

#include "uqram/harness.h"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <random>
#include <sstream>
#include <stdexcept>

#include "json.hpp"
#include "uqram/circuit.h"
#include "uqram/permutation.h"

namespace uqram {

std::vector<QramPair> default_verification_pairs() {
    return {{2, 1}, {2, 2}, {2, 3}, {2, 4}, {4, 1}, {4, 2}, {4, 3}, {8, 1}, {8, 2}, {16, 1}};
}

std::vector<QramPair> parse_pairs(const std::string &text) {
    std::vector<QramPair> pairs;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        auto colon = item.find(':');
        if (colon == std::string::npos) {
            throw std::invalid_argument("pair '" + item + "' is not of the form N:K");
        }
        try {
            size_t used_n = 0, used_k = 0;
            std::string ns = item.substr(0, colon), ks = item.substr(colon + 1);
            QramPair p{std::stoull(ns, &used_n), static_cast<unsigned>(std::stoul(ks, &used_k))};
            if (used_n != ns.size() || used_k != ks.size()) {
                throw std::invalid_argument(item);
            }
            pairs.push_back(p);
        } catch (const std::logic_error &) {
            throw std::invalid_argument("pair '" + item + "' is not of the form N:K");
        }
    }
    if (pairs.empty()) {
        throw std::invalid_argument("no (N, K) pairs given");
    }
    return pairs;
}

std::vector<VerificationRow> run_verification_suite(const std::vector<QramPair> &pairs, unsigned max_qubits) {
    std::vector<VerificationRow> rows;
    rows.reserve(pairs.size());
    for (const auto &pair : pairs) {
        VerificationRow row;
        row.n_addresses = pair.n;
        row.word_bits = pair.k;
        auto start = std::chrono::steady_clock::now();
        try {
            QramParams params = make_params(pair.n, pair.k, max_qubits);
            row.total_qubits = params.total_qubits;
            row.hilbert_dim = params.hilbert_dim();

            PermutationTable table = build_permutation(params);
            row.permutation_ok = is_permutation(table);
            row.involution_ok = row.permutation_ok && is_involution(table);
            row.semantics_mismatches = verify_semantics(params, table).mismatches;
            row.composition_ok = compose(decompose_qram(params), max_qubits) == table;
            if (table.dim() <= kMaxDenseDim) {
                row.unitarity_residual = unitarity_residual(table);
            }
        } catch (const std::exception &e) {
            row.error = e.what();
        }
        row.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        rows.push_back(std::move(row));
    }
    return rows;
}

bool all_passed(const std::vector<VerificationRow> &rows) {
    return std::all_of(rows.begin(), rows.end(), [](const VerificationRow &r) { return r.passed(); });
}

std::string report_to_json(const std::vector<VerificationRow> &rows) {
    nlohmann::json out_rows = nlohmann::json::array();
    for (const auto &r : rows) {
        nlohmann::json j;
        j["n"] = r.n_addresses;
        j["k"] = r.word_bits;
        j["qubits"] = r.total_qubits;
        j["dim"] = r.hilbert_dim;
        j["permutation"] = r.permutation_ok;
        j["involution"] = r.involution_ok;
        j["mismatches"] = r.semantics_mismatches;
        j["composition"] = r.composition_ok;
        j["residual"] = r.unitarity_residual ? nlohmann::json(*r.unitarity_residual) : nlohmann::json(nullptr);
        j["seconds"] = r.seconds;
        if (!r.error.empty()) {
            j["error"] = r.error;
        }
        out_rows.push_back(std::move(j));
    }
    nlohmann::json doc{{"rows", std::move(out_rows)}, {"all_pass", all_passed(rows)}};
    return doc.dump(2) + "\n";
}

std::vector<VerificationRow> report_from_json(const std::string &text) {
    auto doc = nlohmann::json::parse(text);
    std::vector<VerificationRow> rows;
    for (const auto &j : doc.at("rows")) {
        VerificationRow r;
        r.n_addresses = j.at("n").get<std::uint64_t>();
        r.word_bits = j.at("k").get<unsigned>();
        r.total_qubits = j.at("qubits").get<unsigned>();
        r.hilbert_dim = j.at("dim").get<std::uint64_t>();
        r.permutation_ok = j.at("permutation").get<bool>();
        r.involution_ok = j.at("involution").get<bool>();
        r.semantics_mismatches = j.at("mismatches").get<std::uint64_t>();
        r.composition_ok = j.at("composition").get<bool>();
        if (!j.at("residual").is_null()) {
            r.unitarity_residual = j.at("residual").get<double>();
        }
        r.seconds = j.at("seconds").get<double>();
        r.error = j.value("error", std::string());
        rows.push_back(std::move(r));
    }
    return rows;
}

std::string report_to_csv(const std::vector<VerificationRow> &rows) {
    std::string out = "n,k,qubits,dim,permutation,involution,mismatches,composition,residual,seconds\n";
    char buf[256];
    for (const auto &r : rows) {
        std::string residual;
        if (r.unitarity_residual) {
            std::snprintf(buf, sizeof buf, "%.17g", *r.unitarity_residual);
            residual = buf;
        }
        std::snprintf(buf, sizeof buf, "%llu,%u,%u,%llu,%s,%s,%llu,%s,%s,%.17g\n",
                      static_cast<unsigned long long>(r.n_addresses), r.word_bits, r.total_qubits,
                      static_cast<unsigned long long>(r.hilbert_dim), r.permutation_ok ? "true" : "false",
                      r.involution_ok ? "true" : "false", static_cast<unsigned long long>(r.semantics_mismatches),
                      r.composition_ok ? "true" : "false", residual.c_str(), r.seconds);
        out += buf;
    }
    return out;
}

std::string report_to_text(const std::vector<VerificationRow> &rows) {
    std::string out;
    char buf[256];
    std::snprintf(buf, sizeof buf, "%4s %3s %6s %10s %5s %5s %10s %5s %10s %8s  %s\n", "N", "K", "qubits", "dim",
                  "perm", "invol", "mismatches", "comp", "residual", "seconds", "status");
    out += buf;
    for (const auto &r : rows) {
        std::string residual = "-";
        if (r.unitarity_residual) {
            std::snprintf(buf, sizeof buf, "%.3g", *r.unitarity_residual);
            residual = buf;
        }
        std::string status = r.passed() ? "PASS" : "FAIL";
        if (!r.error.empty()) {
            status += " (" + r.error + ")";
        }
        std::snprintf(buf, sizeof buf, "%4llu %3u %6u %10llu %5s %5s %10llu %5s %10s %8.3f  %s\n",
                      static_cast<unsigned long long>(r.n_addresses), r.word_bits, r.total_qubits,
                      static_cast<unsigned long long>(r.hilbert_dim), r.permutation_ok ? "yes" : "no",
                      r.involution_ok ? "yes" : "no", static_cast<unsigned long long>(r.semantics_mismatches),
                      r.composition_ok ? "yes" : "no", residual.c_str(), r.seconds, status.c_str());
        out += buf;
    }
    return out;
}

QromEquivalenceReport run_qrom_equivalence(const QramParams &params, std::uint64_t trials, std::uint64_t seed) {
    if (trials < 1) {
        throw std::invalid_argument("need at least one trial");
    }
    QromEquivalenceReport report;
    auto check = [&](const MemoryConfig &data) {
        report.configs_checked++;
        if (compose(decompose_qrom(params, data)) != build_block(params, data)) {
            report.failures++;
        }
    };
    if (params.mem_qubits <= kExhaustiveMemoryBits) {
        report.exhaustive = true;
        for (std::uint64_t m = 0; m < params.num_blocks(); m++) {
            check(memory_from_index(params, m));
        }
    } else {
        std::mt19937_64 rng(seed);
        for (std::uint64_t t = 0; t < trials; t++) {
            check(random_memory(params, rng));
        }
    }
    return report;
}

CommutationReport run_commutation_check(const QramParams &params, std::uint64_t orders, std::uint64_t seed) {
    const PermutationTable expected = build_permutation(params);
    const Circuit canonical = decompose_qram(params);
    std::mt19937_64 rng(seed);
    CommutationReport report;
    std::vector<McxGate> gates = canonical.gates();
    for (std::uint64_t o = 0; o < orders; o++) {
        std::shuffle(gates.begin(), gates.end(), rng);
        Circuit shuffled(canonical.n_qubits());
        for (const auto &g : gates) {
            shuffled.append(g);
        }
        report.orders_checked++;
        if (compose(shuffled) != expected) {
            report.failures++;
        }
    }
    return report;
}

}  // namespace uqram
