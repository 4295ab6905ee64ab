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

#include "uqram/cli.h"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <stdexcept>

#include "CLI11.hpp"
#include "uqram/circuit.h"
#include "uqram/harness.h"
#include "uqram/permutation.h"
#include "uqram/simulator.h"

namespace uqram {
namespace {

// Anything wrong with what the user asked for, as opposed to a failed check.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void write_file(const std::string &path, const std::string &contents, bool binary = false) {
    std::ofstream f(path, binary ? std::ios::binary : std::ios::out);
    if (!f || !(f << contents)) {
        throw std::runtime_error("cannot write " + path);
    }
}

bool ends_with(const std::string &s, const std::string &suffix) {
    return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

struct ParamArgs {
    std::uint64_t n = 0;
    unsigned k = 0;
};

void add_param_options(CLI::App *cmd, ParamArgs &p) {
    cmd->add_option("--n", p.n, "number of addresses (power of two)")->required();
    cmd->add_option("--k", p.k, "bits per data word")->required();
}

}  // namespace

int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Universal QRAM construction and verification toolkit", "uqram"};
    app.require_subcommand(1);
    unsigned max_qubits = kDefaultMaxQubits;
    app.add_option("--max-qubits", max_qubits, "cap on register width for explicit tables")
        ->check(CLI::Range(1u, kAbsoluteMaxQubits));

    auto *verify = app.add_subcommand("verify", "rebuild and check the QRAM unitary for a list of (N, K) pairs");
    std::string pairs_text;
    std::string verify_out;
    verify->add_option("--pairs", pairs_text, "comma-separated N:K pairs (default: the ten reference pairs)");
    verify->add_option("--out", verify_out, "write the report to FILE (.csv for CSV, otherwise JSON)");

    auto *build = app.add_subcommand("build", "write the QRAM permutation table to a file");
    ParamArgs build_p;
    std::string build_format = "bin";
    std::string build_out;
    add_param_options(build, build_p);
    build->add_option("--format", build_format, "bin or json")->check(CLI::IsMember({"bin", "json"}));
    build->add_option("--out", build_out, "output file")->required();

    auto *grover = app.add_subcommand("grover", "simulate Grover search with the QRAM oracle");
    ParamArgs grover_p;
    std::string grover_data;
    std::uint64_t grover_target = 0;
    std::optional<std::uint64_t> grover_iters;
    std::string grover_out;
    add_param_options(grover, grover_p);
    grover->add_option("--data", grover_data, "N comma-separated decimal words")->required();
    grover->add_option("--target", grover_target, "value to search for")->required();
    grover->add_option("--iters", grover_iters, "Grover iterations (default: optimal for the marked count)");
    grover->add_option("--out", grover_out, "write the CSV to FILE instead of stdout");

    auto *exp = app.add_subcommand("export", "print the gate decomposition as JSON or OpenQASM 3");
    ParamArgs exp_p;
    std::string exp_data;
    std::string exp_format = "json";
    bool exp_qrom = false;
    std::string exp_out;
    add_param_options(exp, exp_p);
    exp->add_option("--data", exp_data, "N comma-separated words (required with --qrom)");
    exp->add_option("--format", exp_format, "json or qasm")->check(CLI::IsMember({"json", "qasm"}));
    exp->add_flag("--qrom", exp_qrom, "export the data-dependent QROM circuit instead");
    exp->add_option("--out", exp_out, "write to FILE instead of stdout");

    auto *cmp = app.add_subcommand("compare-qrom", "check QROM circuits against the per-configuration blocks");
    ParamArgs cmp_p;
    std::uint64_t cmp_trials = 100;
    std::uint64_t cmp_seed = 0;
    add_param_options(cmp, cmp_p);
    cmp->add_option("--trials", cmp_trials, "random configurations when not exhaustive")
        ->check(CLI::PositiveNumber);
    cmp->add_option("--seed", cmp_seed, "seed for random configurations");

    auto *gates = app.add_subcommand("gates", "print gate counts");
    ParamArgs gates_p;
    add_param_options(gates, gates_p);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp &) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError &e) {
        err << "error: " << e.what() << "\n\n" << app.help();
        return kExitUsage;
    }

    try {
        if (*verify) {
            auto pairs = pairs_text.empty() ? default_verification_pairs() : parse_pairs(pairs_text);
            auto rows = run_verification_suite(pairs, max_qubits);
            out << report_to_text(rows);
            if (!verify_out.empty()) {
                write_file(verify_out, ends_with(verify_out, ".csv") ? report_to_csv(rows) : report_to_json(rows));
            }
            bool ok = all_passed(rows);
            out << (ok ? "all pairs passed\n" : "verification FAILED\n");
            return ok ? kExitOk : kExitVerificationFailed;
        }
        if (*build) {
            auto params = make_params(build_p.n, build_p.k, max_qubits);
            auto table = build_permutation(params);
            if (build_format == "json") {
                write_file(build_out, permutation_to_json(table) + "\n");
            } else {
                std::ofstream f(build_out, std::ios::binary);
                if (!f) {
                    throw std::runtime_error("cannot write " + build_out);
                }
                write_permutation_binary(table, f);
            }
            out << "wrote " << table.dim() << " entries to " << build_out << "\n";
            return kExitOk;
        }
        if (*grover) {
            auto params = make_params(grover_p.n, grover_p.k, max_qubits);
            auto data = parse_memory(params, grover_data);
            std::uint64_t iters = 0;
            if (grover_iters) {
                iters = *grover_iters;
            } else {
                auto marked = static_cast<std::uint64_t>(std::count(data.words.begin(), data.words.end(), grover_target));
                iters = marked == 0 ? 0 : optimal_iterations(params.n_addresses, marked);
            }
            auto csv = distribution_to_csv(run_grover(params, data, grover_target, iters));
            if (grover_out.empty()) {
                out << csv;
            } else {
                write_file(grover_out, csv);
            }
            return kExitOk;
        }
        if (*exp) {
            auto params = make_params(exp_p.n, exp_p.k, max_qubits);
            Circuit circuit(0);
            if (exp_qrom) {
                if (exp_data.empty()) {
                    throw UsageError("--qrom needs --data");
                }
                circuit = decompose_qrom(params, parse_memory(params, exp_data));
            } else {
                if (!exp_data.empty()) {
                    parse_memory(params, exp_data);  // validated; the universal circuit is data-independent
                }
                circuit = decompose_qram(params);
            }
            auto text = export_circuit(circuit, exp_format);
            if (exp_out.empty()) {
                out << text;
            } else {
                write_file(exp_out, text);
            }
            return kExitOk;
        }
        if (*cmp) {
            auto params = make_params(cmp_p.n, cmp_p.k, max_qubits);
            auto report = run_qrom_equivalence(params, cmp_trials, cmp_seed);
            out << "configs_checked=" << report.configs_checked << "\n"
                << "exhaustive=" << (report.exhaustive ? "true" : "false") << "\n"
                << "failures=" << report.failures << "\n";
            return report.failures == 0 ? kExitOk : kExitVerificationFailed;
        }
        if (*gates) {
            auto params = make_params(gates_p.n, gates_p.k, max_qubits);
            auto r = gate_count_report(params);
            out << "universal=" << r.universal << "\n"
                << "controls_per_gate=" << params.addr_qubits + 1 << "\n"
                << "qrom_max=" << r.qrom_max << "\n"
                << "generic_estimate=" << r.generic_estimate << "\n";
            return kExitOk;
        }
    } catch (const UsageError &e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument &e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::out_of_range &e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::length_error &e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception &e) {
        err << "error: " << e.what() << "\n";
        return kExitVerificationFailed;
    }
    return kExitUsage;
}

}  // namespace uqram
