// Copyright 2026 The sqir Authors
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

#include "cli.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <numbers>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "sqir/algorithms.h"
#include "sqir/harness.h"
#include "sqir/semantics.h"
#include "sqir/text_format.h"

namespace sqir::cli {

namespace {

namespace alg = sqir::algorithms;
using json = nlohmann::ordered_json;

constexpr std::size_t kDenoteQubitLimit = 6;
constexpr double kPrintCutoff = 1e-12;

/// Raised by subcommands to leave with a message and an exit code.
struct Exit {
    int code;
    std::string message;
};

// 12 significant digits; rounding residue at or below the cutoff prints as 0.
double round12(double v) {
    if (std::abs(v) <= kPrintCutoff) return 0.0;
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    const double r = std::strtod(buf, nullptr);
    return r == 0.0 ? 0.0 : r;
}

json complex_json(Complex z) { return json::array({round12(z.real()), round12(z.imag())}); }

std::string bits(std::size_t index, std::size_t d) {
    std::string s(d, '0');
    for (std::size_t q = 0; q < d; ++q) {
        if ((index >> (d - 1 - q)) & 1U) s[q] = '1';
    }
    return s;
}

json amplitudes_json(const Matrix& v, std::size_t d) {
    json out = json::object();
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (std::abs(v[i]) > kPrintCutoff) out[bits(i, d)] = complex_json(v[i]);
    }
    return out;
}

json probabilities_json(const Matrix& v, std::size_t d) {
    json out = json::object();
    for (std::size_t i = 0; i < v.size(); ++i) {
        const double p = std::norm(v[i]);
        if (p > kPrintCutoff) out[bits(i, d)] = round12(p);
    }
    return out;
}

json matrix_json(const Matrix& m) {
    json rows = json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        json row = json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(complex_json(m(r, c)));
        rows.push_back(std::move(row));
    }
    return rows;
}

std::string scalar_text(const json& j) {
    if (j.is_string()) return j.get<std::string>();
    if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number()) {
        const double re = j[0].get<double>();
        const double im = j[1].get<double>();
        std::ostringstream os;
        os << re << (im < 0 ? " - " : " + ") << std::abs(im) << "i";
        return os.str();
    }
    return j.dump();
}

bool is_leaf(const json& j) {
    return !j.is_structured() || (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number());
}

void render(std::ostream& os, const json& j, int indent) {
    const std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
    if (j.is_object()) {
        for (const auto& [key, value] : j.items()) {
            if (is_leaf(value)) {
                os << pad << key << ": " << scalar_text(value) << '\n';
            } else {
                os << pad << key << ":\n";
                render(os, value, indent + 1);
            }
        }
    } else if (j.is_array()) {
        for (const auto& value : j) {
            if (is_leaf(value)) {
                os << pad << "- " << scalar_text(value) << '\n';
            } else if (value.is_array() && std::all_of(value.begin(), value.end(), is_leaf)) {
                os << pad;
                for (const auto& x : value) os << std::setw(24) << scalar_text(x);
                os << '\n';
            } else {
                os << pad << "-\n";
                render(os, value, indent + 1);
            }
        }
    } else {
        os << pad << scalar_text(j) << '\n';
    }
}

void emit(std::ostream& out, const json& j, bool pretty) {
    if (pretty) {
        render(out, j, 0);
    } else {
        out << j.dump() << '\n';
    }
}

text::CircuitDocument load_document(const std::string& path) {
    std::string content;
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        content = ss.str();
    } else {
        std::ifstream in(path);
        if (!in) throw Exit{kExitUsage, "cannot read '" + path + "'"};
        std::ostringstream ss;
        ss << in.rdbuf();
        content = ss.str();
    }
    try {
        return text::parse(content);
    } catch (const text::ParseError& e) {
        throw Exit{kExitUsage, path + ": " + e.what()};
    }
}

void require_well_typed(const text::CircuitDocument& doc, const std::string& path) {
    if (auto problem = text::find_type_problem(doc)) {
        throw Exit{kExitFailure, path + ": line " + std::to_string(problem->line) + ": " + problem->message};
    }
}

Matrix state_from_bits(const std::string& s, std::size_t d) {
    if (s.size() != d || s.find_first_not_of("01") != std::string::npos) {
        throw Exit{kExitUsage, "--state must be a bitstring of length " + std::to_string(d)};
    }
    std::size_t index = 0;
    for (char c : s) index = (index << 1) | static_cast<std::size_t>(c == '1');
    return basis_vector(pow2(d), index);
}

struct RunArgs {
    std::string file;
    std::optional<std::string> state;
    std::string semantics;
};

int cmd_denote(const std::string& path, std::ostream& out, bool pretty) {
    const text::CircuitDocument doc = load_document(path);
    if (doc.qubits > kDenoteQubitLimit) {
        throw Exit{kExitUsage, "denote prints matrices for at most " + std::to_string(kDenoteQubitLimit) +
                                   " qubits; this circuit has " + std::to_string(doc.qubits)};
    }
    const auto u = text::to_unitary(doc);
    if (!u) throw Exit{kExitUsage, "denote needs a measurement-free circuit"};
    json j;
    j["qubits"] = doc.qubits;
    j["well_typed"] = well_typed(*u);
    j["matrix"] = matrix_json(uc_eval(*u));
    emit(out, j, pretty);
    return kExitOk;
}

int cmd_run(const RunArgs& a, std::ostream& out, bool pretty) {
    const text::CircuitDocument doc = load_document(a.file);
    require_well_typed(doc, a.file);
    const std::size_t d = doc.qubits;
    const Program p = text::to_program(doc);
    const Matrix psi = a.state ? state_from_bits(*a.state, d) : basis_vector(pow2(d), 0);
    std::string semantics = a.semantics;
    if (semantics.empty()) semantics = is_unitary_only(p) ? "vector" : "nondet";

    json j;
    j["semantics"] = semantics;
    j["qubits"] = d;
    if (semantics == "vector") {
        const auto u = text::to_unitary(doc);
        if (!u) throw Exit{kExitUsage, "vector semantics needs a measurement-free circuit; use --semantics nondet"};
        const Matrix outv = apply_unitary(*u, psi);
        j["amplitudes"] = amplitudes_json(outv, d);
        j["probabilities"] = probabilities_json(outv, d);
    } else if (semantics == "density") {
        if (d > harness::kCrossCheckQubitLimit) {
            throw Exit{kExitUsage, "density semantics supports at most " +
                                       std::to_string(harness::kCrossCheckQubitLimit) + " qubits"};
        }
        const Matrix rho = density_eval(p, density_of(psi));
        json probs = json::object();
        for (std::size_t i = 0; i < rho.rows(); ++i) {
            const double pr = rho(i, i).real();
            if (pr > kPrintCutoff) probs[bits(i, d)] = round12(pr);
        }
        j["probabilities"] = std::move(probs);
        j["trace"] = round12(trace(rho).real());
        if (d <= kDenoteQubitLimit) j["density"] = matrix_json(rho);
    } else if (semantics == "nondet") {
        json outcomes = json::array();
        for (const auto& o : nondet_eval(p, psi).outcomes) {
            outcomes.push_back(
                {{"label", o.label}, {"probability", round12(o.prob)}, {"amplitudes", amplitudes_json(o.state, d)}});
        }
        j["outcomes"] = std::move(outcomes);
    } else {
        throw Exit{kExitUsage, "unknown semantics '" + semantics + "'"};
    }
    emit(out, j, pretty);
    return kExitOk;
}

struct CheckArgs {
    std::string id;
    std::optional<std::size_t> n, k, i_max, samples;
    std::uint64_t seed = 0;
    bool deterministic = false;
    bool list = false;
};

int cmd_check(const CheckArgs& a, std::ostream& out, bool pretty) {
    if (a.list) {
        json ids = json::array();
        for (const auto& info : harness::registry()) ids.push_back({{"id", info.id}, {"lemma", info.lemma}});
        emit(out, ids, pretty);
        return kExitOk;
    }
    if (a.id.empty()) throw Exit{kExitUsage, "check needs a theorem id (see check --list)"};
    harness::TheoremConfig cfg;
    cfg.n = a.n;
    cfg.k = a.k;
    cfg.i_max = a.i_max;
    cfg.samples = a.samples;
    cfg.seed = a.seed;
    harness::TheoremReport report;
    try {
        report = harness::check_theorem(a.id, cfg);
    } catch (const harness::UnknownTheorem& e) {
        throw Exit{kExitUsage, std::string(e.what()) + " (see check --list)"};
    }
    if (pretty) {
        const auto& info = harness::theorem_info(a.id);
        out << "theorem: " << report.theorem << " (" << info.lemma << ")\n"
            << "result: " << (report.pass ? "PASS" : "FAIL") << '\n'
            << "points: " << report.points.size() << '\n'
            << "max_abs_error: " << report.max_abs_error << " (tolerance " << info.tolerance << ")\n"
            << "seed: " << report.seed << '\n';
        if (!a.deterministic) out << "wall_time_s: " << report.wall_time_s << '\n';
    } else {
        out << harness::to_json(report, !a.deterministic) << '\n';
    }
    return report.pass ? kExitOk : kExitFailure;
}

struct AlgoArgs {
    std::string name;
    std::optional<std::size_t> n, k, i, s, z, x;
    std::optional<double> delta;
    std::size_t b1 = 0, b2 = 0;
    std::string f = "balanced";
    std::uint64_t seed = 0;
};

json algo_ghz(const AlgoArgs& a) {
    const std::size_t n = a.n.value_or(3);
    if (n == 0 || n > kStateVectorQubitLimit) throw Exit{kExitUsage, "ghz needs 1 <= n <= 24"};
    return {{"n", n}, {"amplitudes", amplitudes_json(apply_unitary(alg::ghz(n), basis_vector(pow2(n), 0)), n)}};
}

json algo_superdense(const AlgoArgs& a) {
    if (a.b1 > 1 || a.b2 > 1) throw Exit{kExitUsage, "--b1 and --b2 must be 0 or 1"};
    const Matrix outv = apply_unitary(alg::superdense(a.b1 == 1, a.b2 == 1), basis_vector(4, 0));
    std::size_t best = 0;
    for (std::size_t i = 1; i < 4; ++i) {
        if (std::norm(outv[i]) > std::norm(outv[best])) best = i;
    }
    return {{"b1", a.b1}, {"b2", a.b2}, {"amplitudes", amplitudes_json(outv, 2)}, {"decoded", bits(best, 2)}};
}

json algo_teleport(const AlgoArgs& a) {
    harness::Rng rng(a.seed);
    const Matrix psi = harness::random_state(rng, 2);
    const Matrix target = kron(basis_vector(4, 0), psi);
    json branches = json::array();
    for (const auto& o : nondet_eval(alg::teleport(), kron(psi, basis_vector(4, 0))).outcomes) {
        branches.push_back({{"label", o.label},
                            {"probability", round12(o.prob)},
                            {"fidelity", round12(probability_of_outcome(target, o.state))}});
    }
    return {{"seed", a.seed}, {"input", amplitudes_json(psi, 1)}, {"branches", std::move(branches)}};
}

json algo_dj(const AlgoArgs& a) {
    const std::size_t n = a.n.value_or(3);
    if (n == 0 || n + 1 > kStateVectorQubitLimit) throw Exit{kExitUsage, "dj needs 1 <= n <= 23"};
    harness::Rng rng(a.seed);
    alg::BoolFn f;
    if (a.f == "constant0") {
        f = [](std::size_t) { return false; };
    } else if (a.f == "constant1") {
        f = [](std::size_t) { return true; };
    } else if (a.f == "balanced") {
        f = harness::random_balanced_function(rng, n);
    } else if (a.f == "random") {
        f = harness::random_boolean_function(rng, n);
    } else {
        throw Exit{kExitUsage, "--f must be constant0, constant1, balanced or random"};
    }
    const double p = alg::dj_accept_prob(n, f);
    const char* verdict = p > 1.0 - 1e-9 ? "constant" : (p < 1e-9 ? "balanced" : "neither");
    return {{"n", n}, {"f", a.f}, {"count", alg::count(f, n)}, {"accept_probability", round12(p)},
            {"verdict", verdict}};
}

json algo_simon(const AlgoArgs& a) {
    const std::size_t n = a.n.value_or(3);
    if (n == 0 || 2 * n > kStateVectorQubitLimit) throw Exit{kExitUsage, "simon needs 1 <= n <= 12"};
    const std::size_t s = a.s.value_or(1);
    if (s >= pow2(n)) throw Exit{kExitUsage, "--s must be below 2^n"};
    harness::Rng rng(a.seed);
    const alg::IndexFn f = harness::random_simon_function(rng, n, s);
    json probs = json::object();
    for (std::size_t y = 0; y < pow2(n); ++y) {
        const double p = alg::simon_prob(n, f, y);
        if (p > kPrintCutoff) probs[bits(y, n)] = round12(p);
    }
    return {{"n", n}, {"s", bits(s, n)}, {"probabilities", std::move(probs)}};
}

json algo_grover(const AlgoArgs& a) {
    const std::size_t n = a.n.value_or(3);
    if (n < 2 || n + 1 > kStateVectorQubitLimit) throw Exit{kExitUsage, "grover needs 2 <= n <= 23"};
    const std::size_t k = a.k.value_or(1);
    if (k == 0 || k > pow2(n)) throw Exit{kExitUsage, "--k must be in [1, 2^n]"};
    const double theta = alg::GroverParams{n, k, 0}.theta();
    const std::size_t i =
        a.i.value_or(static_cast<std::size_t>(std::max(0.0, std::round(std::numbers::pi / (4.0 * theta) - 0.5))));
    harness::Rng rng(a.seed);
    const alg::BoolFn f = harness::random_function_with_count(rng, n, k);
    json solutions = json::array();
    for (std::size_t z = 0; z < pow2(n); ++z) {
        if (f(z)) solutions.push_back(bits(z, n));
    }
    return {{"n", n},
            {"k", k},
            {"i", i},
            {"solutions", std::move(solutions)},
            {"success_probability", round12(alg::grover_success_prob(n, f, i))},
            {"expected", round12(alg::GroverParams{n, k, i}.success_prob())}};
}

json algo_qft(const AlgoArgs& a) {
    const std::size_t n = a.n.value_or(3);
    if (n == 0 || n > kStateVectorQubitLimit) throw Exit{kExitUsage, "qft needs 1 <= n <= 24"};
    const std::size_t x = a.x.value_or(1);
    if (x >= pow2(n)) throw Exit{kExitUsage, "--x must be below 2^n"};
    return {{"n", n}, {"x", bits(x, n)},
            {"amplitudes", amplitudes_json(apply_unitary(alg::qft(n), basis_vector(pow2(n), x)), n)}};
}

json algo_qpe(const AlgoArgs& a) {
    const std::size_t k = a.k.value_or(3);
    if (k == 0 || k + 1 > kStateVectorQubitLimit) throw Exit{kExitUsage, "qpe needs 1 <= k <= 23"};
    const std::size_t z = a.z.value_or(5 % pow2(k));
    if (z >= pow2(k)) throw Exit{kExitUsage, "--z must be below 2^k"};
    const alg::QpeParams params{k, 1, z, a.delta.value_or(0.0)};
    if (!params.delta_admissible()) throw Exit{kExitUsage, "--delta must lie in [-1/2^(k+1), 1/2^(k+1))"};
    const UnitaryProgram u = gates::rz(1, 2.0 * std::numbers::pi * params.theta(), 0);
    const Matrix outv = apply_unitary(alg::qpe(k, 1, u), basis_vector(pow2(k + 1), 1));
    json probs = json::object();
    std::size_t best = 0;
    double best_p = -1.0;
    for (std::size_t y = 0; y < pow2(k); ++y) {
        const double p = prob_partial_meas(basis_vector(pow2(k), y), outv);
        if (p > kPrintCutoff) probs[bits(y, k)] = round12(p);
        if (p > best_p) {
            best_p = p;
            best = y;
        }
    }
    return {{"k", k},
            {"theta", round12(params.theta())},
            {"probabilities", std::move(probs)},
            {"estimate", bits(best, k)},
            {"estimate_value", round12(static_cast<double>(best) / static_cast<double>(pow2(k)))}};
}

int cmd_algo(const AlgoArgs& a, std::ostream& out, bool pretty) {
    json body;
    if (a.name == "ghz") {
        body = algo_ghz(a);
    } else if (a.name == "superdense") {
        body = algo_superdense(a);
    } else if (a.name == "teleport") {
        body = algo_teleport(a);
    } else if (a.name == "dj") {
        body = algo_dj(a);
    } else if (a.name == "simon") {
        body = algo_simon(a);
    } else if (a.name == "grover") {
        body = algo_grover(a);
    } else if (a.name == "qft") {
        body = algo_qft(a);
    } else if (a.name == "qpe") {
        body = algo_qpe(a);
    } else {
        throw Exit{kExitUsage, "unknown algorithm '" + a.name +
                                   "' (expected ghz, superdense, teleport, dj, simon, grover, qft or qpe)"};
    }
    json j;
    j["algorithm"] = a.name;
    for (auto& [key, value] : body.items()) j[key] = value;
    emit(out, j, pretty);
    return kExitOk;
}

int cmd_typecheck(const std::string& path, std::ostream& out, bool pretty) {
    const text::CircuitDocument doc = load_document(path);
    json j;
    const auto problem = text::find_type_problem(doc);
    j["well_typed"] = !problem.has_value();
    if (problem) {
        j["line"] = problem->line;
        j["error"] = problem->message;
    }
    emit(out, j, pretty);
    return problem ? kExitFailure : kExitOk;
}

int cmd_export_qasm(const std::string& path, std::ostream& out) {
    const text::CircuitDocument doc = load_document(path);
    require_well_typed(doc, path);
    try {
        out << text::export_qasm(text::to_program(doc));
    } catch (const Error& e) {
        throw Exit{kExitFailure, e.what()};
    }
    return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"sqir: small quantum IR toolkit"};
    app.require_subcommand(1);
    app.fallthrough();
    bool pretty = false;
    app.add_flag("--pretty", pretty, "Human-readable output instead of JSON");
    app.footer(
        "Bitstrings list qubit 0 first (most significant). Exit codes: 0 success, 1 check failed or circuit "
        "ill-typed, 2 usage or parse error.");

    std::string file;
    auto* denote = app.add_subcommand("denote", "Print the unitary matrix of a measurement-free circuit (d <= 6)");
    denote->add_option("file", file, "Circuit file, or - for stdin")->required();

    RunArgs run_args;
    auto* run = app.add_subcommand("run", "Run a circuit and print the outcome table");
    run->add_option("file", run_args.file, "Circuit file, or - for stdin")->required();
    run->add_option("--state", run_args.state, "Input basis state as a bitstring, qubit 0 first");
    run->add_option("--semantics", run_args.semantics,
                    "vector, density or nondet (default: vector without measurement, nondet otherwise)")
        ->check(CLI::IsMember({"vector", "density", "nondet"}));

    CheckArgs check_args;
    auto* check = app.add_subcommand("check", "Check a theorem numerically and print its report");
    check->add_option("theorem", check_args.id, "Theorem id");
    check->add_flag("--list", check_args.list, "List theorem ids");
    check->add_option("--n", check_args.n, "Register size override");
    check->add_option("--k", check_args.k, "Second size parameter override");
    check->add_option("--i-max", check_args.i_max, "Largest iteration count");
    check->add_option("--samples", check_args.samples, "Number of random samples");
    check->add_option("--seed", check_args.seed, "PRNG seed");
    check->add_flag("--deterministic", check_args.deterministic, "Write wall_time_s as 0");

    AlgoArgs algo_args;
    auto* algo = app.add_subcommand("algo", "Build and run a named algorithm");
    algo->add_option("name", algo_args.name, "ghz, superdense, teleport, dj, simon, grover, qft or qpe")->required();
    algo->add_option("--n", algo_args.n, "Register size");
    algo->add_option("--k", algo_args.k, "Solutions (grover) or precision bits (qpe)");
    algo->add_option("--i", algo_args.i, "Grover iterations");
    algo->add_option("--s", algo_args.s, "Hidden period (simon)");
    algo->add_option("--z", algo_args.z, "Phase numerator (qpe)");
    algo->add_option("--delta", algo_args.delta, "Phase offset (qpe)");
    algo->add_option("--x", algo_args.x, "Input basis index (qft)");
    algo->add_option("--b1", algo_args.b1, "First bit (superdense)");
    algo->add_option("--b2", algo_args.b2, "Second bit (superdense)");
    algo->add_option("--f", algo_args.f, "constant0, constant1, balanced or random (dj)");
    algo->add_option("--seed", algo_args.seed, "PRNG seed");

    auto* typecheck = app.add_subcommand("typecheck", "Exit 0 iff the circuit is well-typed");
    typecheck->add_option("file", file, "Circuit file, or - for stdin")->required();

    auto* qasm = app.add_subcommand("export-qasm", "Print the circuit as OpenQASM 2.0");
    qasm->add_option("file", file, "Circuit file, or - for stdin")->required();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*denote) return cmd_denote(file, out, pretty);
        if (*run) return cmd_run(run_args, out, pretty);
        if (*check) return cmd_check(check_args, out, pretty);
        if (*algo) return cmd_algo(algo_args, out, pretty);
        if (*typecheck) return cmd_typecheck(file, out, pretty);
        if (*qasm) return cmd_export_qasm(file, out);
    } catch (const Exit& e) {
        err << "sqir: " << e.message << '\n';
        return e.code;
    } catch (const LimitError& e) {
        err << "sqir: " << e.what() << '\n';
        return kExitUsage;
    } catch (const Error& e) {
        err << "sqir: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}

}  // namespace sqir::cli
