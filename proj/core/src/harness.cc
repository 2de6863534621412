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

#include "sqir/harness.h"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <numbers>

#include "json.hpp"
#include "sqir/semantics.h"

namespace sqir::harness {

namespace {

namespace alg = sqir::algorithms;
using ordered_json = nlohmann::ordered_json;

constexpr double kPi = std::numbers::pi;

using Runner = std::function<std::vector<Point>(const TheoremConfig&, Rng&)>;

struct Entry {
    TheoremInfo info;
    Runner run;
};

std::int64_t as_int(std::size_t v) { return static_cast<std::int64_t>(v); }

void require_qubits(std::size_t d, const char* theorem) {
    const std::size_t limit = dense_qubit_limit();
    if (d > limit) {
        throw LimitError(std::string(theorem) + ": configuration needs " + std::to_string(d) +
                         " qubits, above the limit of " + std::to_string(limit));
    }
}

// Values of a swept parameter: the override alone, or the default range.
std::vector<std::size_t> sweep(const std::optional<std::size_t>& fixed, std::size_t lo, std::size_t hi) {
    if (fixed) return {*fixed};
    std::vector<std::size_t> out;
    for (std::size_t v = lo; v <= hi; ++v) out.push_back(v);
    return out;
}

std::vector<std::size_t> sweep(const std::optional<std::size_t>& fixed, std::vector<std::size_t> defaults) {
    if (fixed) return {*fixed};
    return defaults;
}

void require_at_least(std::size_t v, std::size_t lo, const char* what, const char* theorem) {
    if (v < lo) {
        throw Error(std::string(theorem) + ": " + what + " must be at least " + std::to_string(lo) + ", got " +
                    std::to_string(v));
    }
}

Matrix zero_state(std::size_t d) { return basis_vector(pow2(d), 0); }

Matrix ket(std::size_t d, std::size_t k) { return basis_vector(pow2(d), k); }

Matrix ket0_density() { return density_of(basis_vector(2, 0)); }

Matrix minus_state() {
    const double r = 1.0 / std::sqrt(2.0);
    return Matrix::column({r, -r});
}

// (1/√2)(|0⟩ + e^{2πi x/2^{n-j}}|1⟩) for j = 0..n-1.
Matrix qft_closed_form(std::size_t n, std::size_t x) {
    const double r = 1.0 / std::sqrt(2.0);
    return vkron(n, [&](std::size_t j) {
        const double frac = static_cast<double>(x) / static_cast<double>(pow2(n - j));
        return Matrix::column({r, r * std::polar(1.0, 2.0 * kPi * frac)});
    });
}

std::vector<Point> run_ghz(const TheoremConfig& cfg, Rng&) {
    const std::size_t top = cfg.n.value_or(10);
    require_at_least(top, 1, "n", "ghz");
    require_qubits(top, "ghz");
    std::vector<Point> pts;
    for (std::size_t n = 1; n <= top; ++n) {
        Matrix expected(pow2(n), 1);
        expected[0] = 1.0 / std::sqrt(2.0);
        expected[pow2(n) - 1] = 1.0 / std::sqrt(2.0);
        const Matrix out = apply_unitary(alg::ghz(n), zero_state(n));
        pts.push_back({{{"n", as_int(n)}}, max_abs_diff(out, expected), 0.0});
    }
    return pts;
}

std::vector<Point> run_coin(const TheoremConfig&, Rng&) {
    const Matrix out = density_eval(alg::coin(), ket0_density());
    const Matrix expected = add(scale(0.5, density_of(basis_vector(2, 1))), scale(0.5, ket0_density()));
    return {{{{"input", std::string("|0><0|")}}, max_abs_diff(out, expected), 0.0}};
}

std::vector<Point> run_reset(const TheoremConfig& cfg, Rng& rng) {
    const std::size_t samples = cfg.samples.value_or(20);
    std::vector<Point> pts;
    for (std::size_t s = 0; s < samples; ++s) {
        const Matrix rho = random_density(rng, 2);
        pts.push_back({{{"sample", as_int(s)}, {"semantics", std::string("density")}},
                       max_abs_diff(density_eval(reset(1, 0), rho), ket0_density()),
                       0.0});
        const OutcomeSet outs = nondet_eval(reset(1, 0), random_state(rng, 2));
        double worst = 0.0;
        for (const auto& o : outs.outcomes) {
            // Residual from the closest multiple of |0⟩.
            Matrix residual = o.state;
            residual[0] = 0.0;
            worst = std::max(worst, norm(residual));
        }
        pts.push_back({{{"sample", as_int(s)}, {"semantics", std::string("nondet")}}, worst, 0.0});
    }
    return pts;
}

std::vector<Point> run_superdense(const TheoremConfig&, Rng&) {
    std::vector<Point> pts;
    for (bool b1 : {false, true}) {
        for (bool b2 : {false, true}) {
            const Matrix out = apply_unitary(alg::superdense(b1, b2), zero_state(2));
            const Matrix expected = f_to_vec(BasisAssignment({b1, b2}));
            pts.push_back({{{"b1", b1}, {"b2", b2}}, max_abs_diff(out, expected), 0.0});
        }
    }
    return pts;
}

// Distance from v to the nearest c·target.
double proportional_residual(const Matrix& v, const Matrix& target) {
    const Complex c = inner(target, v) / inner(target, target);
    return norm(sub(v, scale(c, target)));
}

std::vector<Point> run_teleport(const TheoremConfig& cfg, Rng& rng) {
    const std::size_t samples = cfg.samples.value_or(20);
    const Program prog = alg::teleport();
    const Matrix zz = kron(ket0_density(), ket0_density());
    std::vector<Point> pts;
    for (std::size_t s = 0; s < samples; ++s) {
        const Matrix rho = random_density(rng, 2);
        const Matrix out = density_eval(prog, kron(rho, zz));
        pts.push_back({{{"sample", as_int(s)}, {"semantics", std::string("density")}},
                       max_abs_diff(out, kron(zz, rho)),
                       0.0});
    }
    for (std::size_t s = 0; s < samples; ++s) {
        const Matrix psi = random_state(rng, 2);
        const OutcomeSet outs = nondet_eval(prog, kron(psi, zero_state(2)));
        const Matrix target = kron(zero_state(2), psi);
        double worst = 0.0;
        for (const auto& o : outs.outcomes) worst = std::max(worst, proportional_residual(o.state, target));
        pts.push_back({{{"sample", as_int(s)}, {"semantics", std::string("nondet")}, {"check", std::string("proportional")}},
                       worst,
                       0.0});
        pts.push_back({{{"sample", as_int(s)}, {"semantics", std::string("nondet")}, {"check", std::string("branches")}},
                       static_cast<double>(outs.outcomes.size()),
                       4.0});
    }
    return pts;
}

std::vector<Point> run_deutsch_jozsa(const TheoremConfig& cfg, Rng& rng) {
    const std::size_t top = cfg.n.value_or(4);
    require_at_least(top, 1, "n", "deutsch_jozsa");
    require_qubits(top + 1, "deutsch_jozsa");
    const std::vector<std::size_t> ns = cfg.n ? std::vector<std::size_t>{top} : sweep(std::nullopt, 1, top);
    std::vector<Point> pts;
    auto record = [&](std::size_t n, const alg::BoolFn& f, const char* kind) {
        const std::size_t c = alg::count(f, n);
        const double ratio = 1.0 - 2.0 * static_cast<double>(c) / static_cast<double>(pow2(n));
        pts.push_back({{{"n", as_int(n)}, {"case", std::string(kind)}, {"count", as_int(c)}},
                       alg::dj_accept_prob(n, f),
                       ratio * ratio});
    };
    for (std::size_t n : ns) {
        record(n, [](std::size_t) { return false; }, "constant");
        record(n, [](std::size_t) { return true; }, "constant");
        record(n, random_balanced_function(rng, n), "balanced");
    }
    const std::size_t samples = cfg.samples.value_or(50);
    for (std::size_t s = 0; s < samples; ++s) record(ns[s % ns.size()], random_boolean_function(rng, ns[s % ns.size()]), "random");
    return pts;
}

std::vector<Point> run_simon(const TheoremConfig& cfg, Rng& rng) {
    const std::vector<std::size_t> ns = sweep(cfg.n, {2, 3});
    std::vector<Point> pts;
    for (std::size_t n : ns) {
        require_at_least(n, 1, "n", "simon");
        require_qubits(2 * n, "simon");
        const std::size_t dim = pow2(n);
        for (std::size_t s = 0; s < dim; ++s) {
            const alg::IndexFn f = random_simon_function(rng, n, s);
            for (std::size_t y = 0; y < dim; ++y) {
                const double measured = alg::simon_prob(n, f, y);
                double expected = 0.0;
                if (s == 0) {
                    expected = 1.0 / static_cast<double>(dim);
                } else if (alg::dot_mod2(s, y) == 0) {
                    expected = 1.0 / static_cast<double>(pow2(n - 1));
                }
                pts.push_back({{{"n", as_int(n)}, {"s", as_int(s)}, {"y", as_int(y)}, {"route", std::string("law")}},
                               measured,
                               expected});
                if (s == 0) continue;
                // Same probability through the to_injective form of the norm-sum term.
                const alg::IndexFn inj = alg::to_injective(n, s, f);
                Matrix acc(2 * dim, 1);
                for (std::size_t x = 0; x < dim; ++x) {
                    const double sign = (alg::dot_mod2(x, y) ? -1.0 : 1.0) + (alg::dot_mod2(x ^ s, y) ? -1.0 : 1.0);
                    acc[inj(x)] += sign;
                }
                const double scale_sq = 1.0 / static_cast<double>(dim * dim);
                pts.push_back(
                    {{{"n", as_int(n)}, {"s", as_int(s)}, {"y", as_int(y)}, {"route", std::string("to_injective")}},
                     measured,
                     0.5 * norm(acc) * norm(acc) * scale_sq});
            }
        }
    }
    return pts;
}

std::vector<Point> run_grover(const TheoremConfig& cfg, Rng& rng) {
    const std::vector<std::size_t> ns = sweep(cfg.n, {2, 3, 4});
    const std::vector<std::size_t> ks = sweep(cfg.k, {1, 2, 3});
    const std::size_t i_max = cfg.i_max.value_or(10);
    std::vector<Point> pts;
    for (std::size_t n : ns) {
        require_at_least(n, 2, "n", "grover");
        require_qubits(n + 1, "grover");
        for (std::size_t k : ks) {
            require_at_least(k, 1, "k", "grover");
            if (k > pow2(n)) throw Error("grover: k exceeds 2^n");
            const alg::BoolFn f = random_function_with_count(rng, n, k);
            for (std::size_t i = 0; i <= i_max; ++i) {
                pts.push_back({{{"n", as_int(n)}, {"k", as_int(k)}, {"i", as_int(i)}},
                               alg::grover_success_prob(n, f, i),
                               alg::GroverParams{n, k, i}.success_prob()});
            }
        }
    }
    return pts;
}

std::vector<Point> run_grover_loop(const TheoremConfig& cfg, Rng& rng) {
    const std::vector<std::size_t> ns = sweep(cfg.n, {2, 3, 4});
    const std::vector<std::size_t> ks = sweep(cfg.k, {1, 2, 3});
    const std::size_t i_max = cfg.i_max.value_or(8);
    std::vector<Point> pts;
    for (std::size_t n : ns) {
        require_at_least(n, 2, "n", "grover_loop");
        require_qubits(n + 1, "grover_loop");
        for (std::size_t k : ks) {
            require_at_least(k, 1, "k", "grover_loop");
            if (k >= pow2(n)) throw Error("grover_loop: k must be below 2^n");
            const alg::BoolFn f = random_function_with_count(rng, n, k);
            const Matrix good = alg::uniform_over(n, f, true);
            const Matrix bad = alg::uniform_over(n, f, false);
            const double theta = alg::GroverParams{n, k, 0}.theta();
            const UnitaryProgram body = alg::grover_body(n, alg::boolean_oracle({n, f}));
            const Matrix start = kron(alg::uniform_superposition(n), minus_state());
            for (std::size_t i = 0; i <= i_max; ++i) {
                const double angle = (2.0 * static_cast<double>(i) + 1.0) * theta;
                const double sign = (i % 2 == 0) ? 1.0 : -1.0;
                const Matrix expected =
                    kron(scale(sign, add(scale(std::sin(angle), good), scale(std::cos(angle), bad))), minus_state());
                const Matrix out = apply_unitary(niter(i, body), start);
                pts.push_back({{{"n", as_int(n)}, {"k", as_int(k)}, {"i", as_int(i)}}, max_abs_diff(out, expected), 0.0});
            }
        }
    }
    return pts;
}

std::vector<Point> run_qft(const TheoremConfig& cfg, Rng&) {
    const std::size_t top = cfg.n.value_or(6);
    require_at_least(top, 1, "n", "qft");
    require_qubits(top, "qft");
    std::vector<Point> pts;
    for (std::size_t n : cfg.n ? std::vector<std::size_t>{top} : sweep(std::nullopt, 1, top)) {
        const UnitaryProgram prog = alg::qft(n);
        for (std::size_t x = 0; x < pow2(n); ++x) {
            const Matrix out = apply_unitary(prog, ket(n, x));
            pts.push_back({{{"n", as_int(n)}, {"x", as_int(x)}}, max_abs_diff(out, qft_closed_form(n, x)), 0.0});
        }
    }
    return pts;
}

std::vector<Point> run_controlled_rotations(const TheoremConfig& cfg, Rng&) {
    const std::size_t top = cfg.n.value_or(6);
    require_at_least(top, 2, "n", "controlled_rotations");
    require_qubits(top, "controlled_rotations");
    std::vector<Point> pts;
    for (std::size_t n : cfg.n ? std::vector<std::size_t>{top} : sweep(std::nullopt, 2, top)) {
        const UnitaryProgram prog = alg::controlled_rotations(n);
        const std::size_t low = pow2(n - 1);
        for (std::size_t x = 0; x < pow2(n); ++x) {
            const std::size_t x0 = x / low;
            const std::size_t rest = x % low;
            const double phase = 2.0 * kPi * static_cast<double>(x0 * rest) / static_cast<double>(pow2(n));
            const Matrix expected = scale(std::polar(1.0, phase), ket(n, x));
            pts.push_back({{{"n", as_int(n)}, {"x", as_int(x)}},
                           max_abs_diff(apply_unitary(prog, ket(n, x)), expected),
                           0.0});
        }
    }
    return pts;
}

// u = Rz(a_0) ⊗ ... ⊗ Rz(a_{n-1}) with Σ a_q = 2πθ, so |1...1⟩ has eigenphase θ.
UnitaryProgram rz_eigen_program(std::size_t n, double theta) {
    const double filler = 2.0 * kPi * 0.1;
    UnitaryProgram u = gates::rz(n, 2.0 * kPi * theta - static_cast<double>(n - 1) * filler, 0);
    for (Qubit q = 1; q < n; ++q) u = u >> gates::rz(n, filler, q);
    return u;
}

Matrix qpe_output(const alg::QpeParams& p) {
    const UnitaryProgram u = rz_eigen_program(p.n, p.theta());
    const Matrix psi = ket(p.n, pow2(p.n) - 1);
    return apply_unitary(alg::qpe(p.k, p.n, u), kron(zero_state(p.k), psi));
}

std::vector<Point> run_qpe_exact(const TheoremConfig& cfg, Rng&) {
    const std::vector<std::size_t> ks = sweep(cfg.k, {2, 3, 4});
    const std::size_t n = cfg.n.value_or(1);
    require_at_least(n, 1, "n", "qpe_exact");
    std::vector<Point> pts;
    for (std::size_t k : ks) {
        require_at_least(k, 2, "k", "qpe_exact");
        require_qubits(k + n, "qpe_exact");
        for (std::size_t z = 0; z < pow2(k); ++z) {
            const Matrix out = qpe_output({k, n, z, 0.0});
            const Matrix expected = kron(ket(k, z), ket(n, pow2(n) - 1));
            pts.push_back({{{"k", as_int(k)}, {"n", as_int(n)}, {"z", as_int(z)}}, max_abs_diff(out, expected), 0.0});
        }
    }
    return pts;
}

std::vector<Point> run_qpe_general(const TheoremConfig& cfg, Rng& rng) {
    const std::size_t k = cfg.k.value_or(3);
    const std::size_t n = cfg.n.value_or(1);
    require_at_least(k, 2, "k", "qpe_general");
    require_at_least(n, 1, "n", "qpe_general");
    require_qubits(k + n, "qpe_general");
    const std::size_t samples = cfg.samples.value_or(20);
    const double bound = 1.0 / static_cast<double>(pow2(k + 1));
    std::vector<Point> pts;
    for (std::size_t s = 0; s < samples; ++s) {
        double delta = 0.0;
        while (delta == 0.0) delta = uniform_real(rng, -bound, bound);
        const std::size_t z = uniform_below(rng, pow2(k));
        const Matrix out = qpe_output({k, n, z, delta});
        pts.push_back({{{"k", as_int(k)}, {"n", as_int(n)}, {"z", as_int(z)}, {"delta", delta}},
                       prob_partial_meas(ket(k, z), out),
                       4.0 / (kPi * kPi)});
    }
    return pts;
}

std::vector<Point> run_toffoli(const TheoremConfig& cfg, Rng&) {
    const std::size_t top = cfg.n.value_or(5);
    require_at_least(top, 3, "n", "toffoli");
    require_qubits(top, "toffoli");
    std::vector<Point> pts;
    for (std::size_t d = 3; d <= top; ++d) {
        for (Qubit a = 0; a < d; ++a) {
            for (Qubit b = 0; b < d; ++b) {
                for (Qubit c = 0; c < d; ++c) {
                    if (a == b || a == c || b == c) continue;
                    const Matrix m = uc_eval(toffoli(d, a, b, c));
                    double worst = 0.0;
                    for (std::size_t k = 0; k < pow2(d); ++k) {
                        const BasisAssignment f = BasisAssignment::from_index(d, k);
                        const BasisAssignment g = f.update(c, f(c) != (f(a) && f(b)));
                        worst = std::max(worst, max_abs_diff(mat_mul(m, f_to_vec(f)), f_to_vec(g)));
                    }
                    pts.push_back({{{"d", as_int(d)}, {"a", as_int(a)}, {"b", as_int(b)}, {"c", as_int(c)}}, worst, 0.0});
                }
            }
        }
    }
    return pts;
}

std::vector<Point> run_cnot_basis(const TheoremConfig& cfg, Rng&) {
    const std::size_t top = cfg.n.value_or(5);
    require_at_least(top, 2, "n", "f_to_vec_cnot");
    require_qubits(top, "f_to_vec_cnot");
    std::vector<Point> pts;
    for (std::size_t d = 2; d <= top; ++d) {
        for (Qubit i = 0; i < d; ++i) {
            for (Qubit j = 0; j < d; ++j) {
                if (i == j) continue;
                const Matrix m = uc_eval(gates::cnot(d, i, j));
                double worst = 0.0;
                for (std::size_t k = 0; k < pow2(d); ++k) {
                    const BasisAssignment f = BasisAssignment::from_index(d, k);
                    const BasisAssignment g = f.update(j, f(j) != f(i));
                    worst = std::max(worst, max_abs_diff(mat_mul(m, f_to_vec(f)), f_to_vec(g)));
                }
                pts.push_back({{{"d", as_int(d)}, {"i", as_int(i)}, {"j", as_int(j)}}, worst, 0.0});
            }
        }
    }
    return pts;
}

std::vector<Point> run_rz_basis(const TheoremConfig& cfg, Rng& rng) {
    const std::size_t top = cfg.n.value_or(5);
    require_at_least(top, 1, "n", "f_to_vec_rz");
    require_qubits(top, "f_to_vec_rz");
    std::vector<Point> pts;
    for (std::size_t d = 1; d <= top; ++d) {
        for (Qubit j = 0; j < d; ++j) {
            const double theta = uniform_real(rng, -kPi, kPi);
            const Matrix m = uc_eval(gates::rz(d, theta, j));
            double worst = 0.0;
            for (std::size_t k = 0; k < pow2(d); ++k) {
                const BasisAssignment f = BasisAssignment::from_index(d, k);
                const Matrix expected = scale(std::polar(1.0, f(j) ? theta : 0.0), f_to_vec(f));
                worst = std::max(worst, max_abs_diff(mat_mul(m, f_to_vec(f)), expected));
            }
            pts.push_back({{{"d", as_int(d)}, {"j", as_int(j)}, {"theta", theta}}, worst, 0.0});
        }
    }
    return pts;
}

Point cross_check_point(const Program& p, const Matrix& psi, Params params) {
    const Matrix mixture = nondet_eval(p, psi).mixture();
    const Matrix dens = density_eval(p, density_of(psi));
    return {std::move(params), max_abs_diff(mixture, dens), 0.0};
}

std::vector<Point> run_deferred_measurement(const TheoremConfig& cfg, Rng& rng) {
    const std::size_t samples = cfg.samples.value_or(10);
    std::vector<Point> pts;
    pts.push_back(cross_check_point(alg::coin(), zero_state(1), {{"program", std::string("coin")}}));
    for (std::size_t s = 0; s < samples; ++s) {
        pts.push_back(cross_check_point(reset(1, 0), random_state(rng, 2),
                                        {{"program", std::string("reset")}, {"sample", as_int(s)}}));
        pts.push_back(cross_check_point(alg::teleport(), kron(random_state(rng, 2), zero_state(2)),
                                        {{"program", std::string("teleport")}, {"sample", as_int(s)}}));
    }
    return pts;
}

const std::vector<Entry>& entries() {
    static const std::vector<Entry> table = {
        {{"ghz", "ghz", CheckKind::kEquality, kExactTol}, run_ghz},
        {{"coin", "coin_dist", CheckKind::kEquality, kExactTol}, run_coin},
        {{"reset", "reset_to_zero", CheckKind::kEquality, kExactTol}, run_reset},
        {{"superdense", "superdense_correct", CheckKind::kEquality, kExactTol}, run_superdense},
        {{"teleport", "teleport_correct", CheckKind::kEquality, kExactTol}, run_teleport},
        {{"deutsch_jozsa", "deutsch_jozsa_correct", CheckKind::kEquality, kProbabilityTol}, run_deutsch_jozsa},
        {{"simon", "simon_nonzero_A", CheckKind::kEquality, kProbabilityTol}, run_simon},
        {{"grover", "grover_correct", CheckKind::kEquality, kProbabilityTol}, run_grover},
        {{"grover_loop", "loop_body_action_on_unif_superpos", CheckKind::kEquality, kExactTol}, run_grover_loop},
        {{"qft", "QFT_semantics", CheckKind::kEquality, kExactTol}, run_qft},
        {{"controlled_rotations", "controlled_rotations_correct", CheckKind::kEquality, kExactTol},
         run_controlled_rotations},
        {{"qpe_exact", "QPE_correct_simplified", CheckKind::kEquality, kExactTol}, run_qpe_exact},
        {{"qpe_general", "QPE_semantics_full", CheckKind::kLowerBound, kBoundSlack}, run_qpe_general},
        {{"toffoli", "f_to_vec_TOFF", CheckKind::kEquality, kExactTol}, run_toffoli},
        {{"f_to_vec_cnot", "f_to_vec_CNOT", CheckKind::kEquality, kExactTol}, run_cnot_basis},
        {{"f_to_vec_rz", "f_to_vec_Rz", CheckKind::kEquality, kExactTol}, run_rz_basis},
        {{"deferred_measurement", "deferred measurement", CheckKind::kEquality, kCrossSemanticsTol},
         run_deferred_measurement},
    };
    return table;
}

const Entry& find_entry(std::string_view id) {
    for (const auto& e : entries()) {
        if (e.info.id == id) return e;
    }
    throw UnknownTheorem("unknown theorem id '" + std::string(id) + "'");
}

ordered_json param_json(const ParamValue& v) {
    return std::visit([](const auto& x) { return ordered_json(x); }, v);
}

}  // namespace

const std::vector<TheoremInfo>& registry() {
    static const std::vector<TheoremInfo> infos = [] {
        std::vector<TheoremInfo> out;
        for (const auto& e : entries()) out.push_back(e.info);
        return out;
    }();
    return infos;
}

const TheoremInfo& theorem_info(std::string_view id) { return find_entry(id).info; }

void finalize(TheoremReport& report, const TheoremInfo& info) {
    double worst = 0.0;
    for (const auto& p : report.points) {
        const double err = info.kind == CheckKind::kEquality ? std::abs(p.measured - p.expected)
                                                            : std::max(0.0, p.expected - p.measured);
        // NaN must fail the check rather than vanish in std::max.
        worst = std::isnan(err) ? err : std::max(worst, err);
        if (std::isnan(worst)) break;
    }
    report.max_abs_error = worst;
    report.pass = !std::isnan(worst) && worst <= info.tolerance;
}

TheoremReport check_theorem(std::string_view id, const TheoremConfig& config) {
    const Entry& entry = find_entry(id);
    const auto start = std::chrono::steady_clock::now();
    Rng rng(config.seed);
    TheoremReport report;
    report.theorem = entry.info.id;
    report.seed = config.seed;
    report.points = entry.run(config, rng);
    finalize(report, entry.info);
    report.wall_time_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

TheoremReport cross_check_semantics(const Program& p, const Matrix& psi) {
    if (p.dim() > kCrossCheckQubitLimit) {
        throw LimitError("cross_check_semantics supports at most " + std::to_string(kCrossCheckQubitLimit) +
                         " qubits");
    }
    const auto start = std::chrono::steady_clock::now();
    TheoremReport report;
    report.theorem = "deferred_measurement";
    report.points.push_back(cross_check_point(p, psi, {{"d", as_int(p.dim())}}));
    finalize(report, theorem_info("deferred_measurement"));
    report.wall_time_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

std::string to_json(const TheoremReport& report, bool include_wall_time, int indent) {
    ordered_json j;
    j["theorem"] = report.theorem;
    ordered_json points = ordered_json::array();
    for (const auto& p : report.points) {
        ordered_json params = ordered_json::object();
        for (const auto& [key, value] : p.params) params[key] = param_json(value);
        points.push_back({{"params", params}, {"measured", p.measured}, {"expected", p.expected}});
    }
    j["points"] = std::move(points);
    j["max_abs_error"] = report.max_abs_error;
    j["pass"] = report.pass;
    j["seed"] = report.seed;
    j["wall_time_s"] = include_wall_time ? report.wall_time_s : 0.0;
    return j.dump(indent);
}

std::size_t uniform_below(Rng& rng, std::size_t bound) {
    if (bound == 0) throw Error("uniform_below: empty range");
    return static_cast<std::size_t>(rng() % bound);
}

double uniform_real(Rng& rng, double lo, double hi) {
    // 53 random bits mapped to [0, 1).
    const double unit = static_cast<double>(rng() >> 11) * 0x1.0p-53;
    return lo + (hi - lo) * unit;
}

std::vector<std::size_t> random_permutation(Rng& rng, std::size_t size) {
    std::vector<std::size_t> p(size);
    for (std::size_t i = 0; i < size; ++i) p[i] = i;
    for (std::size_t i = size; i > 1; --i) std::swap(p[i - 1], p[uniform_below(rng, i)]);
    return p;
}

algorithms::BoolFn random_boolean_function(Rng& rng, std::size_t n) {
    std::vector<bool> table(pow2(n));
    for (std::size_t x = 0; x < table.size(); ++x) table[x] = rng() & 1U;
    return [table = std::move(table)](std::size_t x) { return static_cast<bool>(table.at(x)); };
}

algorithms::BoolFn random_function_with_count(Rng& rng, std::size_t n, std::size_t k) {
    const std::size_t dim = pow2(n);
    if (k > dim) throw Error("random_function_with_count: k exceeds 2^n");
    const auto perm = random_permutation(rng, dim);
    std::vector<bool> table(dim);
    for (std::size_t i = 0; i < k; ++i) table[perm[i]] = true;
    return [table = std::move(table)](std::size_t x) { return static_cast<bool>(table.at(x)); };
}

algorithms::BoolFn random_balanced_function(Rng& rng, std::size_t n) {
    if (n == 0) throw Error("no balanced function on zero input bits");
    return random_function_with_count(rng, n, pow2(n - 1));
}

algorithms::IndexFn random_simon_function(Rng& rng, std::size_t n, std::size_t s) {
    const std::size_t dim = pow2(n);
    if (s >= dim) throw Error("random_simon_function: s does not fit in n bits");
    const auto values = random_permutation(rng, dim);
    std::vector<std::size_t> table(dim);
    std::size_t next = 0;
    for (std::size_t x = 0; x < dim; ++x) {
        const std::size_t partner = x ^ s;
        if (partner < x) {
            table[x] = table[partner];
        } else {
            table[x] = values[next++];
        }
    }
    return [table = std::move(table)](std::size_t x) { return table.at(x); };
}

Matrix random_state(Rng& rng, std::size_t dim) {
    Matrix v(dim, 1);
    do {
        for (std::size_t i = 0; i < dim; ++i) v[i] = Complex(uniform_real(rng, -1, 1), uniform_real(rng, -1, 1));
    } while (norm(v) < 1e-6);
    return scale(1.0 / norm(v), v);
}

Matrix random_density(Rng& rng, std::size_t dim) {
    Matrix a(dim, dim);
    for (auto& z : a.data()) z = Complex(uniform_real(rng, -1, 1), uniform_real(rng, -1, 1));
    const Matrix aa = mat_mul(a, adjoint(a));
    return scale(1.0 / trace(aa).real(), aa);
}

}  // namespace sqir::harness
