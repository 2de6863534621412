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

#include "sqir/semantics.h"

#include <array>
#include <bit>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <string_view>

namespace sqir {

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

const Matrix& proj0() {
    static const Matrix m({{1, 0}, {0, 0}});
    return m;
}
const Matrix& proj1() {
    static const Matrix m({{0, 0}, {0, 1}});
    return m;
}
const Matrix& pauli_x() {
    static const Matrix m({{0, 1}, {1, 0}});
    return m;
}

Matrix kron_all(std::initializer_list<Matrix> factors) {
    Matrix acc = Matrix::identity(1);
    for (const auto& f : factors) acc = kron(acc, f);
    return acc;
}

// Dense denotation of a single application, padded to the register.

Matrix denote_app1(std::size_t d, const ucom::App1& a) {
    if (a.q >= d) return Matrix::zeros(pow2(d), pow2(d));
    return kron_all({identity_pow2(a.q), ur_matrix(a.gate), identity_pow2(d - a.q - 1)});
}

Matrix denote_cnot(std::size_t d, const ucom::App2& a) {
    const Qubit q1 = a.q1;
    const Qubit q2 = a.q2;
    if (q1 >= d || q2 >= d || q1 == q2) return Matrix::zeros(pow2(d), pow2(d));
    const Matrix i2 = Matrix::identity(2);
    if (q1 < q2) {
        const Matrix pre = identity_pow2(q1);
        const Matrix mid = identity_pow2(q2 - q1 - 1);
        const Matrix post = identity_pow2(d - q2 - 1);
        return kron_all({pre, proj0(), mid, i2, post}) + kron_all({pre, proj1(), mid, pauli_x(), post});
    }
    const Matrix pre = identity_pow2(q2);
    const Matrix mid = identity_pow2(q1 - q2 - 1);
    const Matrix post = identity_pow2(d - q1 - 1);
    return kron_all({pre, i2, mid, proj0(), post}) + kron_all({pre, pauli_x(), mid, proj1(), post});
}

// Bit weight of qubit q in a d-qubit basis index (qubit 0 is the MSB).
std::size_t qubit_mask(std::size_t d, Qubit q) { return std::size_t{1} << (d - 1 - q); }

// Local index of global index i restricted to the given wires (wire 0 MSB).
std::size_t gather_bits(std::size_t i, const std::vector<std::size_t>& masks) {
    std::size_t local = 0;
    for (std::size_t m : masks) local = (local << 1) | ((i & m) ? 1U : 0U);
    return local;
}

Matrix denote_opaque(std::size_t d, const ucom::AppOpaque& a) {
    const std::size_t dim = pow2(d);
    Matrix out(dim, dim);
    bool ok = true;
    std::size_t wire_mask = 0;
    std::vector<std::size_t> masks;
    for (Qubit q : a.qubits) {
        if (q >= d) {
            ok = false;
            break;
        }
        const std::size_t m = qubit_mask(d, q);
        if (wire_mask & m) {
            ok = false;
            break;
        }
        wire_mask |= m;
        masks.push_back(m);
    }
    if (!ok) return out;
    const Matrix& g = a.gate.matrix();
    for (std::size_t r = 0; r < dim; ++r) {
        const std::size_t lr = gather_bits(r, masks);
        for (std::size_t c = 0; c < dim; ++c) {
            if ((r & ~wire_mask) != (c & ~wire_mask)) continue;
            out(r, c) = g(lr, gather_bits(c, masks));
        }
    }
    return out;
}

Matrix denote(std::size_t d, const ucom::Node& n) {
    return std::visit(overloaded{
                          [&](const ucom::Seq& s) { return mat_mul(denote(d, *s.second), denote(d, *s.first)); },
                          [&](const ucom::App1& a) { return denote_app1(d, a); },
                          [&](const ucom::App2& a) { return denote_cnot(d, a); },
                          [&](const ucom::AppOpaque& a) { return denote_opaque(d, a); },
                      },
                      n.v);
}

// In-place state-vector kernels. Callers guarantee well-typed indices.

void apply_1q(std::span<Complex> psi, std::size_t d, Qubit q, const Matrix& g) {
    const std::size_t mask = qubit_mask(d, q);
    const Complex g00 = g(0, 0), g01 = g(0, 1), g10 = g(1, 0), g11 = g(1, 1);
    for (std::size_t i = 0; i < psi.size(); ++i) {
        if (i & mask) continue;
        const Complex a = psi[i];
        const Complex b = psi[i | mask];
        psi[i] = g00 * a + g01 * b;
        psi[i | mask] = g10 * a + g11 * b;
    }
}

void apply_cnot(std::span<Complex> psi, std::size_t d, Qubit control, Qubit target) {
    const std::size_t cm = qubit_mask(d, control);
    const std::size_t tm = qubit_mask(d, target);
    for (std::size_t i = 0; i < psi.size(); ++i) {
        if ((i & cm) && !(i & tm)) std::swap(psi[i], psi[i | tm]);
    }
}

void apply_opaque(std::span<Complex> psi, std::size_t d, const ucom::AppOpaque& a) {
    const std::size_t k = a.qubits.size();
    const std::size_t local_dim = pow2(k);
    // offsets[l] is the global bit pattern of local index l.
    std::vector<std::size_t> offsets(local_dim, 0);
    std::size_t wire_mask = 0;
    for (std::size_t l = 0; l < local_dim; ++l) {
        for (std::size_t w = 0; w < k; ++w) {
            if (l & (std::size_t{1} << (k - 1 - w))) offsets[l] |= qubit_mask(d, a.qubits[w]);
        }
    }
    for (Qubit q : a.qubits) wire_mask |= qubit_mask(d, q);
    const Matrix& g = a.gate.matrix();
    std::vector<Complex> in(local_dim);
    for (std::size_t base = 0; base < psi.size(); ++base) {
        if (base & wire_mask) continue;
        for (std::size_t l = 0; l < local_dim; ++l) in[l] = psi[base | offsets[l]];
        for (std::size_t r = 0; r < local_dim; ++r) {
            Complex acc{};
            for (std::size_t c = 0; c < local_dim; ++c) acc += g(r, c) * in[c];
            psi[base | offsets[r]] = acc;
        }
    }
}

void apply_all(const std::vector<GateApplication>& apps, std::size_t d, std::span<Complex> psi) {
    for (const auto& app : apps) {
        std::visit(overloaded{
                       [&](const ucom::App1& a) { apply_1q(psi, d, a.q, ur_matrix(a.gate)); },
                       [&](const ucom::App2& a) { apply_cnot(psi, d, a.q1, a.q2); },
                       [&](const ucom::AppOpaque& a) { apply_opaque(psi, d, a); },
                   },
                   app);
    }
}

// U applied to every column of m.
Matrix apply_to_columns(const std::vector<GateApplication>& apps, std::size_t d, const Matrix& m) {
    Matrix out = m;
    std::vector<Complex> col(m.rows());
    for (std::size_t c = 0; c < m.cols(); ++c) {
        for (std::size_t r = 0; r < m.rows(); ++r) col[r] = m(r, c);
        apply_all(apps, d, col);
        for (std::size_t r = 0; r < m.rows(); ++r) out(r, c) = col[r];
    }
    return out;
}

void require_state(std::size_t d, const Matrix& psi, const char* who) {
    if (!psi.is_vector() || psi.rows() != pow2(d)) {
        throw DimensionError(std::string(who) + ": expected a column vector of length " +
                             std::to_string(pow2(d)) + ", got " + std::to_string(psi.rows()) + "x" +
                             std::to_string(psi.cols()));
    }
}

void require_state_vector_limit(std::size_t d) {
    if (d > kStateVectorQubitLimit) {
        throw LimitError(std::to_string(d) + " qubits exceeds the state-vector limit of " +
                         std::to_string(kStateVectorQubitLimit));
    }
}

// Zero out every amplitude whose qubit q differs from b.
Matrix project_vector(const Matrix& v, std::size_t d, Qubit q, bool b) {
    Matrix out = v;
    const std::size_t mask = qubit_mask(d, q);
    for (std::size_t i = 0; i < out.rows(); ++i) {
        if (static_cast<bool>(i & mask) != b) out[i] = 0.0;
    }
    return out;
}

Matrix density_step(const com::Node& n, std::size_t d, const Matrix& rho) {
    return std::visit(
        overloaded{
            [&](const com::Skip&) { return rho; },
            [&](const com::Seq& s) { return density_step(*s.second, d, density_step(*s.first, d, rho)); },
            [&](const com::Uc& x) {
                const UnitaryProgram u = cast(x.u, d);
                if (!well_typed(u)) return Matrix::zeros(rho.rows(), rho.cols());
                require_state_vector_limit(d);
                const auto apps = flatten(u);
                // U ρ U† = (U (U ρ)†)†
                const Matrix u_rho = apply_to_columns(apps, d, rho);
                return adjoint(apply_to_columns(apps, d, adjoint(u_rho)));
            },
            [&](const com::Meas& m) {
                if (m.q >= d) return Matrix::zeros(rho.rows(), rho.cols());
                const std::size_t mask = qubit_mask(d, m.q);
                Matrix rho1 = rho;
                Matrix rho0 = rho;
                for (std::size_t r = 0; r < rho.rows(); ++r) {
                    for (std::size_t c = 0; c < rho.cols(); ++c) {
                        const bool r1 = r & mask;
                        const bool c1 = c & mask;
                        if (!(r1 && c1)) rho1(r, c) = 0.0;
                        if (r1 || c1) rho0(r, c) = 0.0;
                    }
                }
                return add(density_step(*m.if1, d, rho1), density_step(*m.if0, d, rho0));
            },
        },
        n.v);
}

struct Branch {
    std::string label;
    Matrix state;
};

std::vector<Branch> nondet_step(const com::Node& n, std::size_t d, std::vector<Branch> branches) {
    return std::visit(
        overloaded{
            [&](const com::Skip&) { return std::move(branches); },
            [&](const com::Seq& s) {
                return nondet_step(*s.second, d, nondet_step(*s.first, d, std::move(branches)));
            },
            [&](const com::Uc& x) {
                const auto apps = flatten(cast(x.u, d));
                for (auto& b : branches) apply_all(apps, d, b.state.data());
                return std::move(branches);
            },
            [&](const com::Meas& m) {
                std::vector<Branch> out;
                for (auto& b : branches) {
                    for (bool outcome : {false, true}) {
                        Matrix v = project_vector(b.state, d, m.q, outcome);
                        const double w = norm(v);
                        if (w * w < kBranchPruneThreshold) continue;
                        std::vector<Branch> sub{{b.label + (outcome ? '1' : '0'), std::move(v)}};
                        auto next = nondet_step(outcome ? *m.if1 : *m.if0, d, std::move(sub));
                        for (auto& nb : next) out.push_back(std::move(nb));
                    }
                }
                return out;
            },
        },
        n.v);
}

}  // namespace

std::size_t dense_qubit_limit() {
    if (const char* env = std::getenv("SQIR_SIM_DENSE_LIMIT")) {
        std::string_view s(env);
        std::size_t v = 0;
        const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
        if (ec == std::errc{} && ptr == s.data() + s.size() && v > 0) return v;
    }
    return kDefaultDenseQubitLimit;
}

Matrix uc_eval(const UnitaryProgram& u) {
    const std::size_t limit = dense_qubit_limit();
    if (u.dim() > limit) {
        throw LimitError("dense denotation of " + std::to_string(u.dim()) + " qubits exceeds the limit of " +
                         std::to_string(limit) + "; use apply_unitary for state-vector evaluation");
    }
    return denote(u.dim(), u.node());
}

Matrix apply_unitary(const UnitaryProgram& u, const Matrix& psi) {
    const std::size_t d = u.dim();
    require_state_vector_limit(d);
    require_state(d, psi, "apply_unitary");
    if (!well_typed(u)) throw TypeError("apply_unitary: program is not well-typed");
    Matrix out = psi;
    apply_all(flatten(u), d, out.data());
    return out;
}

Matrix projector(std::size_t d, Qubit q, bool b) {
    if (q >= d) return Matrix::zeros(pow2(d), pow2(d));
    return kron_all({identity_pow2(q), b ? proj1() : proj0(), identity_pow2(d - q - 1)});
}

Matrix density_eval(const Program& p, const Matrix& rho) {
    const std::size_t d = p.dim();
    if (rho.rows() != pow2(d) || rho.cols() != pow2(d)) {
        throw DimensionError("density_eval: expected a " + std::to_string(pow2(d)) + "x" +
                             std::to_string(pow2(d)) + " density matrix");
    }
    return density_step(p.node(), d, rho);
}

double OutcomeSet::total_probability() const {
    double s = 0.0;
    for (const auto& o : outcomes) s += o.prob;
    return s;
}

Matrix OutcomeSet::mixture() const {
    if (outcomes.empty()) throw Error("empty outcome set");
    const std::size_t n = outcomes.front().state.rows();
    Matrix acc(n, n);
    for (const auto& o : outcomes) acc = add(acc, scale(o.prob, density_of(o.state)));
    return acc;
}

OutcomeSet nondet_eval(const Program& p, const Matrix& psi) {
    const std::size_t d = p.dim();
    require_state_vector_limit(d);
    require_state(d, psi, "nondet_eval");
    if (!well_typed(p)) throw TypeError("nondet_eval: program is not well-typed");
    std::vector<Branch> start{{"", psi}};
    OutcomeSet result;
    for (auto& b : nondet_step(p.node(), d, std::move(start))) {
        const double w = norm(b.state);
        const double prob = w * w;
        if (prob < kBranchPruneThreshold) continue;
        result.outcomes.push_back({std::move(b.label), prob, scale(1.0 / w, b.state)});
    }
    return result;
}

double probability_of_outcome(const Matrix& phi, const Matrix& psi) { return std::norm(inner(phi, psi)); }

double prob_partial_meas(const Matrix& phi, const Matrix& psi) {
    if (!phi.is_vector() || !psi.is_vector() || !std::has_single_bit(phi.rows()) ||
        !std::has_single_bit(psi.rows()) || psi.rows() < phi.rows()) {
        throw DimensionError("prob_partial_meas: need vectors of length 2^n and 2^(n+m), got " +
                             std::to_string(phi.rows()) + " and " + std::to_string(psi.rows()));
    }
    const std::size_t block = psi.rows() / phi.rows();
    double total = 0.0;
    for (std::size_t j = 0; j < block; ++j) {
        Complex amp{};
        for (std::size_t i = 0; i < phi.rows(); ++i) amp += std::conj(phi[i]) * psi[i * block + j];
        total += std::norm(amp);
    }
    return total;
}

Matrix density_of(const Matrix& psi) {
    if (!psi.is_vector()) throw DimensionError("density_of needs a column vector");
    return mat_mul(psi, adjoint(psi));
}

}  // namespace sqir
