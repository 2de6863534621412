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

#include "sqir/algorithms.h"

#include <cmath>
#include <numbers>

#include "sqir/semantics.h"

namespace sqir::algorithms {

namespace {

constexpr double kPi = std::numbers::pi;

Matrix zero_state(std::size_t d) { return basis_vector(pow2(d), 0); }

void require_arity(const OpaqueGate& g, std::size_t arity, const char* who) {
    if (g.arity() != arity) {
        throw Error(std::string(who) + ": oracle '" + g.name() + "' has arity " + std::to_string(g.arity()) +
                    ", expected " + std::to_string(arity));
    }
}

}  // namespace

UnitaryProgram ghz(std::size_t n) {
    if (n == 0) return gates::id(0, 0);
    if (n == 1) return gates::h(1, 0);
    return cast(ghz(n - 1), n) >> gates::cnot(n, n - 2, n - 1);
}

Program coin() { return Program::uc(gates::h(1, 0)) >> measure(1, 0); }

UnitaryProgram bell00() { return gates::h(2, 0) >> gates::cnot(2, 0, 1); }

UnitaryProgram encode(bool b1, bool b2) {
    return (b2 ? gates::x(2, 0) : gates::id(2, 0)) >> (b1 ? gates::z(2, 0) : gates::id(2, 0));
}

UnitaryProgram decode() { return gates::cnot(2, 0, 1) >> gates::h(2, 0); }

UnitaryProgram superdense(bool b1, bool b2) { return seq({bell00(), encode(b1, b2), decode()}); }

UnitaryProgram bell() { return gates::h(3, 1) >> gates::cnot(3, 1, 2); }

Program alice() {
    return seq({Program::uc(gates::cnot(3, 0, 1)), Program::uc(gates::h(3, 0)), measure(3, 0), measure(3, 1)});
}

Program bob() {
    return seq({Program::uc(gates::cnot(3, 1, 2)), Program::uc(gates::cz(3, 0, 2)), reset(3, 0), reset(3, 1)});
}

Program teleport() { return seq({Program::uc(bell()), alice(), bob()}); }

OpaqueGate boolean_oracle(const BooleanOracleSpec& spec) {
    const std::size_t inputs = pow2(spec.n);
    Matrix m(2 * inputs, 2 * inputs);
    for (std::size_t x = 0; x < inputs; ++x) {
        const std::size_t fx = spec.f(x) ? 1 : 0;
        for (std::size_t y = 0; y < 2; ++y) m((x << 1) | (y ^ fx), (x << 1) | y) = 1.0;
    }
    return OpaqueGate("U_f", spec.n + 1, std::move(m));
}

OpaqueGate integer_oracle(const IntegerOracleSpec& spec) {
    const std::size_t n = spec.n;
    const std::size_t half = pow2(n);
    Matrix m(half * half, half * half);
    for (std::size_t x = 0; x < half; ++x) {
        const std::size_t fx = spec.f(x);
        if (fx >= half) {
            throw Error("integer_oracle: f(" + std::to_string(x) + ") = " + std::to_string(fx) +
                        " does not fit in " + std::to_string(n) + " bits");
        }
        for (std::size_t y = 0; y < half; ++y) m((x << n) | (y ^ fx), (x << n) | y) = 1.0;
    }
    return OpaqueGate("U_f", 2 * n, std::move(m));
}

std::size_t count(const BoolFn& f, std::size_t n) {
    std::size_t c = 0;
    for (std::size_t x = 0; x < pow2(n); ++x) c += f(x) ? 1 : 0;
    return c;
}

bool is_constant(const BoolFn& f, std::size_t n) {
    const std::size_t c = count(f, n);
    return c == 0 || c == pow2(n);
}

bool is_balanced(const BoolFn& f, std::size_t n) { return n > 0 && count(f, n) == pow2(n - 1); }

UnitaryProgram deutsch_jozsa(std::size_t n, const OpaqueGate& uf) {
    require_arity(uf, n + 1, "deutsch_jozsa");
    const std::size_t d = n + 1;
    return seq({gates::x(d, n), npar(d, gates::h), UnitaryProgram::app_opaque(d, uf, 0), npar(d, gates::h)});
}

double dj_accept_prob(std::size_t n, const BoolFn& f) {
    const UnitaryProgram p = deutsch_jozsa(n, boolean_oracle({n, f}));
    return prob_partial_meas(zero_state(n), apply_unitary(p, zero_state(n + 1)));
}

UnitaryProgram simon(std::size_t n, const OpaqueGate& uf) {
    require_arity(uf, 2 * n, "simon");
    const std::size_t d = 2 * n;
    const UnitaryProgram layer = cast(npar(n, gates::h), d);
    return seq({layer, UnitaryProgram::app_opaque(d, uf, 0), layer});
}

IndexFn to_injective(std::size_t n, std::size_t s, IndexFn f) {
    const std::size_t offset = pow2(n);
    return [s, offset, f = std::move(f)](std::size_t x) {
        const std::size_t y = x ^ s;
        return x < y ? f(x) : offset + f(x);
    };
}

unsigned dot_mod2(std::size_t x, std::size_t y) {
    return static_cast<unsigned>(__builtin_popcountll(x & y) & 1);
}

double simon_prob(std::size_t n, const IndexFn& f, std::size_t y) {
    const UnitaryProgram p = simon(n, integer_oracle({n, f}));
    return prob_partial_meas(basis_vector(pow2(n), y), apply_unitary(p, zero_state(2 * n)));
}

double GroverParams::theta() const {
    return std::asin(std::sqrt(static_cast<double>(k) / static_cast<double>(pow2(n))));
}

double GroverParams::success_prob() const {
    const double s = std::sin((2.0 * static_cast<double>(i) + 1.0) * theta());
    return s * s;
}

UnitaryProgram generalized_toffoli(std::size_t n) {
    if (n == 0) throw Error("generalized_toffoli needs at least one qubit");
    std::function<UnitaryProgram(std::size_t)> step = [&](std::size_t n0) {
        if (n0 <= 1) return gates::x(n, n - 1);
        return control(n - n0, step(n0 - 1));
    };
    return step(n);
}

UnitaryProgram diff(std::size_t n) {
    if (n == 0) throw Error("diff needs at least one qubit");
    return seq({npar(n, gates::h), npar(n, gates::x), gates::h(n, n - 1), generalized_toffoli(n),
                gates::h(n, n - 1), npar(n, gates::x), npar(n, gates::h)});
}

UnitaryProgram grover_body(std::size_t n, const OpaqueGate& uf) {
    require_arity(uf, n + 1, "grover");
    return UnitaryProgram::app_opaque(n + 1, uf, 0) >> cast(diff(n), n + 1);
}

UnitaryProgram grover(std::size_t n, const OpaqueGate& uf, std::size_t i) {
    if (n < 2) throw Error("grover needs n >= 2, got " + std::to_string(n));
    const std::size_t d = n + 1;
    return seq({gates::x(d, n), npar(d, gates::h), niter(i, grover_body(n, uf))});
}

double grover_success_prob(std::size_t n, const BoolFn& f, std::size_t i) {
    const Matrix out = apply_unitary(grover(n, boolean_oracle({n, f}), i), zero_state(n + 1));
    return rsum(pow2(n), [&](std::size_t z) {
        return f(z) ? prob_partial_meas(basis_vector(pow2(n), z), out) : 0.0;
    });
}

Matrix uniform_superposition(std::size_t n) {
    const std::size_t dim = pow2(n);
    return Matrix(dim, 1, std::vector<Complex>(dim, 1.0 / std::sqrt(static_cast<double>(dim))));
}

Matrix uniform_over(std::size_t n, const BoolFn& f, bool want) {
    const std::size_t dim = pow2(n);
    std::size_t hits = 0;
    for (std::size_t x = 0; x < dim; ++x) hits += f(x) == want ? 1 : 0;
    if (hits == 0) throw Error("uniform_over: no input has the requested value");
    const double amp = 1.0 / std::sqrt(static_cast<double>(hits));
    Matrix v(dim, 1);
    for (std::size_t x = 0; x < dim; ++x) {
        if (f(x) == want) v[x] = amp;
    }
    return v;
}

UnitaryProgram controlled_rotations(std::size_t n) {
    if (n <= 1) return skip(n);
    const double angle = 2.0 * kPi / static_cast<double>(pow2(n));
    return cast(controlled_rotations(n - 1), n) >> control(n - 1, gates::rz(n, angle, 0));
}

UnitaryProgram qft(std::size_t n) {
    if (n == 0) return skip(0);
    if (n == 1) return gates::h(1, 0);
    return seq({gates::h(n, 0), controlled_rotations(n),
                map_qubits([](Qubit q) { return q + 1; }, cast(qft(n - 1), n))});
}

UnitaryProgram reverse_qubits(std::size_t n) {
    if (n <= 1) return skip(n);
    UnitaryProgram acc = swap_prog(n, 0, n - 1);
    for (Qubit q = 1; q < n / 2; ++q) acc = acc >> swap_prog(n, q, n - 1 - q);
    return acc;
}

UnitaryProgram qft_w_reverse(std::size_t n) { return qft(n) >> reverse_qubits(n); }

UnitaryProgram controlled_powers(const UnitaryProgram& u, std::size_t k) {
    UnitaryProgram acc = skip(u.dim());
    for (std::size_t j = 0; j < k; ++j) acc = acc >> niter(pow2(j), control(k - j - 1, u));
    return acc;
}

UnitaryProgram qpe(std::size_t k, std::size_t n, const UnitaryProgram& u) {
    if (k == 0 || n == 0) throw Error("qpe needs k >= 1 and n >= 1");
    if (u.dim() != n) {
        throw DimensionError("qpe: u acts on " + std::to_string(u.dim()) + " qubits, expected " +
                             std::to_string(n));
    }
    if (!well_typed(u)) throw TypeError("qpe: u is not well-typed");
    const std::size_t d = k + n;
    const UnitaryProgram shifted = map_qubits([k](Qubit q) { return k + q; }, cast(u, d));
    return seq({cast(npar(k, gates::h), d), controlled_powers(shifted, k), cast(invert(qft_w_reverse(k)), d)});
}

double QpeParams::theta() const {
    return static_cast<double>(z) / static_cast<double>(pow2(k)) + delta;
}

bool QpeParams::delta_admissible() const {
    const double bound = 1.0 / static_cast<double>(pow2(k + 1));
    return -bound <= delta && delta < bound;
}

}  // namespace sqir::algorithms
