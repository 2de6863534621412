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

#pragma once

#include <cstddef>
#include <functional>

#include "sqir/ir.h"
#include "sqir/linalg.h"

namespace sqir::algorithms {

using BoolFn = std::function<bool(std::size_t)>;
using IndexFn = std::function<std::size_t(std::size_t)>;

/// H 0 followed by a CNOT chain. ghz(0) is `I 0` on an empty register.
UnitaryProgram ghz(std::size_t n);

/// H 0; measure 0
Program coin();

// Superdense coding, all on two qubits.
UnitaryProgram bell00();
UnitaryProgram encode(bool b1, bool b2);
UnitaryProgram decode();
UnitaryProgram superdense(bool b1, bool b2);

// Teleportation on three qubits: qubit 0 is sent, qubit 2 receives.
UnitaryProgram bell();
Program alice();
Program bob();
Program teleport();

struct BooleanOracleSpec {
    std::size_t n;
    BoolFn f;
};

/// f maps n-bit inputs to n-bit outputs.
struct IntegerOracleSpec {
    std::size_t n;
    IndexFn f;
};

/// |x⟩|y⟩ ↦ |x⟩|y ⊕ f(x)⟩ with x on the n leading qubits and y one qubit.
OpaqueGate boolean_oracle(const BooleanOracleSpec& spec);
/// |x⟩|y⟩ ↦ |x⟩|y ⊕ f(x)⟩ with x, y both n-qubit registers.
OpaqueGate integer_oracle(const IntegerOracleSpec& spec);

/// Number of x < 2^n with f(x).
std::size_t count(const BoolFn& f, std::size_t n);
bool is_constant(const BoolFn& f, std::size_t n);
bool is_balanced(const BoolFn& f, std::size_t n);

/// X n; npar (n+1) H; U_f; npar (n+1) H on n inputs and one ancilla.
UnitaryProgram deutsch_jozsa(std::size_t n, const OpaqueGate& uf);
/// Probability of reading 0^n on the inputs.
double dj_accept_prob(std::size_t n, const BoolFn& f);

/// npar n H; U_f; npar n H on 2n qubits.
UnitaryProgram simon(std::size_t n, const OpaqueGate& uf);
/// Two-to-one f made one-to-one: f(x) if x < x⊕s, else 2^n + f(x).
IndexFn to_injective(std::size_t n, std::size_t s, IndexFn f);
/// Bitwise dot product mod 2.
unsigned dot_mod2(std::size_t x, std::size_t y);
/// Probability of reading y on the first n qubits after simon(n, U_f).
double simon_prob(std::size_t n, const IndexFn& f, std::size_t y);

struct GroverParams {
    std::size_t n;
    std::size_t k;
    std::size_t i;

    /// arcsin(√(k/2^n))
    double theta() const;
    /// sin²((2i+1)θ)
    double success_prob() const;
};

/// X on qubit n-1 controlled by qubits 0..n-2, built by nesting `control`.
UnitaryProgram generalized_toffoli(std::size_t n);
/// Reflection about the uniform superposition, up to sign: I - 2|ψ⟩⟨ψ|.
UnitaryProgram diff(std::size_t n);
/// U_f; diff on n+1 qubits.
UnitaryProgram grover_body(std::size_t n, const OpaqueGate& uf);
/// X n; npar (n+1) H; niter i body.
UnitaryProgram grover(std::size_t n, const OpaqueGate& uf, std::size_t i);
/// Total probability of measuring some z with f(z) after i iterations.
double grover_success_prob(std::size_t n, const BoolFn& f, std::size_t i);

/// Uniform superposition over n qubits.
Matrix uniform_superposition(std::size_t n);
/// Normalized uniform superposition over {x : f(x) == want}.
Matrix uniform_over(std::size_t n, const BoolFn& f, bool want);

UnitaryProgram controlled_rotations(std::size_t n);
/// Fourier transform with output qubits in reversed order.
UnitaryProgram qft(std::size_t n);
UnitaryProgram reverse_qubits(std::size_t n);
UnitaryProgram qft_w_reverse(std::size_t n);

/// Qubit k-1-j of the precision register controls u^(2^j); u already lives
/// on the k+n register.
UnitaryProgram controlled_powers(const UnitaryProgram& u, std::size_t k);
/// Phase estimation with k precision bits for u acting on n qubits.
UnitaryProgram qpe(std::size_t k, std::size_t n, const UnitaryProgram& u);

struct QpeParams {
    std::size_t k;
    std::size_t n;
    std::size_t z;
    double delta = 0.0;

    /// z / 2^k + δ
    double theta() const;
    /// Whether δ lies in [-1/2^(k+1), 1/2^(k+1)).
    bool delta_admissible() const;
};

}  // namespace sqir::algorithms
