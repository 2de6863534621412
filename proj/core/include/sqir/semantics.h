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

/**
 * @file
 * Evaluators for SQIR programs.
 *
 * - uc_eval: dense 2^d x 2^d denotation of a unitary program. Total: an
 *   ill-typed program denotes the zero matrix.
 * - apply_unitary: gate-by-gate state-vector application. Refuses
 *   ill-typed programs.
 * - density_eval: density-matrix semantics of full programs.
 * - nondet_eval: enumerates every measurement branch with its weight.
 */

#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "sqir/ir.h"
#include "sqir/linalg.h"

namespace sqir {

inline constexpr std::size_t kDefaultDenseQubitLimit = 12;
inline constexpr std::size_t kStateVectorQubitLimit = 24;
inline constexpr double kBranchPruneThreshold = 1e-12;

/// Dense qubit ceiling: SQIR_SIM_DENSE_LIMIT if set to a positive integer,
/// otherwise kDefaultDenseQubitLimit.
std::size_t dense_qubit_limit();

class TypeError : public Error {
   public:
    using Error::Error;
};

class LimitError : public Error {
   public:
    using Error::Error;
};

Matrix uc_eval(const UnitaryProgram& u);

/// ⟦u⟧ × psi without forming ⟦u⟧.
Matrix apply_unitary(const UnitaryProgram& u, const Matrix& psi);

/// I_{2^q} ⊗ |b⟩⟨b| ⊗ I_{2^{d-q-1}}; zero when q ≥ d.
Matrix projector(std::size_t d, Qubit q, bool b);

Matrix density_eval(const Program& p, const Matrix& rho);

struct Outcome {
    /// Measurement results in program order, e.g. "01".
    std::string label;
    double prob;
    /// Normalized post-measurement state.
    Matrix state;
};

struct OutcomeSet {
    std::vector<Outcome> outcomes;

    double total_probability() const;
    /// Σ prob · |state⟩⟨state|.
    Matrix mixture() const;
};

/// Outcome-0 branches are listed before outcome-1 branches, so labels come
/// out in lexicographic order. Branches with weight below 1e-12 are dropped.
OutcomeSet nondet_eval(const Program& p, const Matrix& psi);

/// |⟨φ|ψ⟩|²
double probability_of_outcome(const Matrix& phi, const Matrix& psi);

/// ‖(φ† ⊗ I_{2^m}) ψ‖² for φ on the leading n qubits of ψ.
double prob_partial_meas(const Matrix& phi, const Matrix& psi);

/// |ψ⟩⟨ψ|
Matrix density_of(const Matrix& psi);

}  // namespace sqir
