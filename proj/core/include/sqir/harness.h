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
 * Numerical checks of the correctness lemmas for the library's algorithms.
 *
 * Each registered theorem sweeps a parameter range, evaluates the program
 * with the simulator and compares against the closed form. Reports are
 * deterministic for a given id, config and seed (wall time aside).
 */

#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "sqir/algorithms.h"
#include "sqir/ir.h"
#include "sqir/linalg.h"

namespace sqir::harness {

inline constexpr double kExactTol = 1e-8;
inline constexpr double kProbabilityTol = 1e-8;
inline constexpr double kCrossSemanticsTol = 1e-9;
inline constexpr double kBoundSlack = 1e-9;
/// Largest register cross_check_semantics accepts.
inline constexpr std::size_t kCrossCheckQubitLimit = 10;

using ParamValue = std::variant<std::int64_t, double, bool, std::string>;
using Params = std::vector<std::pair<std::string, ParamValue>>;

struct Point {
    Params params;
    double measured;
    double expected;
};

enum class CheckKind {
    /// |measured - expected| ≤ tolerance at every point.
    kEquality,
    /// measured ≥ expected - slack at every point.
    kLowerBound,
};

struct TheoremInfo {
    std::string id;
    /// Name of the lemma the check reproduces.
    std::string lemma;
    CheckKind kind;
    double tolerance;
};

struct TheoremReport {
    std::string theorem;
    std::vector<Point> points;
    double max_abs_error = 0.0;
    bool pass = false;
    std::uint64_t seed = 0;
    double wall_time_s = 0.0;
};

/// Parameter overrides; unset fields take each theorem's defaults.
struct TheoremConfig {
    std::optional<std::size_t> n;
    std::optional<std::size_t> k;
    std::optional<std::size_t> i_max;
    std::optional<std::size_t> samples;
    std::uint64_t seed = 0;
};

class UnknownTheorem : public Error {
   public:
    using Error::Error;
};

const std::vector<TheoremInfo>& registry();
const TheoremInfo& theorem_info(std::string_view id);

TheoremReport check_theorem(std::string_view id, const TheoremConfig& config = {});

/// Compares the branch mixture of nondet_eval against density_eval on |ψ⟩⟨ψ|.
TheoremReport cross_check_semantics(const Program& p, const Matrix& psi);

/// Serializes to the report schema. With include_wall_time = false the
/// wall_time_s field is written as 0 so that output is byte-reproducible.
std::string to_json(const TheoremReport& report, bool include_wall_time = true, int indent = -1);

/// Fills max_abs_error and pass from points.
void finalize(TheoremReport& report, const TheoremInfo& info);

using Rng = std::mt19937_64;

/// Uniform in [0, bound).
std::size_t uniform_below(Rng& rng, std::size_t bound);
double uniform_real(Rng& rng, double lo, double hi);
std::vector<std::size_t> random_permutation(Rng& rng, std::size_t size);

algorithms::BoolFn random_boolean_function(Rng& rng, std::size_t n);
algorithms::BoolFn random_balanced_function(Rng& rng, std::size_t n);
/// f with exactly k true inputs.
algorithms::BoolFn random_function_with_count(Rng& rng, std::size_t n, std::size_t k);
/// f(x) = f(y) iff x ⊕ y ∈ {0, s}. s = 0 gives a random permutation.
algorithms::IndexFn random_simon_function(Rng& rng, std::size_t n, std::size_t s);

Matrix random_state(Rng& rng, std::size_t dim);
/// A A† / tr(A A†) for a random complex A.
Matrix random_density(Rng& rng, std::size_t dim);

}  // namespace sqir::harness
