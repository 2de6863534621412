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
 * Circuit text format.
 *
 *     # comment
 *     qubits 3
 *     h 0
 *     cnot 0 1
 *     ur pi/2 0 -pi 2; rz 3*pi/4 1
 *     meas 0 { x 0 } { }
 *     skip
 *
 * Statements end at a newline or `;`. The first block of `meas` runs on
 * outcome 1. Angles are decimal radians, `pi`, or `c*pi/d` fractions.
 */

#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "sqir/ir.h"
#include "sqir/linalg.h"

namespace sqir::text {

class ParseError : public Error {
   public:
    ParseError(std::size_t line, const std::string& message);
    std::size_t line() const { return line_; }

   private:
    std::size_t line_;
};

struct Statement;

struct UrStmt {
    double theta;
    double phi;
    double lambda;
    Qubit q;
    bool operator==(const UrStmt&) const = default;
};

struct CnotStmt {
    Qubit q1;
    Qubit q2;
    bool operator==(const CnotStmt&) const = default;
};

/// One of x, h, z, t, tdg.
struct NamedStmt {
    std::string name;
    Qubit q;
    bool operator==(const NamedStmt&) const = default;
};

struct RzStmt {
    double lambda;
    Qubit q;
    bool operator==(const RzStmt&) const = default;
};

struct MeasStmt {
    Qubit q;
    std::vector<Statement> if1;
    std::vector<Statement> if0;
    bool operator==(const MeasStmt& other) const;
};

struct SkipStmt {
    bool operator==(const SkipStmt&) const = default;
};

struct Statement {
    std::variant<UrStmt, CnotStmt, NamedStmt, RzStmt, MeasStmt, SkipStmt> body;
    /// Source line; 0 for statements built in code. Not part of equality.
    std::size_t line = 0;

    bool operator==(const Statement& other) const { return body == other.body; }
};

struct CircuitDocument {
    std::size_t qubits = 0;
    std::vector<Statement> statements;

    bool operator==(const CircuitDocument&) const = default;
};

CircuitDocument parse(std::string_view text);
/// Canonical text; parse(print(doc)) == doc.
std::string print(const CircuitDocument& doc);

Program to_program(const CircuitDocument& doc);
/// parse then to_program.
Program parse_circuit(std::string_view text);
/// The unitary program when doc has no measurement.
std::optional<UnitaryProgram> to_unitary(const CircuitDocument& doc);

struct TypeProblem {
    std::size_t line;
    std::string message;
};
/// First statement that makes doc ill-typed, if any.
std::optional<TypeProblem> find_type_problem(const CircuitDocument& doc);

/// OpenQASM 2.0. Measurements whose branches are both skip, or the reset
/// pattern (X on the measured qubit for outcome 1), are supported.
std::string export_qasm(const Program& p);
std::string export_qasm(const UnitaryProgram& u);

/// Shortest decimal that parses back to the same double.
std::string format_double(double v);

}  // namespace sqir::text
