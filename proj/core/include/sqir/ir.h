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
 * Abstract syntax for quantum programs over a global qubit register.
 *
 * UnitaryProgram is the measurement-free fragment; Program adds skip,
 * branching measurement and sequencing on top of it. Both are immutable
 * trees with shared subterms, so copying a program is cheap.
 *
 * Indices are concrete positions in a register of size d. Nothing here
 * rejects an out-of-range or duplicated index: such programs are
 * representable and denote the zero matrix. Use well_typed() to check.
 */

#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "sqir/linalg.h"

namespace sqir {

using Qubit = std::size_t;

/// The universal single-qubit rotation U_R(θ, φ, λ).
struct URotation {
    double theta = 0.0;
    double phi = 0.0;
    double lambda = 0.0;

    bool operator==(const URotation&) const = default;
};

struct Cnot {
    bool operator==(const Cnot&) const = default;
};

/// A named multi-qubit unitary supplied as a matrix (oracles, controlled
/// blocks). The matrix is 2^arity square and unitary within 1e-9.
class OpaqueGate {
   public:
    OpaqueGate(std::string name, std::size_t arity, Matrix matrix);

    const std::string& name() const { return name_; }
    std::size_t arity() const { return arity_; }
    const Matrix& matrix() const { return *matrix_; }

    bool operator==(const OpaqueGate& other) const;

   private:
    std::string name_;
    std::size_t arity_;
    std::shared_ptr<const Matrix> matrix_;
};

using Gate = std::variant<URotation, Cnot, OpaqueGate>;

Matrix ur_matrix(const URotation& g);
Matrix cnot_matrix();
Matrix gate_matrix(const Gate& g);

class UnitaryProgram;

namespace ucom {
struct Node;
using NodePtr = std::shared_ptr<const Node>;

struct Seq {
    NodePtr first;
    NodePtr second;
};
struct App1 {
    URotation gate;
    Qubit q;
};
struct App2 {
    Qubit q1;
    Qubit q2;
};
/// Opaque gate applied to an explicit qubit list; qubits[0] is the gate's
/// most significant wire.
struct AppOpaque {
    OpaqueGate gate;
    std::vector<Qubit> qubits;
};
struct Node {
    std::variant<Seq, App1, App2, AppOpaque> v;
};
}  // namespace ucom

/// Measurement-free program on a register of dim() qubits.
class UnitaryProgram {
   public:
    static UnitaryProgram app1(std::size_t d, URotation g, Qubit q);
    static UnitaryProgram cnot(std::size_t d, Qubit q1, Qubit q2);
    /// Applies g to the contiguous block offset .. offset+arity-1.
    static UnitaryProgram app_opaque(std::size_t d, OpaqueGate g, Qubit offset);
    static UnitaryProgram app_opaque(std::size_t d, OpaqueGate g, std::vector<Qubit> qubits);
    /// first then second; both must share a register size.
    static UnitaryProgram seq(const UnitaryProgram& first, const UnitaryProgram& second);

    std::size_t dim() const { return dim_; }
    const ucom::Node& node() const { return *root_; }
    const ucom::NodePtr& root() const { return root_; }

    bool operator==(const UnitaryProgram& other) const;

   private:
    friend UnitaryProgram cast(const UnitaryProgram&, std::size_t);
    friend UnitaryProgram make_unitary(std::size_t, ucom::NodePtr);
    UnitaryProgram(std::size_t d, ucom::NodePtr root) : dim_(d), root_(std::move(root)) {}

    std::size_t dim_;
    ucom::NodePtr root_;
};

/// Sequence of two or more programs, left to right.
UnitaryProgram seq(std::initializer_list<UnitaryProgram> parts);
inline UnitaryProgram operator>>(const UnitaryProgram& a, const UnitaryProgram& b) {
    return UnitaryProgram::seq(a, b);
}

/// One primitive application in program order.
using GateApplication = std::variant<ucom::App1, ucom::App2, ucom::AppOpaque>;

/// Flattens the sequence tree into program order without recursion.
std::vector<GateApplication> flatten(const UnitaryProgram& u);

/// Sorted, de-duplicated indices touched by u.
std::vector<Qubit> support(const UnitaryProgram& u);

namespace gates {
UnitaryProgram ur(std::size_t d, double theta, double phi, double lambda, Qubit q);
UnitaryProgram x(std::size_t d, Qubit q);
UnitaryProgram h(std::size_t d, Qubit q);
UnitaryProgram z(std::size_t d, Qubit q);
UnitaryProgram t(std::size_t d, Qubit q);
UnitaryProgram tdg(std::size_t d, Qubit q);
UnitaryProgram rz(std::size_t d, double lambda, Qubit q);
/// U_R(0, 0, 0). Also the register's SKIP: id(d, 0).
UnitaryProgram id(std::size_t d, Qubit q);
UnitaryProgram cnot(std::size_t d, Qubit a, Qubit b);
UnitaryProgram cz(std::size_t d, Qubit a, Qubit b);
}  // namespace gates

UnitaryProgram skip(std::size_t d);
UnitaryProgram swap_prog(std::size_t d, Qubit a, Qubit b);
/// Fifteen-gate Clifford+T decomposition of the controlled-controlled-not.
UnitaryProgram toffoli(std::size_t d, Qubit a, Qubit b, Qubit c);

/// u conditioned on qubit c. Single rotations and CNOTs are decomposed into
/// gates; anything larger becomes a controlled opaque block.
UnitaryProgram control(Qubit c, const UnitaryProgram& u);

using SingleQubitCtor = std::function<UnitaryProgram(std::size_t d, Qubit q)>;
/// g(0); g(1); ...; g(n-1) on an n-qubit register. n = 0 is SKIP.
UnitaryProgram npar(std::size_t n, const SingleQubitCtor& g);
/// u repeated i times; i = 0 is SKIP.
UnitaryProgram niter(std::size_t i, const UnitaryProgram& u);
UnitaryProgram invert(const UnitaryProgram& u);
UnitaryProgram map_qubits(const std::function<Qubit(Qubit)>& sigma, const UnitaryProgram& u);
/// Same program read in a register of d qubits.
UnitaryProgram cast(const UnitaryProgram& u, std::size_t d);

bool well_typed(const UnitaryProgram& u);

class Program;

namespace com {
struct Node;
using NodePtr = std::shared_ptr<const Node>;

struct Uc {
    UnitaryProgram u;
};
struct Skip {};
/// Measure q; run if1 on outcome 1, if0 on outcome 0.
struct Meas {
    Qubit q;
    NodePtr if1;
    NodePtr if0;
};
struct Seq {
    NodePtr first;
    NodePtr second;
};
struct Node {
    std::variant<Uc, Skip, Meas, Seq> v;
};
}  // namespace com

/// Program with measurement on a register of dim() qubits.
class Program {
   public:
    static Program uc(const UnitaryProgram& u);
    static Program skip(std::size_t d);
    static Program meas(Qubit q, const Program& if1, const Program& if0);
    static Program seq(const Program& first, const Program& second);

    std::size_t dim() const { return dim_; }
    const com::Node& node() const { return *root_; }
    const com::NodePtr& root() const { return root_; }

    bool operator==(const Program& other) const;

   private:
    friend Program make_program(std::size_t, com::NodePtr);
    Program(std::size_t d, com::NodePtr root) : dim_(d), root_(std::move(root)) {}

    std::size_t dim_;
    com::NodePtr root_;
};

Program seq(std::initializer_list<Program> parts);
inline Program operator>>(const Program& a, const Program& b) { return Program::seq(a, b); }

/// meas q skip skip
Program measure(std::size_t d, Qubit q);
/// meas q (X q) skip
Program reset(std::size_t d, Qubit q);

bool well_typed(const Program& p);
/// True when p contains no measurement.
bool is_unitary_only(const Program& p);

}  // namespace sqir
