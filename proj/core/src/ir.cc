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

#include "sqir/ir.h"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "sqir/semantics.h"

namespace sqir {

UnitaryProgram make_unitary(std::size_t d, ucom::NodePtr root);
Program make_program(std::size_t d, com::NodePtr root);

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

constexpr double kPi = std::numbers::pi;

ucom::NodePtr unode(auto alt) {
    return std::make_shared<const ucom::Node>(ucom::Node{std::move(alt)});
}

com::NodePtr cnode(auto alt) { return std::make_shared<const com::Node>(com::Node{std::move(alt)}); }

bool same_ucom(const ucom::Node& a, const ucom::Node& b) {
    if (&a == &b) return true;
    if (a.v.index() != b.v.index()) return false;
    return std::visit(
        overloaded{
            [&](const ucom::Seq& x) {
                const auto& y = std::get<ucom::Seq>(b.v);
                return same_ucom(*x.first, *y.first) && same_ucom(*x.second, *y.second);
            },
            [&](const ucom::App1& x) {
                const auto& y = std::get<ucom::App1>(b.v);
                return x.gate == y.gate && x.q == y.q;
            },
            [&](const ucom::App2& x) {
                const auto& y = std::get<ucom::App2>(b.v);
                return x.q1 == y.q1 && x.q2 == y.q2;
            },
            [&](const ucom::AppOpaque& x) {
                const auto& y = std::get<ucom::AppOpaque>(b.v);
                return x.gate == y.gate && x.qubits == y.qubits;
            },
        },
        a.v);
}

bool same_com(const com::Node& a, const com::Node& b) {
    if (&a == &b) return true;
    if (a.v.index() != b.v.index()) return false;
    return std::visit(overloaded{
                          [&](const com::Uc& x) { return x.u == std::get<com::Uc>(b.v).u; },
                          [&](const com::Skip&) { return true; },
                          [&](const com::Meas& x) {
                              const auto& y = std::get<com::Meas>(b.v);
                              return x.q == y.q && same_com(*x.if1, *y.if1) &&
                                     same_com(*x.if0, *y.if0);
                          },
                          [&](const com::Seq& x) {
                              const auto& y = std::get<com::Seq>(b.v);
                              return same_com(*x.first, *y.first) && same_com(*x.second, *y.second);
                          },
                      },
                      a.v);
}

bool distinct(std::vector<Qubit> qs) {
    std::sort(qs.begin(), qs.end());
    return std::adjacent_find(qs.begin(), qs.end()) == qs.end();
}

ucom::NodePtr map_node(const std::function<Qubit(Qubit)>& sigma, const ucom::NodePtr& n) {
    return std::visit(overloaded{
                          [&](const ucom::Seq& s) {
                              return unode(ucom::Seq{map_node(sigma, s.first), map_node(sigma, s.second)});
                          },
                          [&](const ucom::App1& a) { return unode(ucom::App1{a.gate, sigma(a.q)}); },
                          [&](const ucom::App2& a) { return unode(ucom::App2{sigma(a.q1), sigma(a.q2)}); },
                          [&](const ucom::AppOpaque& a) {
                              std::vector<Qubit> qs;
                              qs.reserve(a.qubits.size());
                              for (Qubit q : a.qubits) qs.push_back(sigma(q));
                              return unode(ucom::AppOpaque{a.gate, std::move(qs)});
                          },
                      },
                      n->v);
}

ucom::NodePtr invert_node(const ucom::NodePtr& n) {
    return std::visit(
        overloaded{
            [&](const ucom::Seq& s) {
                return unode(ucom::Seq{invert_node(s.second), invert_node(s.first)});
            },
            [&](const ucom::App1& a) {
                return unode(ucom::App1{URotation{-a.gate.theta, -a.gate.lambda, -a.gate.phi}, a.q});
            },
            [&](const ucom::App2&) { return n; },
            [&](const ucom::AppOpaque& a) {
                OpaqueGate inv(a.gate.name() + "_dg", a.gate.arity(), adjoint(a.gate.matrix()));
                return unode(ucom::AppOpaque{std::move(inv), a.qubits});
            },
        },
        n->v);
}

// Controlled U_R(θ, φ, λ) from two CNOTs and single-qubit rotations.
UnitaryProgram controlled_rotation(std::size_t d, Qubit c, Qubit t, const URotation& g) {
    return seq({
        gates::rz(d, (g.lambda + g.phi) / 2, c),
        gates::rz(d, (g.lambda - g.phi) / 2, t),
        gates::cnot(d, c, t),
        gates::ur(d, -g.theta / 2, 0.0, -(g.phi + g.lambda) / 2, t),
        gates::cnot(d, c, t),
        gates::ur(d, g.theta / 2, g.phi, 0.0, t),
    });
}

// |0⟩⟨0| ⊗ I + |1⟩⟨1| ⊗ block
Matrix controlled_matrix(const Matrix& block) {
    const std::size_t n = block.rows();
    Matrix out(2 * n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) out(i, i) = 1.0;
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) out(n + r, n + c) = block(r, c);
    }
    return out;
}

UnitaryProgram controlled_block(Qubit c, const UnitaryProgram& u) {
    const std::vector<Qubit> sup = support(u);
    const UnitaryProgram local = cast(
        map_qubits(
            [&](Qubit q) {
                return static_cast<Qubit>(std::lower_bound(sup.begin(), sup.end(), q) - sup.begin());
            },
            u),
        sup.size());
    std::vector<Qubit> wires{c};
    wires.insert(wires.end(), sup.begin(), sup.end());
    OpaqueGate gate("ctrl", wires.size(), controlled_matrix(uc_eval(local)));
    return UnitaryProgram::app_opaque(u.dim(), std::move(gate), std::move(wires));
}

}  // namespace

UnitaryProgram make_unitary(std::size_t d, ucom::NodePtr root) { return UnitaryProgram(d, std::move(root)); }
Program make_program(std::size_t d, com::NodePtr root) { return Program(d, std::move(root)); }

OpaqueGate::OpaqueGate(std::string name, std::size_t arity, Matrix matrix)
    : name_(std::move(name)), arity_(arity), matrix_(std::make_shared<const Matrix>(std::move(matrix))) {
    if (arity_ == 0) throw Error("opaque gate '" + name_ + "' must act on at least one qubit");
    const std::size_t n = pow2(arity_);
    if (matrix_->rows() != n || matrix_->cols() != n) {
        throw DimensionError("opaque gate '" + name_ + "' of arity " + std::to_string(arity_) +
                             " needs a " + std::to_string(n) + "x" + std::to_string(n) + " matrix");
    }
    if (!is_unitary(*matrix_, kDefaultTol)) throw Error("opaque gate '" + name_ + "' is not unitary");
}

bool OpaqueGate::operator==(const OpaqueGate& other) const {
    return name_ == other.name_ && arity_ == other.arity_ &&
           (matrix_ == other.matrix_ || *matrix_ == *other.matrix_);
}

Matrix ur_matrix(const URotation& g) {
    const double c = std::cos(g.theta / 2);
    const double s = std::sin(g.theta / 2);
    return Matrix({{c, -std::polar(1.0, g.lambda) * s},
                   {std::polar(1.0, g.phi) * s, std::polar(1.0, g.phi + g.lambda) * c}});
}

Matrix cnot_matrix() { return Matrix({{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 0, 1}, {0, 0, 1, 0}}); }

Matrix gate_matrix(const Gate& g) {
    return std::visit(overloaded{
                          [](const URotation& r) { return ur_matrix(r); },
                          [](const Cnot&) { return cnot_matrix(); },
                          [](const OpaqueGate& o) { return o.matrix(); },
                      },
                      g);
}

UnitaryProgram UnitaryProgram::app1(std::size_t d, URotation g, Qubit q) {
    return UnitaryProgram(d, unode(ucom::App1{g, q}));
}

UnitaryProgram UnitaryProgram::cnot(std::size_t d, Qubit q1, Qubit q2) {
    return UnitaryProgram(d, unode(ucom::App2{q1, q2}));
}

UnitaryProgram UnitaryProgram::app_opaque(std::size_t d, OpaqueGate g, Qubit offset) {
    std::vector<Qubit> qs(g.arity());
    for (std::size_t i = 0; i < qs.size(); ++i) qs[i] = offset + i;
    return app_opaque(d, std::move(g), std::move(qs));
}

UnitaryProgram UnitaryProgram::app_opaque(std::size_t d, OpaqueGate g, std::vector<Qubit> qubits) {
    if (qubits.size() != g.arity()) {
        throw DimensionError("opaque gate '" + g.name() + "' has arity " + std::to_string(g.arity()) +
                             " but was given " + std::to_string(qubits.size()) + " qubits");
    }
    return UnitaryProgram(d, unode(ucom::AppOpaque{std::move(g), std::move(qubits)}));
}

UnitaryProgram UnitaryProgram::seq(const UnitaryProgram& first, const UnitaryProgram& second) {
    if (first.dim() != second.dim()) {
        throw DimensionError("cannot sequence programs on registers of size " + std::to_string(first.dim()) +
                             " and " + std::to_string(second.dim()));
    }
    return UnitaryProgram(first.dim(), unode(ucom::Seq{first.root_, second.root_}));
}

bool UnitaryProgram::operator==(const UnitaryProgram& other) const {
    return dim_ == other.dim_ && same_ucom(*root_, *other.root_);
}

UnitaryProgram seq(std::initializer_list<UnitaryProgram> parts) {
    if (parts.size() == 0) throw Error("seq needs at least one program");
    auto it = parts.begin();
    UnitaryProgram acc = *it++;
    for (; it != parts.end(); ++it) acc = UnitaryProgram::seq(acc, *it);
    return acc;
}

std::vector<GateApplication> flatten(const UnitaryProgram& u) {
    std::vector<GateApplication> out;
    std::vector<const ucom::Node*> stack{&u.node()};
    while (!stack.empty()) {
        const ucom::Node* n = stack.back();
        stack.pop_back();
        std::visit(overloaded{
                       [&](const ucom::Seq& s) {
                           stack.push_back(s.second.get());
                           stack.push_back(s.first.get());
                       },
                       [&](const auto& app) { out.emplace_back(app); },
                   },
                   n->v);
    }
    return out;
}

std::vector<Qubit> support(const UnitaryProgram& u) {
    std::vector<Qubit> qs;
    for (const auto& app : flatten(u)) {
        std::visit(overloaded{
                       [&](const ucom::App1& a) { qs.push_back(a.q); },
                       [&](const ucom::App2& a) {
                           qs.push_back(a.q1);
                           qs.push_back(a.q2);
                       },
                       [&](const ucom::AppOpaque& a) { qs.insert(qs.end(), a.qubits.begin(), a.qubits.end()); },
                   },
                   app);
    }
    std::sort(qs.begin(), qs.end());
    qs.erase(std::unique(qs.begin(), qs.end()), qs.end());
    return qs;
}

namespace gates {

UnitaryProgram ur(std::size_t d, double theta, double phi, double lambda, Qubit q) {
    return UnitaryProgram::app1(d, URotation{theta, phi, lambda}, q);
}
UnitaryProgram x(std::size_t d, Qubit q) { return ur(d, kPi, 0, kPi, q); }
UnitaryProgram h(std::size_t d, Qubit q) { return ur(d, kPi / 2, 0, kPi, q); }
UnitaryProgram rz(std::size_t d, double lambda, Qubit q) { return ur(d, 0, 0, lambda, q); }
UnitaryProgram z(std::size_t d, Qubit q) { return rz(d, kPi, q); }
UnitaryProgram t(std::size_t d, Qubit q) { return rz(d, kPi / 4, q); }
UnitaryProgram tdg(std::size_t d, Qubit q) { return rz(d, -kPi / 4, q); }
UnitaryProgram id(std::size_t d, Qubit q) { return ur(d, 0, 0, 0, q); }
UnitaryProgram cnot(std::size_t d, Qubit a, Qubit b) { return UnitaryProgram::cnot(d, a, b); }
UnitaryProgram cz(std::size_t d, Qubit a, Qubit b) { return seq({h(d, b), cnot(d, a, b), h(d, b)}); }

}  // namespace gates

UnitaryProgram skip(std::size_t d) { return gates::id(d, 0); }

UnitaryProgram swap_prog(std::size_t d, Qubit a, Qubit b) {
    return seq({gates::cnot(d, a, b), gates::cnot(d, b, a), gates::cnot(d, a, b)});
}

UnitaryProgram toffoli(std::size_t d, Qubit a, Qubit b, Qubit c) {
    using namespace gates;
    return seq({h(d, c), cnot(d, b, c), tdg(d, c), cnot(d, a, c), t(d, c), cnot(d, b, c), tdg(d, c),
                cnot(d, a, c), cnot(d, a, b), tdg(d, b), cnot(d, a, b), t(d, a), t(d, b), t(d, c),
                h(d, c)});
}

UnitaryProgram control(Qubit c, const UnitaryProgram& u) {
    const std::size_t d = u.dim();
    if (const auto* a = std::get_if<ucom::App1>(&u.node().v)) return controlled_rotation(d, c, a->q, a->gate);
    if (const auto* a = std::get_if<ucom::App2>(&u.node().v)) return toffoli(d, c, a->q1, a->q2);
    // An ill-typed body stays ill-typed under control and keeps denoting zero.
    if (!well_typed(u)) return u;
    return controlled_block(c, u);
}

UnitaryProgram npar(std::size_t n, const SingleQubitCtor& g) {
    if (n == 0) return skip(0);
    UnitaryProgram acc = g(n, 0);
    for (Qubit q = 1; q < n; ++q) acc = UnitaryProgram::seq(acc, g(n, q));
    return acc;
}

UnitaryProgram niter(std::size_t i, const UnitaryProgram& u) {
    if (i == 0) return skip(u.dim());
    UnitaryProgram acc = u;
    for (std::size_t k = 1; k < i; ++k) acc = UnitaryProgram::seq(acc, u);
    return acc;
}

UnitaryProgram invert(const UnitaryProgram& u) { return make_unitary(u.dim(), invert_node(u.root())); }

UnitaryProgram map_qubits(const std::function<Qubit(Qubit)>& sigma, const UnitaryProgram& u) {
    return make_unitary(u.dim(), map_node(sigma, u.root()));
}

UnitaryProgram cast(const UnitaryProgram& u, std::size_t d) { return UnitaryProgram(d, u.root_); }

bool well_typed(const UnitaryProgram& u) {
    const std::size_t d = u.dim();
    for (const auto& app : flatten(u)) {
        const bool ok = std::visit(overloaded{
                                       [&](const ucom::App1& a) { return a.q < d; },
                                       [&](const ucom::App2& a) { return a.q1 < d && a.q2 < d && a.q1 != a.q2; },
                                       [&](const ucom::AppOpaque& a) {
                                           return std::all_of(a.qubits.begin(), a.qubits.end(),
                                                              [&](Qubit q) { return q < d; }) &&
                                                  distinct(a.qubits);
                                       },
                                   },
                                   app);
        if (!ok) return false;
    }
    return true;
}

Program Program::uc(const UnitaryProgram& u) { return Program(u.dim(), cnode(com::Uc{u})); }

Program Program::skip(std::size_t d) { return Program(d, cnode(com::Skip{})); }

Program Program::meas(Qubit q, const Program& if1, const Program& if0) {
    if (if1.dim() != if0.dim()) {
        throw DimensionError("measurement branches live on registers of size " + std::to_string(if1.dim()) +
                             " and " + std::to_string(if0.dim()));
    }
    return Program(if1.dim(), cnode(com::Meas{q, if1.root_, if0.root_}));
}

Program Program::seq(const Program& first, const Program& second) {
    if (first.dim() != second.dim()) {
        throw DimensionError("cannot sequence programs on registers of size " + std::to_string(first.dim()) +
                             " and " + std::to_string(second.dim()));
    }
    return Program(first.dim(), cnode(com::Seq{first.root_, second.root_}));
}

bool Program::operator==(const Program& other) const {
    return dim_ == other.dim_ && same_com(*root_, *other.root_);
}

Program seq(std::initializer_list<Program> parts) {
    if (parts.size() == 0) throw Error("seq needs at least one program");
    auto it = parts.begin();
    Program acc = *it++;
    for (; it != parts.end(); ++it) acc = Program::seq(acc, *it);
    return acc;
}

Program measure(std::size_t d, Qubit q) { return Program::meas(q, Program::skip(d), Program::skip(d)); }

Program reset(std::size_t d, Qubit q) {
    return Program::meas(q, Program::uc(gates::x(d, q)), Program::skip(d));
}

namespace {

bool com_well_typed(const com::Node& n, std::size_t d) {
    return std::visit(overloaded{
                          [&](const com::Uc& x) { return well_typed(cast(x.u, d)); },
                          [&](const com::Skip&) { return true; },
                          [&](const com::Meas& m) {
                              return m.q < d && com_well_typed(*m.if1, d) && com_well_typed(*m.if0, d);
                          },
                          [&](const com::Seq& s) { return com_well_typed(*s.first, d) && com_well_typed(*s.second, d); },
                      },
                      n.v);
}

bool com_unitary_only(const com::Node& n) {
    return std::visit(overloaded{
                          [](const com::Uc&) { return true; },
                          [](const com::Skip&) { return true; },
                          [](const com::Meas&) { return false; },
                          [](const com::Seq& s) { return com_unitary_only(*s.first) && com_unitary_only(*s.second); },
                      },
                      n.v);
}

}  // namespace

bool well_typed(const Program& p) { return com_well_typed(p.node(), p.dim()); }

bool is_unitary_only(const Program& p) { return com_unitary_only(p.node()); }

}  // namespace sqir
