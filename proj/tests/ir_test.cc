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

#include <gtest/gtest.h>

#include <cmath>

#include "sqir/semantics.h"
#include "support/oracles.h"

namespace sqir {
namespace {

using testing::dense_of;
using testing::kPi;

Matrix ket(std::size_t d, std::size_t k) { return basis_vector(pow2(d), k); }

// A random program on d qubits that leaves qubit c alone.
UnitaryProgram random_program_avoiding(harness::Rng& rng, std::size_t d, Qubit c, std::size_t length) {
    const UnitaryProgram inner = testing::random_program(rng, d - 1, length);
    return map_qubits([c](Qubit q) { return q < c ? q : q + 1; }, cast(inner, d));
}

TEST(GatesTest, BaseGateActions) {
    EXPECT_LT(max_abs_diff(dense_of(gates::x(1, 0)) * ket(1, 0), ket(1, 1)), 1e-15);
    const double r = 1.0 / std::sqrt(2.0);
    EXPECT_LT(max_abs_diff(dense_of(gates::h(1, 0)) * ket(1, 0), Matrix::column({r, r})), 1e-15);
    const double theta = 0.7;
    EXPECT_LT(max_abs_diff(dense_of(gates::rz(1, theta, 0)) * ket(1, 1), scale(std::polar(1.0, theta), ket(1, 1))),
              1e-15);
}

TEST(GatesTest, NamedGatesAreRotations) {
    EXPECT_LT(max_abs_diff(ur_matrix({kPi, 0, kPi}), Matrix({{0, 1}, {1, 0}})), 1e-15);
    EXPECT_LT(max_abs_diff(dense_of(gates::z(1, 0)), Matrix({{1, 0}, {0, -1}})), 1e-15);
    EXPECT_LT(max_abs_diff(dense_of(gates::t(1, 0)), Matrix({{1, 0}, {0, std::polar(1.0, kPi / 4)}})), 1e-15);
    EXPECT_LT(max_abs_diff(dense_of(gates::tdg(1, 0)), Matrix({{1, 0}, {0, std::polar(1.0, -kPi / 4)}})), 1e-15);
    EXPECT_EQ(dense_of(gates::id(1, 0)), Matrix::identity(2));
}

TEST(GatesTest, CzIsDiagonalPhase) {
    const Matrix expected{{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, -1}};
    EXPECT_LT(max_abs_diff(dense_of(gates::cz(2, 0, 1)), expected), 1e-15);
}

TEST(OpaqueGateTest, ValidatesMatrix) {
    EXPECT_THROW(OpaqueGate("bad", 1, Matrix({{1, 1}, {0, 1}})), Error);
    EXPECT_THROW(OpaqueGate("bad", 2, Matrix::identity(2)), DimensionError);
    EXPECT_THROW(OpaqueGate("bad", 0, Matrix::identity(1)), Error);
    EXPECT_NO_THROW(OpaqueGate("ok", 1, testing::hadamard()));
}

TEST(ProgramTest, SeqRequiresMatchingDimensions) {
    EXPECT_THROW(gates::h(1, 0) >> gates::h(2, 0), DimensionError);
    EXPECT_THROW(Program::uc(gates::h(1, 0)) >> Program::skip(2), DimensionError);
}

TEST(ProgramTest, FlattenKeepsProgramOrder) {
    const auto apps = flatten(seq({gates::h(2, 0), gates::cnot(2, 0, 1), gates::x(2, 1)}));
    ASSERT_EQ(apps.size(), 3u);
    EXPECT_EQ(std::get<ucom::App1>(apps[0]).q, 0u);
    EXPECT_EQ(std::get<ucom::App2>(apps[1]).q2, 1u);
    EXPECT_EQ(std::get<ucom::App1>(apps[2]).q, 1u);
    EXPECT_EQ(support(seq({gates::h(4, 3), gates::cnot(4, 1, 3)})), (std::vector<Qubit>{1, 3}));
}

TEST(SwapTest, SwapsUnentangledPair) {
    harness::Rng rng(11);
    const Matrix phi = harness::random_state(rng, 2);
    const Matrix psi = harness::random_state(rng, 2);
    EXPECT_LT(max_abs_diff(dense_of(swap_prog(2, 0, 1)) * kron(phi, psi), kron(psi, phi)), 1e-12);
    EXPECT_EQ(dense_of(swap_prog(3, 0, 2)) * ket(3, 0b100), ket(3, 0b001));
    EXPECT_FALSE(well_typed(swap_prog(2, 0, 0)));
    EXPECT_TRUE(is_zero(uc_eval(swap_prog(2, 0, 0))));
}

TEST(SwapTest, SymmetricEvenWhenIllTyped) {
    for (std::size_t d = 1; d <= 5; ++d) {
        for (Qubit a = 0; a <= d; ++a) {
            for (Qubit b = 0; b <= d; ++b) {
                ASSERT_EQ(uc_eval(swap_prog(d, a, b)), uc_eval(swap_prog(d, b, a))) << d << a << b;
            }
        }
    }
}

TEST(SwapTest, TransitiveUnderPrecondition) {
    for (std::size_t d = 3; d <= 5; ++d) {
        for (Qubit a = 0; a < d; ++a) {
            for (Qubit b = 0; b < d; ++b) {
                for (Qubit c = 0; c < d; ++c) {
                    if (b == a || b == c || a == c) continue;
                    const Matrix lhs = uc_eval(swap_prog(d, a, c));
                    const Matrix rhs = uc_eval(swap_prog(d, b, c)) * uc_eval(swap_prog(d, a, b)) *
                                       uc_eval(swap_prog(d, b, c));
                    // The conjugated form is the composition that exchanges a and c through b.
                    ASSERT_LT(max_abs_diff(lhs, rhs), 1e-12) << d << a << b << c;
                }
            }
        }
    }
}

TEST(SwapTest, TwoSwapsComposeToACycle) {
    // SWAP a b ; SWAP b c moves a's content to c, c's to b and b's to a.
    const Matrix m = uc_eval(swap_prog(3, 0, 1) >> swap_prog(3, 1, 2));
    EXPECT_LT(max_abs_diff(m * ket(3, 0b100), ket(3, 0b001)), 1e-12);
    EXPECT_LT(max_abs_diff(m * ket(3, 0b001), ket(3, 0b010)), 1e-12);
    EXPECT_GT(max_abs_diff(m, uc_eval(swap_prog(3, 0, 2))), 0.5);
}

TEST(SwapTest, PreconditionNeededForThroughQubit) {
    // b outside the register: the left side is well-typed, the right side is zero.
    const Matrix lhs = uc_eval(swap_prog(2, 0, 1));
    const Matrix rhs = uc_eval(seq({swap_prog(2, 0, 2), swap_prog(2, 2, 1), swap_prog(2, 0, 2)}));
    EXPECT_FALSE(is_zero(lhs));
    EXPECT_TRUE(is_zero(rhs));
}

TEST(ToffoliTest, ExactGateListing) {
    const auto apps = flatten(toffoli(3, 0, 1, 2));
    ASSERT_EQ(apps.size(), 15u);
    // H c; CNOT b c; T† c; CNOT a c; T c; CNOT b c; T† c; CNOT a c; CNOT a b; T† b; CNOT a b; T a; T b; T c; H c
    const std::vector<std::pair<char, std::vector<Qubit>>> expected = {
        {'H', {2}},    {'C', {1, 2}}, {'D', {2}}, {'C', {0, 2}}, {'T', {2}},
        {'C', {1, 2}}, {'D', {2}},    {'C', {0, 2}}, {'C', {0, 1}}, {'D', {1}},
        {'C', {0, 1}}, {'T', {0}},    {'T', {1}}, {'T', {2}},    {'H', {2}}};
    for (std::size_t i = 0; i < 15; ++i) {
        const auto& [kind, qs] = expected[i];
        if (kind == 'C') {
            const auto& a = std::get<ucom::App2>(apps[i]);
            EXPECT_EQ(a.q1, qs[0]) << i;
            EXPECT_EQ(a.q2, qs[1]) << i;
            continue;
        }
        const auto& a = std::get<ucom::App1>(apps[i]);
        EXPECT_EQ(a.q, qs[0]) << i;
        const UnitaryProgram ref = kind == 'H' ? gates::h(3, qs[0]) : kind == 'T' ? gates::t(3, qs[0]) : gates::tdg(3, qs[0]);
        EXPECT_EQ(a.gate, std::get<ucom::App1>(flatten(ref)[0]).gate) << i;
    }
}

TEST(ToffoliTest, BasisExamples) {
    EXPECT_LT(max_abs_diff(uc_eval(toffoli(3, 0, 1, 2)) * ket(3, 0b110), ket(3, 0b111)), 1e-12);
    EXPECT_LT(max_abs_diff(uc_eval(toffoli(3, 0, 1, 2)) * ket(3, 0b100), ket(3, 0b100)), 1e-12);
    EXPECT_FALSE(well_typed(toffoli(3, 0, 0, 2)));
}

TEST(ToffoliTest, ExhaustiveBasisAction) {
    for (std::size_t d = 3; d <= 5; ++d) {
        for (Qubit a = 0; a < d; ++a) {
            for (Qubit b = 0; b < d; ++b) {
                for (Qubit c = 0; c < d; ++c) {
                    if (a == b || b == c || a == c) continue;
                    const Matrix m = dense_of(toffoli(d, a, b, c));
                    for (std::size_t k = 0; k < pow2(d); ++k) {
                        const std::size_t flip = testing::bit_of(k, d, a) & testing::bit_of(k, d, b);
                        const std::size_t out = k ^ (flip << (d - 1 - c));
                        ASSERT_LT(max_abs_diff(m * ket(d, k), ket(d, out)), 1e-12);
                    }
                }
            }
        }
    }
}

TEST(ControlTest, Examples) {
    EXPECT_LT(max_abs_diff(uc_eval(control(0, gates::x(2, 1))), testing::cnot_permutation(2, 0, 1)), 1e-12);
    const double theta = 1.3;
    EXPECT_LT(max_abs_diff(uc_eval(control(0, gates::rz(2, theta, 1))) * ket(2, 3),
                           scale(std::polar(1.0, theta), ket(2, 3))),
              1e-12);
    harness::Rng rng(5);
    const UnitaryProgram u = random_program_avoiding(rng, 3, 0, 6);
    const Matrix psi = harness::random_state(rng, 4);
    const Matrix in = kron(ket(1, 0), psi);
    EXPECT_LT(max_abs_diff(uc_eval(control(0, u)) * in, in), 1e-12);
}

TEST(ControlTest, MatchesSemanticControlledOperator) {
    harness::Rng rng(6);
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t d = 2 + harness::uniform_below(rng, 5);
        const Qubit c = harness::uniform_below(rng, d);
        const UnitaryProgram u = trial % 3 == 0 ? random_program_avoiding(rng, d, c, 1)
                                                : random_program_avoiding(rng, d, c, 1 + harness::uniform_below(rng, 6));
        const Matrix expected = testing::controlled_oracle(d, c, dense_of(u));
        ASSERT_LT(max_abs_diff(uc_eval(control(c, u)), expected), 1e-9) << "trial " << trial;
    }
}

TEST(ControlTest, ControlledCnotIsToffoli) {
    const Matrix expected = testing::controlled_oracle(3, 2, testing::cnot_permutation(3, 0, 1));
    EXPECT_LT(max_abs_diff(uc_eval(control(2, gates::cnot(3, 0, 1))), expected), 1e-12);
}

TEST(ControlTest, ControlledOpaqueBlock) {
    const OpaqueGate g("G", 2, testing::kron_by_index(testing::hadamard(), ur_matrix({0.3, 0.2, 0.1})));
    const UnitaryProgram u = UnitaryProgram::app_opaque(4, g, std::vector<Qubit>{3, 1});
    const Matrix expected = testing::controlled_oracle(4, 2, dense_of(u));
    EXPECT_LT(max_abs_diff(uc_eval(control(2, u)), expected), 1e-12);
}

TEST(ControlTest, NestedControl) {
    const UnitaryProgram u = control(0, control(1, gates::x(3, 2)));
    EXPECT_LT(max_abs_diff(uc_eval(u), dense_of(toffoli(3, 0, 1, 2))), 1e-12);
}

TEST(ControlTest, ControlInsideUIsIllTyped) {
    EXPECT_FALSE(well_typed(control(0, gates::x(2, 0))));
    EXPECT_TRUE(is_zero(uc_eval(control(0, gates::x(2, 0)))));
    EXPECT_FALSE(well_typed(control(1, seq({gates::h(2, 0), gates::cnot(2, 0, 1)}))));
}

TEST(NparTest, Examples) {
    EXPECT_LT(max_abs_diff(dense_of(npar(2, gates::h)) * ket(2, 0), Matrix::column({0.5, 0.5, 0.5, 0.5})), 1e-12);
    EXPECT_LT(max_abs_diff(dense_of(npar(3, gates::x)) * ket(3, 0), ket(3, 7)), 1e-12);
    EXPECT_EQ(npar(0, gates::h), skip(0));
}

TEST(NparTest, ParallelHadamardOnBasisStates) {
    const double r = 1.0 / std::sqrt(2.0);
    for (std::size_t n = 1; n <= 5; ++n) {
        const Matrix m = dense_of(npar(n, gates::h));
        for (std::size_t k = 0; k < pow2(n); ++k) {
            const BasisAssignment f = BasisAssignment::from_index(n, k);
            const Matrix expected = vkron(n, [&](std::size_t i) { return Matrix::column({r, f(i) ? -r : r}); });
            ASSERT_LT(max_abs_diff(m * f_to_vec(f), expected), 1e-12);
        }
    }
}

TEST(NiterTest, Examples) {
    EXPECT_LT(max_abs_diff(dense_of(niter(2, gates::x(1, 0))), Matrix::identity(2)), 1e-15);
    EXPECT_EQ(niter(0, gates::x(2, 1)), skip(2));
}

TEST(NiterTest, PowerOfDenotation) {
    harness::Rng rng(8);
    for (std::size_t d = 1; d <= 5; ++d) {
        const UnitaryProgram u = testing::random_program(rng, d, 4);
        const Matrix m = dense_of(u);
        Matrix power = Matrix::identity(pow2(d));
        for (std::size_t i = 0; i <= 8; ++i) {
            ASSERT_LT(max_abs_diff(uc_eval(niter(i, u)), power), 1e-10) << d << ' ' << i;
            power = m * power;
        }
    }
}

TEST(InvertTest, Examples) {
    EXPECT_LT(max_abs_diff(dense_of(invert(gates::h(1, 0))), testing::hadamard()), 1e-15);
    const auto g = std::get<ucom::App1>(flatten(invert(gates::ur(1, 0.1, 0.2, 0.3, 0)))[0]).gate;
    EXPECT_EQ(g, (URotation{-0.1, -0.3, -0.2}));
}

TEST(InvertTest, AdjointOfDenotation) {
    harness::Rng rng(9);
    for (int trial = 0; trial < 30; ++trial) {
        const std::size_t d = 1 + harness::uniform_below(rng, 6);
        const UnitaryProgram u = testing::random_program(rng, d, 1 + harness::uniform_below(rng, 12));
        ASSERT_LT(max_abs_diff(uc_eval(invert(u)), adjoint(dense_of(u))), 1e-10);
    }
}

TEST(InvertTest, OpaqueBecomesAdjoint) {
    const OpaqueGate g("V", 1, ur_matrix({0.4, 0.5, 0.6}));
    const UnitaryProgram inv = invert(UnitaryProgram::app_opaque(1, g, Qubit{0}));
    const auto apps = flatten(inv);
    const auto& app = std::get<ucom::AppOpaque>(apps[0]);
    EXPECT_EQ(app.gate.name(), "V_dg");
    EXPECT_LT(max_abs_diff(app.gate.matrix(), adjoint(g.matrix())), 1e-15);
}

TEST(MapQubitsTest, ShiftsIndices) {
    EXPECT_EQ(map_qubits([](Qubit q) { return q + 1; }, gates::cnot(3, 0, 1)), gates::cnot(3, 1, 2));
}

TEST(CastTest, ChangesDimensionOnly) {
    const UnitaryProgram u = cast(gates::h(1, 0), 3);
    EXPECT_EQ(u.dim(), 3u);
    EXPECT_EQ(u, gates::h(3, 0));
    EXPECT_FALSE(well_typed(cast(gates::h(3, 2), 2)));
}

TEST(WellTypedTest, Examples) {
    EXPECT_TRUE(well_typed(swap_prog(2, 0, 1)));
    EXPECT_FALSE(well_typed(gates::cnot(2, 0, 0)));
    EXPECT_FALSE(well_typed(gates::h(3, 5)));
    const OpaqueGate g("G", 2, Matrix::identity(4));
    EXPECT_FALSE(well_typed(UnitaryProgram::app_opaque(2, g, Qubit{1})));
    EXPECT_FALSE(well_typed(UnitaryProgram::app_opaque(3, g, std::vector<Qubit>{1, 1})));
    EXPECT_TRUE(well_typed(UnitaryProgram::app_opaque(3, g, std::vector<Qubit>{2, 0})));
}

TEST(WellTypedTest, ProgramBranches) {
    EXPECT_TRUE(well_typed(reset(2, 1)));
    EXPECT_FALSE(well_typed(measure(2, 2)));
    EXPECT_FALSE(well_typed(Program::meas(0, Program::uc(gates::x(2, 3)), Program::skip(2))));
}

TEST(ComTest, MeasureAndResetShapes) {
    const Program r = reset(1, 0);
    const auto& m = std::get<com::Meas>(r.node().v);
    EXPECT_EQ(m.q, 0u);
    EXPECT_TRUE(std::holds_alternative<com::Uc>(m.if1->v));
    EXPECT_TRUE(std::holds_alternative<com::Skip>(m.if0->v));
    EXPECT_TRUE(is_unitary_only(Program::uc(gates::h(1, 0))));
    EXPECT_FALSE(is_unitary_only(measure(1, 0)));
}

TEST(SkipTest, IsIdentityOnQubitZero) {
    EXPECT_EQ(skip(2), gates::id(2, 0));
    EXPECT_EQ(uc_eval(skip(2)), Matrix::identity(4));
}

}  // namespace
}  // namespace sqir
