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

#include <complex>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace sqir {

using Complex = std::complex<double>;

inline constexpr double kDefaultTol = 1e-9;

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

class DimensionError : public Error {
   public:
    using Error::Error;
};

/// Dense complex matrix, row-major. Vectors are single-column matrices.
///
/// A matrix always has at least one row and one column.
class Matrix {
   public:
    Matrix(std::size_t rows, std::size_t cols);
    Matrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries);
    /// Row-wise literal, e.g. Matrix({{1, 0}, {0, 1}}).
    Matrix(std::initializer_list<std::initializer_list<Complex>> rows);

    static Matrix zeros(std::size_t rows, std::size_t cols);
    static Matrix identity(std::size_t n);
    static Matrix column(std::vector<Complex> entries);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::size_t size() const { return entries_.size(); }
    bool is_vector() const { return cols_ == 1; }
    bool is_square() const { return rows_ == cols_; }

    Complex& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
    const Complex& operator()(std::size_t r, std::size_t c) const {
        return entries_[r * cols_ + c];
    }
    /// Flat row-major access; for vectors this is the i-th amplitude.
    Complex& operator[](std::size_t i) { return entries_[i]; }
    const Complex& operator[](std::size_t i) const { return entries_[i]; }

    std::span<Complex> data() { return entries_; }
    std::span<const Complex> data() const { return entries_; }

    bool operator==(const Matrix&) const = default;

   private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Complex> entries_;
};

Matrix mat_mul(const Matrix& a, const Matrix& b);
Matrix kron(const Matrix& a, const Matrix& b);
Matrix adjoint(const Matrix& a);
Matrix add(const Matrix& a, const Matrix& b);
Matrix sub(const Matrix& a, const Matrix& b);
Matrix scale(Complex c, const Matrix& a);

inline Matrix operator*(const Matrix& a, const Matrix& b) { return mat_mul(a, b); }
inline Matrix operator+(const Matrix& a, const Matrix& b) { return add(a, b); }
inline Matrix operator-(const Matrix& a, const Matrix& b) { return sub(a, b); }
inline Matrix operator*(Complex c, const Matrix& a) { return scale(c, a); }

Complex trace(const Matrix& a);
/// ⟨u|v⟩ = u†v for column vectors of equal length.
Complex inner(const Matrix& u, const Matrix& v);
/// Frobenius norm; the 2-norm for vectors.
double norm(const Matrix& a);
/// Real-valued sum over 0..n-1.
double rsum(std::size_t n, const std::function<double(std::size_t)>& f);

/// Kronecker product of 2x2 identities: I_{2^n}. n = 0 gives [1].
Matrix identity_pow2(std::size_t n);

/// Column vector of length dim with a single 1 at row i.
Matrix basis_vector(std::size_t dim, std::size_t i);

/// Assignment of a classical bit to each of d qubits. Qubit 0 is the most
/// significant bit of the corresponding basis index.
class BasisAssignment {
   public:
    BasisAssignment() = default;
    explicit BasisAssignment(std::vector<bool> bits) : bits_(std::move(bits)) {}
    static BasisAssignment all_zero(std::size_t d) { return BasisAssignment(std::vector<bool>(d)); }
    static BasisAssignment from_index(std::size_t d, std::size_t k);
    static BasisAssignment from_function(std::size_t d, const std::function<bool(std::size_t)>& f);

    std::size_t qubits() const { return bits_.size(); }
    bool operator()(std::size_t i) const { return bits_.at(i); }
    /// Copy with bit i replaced by v.
    BasisAssignment update(std::size_t i, bool v) const;
    std::size_t to_index() const;

    bool operator==(const BasisAssignment&) const = default;

   private:
    std::vector<bool> bits_;
};

Matrix f_to_vec(const BasisAssignment& f);

/// Σ_{i<n} f(i); each summand must be rows x cols. n = 0 gives the zero matrix.
Matrix vsum(std::size_t rows, std::size_t cols, std::size_t n,
            const std::function<Matrix(std::size_t)>& f);

/// f(0) ⊗ f(1) ⊗ ... ⊗ f(n-1) of 2-dimensional column vectors; n = 0 gives [1].
Matrix vkron(std::size_t n, const std::function<Matrix(std::size_t)>& f);

using PathPhase = std::function<double(std::size_t x, std::size_t y)>;
using PathBit = std::function<bool(std::size_t i, std::size_t x, std::size_t y)>;

/// (1/√2^m) Σ_y exp(2πi·P(x,y)/2^m) ⊗_i |f_i(x,y)⟩.
Matrix path_sum_state(std::size_t m, const PathPhase& phase, const PathBit& f, std::size_t x);

/// Largest entrywise modulus of a − b.
double max_abs_diff(const Matrix& a, const Matrix& b);
bool approx_equal(const Matrix& a, const Matrix& b, double tol = kDefaultTol);
bool is_zero(const Matrix& a, double tol = 0.0);
bool is_unitary(const Matrix& a, double tol = kDefaultTol);

/// True iff u ≈ c·v for some nonzero c, where c is fixed by the largest-magnitude
/// entry of v.
bool proportional(const Matrix& u, const Matrix& v, double tol = kDefaultTol);

/// 1 << n, checked against overflow of the address space we support.
std::size_t pow2(std::size_t n);

}  // namespace sqir
