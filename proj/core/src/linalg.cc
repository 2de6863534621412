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

#include "sqir/linalg.h"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace sqir {

namespace {

std::string shape(const Matrix& m) {
    return std::to_string(m.rows()) + "x" + std::to_string(m.cols());
}

void require_same_shape(const Matrix& a, const Matrix& b, const char* op) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw DimensionError(std::string(op) + ": shape mismatch " + shape(a) + " vs " + shape(b));
    }
}

void require_finite(std::span<const Complex> entries) {
    for (const auto& z : entries) {
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
            throw Error("matrix entry is not finite");
        }
    }
}

}  // namespace

Matrix::Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols) {
    if (rows == 0 || cols == 0) {
        throw DimensionError("matrix must have at least one row and one column");
    }
    entries_.assign(rows * cols, Complex{});
}

Matrix::Matrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (rows == 0 || cols == 0) {
        throw DimensionError("matrix must have at least one row and one column");
    }
    if (entries_.size() != rows * cols) {
        throw DimensionError("entry count " + std::to_string(entries_.size()) +
                             " does not match " + std::to_string(rows) + "x" +
                             std::to_string(cols));
    }
    require_finite(entries_);
}

Matrix::Matrix(std::initializer_list<std::initializer_list<Complex>> rows)
    : rows_(rows.size()), cols_(rows.size() == 0 ? 0 : rows.begin()->size()) {
    if (rows_ == 0 || cols_ == 0) {
        throw DimensionError("matrix must have at least one row and one column");
    }
    entries_.reserve(rows_ * cols_);
    for (const auto& row : rows) {
        if (row.size() != cols_) throw DimensionError("ragged matrix literal");
        entries_.insert(entries_.end(), row.begin(), row.end());
    }
    require_finite(entries_);
}

Matrix Matrix::zeros(std::size_t rows, std::size_t cols) { return Matrix(rows, cols); }

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

Matrix Matrix::column(std::vector<Complex> entries) {
    const auto n = entries.size();
    return Matrix(n, 1, std::move(entries));
}

Matrix mat_mul(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.rows()) {
        throw DimensionError("mat_mul: " + shape(a) + " times " + shape(b));
    }
    Matrix out(a.rows(), b.cols());
    const std::size_t n = a.cols();
    // i-k-j loop order; every out(i, j) still accumulates over k ascending.
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t k = 0; k < n; ++k) {
            const Complex aik = a(i, k);
            if (aik == Complex{}) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += aik * b(k, j);
        }
    }
    return out;
}

Matrix kron(const Matrix& a, const Matrix& b) {
    Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t ar = 0; ar < a.rows(); ++ar) {
        for (std::size_t ac = 0; ac < a.cols(); ++ac) {
            const Complex s = a(ar, ac);
            if (s == Complex{}) continue;
            for (std::size_t br = 0; br < b.rows(); ++br) {
                for (std::size_t bc = 0; bc < b.cols(); ++bc) {
                    out(ar * b.rows() + br, ac * b.cols() + bc) = s * b(br, bc);
                }
            }
        }
    }
    return out;
}

Matrix adjoint(const Matrix& a) {
    Matrix out(a.cols(), a.rows());
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t c = 0; c < a.cols(); ++c) out(c, r) = std::conj(a(r, c));
    }
    return out;
}

Matrix add(const Matrix& a, const Matrix& b) {
    require_same_shape(a, b, "add");
    Matrix out = a;
    for (std::size_t i = 0; i < out.size(); ++i) out[i] += b[i];
    return out;
}

Matrix sub(const Matrix& a, const Matrix& b) {
    require_same_shape(a, b, "sub");
    Matrix out = a;
    for (std::size_t i = 0; i < out.size(); ++i) out[i] -= b[i];
    return out;
}

Matrix scale(Complex c, const Matrix& a) {
    Matrix out = a;
    for (auto& z : out.data()) z *= c;
    return out;
}

Complex trace(const Matrix& a) {
    if (!a.is_square()) throw DimensionError("trace of non-square " + shape(a));
    Complex t{};
    for (std::size_t i = 0; i < a.rows(); ++i) t += a(i, i);
    return t;
}

Complex inner(const Matrix& u, const Matrix& v) {
    if (!u.is_vector() || !v.is_vector() || u.rows() != v.rows()) {
        throw DimensionError("inner: " + shape(u) + " vs " + shape(v));
    }
    Complex s{};
    for (std::size_t i = 0; i < u.rows(); ++i) s += std::conj(u[i]) * v[i];
    return s;
}

double norm(const Matrix& a) {
    double s = 0.0;
    for (const auto& z : a.data()) s += std::norm(z);
    return std::sqrt(s);
}

double rsum(std::size_t n, const std::function<double(std::size_t)>& f) {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) s += f(i);
    return s;
}

std::size_t pow2(std::size_t n) {
    if (n >= 8 * sizeof(std::size_t) - 2) throw DimensionError("2^" + std::to_string(n) + " too large");
    return std::size_t{1} << n;
}

Matrix identity_pow2(std::size_t n) { return Matrix::identity(pow2(n)); }

Matrix basis_vector(std::size_t dim, std::size_t i) {
    if (i >= dim) {
        throw DimensionError("basis_vector: index " + std::to_string(i) + " out of range for length " +
                             std::to_string(dim));
    }
    Matrix v(dim, 1);
    v[i] = 1.0;
    return v;
}

BasisAssignment BasisAssignment::from_index(std::size_t d, std::size_t k) {
    if (k >= pow2(d)) throw DimensionError("index does not fit in " + std::to_string(d) + " bits");
    std::vector<bool> bits(d);
    for (std::size_t i = 0; i < d; ++i) bits[i] = (k >> (d - 1 - i)) & 1U;
    return BasisAssignment(std::move(bits));
}

BasisAssignment BasisAssignment::from_function(std::size_t d,
                                               const std::function<bool(std::size_t)>& f) {
    std::vector<bool> bits(d);
    for (std::size_t i = 0; i < d; ++i) bits[i] = f(i);
    return BasisAssignment(std::move(bits));
}

BasisAssignment BasisAssignment::update(std::size_t i, bool v) const {
    auto bits = bits_;
    bits.at(i) = v;
    return BasisAssignment(std::move(bits));
}

std::size_t BasisAssignment::to_index() const {
    std::size_t k = 0;
    for (bool b : bits_) k = (k << 1) | static_cast<std::size_t>(b);
    return k;
}

Matrix f_to_vec(const BasisAssignment& f) {
    return basis_vector(pow2(f.qubits()), f.to_index());
}

Matrix vsum(std::size_t rows, std::size_t cols, std::size_t n,
            const std::function<Matrix(std::size_t)>& f) {
    Matrix acc(rows, cols);
    for (std::size_t i = 0; i < n; ++i) {
        const Matrix term = f(i);
        if (term.rows() != rows || term.cols() != cols) {
            throw DimensionError("vsum: summand " + std::to_string(i) + " has shape " + shape(term));
        }
        for (std::size_t j = 0; j < acc.size(); ++j) acc[j] += term[j];
    }
    return acc;
}

Matrix vkron(std::size_t n, const std::function<Matrix(std::size_t)>& f) {
    Matrix acc = Matrix::identity(1);
    for (std::size_t i = 0; i < n; ++i) {
        const Matrix factor = f(i);
        if (factor.rows() != 2 || factor.cols() != 1) {
            throw DimensionError("vkron: factor " + std::to_string(i) + " is " + shape(factor) +
                                 ", expected 2x1");
        }
        acc = kron(acc, factor);
    }
    return acc;
}

Matrix path_sum_state(std::size_t m, const PathPhase& phase, const PathBit& f, std::size_t x) {
    const std::size_t terms = pow2(m);
    const double two_pi = 2.0 * std::numbers::pi;
    Matrix out = vsum(terms, 1, terms, [&](std::size_t y) {
        const Complex w = std::polar(1.0, two_pi * phase(x, y) / static_cast<double>(terms));
        return scale(w, vkron(m, [&](std::size_t i) { return basis_vector(2, f(i, x, y) ? 1 : 0); }));
    });
    return scale(1.0 / std::sqrt(static_cast<double>(terms)), out);
}

double max_abs_diff(const Matrix& a, const Matrix& b) {
    require_same_shape(a, b, "max_abs_diff");
    double m = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
    return m;
}

bool approx_equal(const Matrix& a, const Matrix& b, double tol) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
    return max_abs_diff(a, b) <= tol;
}

bool is_zero(const Matrix& a, double tol) {
    return std::all_of(a.data().begin(), a.data().end(),
                       [tol](const Complex& z) { return std::abs(z) <= tol; });
}

bool is_unitary(const Matrix& a, double tol) {
    if (!a.is_square()) return false;
    return approx_equal(mat_mul(adjoint(a), a), Matrix::identity(a.rows()), tol);
}

bool proportional(const Matrix& u, const Matrix& v, double tol) {
    if (u.rows() != v.rows() || u.cols() != v.cols()) return false;
    std::size_t pivot = 0;
    for (std::size_t i = 1; i < v.size(); ++i) {
        if (std::abs(v[i]) > std::abs(v[pivot])) pivot = i;
    }
    if (std::abs(v[pivot]) == 0.0) return false;
    const Complex c = u[pivot] / v[pivot];
    if (std::abs(c) <= tol) return false;
    return norm(sub(u, scale(c, v))) <= tol;
}

}  // namespace sqir
