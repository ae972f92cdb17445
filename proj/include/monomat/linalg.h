// Copyright 2026 The monomat Authors
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

#ifndef MONOMAT_LINALG_H
#define MONOMAT_LINALG_H

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace monomat {

using complex = std::complex<double>;

/// Dense row-major complex matrix with value semantics.
class Matrix {
   public:
    Matrix() = default;
    Matrix(size_t rows, size_t cols);
    Matrix(size_t rows, size_t cols, std::vector<complex> entries);
    Matrix(std::initializer_list<std::initializer_list<complex>> rows);

    static Matrix identity(size_t n);
    static Matrix diagonal(std::span<const complex> values);
    static Matrix diagonal(std::span<const double> values);

    size_t rows() const {
        return rows_;
    }
    size_t cols() const {
        return cols_;
    }
    bool is_square() const {
        return rows_ == cols_;
    }
    bool empty() const {
        return entries_.empty();
    }

    complex &operator()(size_t i, size_t j) {
        return entries_[i * cols_ + j];
    }
    const complex &operator()(size_t i, size_t j) const {
        return entries_[i * cols_ + j];
    }
    std::span<const complex> entries() const {
        return entries_;
    }
    std::span<complex> row(size_t i) {
        return {entries_.data() + i * cols_, cols_};
    }
    std::span<const complex> row(size_t i) const {
        return {entries_.data() + i * cols_, cols_};
    }

    Matrix adjoint() const;
    double max_abs() const;
    double frobenius_norm() const;
    /// max |m_ij - conj(m_ji)| <= rel_tol * (1 + max_abs()).
    bool is_hermitian(double rel_tol = 1e-12) const;

    Matrix &operator+=(const Matrix &other);
    Matrix &operator-=(const Matrix &other);
    Matrix &operator*=(complex scalar);

    bool operator==(const Matrix &other) const = default;

   private:
    size_t rows_ = 0;
    size_t cols_ = 0;
    std::vector<complex> entries_;
};

Matrix operator+(Matrix a, const Matrix &b);
Matrix operator-(Matrix a, const Matrix &b);
Matrix operator*(Matrix a, complex scalar);
Matrix operator*(complex scalar, Matrix a);
Matrix operator*(const Matrix &a, const Matrix &b);

/// Kronecker product with `a` as the outer block index:
/// result(i*rb + k, j*cb + l) = a(i,j) * b(k,l).
Matrix kron(const Matrix &a, const Matrix &b);
Matrix matmul(const Matrix &a, const Matrix &b);
complex trace(const Matrix &m);
/// Sum of the first `count` diagonal entries.
complex leading_trace(const Matrix &m, size_t count);
Matrix embed_top_corner(const Matrix &m, size_t dim);
double max_abs_diff(const Matrix &a, const Matrix &b);

struct EigenSystem {
    std::vector<double> values;  // descending
    Matrix vectors;              // column k pairs with values[k]
};

/// Cyclic complex Jacobi rotations until the off-diagonal Frobenius norm is
/// at most 1e-12 * ||m||_F.
EigenSystem hermitian_eigensystem(const Matrix &m);
std::vector<double> hermitian_eigenvalues(const Matrix &m);

/// Q factor of m = QR with R carrying a positive real diagonal.
Matrix qr_unitary(const Matrix &m);

}  // namespace monomat

#endif
