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

#include "monomat/linalg.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace monomat {

namespace {

std::string shape(const Matrix &m) {
    std::stringstream ss;
    ss << m.rows() << "x" << m.cols();
    return ss.str();
}

void require_square(const Matrix &m, const char *op) {
    if (!m.is_square()) {
        throw std::invalid_argument(std::string(op) + " needs a square matrix, got " + shape(m));
    }
}

void require_same_shape(const Matrix &a, const Matrix &b, const char *op) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw std::invalid_argument(std::string(op) + ": shape mismatch " + shape(a) + " vs " + shape(b));
    }
}

}  // namespace

Matrix::Matrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols) {
}

Matrix::Matrix(size_t rows, size_t cols, std::vector<complex> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (entries_.size() != rows * cols) {
        throw std::invalid_argument("Matrix: entry count does not match rows*cols");
    }
}

Matrix::Matrix(std::initializer_list<std::initializer_list<complex>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    entries_.reserve(rows_ * cols_);
    for (const auto &r : rows) {
        if (r.size() != cols_) {
            throw std::invalid_argument("Matrix: ragged initializer");
        }
        entries_.insert(entries_.end(), r.begin(), r.end());
    }
}

Matrix Matrix::identity(size_t n) {
    Matrix m(n, n);
    for (size_t i = 0; i < n; i++) {
        m(i, i) = 1.0;
    }
    return m;
}

Matrix Matrix::diagonal(std::span<const complex> values) {
    Matrix m(values.size(), values.size());
    for (size_t i = 0; i < values.size(); i++) {
        m(i, i) = values[i];
    }
    return m;
}

Matrix Matrix::diagonal(std::span<const double> values) {
    Matrix m(values.size(), values.size());
    for (size_t i = 0; i < values.size(); i++) {
        m(i, i) = values[i];
    }
    return m;
}

Matrix Matrix::adjoint() const {
    Matrix out(cols_, rows_);
    for (size_t i = 0; i < rows_; i++) {
        for (size_t j = 0; j < cols_; j++) {
            out(j, i) = std::conj((*this)(i, j));
        }
    }
    return out;
}

double Matrix::max_abs() const {
    double best = 0;
    for (const auto &z : entries_) {
        best = std::max(best, std::abs(z));
    }
    return best;
}

double Matrix::frobenius_norm() const {
    double acc = 0;
    for (const auto &z : entries_) {
        acc += std::norm(z);
    }
    return std::sqrt(acc);
}

bool Matrix::is_hermitian(double rel_tol) const {
    if (!is_square()) {
        return false;
    }
    double bound = rel_tol * (1 + max_abs());
    for (size_t i = 0; i < rows_; i++) {
        for (size_t j = i; j < cols_; j++) {
            if (std::abs((*this)(i, j) - std::conj((*this)(j, i))) > bound) {
                return false;
            }
        }
    }
    return true;
}

Matrix &Matrix::operator+=(const Matrix &other) {
    require_same_shape(*this, other, "operator+=");
    for (size_t k = 0; k < entries_.size(); k++) {
        entries_[k] += other.entries_[k];
    }
    return *this;
}

Matrix &Matrix::operator-=(const Matrix &other) {
    require_same_shape(*this, other, "operator-=");
    for (size_t k = 0; k < entries_.size(); k++) {
        entries_[k] -= other.entries_[k];
    }
    return *this;
}

Matrix &Matrix::operator*=(complex scalar) {
    for (auto &z : entries_) {
        z *= scalar;
    }
    return *this;
}

Matrix operator+(Matrix a, const Matrix &b) {
    a += b;
    return a;
}

Matrix operator-(Matrix a, const Matrix &b) {
    a -= b;
    return a;
}

Matrix operator*(Matrix a, complex scalar) {
    a *= scalar;
    return a;
}

Matrix operator*(complex scalar, Matrix a) {
    a *= scalar;
    return a;
}

Matrix operator*(const Matrix &a, const Matrix &b) {
    return matmul(a, b);
}

Matrix kron(const Matrix &a, const Matrix &b) {
    size_t rb = b.rows();
    size_t cb = b.cols();
    Matrix out(a.rows() * rb, a.cols() * cb);
    for (size_t i = 0; i < a.rows(); i++) {
        for (size_t j = 0; j < a.cols(); j++) {
            complex s = a(i, j);
            if (s == complex{}) {
                continue;
            }
            for (size_t k = 0; k < rb; k++) {
                for (size_t l = 0; l < cb; l++) {
                    out(i * rb + k, j * cb + l) = s * b(k, l);
                }
            }
        }
    }
    return out;
}

Matrix matmul(const Matrix &a, const Matrix &b) {
    if (a.cols() != b.rows()) {
        throw std::invalid_argument("matmul: inner dimensions differ, " + shape(a) + " * " + shape(b));
    }
    size_t n = a.rows();
    size_t inner = a.cols();
    size_t m = b.cols();
    Matrix out(n, m);
    std::vector<char> live(inner, 0);
    for (size_t k = 0; k < inner; k++) {
        for (const auto &z : b.row(k)) {
            if (z != complex{}) {
                live[k] = 1;
                break;
            }
        }
    }
    // i-k-j order keeps the inner loop contiguous; zero entries of `a` and
    // zero rows of `b` are skipped, which matters for the corner-supported
    // matrices used here.
    for (size_t i = 0; i < n; i++) {
        complex *dst = out.row(i).data();
        for (size_t k = 0; k < inner; k++) {
            complex s = a(i, k);
            if (!live[k] || (s.real() == 0 && s.imag() == 0)) {
                continue;
            }
            const complex *src = b.row(k).data();
            double sr = s.real();
            double si = s.imag();
            for (size_t j = 0; j < m; j++) {
                double br = src[j].real();
                double bi = src[j].imag();
                dst[j] += complex(sr * br - si * bi, sr * bi + si * br);
            }
        }
    }
    return out;
}

complex trace(const Matrix &m) {
    require_square(m, "trace");
    return leading_trace(m, m.rows());
}

complex leading_trace(const Matrix &m, size_t count) {
    require_square(m, "leading_trace");
    if (count > m.rows()) {
        throw std::out_of_range("leading_trace: count exceeds matrix dimension");
    }
    complex acc = 0;
    for (size_t i = 0; i < count; i++) {
        acc += m(i, i);
    }
    return acc;
}

Matrix embed_top_corner(const Matrix &m, size_t dim) {
    require_square(m, "embed_top_corner");
    if (dim < m.rows()) {
        throw std::invalid_argument("embed_top_corner: target dimension smaller than matrix");
    }
    Matrix out(dim, dim);
    for (size_t i = 0; i < m.rows(); i++) {
        for (size_t j = 0; j < m.cols(); j++) {
            out(i, j) = m(i, j);
        }
    }
    return out;
}

double max_abs_diff(const Matrix &a, const Matrix &b) {
    require_same_shape(a, b, "max_abs_diff");
    double best = 0;
    for (size_t k = 0; k < a.entries().size(); k++) {
        best = std::max(best, std::abs(a.entries()[k] - b.entries()[k]));
    }
    return best;
}

namespace {

double off_diagonal_norm(const Matrix &a) {
    double acc = 0;
    for (size_t i = 0; i < a.rows(); i++) {
        for (size_t j = 0; j < a.cols(); j++) {
            if (i != j) {
                acc += std::norm(a(i, j));
            }
        }
    }
    return std::sqrt(acc);
}

}  // namespace

EigenSystem hermitian_eigensystem(const Matrix &m) {
    require_square(m, "hermitian_eigensystem");
    if (!m.is_hermitian()) {
        throw std::invalid_argument("hermitian_eigensystem: matrix is not Hermitian");
    }
    size_t n = m.rows();
    Matrix a = m + m.adjoint();
    a *= 0.5;
    Matrix v = Matrix::identity(n);

    double target = 1e-12 * m.frobenius_norm();
    constexpr int kMaxSweeps = 100;
    int sweep = 0;
    while (off_diagonal_norm(a) > target) {
        if (++sweep > kMaxSweeps) {
            throw std::runtime_error("hermitian_eigensystem: Jacobi sweeps did not converge");
        }
        for (size_t p = 0; p + 1 < n; p++) {
            for (size_t q = p + 1; q < n; q++) {
                complex apq = a(p, q);
                double mag = std::abs(apq);
                if (mag == 0) {
                    continue;
                }
                // Phase-rotate the (p,q) pair to a real symmetric 2x2 block,
                // then apply the classical Jacobi rotation.
                complex phase = apq / mag;
                double app = a(p, p).real();
                double aqq = a(q, q).real();
                double theta = (aqq - app) / (2 * mag);
                double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1));
                double c = 1 / std::sqrt(t * t + 1);
                double s = t * c;
                // V restricted to (p,q): [[c, s], [-s e^{-i phi}, c e^{-i phi}]].
                complex vpp = c;
                complex vpq = s;
                complex vqp = -s * std::conj(phase);
                complex vqq = c * std::conj(phase);

                for (size_t k = 0; k < n; k++) {
                    complex akp = a(k, p);
                    complex akq = a(k, q);
                    a(k, p) = akp * vpp + akq * vqp;
                    a(k, q) = akp * vpq + akq * vqq;
                }
                for (size_t k = 0; k < n; k++) {
                    complex apk = a(p, k);
                    complex aqk = a(q, k);
                    a(p, k) = std::conj(vpp) * apk + std::conj(vqp) * aqk;
                    a(q, k) = std::conj(vpq) * apk + std::conj(vqq) * aqk;
                }
                a(p, q) = 0;
                a(q, p) = 0;
                for (size_t k = 0; k < n; k++) {
                    complex vkp = v(k, p);
                    complex vkq = v(k, q);
                    v(k, p) = vkp * vpp + vkq * vqp;
                    v(k, q) = vkp * vpq + vkq * vqq;
                }
            }
        }
    }

    std::vector<size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](size_t x, size_t y) {
        return a(x, x).real() > a(y, y).real();
    });
    EigenSystem result;
    result.values.reserve(n);
    result.vectors = Matrix(n, n);
    for (size_t k = 0; k < n; k++) {
        result.values.push_back(a(order[k], order[k]).real());
        for (size_t i = 0; i < n; i++) {
            result.vectors(i, k) = v(i, order[k]);
        }
    }
    return result;
}

std::vector<double> hermitian_eigenvalues(const Matrix &m) {
    return hermitian_eigensystem(m).values;
}

Matrix qr_unitary(const Matrix &m) {
    require_square(m, "qr_unitary");
    size_t n = m.rows();
    double scale = m.frobenius_norm();
    if (n == 0) {
        return m;
    }
    if (scale == 0) {
        throw std::domain_error("qr_unitary: rank-deficient input");
    }
    Matrix r = m;
    std::vector<std::vector<complex>> reflectors(n);
    std::vector<complex> diag(n);
    for (size_t k = 0; k < n; k++) {
        double norm2 = 0;
        for (size_t i = k; i < n; i++) {
            norm2 += std::norm(r(i, k));
        }
        double norm = std::sqrt(norm2);
        if (norm <= 1e-13 * scale) {
            throw std::domain_error("qr_unitary: rank-deficient input");
        }
        complex x0 = r(k, k);
        complex phase = std::abs(x0) == 0 ? complex(1) : x0 / std::abs(x0);
        complex alpha = -phase * norm;
        std::vector<complex> v(n - k);
        for (size_t i = k; i < n; i++) {
            v[i - k] = r(i, k);
        }
        v[0] -= alpha;
        double vnorm = 0;
        for (const auto &z : v) {
            vnorm += std::norm(z);
        }
        vnorm = std::sqrt(vnorm);
        for (auto &z : v) {
            z /= vnorm;
        }
        // r[k:, k:] <- (I - 2 v v^H) r[k:, k:]
        for (size_t j = k; j < n; j++) {
            complex dot = 0;
            for (size_t i = k; i < n; i++) {
                dot += std::conj(v[i - k]) * r(i, j);
            }
            dot *= 2.0;
            for (size_t i = k; i < n; i++) {
                r(i, j) -= v[i - k] * dot;
            }
        }
        diag[k] = r(k, k);
        reflectors[k] = std::move(v);
    }

    // Q = H_0 H_1 ... H_{n-1}, accumulated from the right.
    Matrix q = Matrix::identity(n);
    for (size_t kk = n; kk-- > 0;) {
        const auto &v = reflectors[kk];
        for (size_t j = kk; j < n; j++) {
            complex dot = 0;
            for (size_t i = kk; i < n; i++) {
                dot += std::conj(v[i - kk]) * q(i, j);
            }
            dot *= 2.0;
            for (size_t i = kk; i < n; i++) {
                q(i, j) -= v[i - kk] * dot;
            }
        }
    }
    // Move the phase of each R diagonal entry into Q.
    for (size_t j = 0; j < n; j++) {
        complex ph = diag[j] / std::abs(diag[j]);
        for (size_t i = 0; i < n; i++) {
            q(i, j) *= ph;
        }
    }
    return q;
}

}  // namespace monomat
