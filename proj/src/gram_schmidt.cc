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

#include <cmath>
#include <stdexcept>

#include "monomat/moments.h"

namespace monomat {

namespace {

constexpr double kMinPivot = 1e-10;

/// <x, y> = tau(x* y) for coefficient vectors over (1, b_1, ..., b_q).
complex inner(const std::vector<complex> &x, const std::vector<complex> &y, const Matrix &full_gram) {
    complex acc = 0;
    for (size_t i = 0; i < x.size(); i++) {
        if (x[i] == complex{}) {
            continue;
        }
        for (size_t j = 0; j < y.size(); j++) {
            acc += std::conj(x[i]) * full_gram(i, j) * y[j];
        }
    }
    return acc;
}

}  // namespace

GramSchmidtResult gram_schmidt(const Matrix &gram, std::span<const complex> means) {
    size_t q = gram.rows();
    if (!gram.is_square() || means.size() != q) {
        throw std::invalid_argument("gram_schmidt: gram must be q x q with q means");
    }
    if (!gram.is_hermitian()) {
        throw std::invalid_argument("gram_schmidt: gram matrix is not Hermitian");
    }
    Matrix full(q + 1, q + 1);
    full(0, 0) = 1;
    for (size_t j = 0; j < q; j++) {
        full(0, j + 1) = means[j];
        full(j + 1, 0) = std::conj(means[j]);
        for (size_t i = 0; i < q; i++) {
            full(i + 1, j + 1) = gram(i, j);
        }
    }

    std::vector<std::vector<complex>> basis;
    basis.push_back(std::vector<complex>(q + 1, 0.0));
    basis[0][0] = 1;
    for (size_t k = 1; k <= q; k++) {
        std::vector<complex> e(q + 1, 0.0);
        e[k] = 1;
        std::vector<complex> u = e;
        for (const auto &f : basis) {
            complex proj = inner(f, e, full);
            for (size_t j = 0; j <= q; j++) {
                u[j] -= proj * f[j];
            }
        }
        double norm2 = inner(u, u, full).real();
        if (!(norm2 >= kMinPivot)) {
            throw std::domain_error("gram_schmidt: Gram matrix of {1, b_1, ..., b_q} is singular or indefinite");
        }
        double norm = std::sqrt(norm2);
        for (auto &z : u) {
            z /= norm;
        }
        basis.push_back(std::move(u));
    }

    GramSchmidtResult out{Matrix(q, q + 1)};
    for (size_t i = 0; i < q; i++) {
        for (size_t j = 0; j <= q; j++) {
            out.coefficients(i, j) = basis[i + 1][j];
        }
    }
    return out;
}

namespace {

void expand_word(
    const TauTable &tau,
    const Matrix &coefficients,
    const BRun &target,
    size_t pos,
    BRun &current,
    complex weight,
    complex &acc) {
    if (weight == complex{}) {
        return;
    }
    if (pos == target.size()) {
        acc += weight * tau(current);
        return;
    }
    size_t row = target[pos] - 1;
    for (size_t j = 0; j < coefficients.cols(); j++) {
        complex c = coefficients(row, j);
        if (c == complex{}) {
            continue;
        }
        if (j == 0) {
            expand_word(tau, coefficients, target, pos + 1, current, weight * c, acc);
        } else {
            current.push_back(static_cast<uint32_t>(j));
            expand_word(tau, coefficients, target, pos + 1, current, weight * c, acc);
            current.pop_back();
        }
    }
}

}  // namespace

TauTable change_basis(const TauTable &tau, const Matrix &coefficients, size_t max_length) {
    size_t q = coefficients.rows();
    if (coefficients.cols() != q + 1) {
        throw std::invalid_argument("change_basis: coefficients must be q x (q+1)");
    }
    TauTable out;
    BRun word;
    // Enumerate all words over 1..q of each length in lexicographic order.
    for (size_t len = 1; len <= max_length; len++) {
        word.assign(len, 1);
        while (true) {
            BRun current;
            complex acc = 0;
            expand_word(tau, coefficients, word, 0, current, 1.0, acc);
            out.set(word, acc);
            size_t pos = len;
            while (pos > 0 && word[pos - 1] == q) {
                word[pos - 1] = 1;
                pos--;
            }
            if (pos == 0) {
                break;
            }
            word[pos - 1]++;
        }
    }
    return out;
}

}  // namespace monomat
