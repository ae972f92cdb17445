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

#include "monomat/moments.h"

#include <cmath>
#include <map>
#include <stdexcept>

namespace monomat {

OmegaZero OmegaZero::from_matrices(std::vector<Matrix> matrices) {
    if (matrices.empty()) {
        throw std::invalid_argument("OmegaZero: need at least one matrix");
    }
    size_t dim = matrices.front().rows();
    for (const auto &m : matrices) {
        if (!m.is_square() || m.rows() != dim) {
            throw std::invalid_argument("OmegaZero: matrices must be square with a common dimension");
        }
        if (!m.is_hermitian()) {
            throw std::invalid_argument("OmegaZero: matrices must be Hermitian");
        }
    }
    OmegaZero z;
    z.matrices_ = std::move(matrices);
    return z;
}

OmegaZero OmegaZero::from_eigenvalues(std::vector<double> eigenvalues) {
    if (eigenvalues.empty()) {
        throw std::invalid_argument("OmegaZero: empty spectrum");
    }
    OmegaZero z;
    z.matrices_.push_back(Matrix::diagonal(std::span<const double>(eigenvalues)));
    z.eigenvalues_ = std::move(eigenvalues);
    z.spectral_ = true;
    return z;
}

complex OmegaZero::operator()(std::span<const uint32_t> a_word) const {
    if (a_word.empty()) {
        throw std::invalid_argument("omega0 is only defined on nonempty A words");
    }
    for (auto i : a_word) {
        if (i == 0 || i > generators()) {
            throw std::out_of_range("omega0: A index " + std::to_string(i) + " out of range");
        }
    }
    if (spectral_) {
        double acc = 0;
        for (double lambda : eigenvalues_) {
            acc += std::pow(lambda, static_cast<double>(a_word.size()));
        }
        return acc;
    }
    Matrix acc = matrices_[a_word[0] - 1];
    for (size_t k = 1; k < a_word.size(); k++) {
        acc = matmul(acc, matrices_[a_word[k] - 1]);
    }
    return trace(acc);
}

complex omega0_eval(std::span<const uint32_t> a_word, const MomentData &data) {
    return data.omega0(a_word);
}

namespace {

/// A normalized word split as b0 (a-run b)* with the A-runs concatenated.
struct Factorization {
    AWord a_word;
    BRun leading;
    BRun trailing;
    std::vector<BRun> interior;
};

Factorization factorize(const Word &w) {
    Factorization f;
    BRun pending;
    bool seen_a = false;
    bool in_a = false;
    for (const auto &l : w) {
        if (l.is_a()) {
            if (!in_a && seen_a) {
                f.interior.push_back(std::move(pending));
                pending.clear();
            } else if (!seen_a) {
                f.leading = std::move(pending);
                pending.clear();
            }
            f.a_word.push_back(l.index);
            seen_a = true;
            in_a = true;
        } else {
            pending.push_back(l.index);
            in_a = false;
        }
    }
    if (!seen_a) {
        throw std::invalid_argument("moment of a word without A letters is undefined: " + format_word(w));
    }
    f.trailing = std::move(pending);
    return f;
}

class Evaluator {
   public:
    explicit Evaluator(const MomentData &data) : data_(data) {
    }

    complex omega0(const AWord &w) {
        auto it = omega_cache_.find(w);
        if (it != omega_cache_.end()) {
            return it->second;
        }
        complex v = data_.omega0(w);
        omega_cache_.emplace(w, v);
        return v;
    }

    complex tau(const BRun &w) {
        auto it = tau_cache_.find(w);
        if (it != tau_cache_.end()) {
            return it->second;
        }
        complex v = data_.tau(w);
        tau_cache_.emplace(w, v);
        return v;
    }

    complex word(const Word &w, MomentKind kind) {
        Factorization f = factorize(w);
        complex acc = 1;
        for (const auto &run : f.interior) {
            acc *= tau(run);
            if (acc == complex{}) {
                return 0;
            }
        }
        if (kind == MomentKind::Cyclic) {
            BRun wrap = f.trailing;
            wrap.insert(wrap.end(), f.leading.begin(), f.leading.end());
            acc *= tau(wrap);
        } else {
            acc *= tau(f.leading);
            acc *= tau(f.trailing);
        }
        if (acc == complex{}) {
            return 0;
        }
        return acc * omega0(f.a_word);
    }

   private:
    const MomentData &data_;
    std::map<AWord, complex> omega_cache_;
    std::map<BRun, complex> tau_cache_;
};

}  // namespace

complex moment(const Polynomial &p, const MomentData &data, MomentKind kind) {
    Polynomial plain = decenter(p, data.tau);
    Evaluator eval(data);
    complex acc = 0;
    for (const auto &[w, c] : plain.terms()) {
        acc += c * eval.word(w, kind);
    }
    return acc;
}

complex cyclic_moment(const Polynomial &p, const MomentData &data) {
    return moment(p, data, MomentKind::Cyclic);
}

complex monotone_moment(const Polynomial &p, const MomentData &data) {
    return moment(p, data, MomentKind::Monotone);
}

complex evaluate_quotient(const QuotientElement &element, const MomentData &data, MomentKind kind) {
    complex acc = 0;
    for (const auto &[a, c] : element.part_a) {
        acc += c * data.omega0(a);
    }
    if (kind == MomentKind::Monotone) {
        // psi pairs a centered leg against the unit, which tau sends to zero.
        return acc;
    }
    for (const auto &[key, c] : element.part_bab) {
        const auto &[left, a, right] = key;
        // Tr on B (x) B realized as tau(right centered * left centered).
        BRun joined = right;
        joined.insert(joined.end(), left.begin(), left.end());
        complex pairing = data.tau(joined) - data.tau(right) * data.tau(left);
        acc += c * pairing * data.omega0(a);
    }
    return acc;
}

complex moment_via_chi(const Polynomial &p, const MomentData &data, MomentKind kind) {
    return evaluate_quotient(chi(p, data.tau), data, kind);
}

std::array<std::array<char, 4>, 4> expected_cyclic_signs() {
    return {{
        {'+', '0', '0', '0'},
        {'0', '0', '+', '0'},
        {'0', '+', '0', '0'},
        {'0', '0', '0', '+'},
    }};
}

std::array<std::array<char, 4>, 4> expected_monotone_signs() {
    return {{
        {'+', '0', '0', '0'},
        {'0', '0', '+', '0'},
        {'0', '0', '0', '0'},
        {'0', '0', '0', '0'},
    }};
}

namespace {

char sign_of(complex v, double tol) {
    if (std::abs(v) <= tol) {
        return '0';
    }
    if (std::abs(v.imag()) > tol) {
        return '?';
    }
    return v.real() > 0 ? '+' : '-';
}

}  // namespace

SignTables sign_tables(const MomentData &data, double tol) {
    std::array<Polynomial, 4> row;
    for (size_t k = 0; k < 4; k++) {
        row[k] = parse_polynomial(SignTables::kLabels[k]);
    }
    SignTables t;
    for (size_t i = 0; i < 4; i++) {
        for (size_t j = 0; j < 4; j++) {
            Polynomial pq = row[i] * row[j];
            t.cyclic_values[i][j] = cyclic_moment(pq, data);
            t.monotone_values[i][j] = monotone_moment(pq, data);
            t.cyclic[i][j] = sign_of(t.cyclic_values[i][j], tol);
            t.monotone[i][j] = sign_of(t.monotone_values[i][j], tol);
        }
    }
    t.cyclic_matches = t.cyclic == expected_cyclic_signs();
    t.monotone_matches = t.monotone == expected_monotone_signs();
    return t;
}

}  // namespace monomat
