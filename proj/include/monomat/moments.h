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

#ifndef MONOMAT_MOMENTS_H
#define MONOMAT_MOMENTS_H

#include <array>
#include <span>
#include <string>
#include <vector>

#include "monomat/linalg.h"
#include "monomat/ncalg.h"
#include "monomat/tau.h"

namespace monomat {

/// The weight on the A algebra: non-normalized trace of products of fixed
/// Hermitian matrices, or power sums of a single spectrum.
class OmegaZero {
   public:
    OmegaZero() = default;
    static OmegaZero from_matrices(std::vector<Matrix> matrices);
    static OmegaZero from_eigenvalues(std::vector<double> eigenvalues);

    /// Throws std::out_of_range for an index outside 1..generators().
    complex operator()(std::span<const uint32_t> a_word) const;

    uint32_t generators() const {
        return static_cast<uint32_t>(matrices_.size());
    }
    size_t dimension() const {
        return matrices_.empty() ? 0 : matrices_.front().rows();
    }
    /// One matrix per generator; a spectrum is materialized as a diagonal.
    const std::vector<Matrix> &matrices() const {
        return matrices_;
    }
    const std::vector<double> &eigenvalues() const {
        return eigenvalues_;
    }
    bool from_spectrum() const {
        return spectral_;
    }

   private:
    std::vector<Matrix> matrices_;
    std::vector<double> eigenvalues_;
    bool spectral_ = false;
};

struct MomentData {
    OmegaZero omega0;
    TauTable tau;

    uint32_t p() const {
        return omega0.generators();
    }
    uint32_t q() const {
        return tau.max_index();
    }
};

enum class MomentKind { Cyclic, Monotone };

complex omega0_eval(std::span<const uint32_t> a_word, const MomentData &data);

/// omega(b0 a1 b1 ... an bn) = omega0(a1...an) tau(b1)...tau(b_{n-1}) tau(bn b0),
/// extended linearly. Requires p in the ideal generated by A.
complex cyclic_moment(const Polynomial &p, const MomentData &data);

/// omega~(b0 a1 b1 ... an bn) = omega0(a1...an) tau(b0) tau(b1)...tau(bn).
complex monotone_moment(const Polynomial &p, const MomentData &data);

complex moment(const Polynomial &p, const MomentData &data, MomentKind kind);

/// Evaluates through the quotient map: omega0 (x) Tr for the cyclic weight and
/// omega0 (x) psi for the monotone state.
complex moment_via_chi(const Polynomial &p, const MomentData &data, MomentKind kind);
complex evaluate_quotient(const QuotientElement &element, const MomentData &data, MomentKind kind);

/// Sign of omega(PQ) and omega~(PQ) for P, Q over {a, a c, c a, c a c}
/// with a = a1 and c the centered b1.
struct SignTables {
    static constexpr std::array<const char *, 4> kLabels = {"a1", "a1 c1", "c1 a1", "c1 a1 c1"};
    std::array<std::array<complex, 4>, 4> cyclic_values{};
    std::array<std::array<complex, 4>, 4> monotone_values{};
    std::array<std::array<char, 4>, 4> cyclic{};
    std::array<std::array<char, 4>, 4> monotone{};
    bool cyclic_matches = false;
    bool monotone_matches = false;

    bool all_match() const {
        return cyclic_matches && monotone_matches;
    }
};

/// Reference patterns for the two tables.
std::array<std::array<char, 4>, 4> expected_cyclic_signs();
std::array<std::array<char, 4>, 4> expected_monotone_signs();

SignTables sign_tables(const MomentData &data, double tol = 1e-12);

/// Coefficients of an orthonormal centered family b'_1..b'_q over the basis
/// (1, b_1, ..., b_q): row i-1 of `coefficients` expresses b'_i.
struct GramSchmidtResult {
    Matrix coefficients;  // q x (q+1)
};

/// `gram` holds tau(b_i* b_j), `means` holds tau(b_i). Pivots in the given
/// order with no reordering; a squared pivot below 1e-10 is rejected.
GramSchmidtResult gram_schmidt(const Matrix &gram, std::span<const complex> means);

/// tau' on words of length 1..max_length over the new family.
TauTable change_basis(const TauTable &tau, const Matrix &coefficients, size_t max_length);

}  // namespace monomat

#endif
