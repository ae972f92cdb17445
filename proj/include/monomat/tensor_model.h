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

#ifndef MONOMAT_TENSOR_MODEL_H
#define MONOMAT_TENSOR_MODEL_H

#include <string>
#include <vector>

#include "monomat/linalg.h"
#include "monomat/moments.h"
#include "monomat/ncalg.h"

namespace monomat {

constexpr size_t kDefaultDimensionCap = 4096;
constexpr unsigned kMaxPower = 32;

/// Input to the tensor model builder. The A matrices may be smaller than n;
/// they are padded into the top-left corner.
struct ModelSpec {
    size_t n = 1;
    uint32_t q = 0;
    std::vector<Matrix> a_matrices;
    Polynomial poly;
    size_t dimension_cap = kDefaultDimensionCap;
};

/// The 2x2 building blocks.
Matrix swap_matrix();    // [[0,1],[1,0]]
Matrix corner_matrix();  // [[1,0],[0,0]]
Matrix kron_power(const Matrix &m, uint32_t count);

/// I_2 (x) ... (x) J (x) ... (x) I_2 with J in slot j (1-based, from the left);
/// j = 0 gives the identity on (C^2)^{(x) q}.
Matrix flip_generator(uint32_t j, uint32_t q);

/// A (x) B matrices realizing both independences:
/// a_j -> a_j (x) E11^{(x) q}, b_j -> I_n (x) B_j.
struct TensorModel {
    size_t n = 0;
    uint32_t q = 0;
    size_t dim = 0;
    std::vector<Matrix> phi_a;    // index j-1 for a_j
    std::vector<Matrix> b_tilde;  // index j for b_j, j = 0..q
    Matrix p_tilde;

    /// Position in the kron flattening of the d-th diagonal slot when slots
    /// are ordered corner block first: d = t*n + i maps to i*2^q + t.
    size_t corner_first_index(size_t d) const;
};

TensorModel build_model(const ModelSpec &spec);

/// Evaluates a polynomial on the model's generators.
Matrix evaluate_polynomial(const TensorModel &model, const Polynomial &p);

struct StateKind {
    enum class Kind { FullTrace, MonotoneState, PartialTrace };
    Kind kind = Kind::FullTrace;
    size_t l = 0;

    static StateKind full_trace() {
        return {Kind::FullTrace, 0};
    }
    static StateKind monotone_state() {
        return {Kind::MonotoneState, 0};
    }
    static StateKind partial_trace(size_t l) {
        return {Kind::PartialTrace, l};
    }
    /// "full", "monotone" or "partial:<l>".
    static StateKind parse(const std::string &text);
};

Matrix model_power(const TensorModel &model, unsigned k);
complex evaluate_state(const TensorModel &model, unsigned k, StateKind state);
/// Same as evaluate_state on a precomputed power of P~.
complex apply_state(const TensorModel &model, const Matrix &power, StateKind state);

struct VerifyRow {
    unsigned k = 0;
    complex symbolic;
    complex matrix;
    double residual = 0;
    bool pass = false;
};

struct VerifyReport {
    std::vector<VerifyRow> rows;
    double tolerance = 0;
    bool all_pass() const;
    double max_residual() const;
};

constexpr double kVerifyTolerance = 1e-10;

/// |omega(P^k) - Tr(P~^k)| <= tol (1 + |Tr(P~^k)|) for k = 1..k_max.
VerifyReport verify_cyclic(const ModelSpec &spec, const MomentData &data, unsigned k_max, double tol = kVerifyTolerance);
/// Same with the monotone state and the corner functional.
VerifyReport verify_monotone(const ModelSpec &spec, const MomentData &data, unsigned k_max, double tol = kVerifyTolerance);

/// The tau the tensor model realizes, paired with the spec's A matrices.
MomentData model_moment_data(const ModelSpec &spec);

struct LimitRow {
    size_t n = 0;
    size_t l = 0;
    complex value;
};

struct LimitSweep {
    std::vector<LimitRow> rows;
    std::vector<size_t> n_list;
    std::vector<complex> full_trace;      // per n
    std::vector<complex> monotone_state;  // per n
    size_t corner_threshold = 0;          // size of the A matrices
    complex cyclic_limit;                 // lim_n lim_l
    complex monotone_limit;               // lim_l lim_n
    bool cyclic_stable = false;
    bool monotone_stable = false;
    bool passed() const {
        return cyclic_stable && monotone_stable;
    }
};

/// Tabulates leading_trace over the corner-first ordering for every (n, l)
/// and checks both iterated limits stabilize within `tol`. Values of l beyond
/// the model dimension read the full trace (zero padding).
LimitSweep limit_sweep(
    const ModelSpec &spec, unsigned k, const std::vector<size_t> &n_list, const std::vector<size_t> &l_list, double tol = 1e-12);

struct ExampleSpectra {
    std::vector<double> x;  // a + b a b
    std::vector<double> y;  // a b + b a
};

/// Spectra of a + b1 a b1 and a b1 + b1 a in the q = 1 model.
ExampleSpectra example_eigenvalues(const Matrix &a, size_t n);
/// diag(1/2, 1/4, 1/8) with n = 3.
ModelSpec reference_example_spec(const std::string &poly = "a1 + b1 a1 b1");

}  // namespace monomat

#endif
