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

#ifndef MONOMAT_HAAR_H
#define MONOMAT_HAAR_H

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "monomat/linalg.h"
#include "monomat/rng.h"

namespace monomat {

/// Matrix sampled from Haar measure on U(n): QR of a complex Ginibre matrix
/// with the positive-diagonal convention on R.
Matrix sample_haar_unitary(size_t n, RandomStream &stream);

/// [B_{j0}] A_{i1} B_{j1} A_{i2} B_{j2} ... A_{im} B_{jm}. B index 0 is the
/// identity.
struct WordPattern {
    std::optional<uint32_t> leading_b;
    std::vector<uint32_t> a_indices;
    std::vector<uint32_t> b_indices;

    size_t length() const {
        return a_indices.size();
    }
    /// "ABAB", "BAB", "A1 B2 A2 B1", "B0A1B1"; a bare letter means index 1.
    static WordPattern parse(const std::string &text);
    std::string str() const;
};

/// How the partial-trace length l is chosen at each dimension n.
struct TraceLength {
    enum class Rule { Fixed, Full, Half };
    Rule rule = Rule::Full;
    size_t fixed = 0;

    size_t resolve(size_t n) const;
    /// "<int>", "full" or "n/2".
    static TraceLength parse(const std::string &text);
    std::string str() const;
};

struct RandomModelSpec {
    WordPattern word;
    /// A_i: fixed corner matrices embedded in the top-left of M_n.
    std::vector<Matrix> a_family;
    /// B_j: diagonal matrices tiling the pattern along the diagonal.
    std::vector<std::vector<double>> b_family;
    std::vector<size_t> n_list;
    TraceLength l;
    size_t trials = 100;
    uint64_t seed = 0;
    /// Bound on |Tr(A products)| and |tr(B products)| over contiguous subwords.
    double bound_c = 1e6;
    /// When false the target omits tr(B_{j0}) while the word keeps B_{j0}.
    bool keep_leading_b = true;
    /// Forces U = I in every trial (a deterministic negative control).
    bool identity_unitary = false;

    /// A: diag(1/2, 1/4, 1/8). B: diag(+1, -1, +1, -1, ...). Word ABAB.
    static RandomModelSpec reference(const std::vector<size_t> &n_list, size_t trials, uint64_t seed);
};

Matrix realize_a(const RandomModelSpec &spec, uint32_t i, size_t n);
std::vector<double> realize_b_diagonal(const RandomModelSpec &spec, uint32_t j, size_t n);
/// Throws std::domain_error if the boundedness hypothesis fails at n.
void check_bounds(const RandomModelSpec &spec, size_t n);

/// leading_trace(U B_{j0} U* A_{i1} U B_{j1} U* ..., l).
complex word_value(const RandomModelSpec &spec, size_t n, size_t l, const Matrix &unitary);

/// leading_trace(A_{i1}...A_{im}, l) * tr(B_{j0}) tr(B_{j1}) ... tr(B_{jm}).
complex factorized_target(const RandomModelSpec &spec, size_t n, size_t l);
/// Tr(A_{i1}...A_{im}) tr(B_{j1}) ... tr(B_{j(m-1)}) tr(B_{jm} B_{j0}).
complex cyclic_target(const RandomModelSpec &spec, size_t n);

struct TrialReport {
    size_t n = 0;
    size_t l = 0;
    std::vector<complex> values;
    complex mean;
    double std_error = 0;
    complex target;
    complex cyclic_target;
    double abs_error = 0;
    /// Mean over trials of |value - target|.
    double mean_abs_deviation = 0;
};

/// One report per n in spec.n_list. Trial t at dimension n draws from
/// stream trial_stream_id(n, t), so results do not depend on `threads`.
std::vector<TrialReport> mc_estimate(const RandomModelSpec &spec, unsigned threads = 1);

struct RateFit {
    std::vector<double> n;
    std::vector<double> deviation;
    double slope = 0;
    double intercept = 0;
    double ci_low = 0;
    double ci_high = 0;
    double slope_min = -1.6;
    double slope_max = -0.7;
    bool degenerate = false;
    bool passed = false;
};

/// Least-squares slope of log(mean_abs_deviation) against log(n), with a
/// 95% percentile band from resampling trials.
RateFit rate_check(
    const std::vector<TrialReport> &reports,
    double slope_min = -1.6,
    double slope_max = -0.7,
    size_t resamples = 200,
    uint64_t seed = 0x5eed);

/// n_min * |mean - target| at the smallest dimension.
double calibrate_rate_constant(const std::vector<TrialReport> &reports);
/// |mean - target| <= 3 stderr + c_rate / n.
bool within_error_model(const TrialReport &report, double c_rate);

}  // namespace monomat

#endif
