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

#ifndef MONOMAT_TAU_H
#define MONOMAT_TAU_H

#include <complex>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace monomat {

using complex = std::complex<double>;
/// Ordered product of B generators b_{i1} b_{i2} ..., every index >= 1.
using BRun = std::vector<uint32_t>;

/// The unital state on the B algebra, given on finitely many B words.
///
/// Lookups of a word that is neither stored nor covered by the table's rule
/// throw: a missing moment is never read as zero. The empty word is 1.
class TauTable {
   public:
    enum class Rule {
        /// Only stored entries are known.
        Stored,
        /// b_1..b_q are commuting involutions with normalized-trace moments:
        /// tau(w) = 1 iff every index occurs an even number of times.
        CommutingInvolutions,
    };

    TauTable() = default;

    /// tau(b_i) = 0 and tau(b_i b_j) = delta_ij for 1 <= i, j <= q.
    static TauTable orthonormal(uint32_t q);
    /// Every word over b_1..b_q is covered by the parity rule. This is the
    /// state realized by the tensor model's B matrices.
    static TauTable commuting_involutions(uint32_t q);

    void set(BRun word, complex value);
    std::optional<complex> find(std::span<const uint32_t> word) const;
    complex operator()(std::span<const uint32_t> word) const;
    bool contains(std::span<const uint32_t> word) const {
        return find(word).has_value();
    }

    Rule rule() const {
        return rule_;
    }
    /// Generators covered by the rule; 0 for stored-only tables.
    uint32_t rule_generators() const {
        return rule_q_;
    }
    const std::map<BRun, complex> &stored() const {
        return values_;
    }
    /// Largest index appearing in a stored key or covered by the rule.
    uint32_t max_index() const;

    /// tau(w*) = conj(tau(w)) for stored pairs (generators self-adjoint).
    bool is_hermitian(double tol = 1e-12) const;
    /// tau(uv) = tau(vu) whenever both rotations are stored.
    bool is_tracial(double tol = 1e-12) const;

   private:
    std::map<BRun, complex> values_;
    Rule rule_ = Rule::Stored;
    uint32_t rule_q_ = 0;
};

std::string format_brun(std::span<const uint32_t> word);

}  // namespace monomat

#endif
