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

#ifndef MONOMAT_NCALG_H
#define MONOMAT_NCALG_H

#include <compare>
#include <complex>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include "monomat/tau.h"

namespace monomat {

/// Coefficients with magnitude at or below this are dropped.
constexpr double kPruneThreshold = 1e-15;

enum class Algebra : uint8_t { A = 0, B = 1 };

/// A generator of the free product A * B.
///
/// A letters a_1..a_p come from the non-unital algebra A. B letters
/// b_0..b_q come from the unital algebra B with b_0 = 1; a centered B letter
/// stands for b_j - tau(b_j) 1.
struct Letter {
    Algebra algebra = Algebra::A;
    uint32_t index = 1;
    bool centered = false;

    static Letter a(uint32_t i);
    static Letter b(uint32_t j);
    static Letter centered_b(uint32_t j);

    bool is_a() const {
        return algebra == Algebra::A;
    }
    bool is_unit() const {
        return algebra == Algebra::B && index == 0;
    }

    auto operator<=>(const Letter &) const = default;
};

using Word = std::vector<Letter>;
/// Product of A generators a_{i1} a_{i2} ..., kept unreduced.
using AWord = std::vector<uint32_t>;

/// Drops b_0 letters; the empty word is the unit.
Word normalize(Word word);
size_t count_a_letters(const Word &word);
std::string format_word(const Word &word);
std::string format_aword(const AWord &word);

/// Finite linear combination of normalized words.
class Polynomial {
   public:
    using Terms = std::map<Word, complex>;

    Polynomial() = default;
    static Polynomial constant(complex c);
    static Polynomial monomial(Word word, complex c = 1);

    /// Normalizes `word` and accumulates; prunes the term if it cancels.
    void add_term(Word word, complex c);

    const Terms &terms() const {
        return terms_;
    }
    size_t size() const {
        return terms_.size();
    }
    bool is_zero() const {
        return terms_.empty();
    }
    /// Every word has at least one A letter.
    bool in_ideal() const;
    bool has_centered_letters() const;
    uint32_t max_a_index() const;
    uint32_t max_b_index() const;
    /// Reverses words and conjugates coefficients (generators self-adjoint).
    Polynomial adjoint() const;

    Polynomial &operator+=(const Polynomial &other);
    Polynomial &operator-=(const Polynomial &other);
    Polynomial &operator*=(complex scalar);

    bool operator==(const Polynomial &other) const = default;

   private:
    Terms terms_;
};

Polynomial operator+(Polynomial a, const Polynomial &b);
Polynomial operator-(Polynomial a, const Polynomial &b);
Polynomial operator*(Polynomial a, complex scalar);
Polynomial operator*(complex scalar, Polynomial a);
Polynomial operator*(const Polynomial &a, const Polynomial &b);

Polynomial poly_mul(const Polynomial &a, const Polynomial &b);
Polynomial poly_pow(const Polynomial &p, unsigned k);
double max_abs_diff(const Polynomial &a, const Polynomial &b);

/// Parses e.g. "a1 + b1 a1 b1", "0.5 b1 a1 b2 - (1+2i) a2 c1".
/// Letters: a<i>, b<j> (b0 is the unit), c<j> for the centered b_j.
Polynomial parse_polynomial(std::string_view text);
std::string to_string(const Polynomial &p);

/// One factor of a centered expansion: an A-run, or a centered B-run.
struct Segment {
    Algebra algebra = Algebra::A;
    std::vector<uint32_t> indices;

    auto operator<=>(const Segment &) const = default;
};
using SegmentedWord = std::vector<Segment>;
using CenteredPolynomial = std::map<SegmentedWord, complex>;

std::string format_segmented(const SegmentedWord &word);

/// Rewrites every centered letter c_j as b_j - tau(b_j) 1.
Polynomial decenter(const Polynomial &p, const TauTable &tau);

/// Replaces each maximal B-run w by (centered w) + tau(w) 1 and merges the
/// A-runs that become adjacent. Output segments alternate A and B.
CenteredPolynomial center_expand(const Polynomial &p, const TauTable &tau);

/// Inverse of center_expand: each centered run w becomes w - tau(w) 1.
Polynomial uncenter(const CenteredPolynomial &p, const TauTable &tau);

/// An element of the quotient I/J: at most one A-leg, optionally flanked by
/// centered B-runs.
struct QuotientElement {
    std::map<AWord, complex> part_a;
    std::map<std::pair<AWord, BRun>, complex> part_ab;
    std::map<std::pair<BRun, AWord>, complex> part_ba;
    std::map<std::tuple<BRun, AWord, BRun>, complex> part_bab;

    bool is_zero() const;
    size_t size() const;
    QuotientElement &operator+=(const QuotientElement &other);
    QuotientElement &operator*=(complex scalar);
};

double max_abs_diff(const QuotientElement &a, const QuotientElement &b);

struct ChiDecomposition {
    QuotientElement quotient;
    /// Expansion terms with two or more A-legs (the J component).
    CenteredPolynomial kernel;
};

/// Splits p in I into its quotient image and its J component.
/// Throws std::invalid_argument when p has a word without A letters.
ChiDecomposition chi_decompose(const Polynomial &p, const TauTable &tau);
QuotientElement chi(const Polynomial &p, const TauTable &tau);

}  // namespace monomat

#endif
