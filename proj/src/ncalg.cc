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

#include "monomat/ncalg.h"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace monomat {

Letter Letter::a(uint32_t i) {
    if (i == 0) {
        throw std::invalid_argument("A generators are indexed from 1");
    }
    return Letter{Algebra::A, i, false};
}

Letter Letter::b(uint32_t j) {
    return Letter{Algebra::B, j, false};
}

Letter Letter::centered_b(uint32_t j) {
    if (j == 0) {
        throw std::invalid_argument("the unit b0 cannot be centered");
    }
    return Letter{Algebra::B, j, true};
}

Word normalize(Word word) {
    for (const auto &l : word) {
        if (l.is_a() && (l.centered || l.index == 0)) {
            throw std::invalid_argument("malformed A letter");
        }
        if (l.is_unit() && l.centered) {
            throw std::invalid_argument("the unit b0 cannot be centered");
        }
    }
    std::erase_if(word, [](const Letter &l) {
        return l.is_unit();
    });
    return word;
}

size_t count_a_letters(const Word &word) {
    return std::count_if(word.begin(), word.end(), [](const Letter &l) {
        return l.is_a();
    });
}

std::string format_word(const Word &word) {
    if (word.empty()) {
        return "1";
    }
    std::stringstream ss;
    for (size_t k = 0; k < word.size(); k++) {
        if (k) {
            ss << " ";
        }
        const auto &l = word[k];
        ss << (l.is_a() ? 'a' : (l.centered ? 'c' : 'b')) << l.index;
    }
    return ss.str();
}

std::string format_aword(const AWord &word) {
    std::stringstream ss;
    for (size_t k = 0; k < word.size(); k++) {
        if (k) {
            ss << " ";
        }
        ss << "a" << word[k];
    }
    return ss.str();
}

Polynomial Polynomial::constant(complex c) {
    Polynomial p;
    p.add_term({}, c);
    return p;
}

Polynomial Polynomial::monomial(Word word, complex c) {
    Polynomial p;
    p.add_term(std::move(word), c);
    return p;
}

void Polynomial::add_term(Word word, complex c) {
    if (std::abs(c) <= kPruneThreshold) {
        return;
    }
    word = normalize(std::move(word));
    auto [it, inserted] = terms_.try_emplace(std::move(word), c);
    if (!inserted) {
        it->second += c;
        if (std::abs(it->second) <= kPruneThreshold) {
            terms_.erase(it);
        }
    }
}

bool Polynomial::in_ideal() const {
    return std::all_of(terms_.begin(), terms_.end(), [](const auto &kv) {
        return count_a_letters(kv.first) > 0;
    });
}

bool Polynomial::has_centered_letters() const {
    for (const auto &[w, c] : terms_) {
        for (const auto &l : w) {
            if (l.centered) {
                return true;
            }
        }
    }
    return false;
}

uint32_t Polynomial::max_a_index() const {
    uint32_t best = 0;
    for (const auto &[w, c] : terms_) {
        for (const auto &l : w) {
            if (l.is_a()) {
                best = std::max(best, l.index);
            }
        }
    }
    return best;
}

uint32_t Polynomial::max_b_index() const {
    uint32_t best = 0;
    for (const auto &[w, c] : terms_) {
        for (const auto &l : w) {
            if (!l.is_a()) {
                best = std::max(best, l.index);
            }
        }
    }
    return best;
}

Polynomial Polynomial::adjoint() const {
    Polynomial out;
    for (const auto &[w, c] : terms_) {
        out.add_term(Word(w.rbegin(), w.rend()), std::conj(c));
    }
    return out;
}

Polynomial &Polynomial::operator+=(const Polynomial &other) {
    for (const auto &[w, c] : other.terms_) {
        add_term(w, c);
    }
    return *this;
}

Polynomial &Polynomial::operator-=(const Polynomial &other) {
    for (const auto &[w, c] : other.terms_) {
        add_term(w, -c);
    }
    return *this;
}

Polynomial &Polynomial::operator*=(complex scalar) {
    Polynomial out;
    for (const auto &[w, c] : terms_) {
        out.add_term(w, c * scalar);
    }
    *this = std::move(out);
    return *this;
}

Polynomial operator+(Polynomial a, const Polynomial &b) {
    a += b;
    return a;
}

Polynomial operator-(Polynomial a, const Polynomial &b) {
    a -= b;
    return a;
}

Polynomial operator*(Polynomial a, complex scalar) {
    a *= scalar;
    return a;
}

Polynomial operator*(complex scalar, Polynomial a) {
    a *= scalar;
    return a;
}

Polynomial operator*(const Polynomial &a, const Polynomial &b) {
    return poly_mul(a, b);
}

Polynomial poly_mul(const Polynomial &a, const Polynomial &b) {
    Polynomial out;
    Word buf;
    for (const auto &[wa, ca] : a.terms()) {
        for (const auto &[wb, cb] : b.terms()) {
            buf.clear();
            buf.insert(buf.end(), wa.begin(), wa.end());
            buf.insert(buf.end(), wb.begin(), wb.end());
            out.add_term(buf, ca * cb);
        }
    }
    return out;
}

Polynomial poly_pow(const Polynomial &p, unsigned k) {
    if (k == 0) {
        throw std::invalid_argument("poly_pow: exponent must be positive");
    }
    Polynomial acc = p;
    for (unsigned i = 1; i < k; i++) {
        acc = poly_mul(acc, p);
    }
    return acc;
}

double max_abs_diff(const Polynomial &a, const Polynomial &b) {
    Polynomial d = a - b;
    double best = 0;
    for (const auto &[w, c] : d.terms()) {
        best = std::max(best, std::abs(c));
    }
    return best;
}

std::string format_segmented(const SegmentedWord &word) {
    if (word.empty()) {
        return "1";
    }
    std::stringstream ss;
    for (size_t k = 0; k < word.size(); k++) {
        if (k) {
            ss << " ";
        }
        const auto &s = word[k];
        if (s.algebra == Algebra::A) {
            ss << format_aword(s.indices);
        } else {
            ss << "c(" << format_brun(s.indices) << ")";
        }
    }
    return ss.str();
}

Polynomial decenter(const Polynomial &p, const TauTable &tau) {
    if (!p.has_centered_letters()) {
        return p;
    }
    Polynomial out;
    for (const auto &[w, c] : p.terms()) {
        Polynomial acc = Polynomial::constant(c);
        for (const auto &l : w) {
            Polynomial factor;
            if (l.centered) {
                uint32_t j = l.index;
                factor.add_term({Letter::b(j)}, 1.0);
                factor.add_term({}, -tau(std::span<const uint32_t>(&j, 1)));
            } else {
                factor.add_term({l}, 1.0);
            }
            acc = poly_mul(acc, factor);
        }
        out += acc;
    }
    return out;
}

namespace {

struct Run {
    Algebra algebra;
    std::vector<uint32_t> indices;
};

std::vector<Run> split_runs(const Word &w) {
    std::vector<Run> runs;
    for (const auto &l : w) {
        if (runs.empty() || runs.back().algebra != l.algebra) {
            runs.push_back(Run{l.algebra, {}});
        }
        runs.back().indices.push_back(l.index);
    }
    return runs;
}

void append_a(SegmentedWord &out, const std::vector<uint32_t> &indices) {
    if (!out.empty() && out.back().algebra == Algebra::A) {
        out.back().indices.insert(out.back().indices.end(), indices.begin(), indices.end());
    } else {
        out.push_back(Segment{Algebra::A, indices});
    }
}

void expand_runs(
    const std::vector<Run> &runs,
    const std::vector<complex> &run_tau,
    size_t pos,
    SegmentedWord &current,
    complex coeff,
    CenteredPolynomial &out) {
    if (std::abs(coeff) <= kPruneThreshold) {
        return;
    }
    if (pos == runs.size()) {
        auto [it, inserted] = out.try_emplace(current, coeff);
        if (!inserted) {
            it->second += coeff;
        }
        return;
    }
    const Run &run = runs[pos];
    if (run.algebra == Algebra::A) {
        SegmentedWord saved = current;
        append_a(current, run.indices);
        expand_runs(runs, run_tau, pos + 1, current, coeff, out);
        current = std::move(saved);
        return;
    }
    current.push_back(Segment{Algebra::B, run.indices});
    expand_runs(runs, run_tau, pos + 1, current, coeff, out);
    current.pop_back();
    if (std::abs(run_tau[pos]) > kPruneThreshold) {
        expand_runs(runs, run_tau, pos + 1, current, coeff * run_tau[pos], out);
    }
}

}  // namespace

CenteredPolynomial center_expand(const Polynomial &p, const TauTable &tau) {
    Polynomial plain = decenter(p, tau);
    CenteredPolynomial out;
    for (const auto &[w, c] : plain.terms()) {
        auto runs = split_runs(w);
        std::vector<complex> run_tau(runs.size());
        for (size_t k = 0; k < runs.size(); k++) {
            if (runs[k].algebra == Algebra::B) {
                run_tau[k] = tau(runs[k].indices);
            }
        }
        SegmentedWord current;
        expand_runs(runs, run_tau, 0, current, c, out);
    }
    std::erase_if(out, [](const auto &kv) {
        return std::abs(kv.second) <= kPruneThreshold;
    });
    return out;
}

Polynomial uncenter(const CenteredPolynomial &p, const TauTable &tau) {
    Polynomial out;
    for (const auto &[w, c] : p) {
        Polynomial acc = Polynomial::constant(c);
        for (const auto &seg : w) {
            Word letters;
            for (auto i : seg.indices) {
                letters.push_back(seg.algebra == Algebra::A ? Letter::a(i) : Letter::b(i));
            }
            Polynomial factor = Polynomial::monomial(letters);
            if (seg.algebra == Algebra::B) {
                factor.add_term({}, -tau(seg.indices));
            }
            acc = poly_mul(acc, factor);
        }
        out += acc;
    }
    return out;
}

bool QuotientElement::is_zero() const {
    return part_a.empty() && part_ab.empty() && part_ba.empty() && part_bab.empty();
}

size_t QuotientElement::size() const {
    return part_a.size() + part_ab.size() + part_ba.size() + part_bab.size();
}

namespace {

template <typename Map>
void accumulate(Map &dst, const Map &src, complex scale = 1) {
    for (const auto &[k, v] : src) {
        auto [it, inserted] = dst.try_emplace(k, v * scale);
        if (!inserted) {
            it->second += v * scale;
        }
        if (std::abs(it->second) <= kPruneThreshold) {
            dst.erase(it);
        }
    }
}

template <typename Map>
double map_diff(const Map &a, const Map &b) {
    Map d = a;
    accumulate(d, b, -1.0);
    double best = 0;
    for (const auto &[k, v] : d) {
        best = std::max(best, std::abs(v));
    }
    return best;
}

template <typename Map>
void scale_map(Map &m, complex s) {
    for (auto &[k, v] : m) {
        v *= s;
    }
    std::erase_if(m, [](const auto &kv) {
        return std::abs(kv.second) <= kPruneThreshold;
    });
}

}  // namespace

QuotientElement &QuotientElement::operator+=(const QuotientElement &other) {
    accumulate(part_a, other.part_a);
    accumulate(part_ab, other.part_ab);
    accumulate(part_ba, other.part_ba);
    accumulate(part_bab, other.part_bab);
    return *this;
}

QuotientElement &QuotientElement::operator*=(complex scalar) {
    scale_map(part_a, scalar);
    scale_map(part_ab, scalar);
    scale_map(part_ba, scalar);
    scale_map(part_bab, scalar);
    return *this;
}

double max_abs_diff(const QuotientElement &a, const QuotientElement &b) {
    return std::max(
        {map_diff(a.part_a, b.part_a),
         map_diff(a.part_ab, b.part_ab),
         map_diff(a.part_ba, b.part_ba),
         map_diff(a.part_bab, b.part_bab)});
}

ChiDecomposition chi_decompose(const Polynomial &p, const TauTable &tau) {
    if (!p.in_ideal()) {
        throw std::invalid_argument("chi: polynomial has a term without A letters");
    }
    ChiDecomposition out;
    auto add = [](auto &m, auto key, complex c) {
        auto [it, inserted] = m.try_emplace(std::move(key), c);
        if (!inserted) {
            it->second += c;
        }
    };
    for (const auto &[w, c] : center_expand(p, tau)) {
        size_t a_legs = std::count_if(w.begin(), w.end(), [](const Segment &s) {
            return s.algebra == Algebra::A;
        });
        if (a_legs != 1) {
            out.kernel.emplace(w, c);
            continue;
        }
        bool left = w.front().algebra == Algebra::B;
        bool right = w.back().algebra == Algebra::B;
        const AWord &core = w[left ? 1 : 0].indices;
        if (left && right) {
            add(out.quotient.part_bab, std::make_tuple(w.front().indices, core, w.back().indices), c);
        } else if (left) {
            add(out.quotient.part_ba, std::make_pair(w.front().indices, core), c);
        } else if (right) {
            add(out.quotient.part_ab, std::make_pair(core, w.back().indices), c);
        } else {
            add(out.quotient.part_a, core, c);
        }
    }
    out.quotient *= 1.0;  // prune cancellations
    return out;
}

QuotientElement chi(const Polynomial &p, const TauTable &tau) {
    return chi_decompose(p, tau).quotient;
}

}  // namespace monomat
