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

#include <algorithm>

#include "gtest/gtest.h"
#include "test_util.h"

using namespace monomat;
using namespace monomat::testing;

namespace {

Polynomial P(const char *text) {
    return parse_polynomial(text);
}

MomentData reference_data() {
    MomentData d;
    d.omega0 = OmegaZero::from_eigenvalues({0.5, 0.25, 0.125});
    d.tau = TauTable::commuting_involutions(1);
    return d;
}

MomentData make_random_data(uint32_t p, uint32_t q, size_t dim) {
    std::vector<Matrix> ms;
    for (uint32_t i = 0; i < p; i++) {
        ms.push_back(rand_hermitian(dim));
    }
    MomentData d;
    d.omega0 = OmegaZero::from_matrices(ms);
    d.tau = TauTable::commuting_involutions(q);
    return d;
}

// Oracle straight from the definitions, on a word of plain letters. The
// cyclic rule is applied by rotating the leading B-run to the end, so that
// every B-run then sits after an A-run and contributes one tau factor.
complex definition_value(Word w, const std::vector<Matrix> &a, const TauTable &tau, bool cyclic) {
    w = normalize(w);
    if (cyclic) {
        auto first_a = std::find_if(w.begin(), w.end(), [](const Letter &l) {
            return l.is_a();
        });
        std::rotate(w.begin(), first_a, w.end());
    }
    Matrix prod = Matrix::identity(a[0].rows());
    complex factor = 1;
    BRun run;
    for (size_t k = 0; k <= w.size(); k++) {
        bool flush = k == w.size() || w[k].is_a();
        if (flush && !run.empty()) {
            factor *= tau(run);
            run.clear();
        }
        if (k == w.size()) {
            break;
        }
        if (w[k].is_a()) {
            prod = prod * a[w[k].index - 1];
        } else {
            run.push_back(w[k].index);
        }
    }
    return factor * trace(prod);
}

complex definition_moment(const Polynomial &p, const MomentData &d, bool cyclic) {
    complex acc = 0;
    Polynomial plain = decenter(p, d.tau);
    for (const auto &[w, c] : plain.terms()) {
        acc += c * definition_value(w, d.omega0.matrices(), d.tau, cyclic);
    }
    return acc;
}

Polynomial random_ideal_polynomial(uint32_t p, uint32_t q, size_t max_len, size_t terms) {
    Polynomial out;
    for (size_t t = 0; t < terms; t++) {
        Word w;
        size_t len = rand_int(1, max_len);
        for (size_t k = 0; k < len; k++) {
            size_t kind = rand_int(0, 2);
            if (kind == 0) {
                w.push_back(Letter::a(static_cast<uint32_t>(rand_int(1, p))));
            } else if (kind == 1) {
                w.push_back(Letter::b(static_cast<uint32_t>(rand_int(0, q))));
            } else {
                w.push_back(Letter::centered_b(static_cast<uint32_t>(rand_int(1, q))));
            }
        }
        if (count_a_letters(w) == 0) {
            w.insert(w.begin() + rand_int(0, w.size()), Letter::a(static_cast<uint32_t>(rand_int(1, p))));
        }
        out.add_term(w, rand_unit_disk());
    }
    return out;
}

}  // namespace

TEST(moments, omega_zero_from_eigenvalues) {
    OmegaZero z = OmegaZero::from_eigenvalues({0.5, 0.25, 0.125});
    AWord a1 = {1}, a2 = {1, 1}, a3 = {1, 1, 1};
    ASSERT_EQ(z(a1), complex(0.875));
    ASSERT_EQ(z(a2), complex(21.0 / 64));
    ASSERT_EQ(z(a3), complex(73.0 / 512));
    ASSERT_TRUE(z.from_spectrum());
    ASSERT_EQ(z.generators(), 1u);
    ASSERT_EQ(z.dimension(), 3u);
    ASSERT_THROW(z(AWord{}), std::invalid_argument);
    ASSERT_THROW(z(AWord{2}), std::out_of_range);
    ASSERT_THROW(OmegaZero::from_eigenvalues({}), std::invalid_argument);
}

TEST(moments, omega_zero_from_matrices) {
    Matrix a{{1, complex(0, 1)}, {complex(0, -1), 2}};
    Matrix b{{0, 1}, {1, 0}};
    OmegaZero z = OmegaZero::from_matrices({a, b});
    AWord w = {1, 2, 1};
    ASSERT_EQ(z(w), trace(a * b * a));
    ASSERT_THROW(OmegaZero::from_matrices({}), std::invalid_argument);
    ASSERT_THROW(OmegaZero::from_matrices({a, Matrix::identity(3)}), std::invalid_argument);
    ASSERT_THROW(OmegaZero::from_matrices({Matrix{{0, 1}, {0, 0}}}), std::invalid_argument);
}

TEST(moments, omega_zero_is_tracial) {
    MomentData d = make_random_data(3, 1, 4);
    for (int rep = 0; rep < 30; rep++) {
        AWord w;
        size_t len = rand_int(1, 6);
        for (size_t k = 0; k < len; k++) {
            w.push_back(static_cast<uint32_t>(rand_int(1, 3)));
        }
        AWord r = w;
        std::rotate(r.begin(), r.begin() + rand_int(0, len - 1), r.end());
        ASSERT_LE(std::abs(d.omega0(w) - d.omega0(r)), 1e-12);
    }
}

TEST(moments, motivating_identities) {
    MomentData d = reference_data();
    ASSERT_LE(std::abs(cyclic_moment(P("a1 c1 a1 c1"), d)), 1e-15);
    ASSERT_LE(std::abs(cyclic_moment(P("a1 c1 c1 a1"), d) - 21.0 / 64), 1e-15);
    ASSERT_LE(std::abs(moment_via_chi(P("a1 c1 a1 c1"), d, MomentKind::Cyclic)), 1e-15);
    ASSERT_LE(std::abs(moment_via_chi(P("a1 c1 c1 a1"), d, MomentKind::Cyclic) - 21.0 / 64), 1e-15);
    // With tau(b) = 0 the plain letters agree with the centered ones.
    ASSERT_LE(std::abs(cyclic_moment(P("a1 b1 c1 a1"), d) - 21.0 / 64), 1e-15);
}

TEST(moments, single_a_leg_words) {
    MomentData d = reference_data();
    ASSERT_EQ(cyclic_moment(P("a1"), d), complex(0.875));
    ASSERT_EQ(monotone_moment(P("a1"), d), complex(0.875));
    // b a b: cyclic pairs the outer letters, monotone factors them.
    ASSERT_EQ(cyclic_moment(P("b1 a1 b1"), d), complex(0.875));
    ASSERT_EQ(monotone_moment(P("b1 a1 b1"), d), complex(0));
    // b0 a b1 with one A-run wraps as tau(b1 b0).
    MomentData e = reference_data();
    e.tau = TauTable();
    e.tau.set({1}, 0.5);
    e.tau.set({2}, 0.25);
    e.tau.set({2, 1}, 0.125);
    ASSERT_EQ(cyclic_moment(P("b1 a1 b2"), e), complex(0.875 * 0.125));
    ASSERT_EQ(monotone_moment(P("b1 a1 b2"), e), complex(0.875 * 0.5 * 0.25));
}

TEST(moments, moment_errors) {
    MomentData d = reference_data();
    ASSERT_THROW(cyclic_moment(P("b1 b1"), d), std::invalid_argument);
    ASSERT_THROW(monotone_moment(P("2"), d), std::invalid_argument);
    ASSERT_THROW(cyclic_moment(P("a1 b2"), d), std::out_of_range);
    MomentData orth = reference_data();
    orth.tau = TauTable::orthonormal(1);
    ASSERT_THROW(cyclic_moment(P("a1 b1 b1 b1"), orth), std::out_of_range);
    ASSERT_THROW(moment_via_chi(P("a1 + b1"), d, MomentKind::Cyclic), std::invalid_argument);
    ASSERT_EQ(cyclic_moment(Polynomial(), d), complex(0));
}

TEST(moments, evaluators_match_definition_oracle) {
    for (int rep = 0; rep < 60; rep++) {
        uint32_t p = static_cast<uint32_t>(rand_int(1, 3));
        uint32_t q = static_cast<uint32_t>(rand_int(1, 3));
        MomentData d = make_random_data(p, q, rand_int(1, 4));
        Polynomial poly = random_ideal_polynomial(p, q, 6, 4);
        complex c = cyclic_moment(poly, d);
        complex m = monotone_moment(poly, d);
        ASSERT_LE(std::abs(c - definition_moment(poly, d, true)), 1e-12 * (1 + std::abs(c))) << to_string(poly);
        ASSERT_LE(std::abs(m - definition_moment(poly, d, false)), 1e-12 * (1 + std::abs(m))) << to_string(poly);
    }
}

TEST(moments, quotient_route_matches_direct) {
    for (int rep = 0; rep < 60; rep++) {
        uint32_t p = static_cast<uint32_t>(rand_int(1, 3));
        uint32_t q = static_cast<uint32_t>(rand_int(1, 3));
        MomentData d = make_random_data(p, q, rand_int(1, 4));
        Polynomial poly = random_ideal_polynomial(p, q, 6, 4);
        for (MomentKind kind : {MomentKind::Cyclic, MomentKind::Monotone}) {
            complex direct = moment(poly, d, kind);
            complex via = moment_via_chi(poly, d, kind);
            ASSERT_LE(std::abs(direct - via), 1e-10 * (1 + std::abs(direct))) << to_string(poly);
        }
    }
}

TEST(moments, quotient_route_with_non_centered_state) {
    // A stored tau with nonzero means exercises the tau(w) 1 branches.
    MomentData d;
    d.omega0 = OmegaZero::from_matrices({rand_hermitian(3), rand_hermitian(3)});
    d.tau = TauTable::commuting_involutions(2);
    d.tau.set({1}, 0.3);
    d.tau.set({2}, -0.2);
    d.tau.set({1, 2}, 0.06);
    d.tau.set({2, 1}, 0.06);
    for (int rep = 0; rep < 30; rep++) {
        Polynomial poly = random_ideal_polynomial(2, 2, 5, 3);
        for (MomentKind kind : {MomentKind::Cyclic, MomentKind::Monotone}) {
            complex direct = moment(poly, d, kind);
            complex via = moment_via_chi(poly, d, kind);
            ASSERT_LE(std::abs(direct - via), 1e-10 * (1 + std::abs(direct))) << to_string(poly);
        }
    }
}

TEST(moments, kernel_monomials_vanish) {
    MomentData d = make_random_data(2, 2, 3);
    for (int rep = 0; rep < 20; rep++) {
        Polynomial poly = random_ideal_polynomial(2, 2, 6, 3);
        ChiDecomposition dec = chi_decompose(poly, d.tau);
        for (const auto &[w, c] : dec.kernel) {
            CenteredPolynomial single{{w, 1.0}};
            Polynomial plain = uncenter(single, d.tau);
            Polynomial right = random_ideal_polynomial(2, 2, 3, 2) + Polynomial::constant(1);
            Polynomial prod = plain * right;
            ASSERT_LE(std::abs(cyclic_moment(prod, d)), 1e-12) << format_segmented(w);
            ASSERT_LE(std::abs(monotone_moment(prod, d)), 1e-12) << format_segmented(w);
        }
    }
}

TEST(moments, cyclic_moment_is_tracial) {
    MomentData d = make_random_data(2, 2, 3);
    for (int rep = 0; rep < 40; rep++) {
        Polynomial u = random_ideal_polynomial(2, 2, 4, 2);
        Polynomial v = random_ideal_polynomial(2, 2, 4, 2) + Polynomial::monomial({Letter::b(1)}, 0.5);
        complex uv = cyclic_moment(u * v, d);
        complex vu = cyclic_moment(v * u, d);
        ASSERT_LE(std::abs(uv - vu), 1e-12 * (1 + std::abs(uv)));
    }
}

TEST(moments, positivity) {
    for (int rep = 0; rep < 30; rep++) {
        MomentData d = make_random_data(2, 2, 3);
        Polynomial p = random_ideal_polynomial(2, 2, 4, 3);
        Polynomial pp = p.adjoint() * p;
        complex c = cyclic_moment(pp, d);
        complex m = monotone_moment(pp, d);
        ASSERT_GE(c.real(), -1e-10);
        ASSERT_LE(std::abs(c.imag()), 1e-10);
        ASSERT_GE(m.real(), -1e-10);
        ASSERT_LE(std::abs(m.imag()), 1e-10);
    }
}

TEST(moments, sign_tables_reproduce_reference_pattern) {
    SignTables t = sign_tables(reference_data());
    ASSERT_TRUE(t.cyclic_matches);
    ASSERT_TRUE(t.monotone_matches);
    ASSERT_EQ(t.cyclic_values[0][0], complex(21.0 / 64));
    ASSERT_EQ(t.cyclic_values[3][3], complex(21.0 / 64));
    ASSERT_EQ(t.monotone_values[1][2], complex(21.0 / 64));
    // Every '+' cell is omega0(a^2) times tau(c^2) = 1.
    for (size_t i = 0; i < 4; i++) {
        for (size_t j = 0; j < 4; j++) {
            if (t.cyclic[i][j] == '+') {
                ASSERT_LE(std::abs(t.cyclic_values[i][j] - 21.0 / 64), 1e-15);
            }
        }
    }
}

TEST(moments, sign_tables_detect_a_noncentered_state) {
    MomentData d = reference_data();
    d.tau = TauTable();
    d.tau.set({1}, 0.5);
    d.tau.set({1, 1}, 1);
    d.tau.set({1, 1, 1}, 0.5);
    d.tau.set({1, 1, 1, 1}, 1);
    // Centering still makes the pattern hold.
    ASSERT_TRUE(sign_tables(d).all_match());
    d.tau.set({1, 1}, 0.25);  // tau(c^2) = 0 now
    ASSERT_FALSE(sign_tables(d).all_match());
}

TEST(moments, gram_schmidt_orthonormalizes) {
    // Oracle: B realized by random Hermitian 3x3 matrices under the
    // normalized trace; tau(x* y) computed directly.
    size_t dim = 3;
    uint32_t q = 2;
    std::vector<Matrix> b = {rand_hermitian(dim), rand_hermitian(dim)};
    auto ntr = [&](const Matrix &m) {
        return trace(m) / double(dim);
    };
    Matrix gram(q, q);
    std::vector<complex> means(q);
    for (uint32_t i = 0; i < q; i++) {
        means[i] = ntr(b[i]);
        for (uint32_t j = 0; j < q; j++) {
            gram(i, j) = ntr(b[i].adjoint() * b[j]);
        }
    }
    GramSchmidtResult gs = gram_schmidt(gram, means);
    ASSERT_EQ(gs.coefficients.rows(), q);
    ASSERT_EQ(gs.coefficients.cols(), q + 1);
    std::vector<Matrix> nb;
    for (uint32_t i = 0; i < q; i++) {
        Matrix m = Matrix::identity(dim) * gs.coefficients(i, 0);
        for (uint32_t j = 0; j < q; j++) {
            m += b[j] * gs.coefficients(i, j + 1);
        }
        nb.push_back(m);
    }
    for (uint32_t i = 0; i < q; i++) {
        ASSERT_LE(std::abs(ntr(nb[i])), 1e-12);
        for (uint32_t j = 0; j < q; j++) {
            ASSERT_LE(std::abs(ntr(nb[i].adjoint() * nb[j]) - (i == j ? 1.0 : 0.0)), 1e-12);
        }
    }

    // change_basis against the same matrices.
    TauTable tau;
    std::vector<BRun> words = {{}};
    for (size_t len = 1; len <= 3; len++) {
        std::vector<BRun> next;
        for (const auto &w : words) {
            for (uint32_t j = 1; j <= q; j++) {
                BRun x = w;
                x.push_back(j);
                next.push_back(x);
                Matrix m = Matrix::identity(dim);
                for (auto k : x) {
                    m = m * b[k - 1];
                }
                tau.set(x, ntr(m));
            }
        }
        words = next;
    }
    TauTable changed = change_basis(tau, gs.coefficients, 3);
    for (const auto &[w, v] : changed.stored()) {
        Matrix m = Matrix::identity(dim);
        for (auto k : w) {
            m = m * nb[k - 1];
        }
        ASSERT_LE(std::abs(v - ntr(m)), 1e-12) << format_brun(w);
    }
    ASSERT_EQ(changed.stored().size(), 2u + 4u + 8u);
}

TEST(moments, gram_schmidt_rejects_degenerate_family) {
    // b2 = b1 makes the Gram matrix of {1, b1, b2} singular.
    Matrix gram{{1, 1}, {1, 1}};
    std::vector<complex> means = {0, 0};
    ASSERT_THROW(gram_schmidt(gram, means), std::domain_error);
    // b1 = 1.
    Matrix g1{{1}};
    std::vector<complex> m1 = {1};
    ASSERT_THROW(gram_schmidt(g1, m1), std::domain_error);
    ASSERT_THROW(gram_schmidt(Matrix(2, 2), std::vector<complex>{0}), std::invalid_argument);
}

TEST(moments, gram_schmidt_keeps_orthonormal_family) {
    Matrix gram = Matrix::identity(3);
    std::vector<complex> means = {0, 0, 0};
    GramSchmidtResult gs = gram_schmidt(gram, means);
    for (size_t i = 0; i < 3; i++) {
        for (size_t j = 0; j < 4; j++) {
            ASSERT_LE(std::abs(gs.coefficients(i, j) - (j == i + 1 ? 1.0 : 0.0)), 1e-15);
        }
    }
}
