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

#include "monomat/tau.h"

#include "gtest/gtest.h"
#include "monomat/linalg.h"
#include "test_util.h"

using namespace monomat;
using namespace monomat::testing;

TEST(tau, empty_word_is_one) {
    TauTable t;
    ASSERT_EQ(t(BRun{}), complex(1));
    ASSERT_NO_THROW(t.set({}, 1.0));
    ASSERT_THROW(t.set({}, 0.5), std::invalid_argument);
}

TEST(tau, missing_entries_throw) {
    TauTable t = TauTable::orthonormal(2);
    ASSERT_EQ(t(BRun{1}), complex(0));
    ASSERT_EQ(t(BRun{2, 2}), complex(1));
    ASSERT_EQ(t(BRun{1, 2}), complex(0));
    ASSERT_FALSE(t.contains(BRun{1, 1, 1}));
    ASSERT_THROW(t(BRun{1, 1, 1}), std::out_of_range);
    ASSERT_THROW(t(BRun{3}), std::out_of_range);
    ASSERT_EQ(t.max_index(), 2u);
}

TEST(tau, rejects_unit_index_in_keys) {
    TauTable t;
    ASSERT_THROW(t.set({0, 1}, 0.0), std::invalid_argument);
}

TEST(tau, stored_values_override) {
    TauTable t = TauTable::commuting_involutions(2);
    t.set({1}, 0.25);
    ASSERT_EQ(t(BRun{1}), complex(0.25));
    ASSERT_EQ(t(BRun{2}), complex(0));
}

TEST(tau, commuting_involutions_matches_normalized_trace_of_flips) {
    // Oracle: sigma_x in one tensor slot, normalized trace over (C^2)^{(x) q}.
    uint32_t q = 3;
    Matrix x{{0, 1}, {1, 0}};
    Matrix id2 = Matrix::identity(2);
    std::vector<Matrix> gens;
    for (uint32_t j = 1; j <= q; j++) {
        Matrix g = Matrix::identity(1);
        for (uint32_t s = 1; s <= q; s++) {
            g = kron(g, s == j ? x : id2);
        }
        gens.push_back(g);
    }
    TauTable t = TauTable::commuting_involutions(q);
    for (int rep = 0; rep < 200; rep++) {
        size_t len = rand_int(1, 6);
        BRun w;
        Matrix prod = Matrix::identity(size_t{1} << q);
        for (size_t k = 0; k < len; k++) {
            uint32_t j = static_cast<uint32_t>(rand_int(1, q));
            w.push_back(j);
            prod = prod * gens[j - 1];
        }
        complex expected = trace(prod) / double(size_t{1} << q);
        ASSERT_EQ(t(w), expected) << format_brun(w);
    }
    ASSERT_THROW(t(BRun{4}), std::out_of_range);
    ASSERT_EQ(t.max_index(), 3u);
}

TEST(tau, hermitian_and_tracial_checks) {
    TauTable t;
    t.set({1, 2}, complex(0, 1));
    t.set({2, 1}, complex(0, -1));
    ASSERT_TRUE(t.is_hermitian());
    ASSERT_FALSE(t.is_tracial());

    TauTable u;
    u.set({1, 2}, 0.5);
    u.set({2, 1}, 0.5);
    u.set({1, 1, 2}, 0.25);
    u.set({1, 2, 1}, 0.25);
    ASSERT_TRUE(u.is_hermitian());
    ASSERT_TRUE(u.is_tracial());
    u.set({2, 1, 1}, 0.3);
    ASSERT_FALSE(u.is_tracial());
    ASSERT_TRUE(TauTable::orthonormal(3).is_hermitian());
    ASSERT_TRUE(TauTable::orthonormal(3).is_tracial());
}

TEST(tau, format_brun) {
    ASSERT_EQ(format_brun(BRun{}), "1");
    ASSERT_EQ(format_brun(BRun{1, 12}), "b1 b12");
}
