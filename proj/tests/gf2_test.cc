// Copyright 2026 The hgsa Authors
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

#include "hgsa/gf2.h"

#include <gtest/gtest.h>

#include "test_util.h"

using namespace hgsa;

namespace {

std::vector<PauliString> strs(std::initializer_list<const char*> items) {
    std::vector<PauliString> out;
    for (const char* s : items) {
        out.push_back(PauliString::from_str(s));
    }
    return out;
}

}  // namespace

TEST(gf2, basis_tracks_independence) {
    Gf2Basis b(3);
    EXPECT_TRUE(b.add(PauliString::from_str("XXI")));
    EXPECT_TRUE(b.add(PauliString::from_str("IZZ")));
    EXPECT_FALSE(b.add(PauliString::from_str("-XXI")));
    EXPECT_TRUE(b.contains(PauliString::from_str("XYZ")));
    EXPECT_FALSE(b.contains(PauliString::from_str("ZII")));
    EXPECT_EQ(b.rank(), 2u);
    EXPECT_FALSE(b.add(PauliString(3)));
}

TEST(gf2, decompose_returns_combination) {
    Gf2Basis b(3);
    b.add(PauliString::from_str("XII"));
    b.add(PauliString::from_str("IZI"));
    b.add(PauliString::from_str("IIY"));
    auto combo = b.decompose(PauliString::from_str("XZY"));
    ASSERT_TRUE(combo.has_value());
    EXPECT_EQ(*combo, (std::vector<size_t>{0, 1, 2}));
    combo = b.decompose(PauliString::from_str("IZY"));
    ASSERT_TRUE(combo.has_value());
    EXPECT_EQ(*combo, (std::vector<size_t>{1, 2}));
    EXPECT_FALSE(b.decompose(PauliString::from_str("ZII")).has_value());
}

TEST(gf2, ranks) {
    auto rows = strs({"XZI", "ZXI", "YYI"});
    EXPECT_EQ(gf2_rank(rows), 2u);
    EXPECT_EQ(gf2_rank_x(rows), 2u);
    EXPECT_EQ(gf2_rank_x(strs({"ZZ", "ZI"})), 0u);
}

TEST(gf2, commuting_diagonal_basis_commutes) {
    auto rows = strs({"XXI"});
    auto basis = commuting_diagonal_basis(rows, 3);
    EXPECT_EQ(basis.size(), 2u);
    for (const PauliString& p : basis) {
        EXPECT_TRUE(p.is_diagonal());
        EXPECT_TRUE(commutes(p, rows[0]));
    }
    EXPECT_EQ(gf2_rank(basis), 2u);
}

TEST(gf2, commutant_has_complementary_dimension) {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        size_t n = 2 + trial % 4;
        std::vector<PauliString> rows;
        for (int k = 0; k < 3; ++k) {
            rows.push_back(testutil::random_pauli(n, rng));
        }
        auto basis = commutant_basis(rows, n);
        EXPECT_EQ(basis.size(), 2 * n - gf2_rank(rows));
        EXPECT_EQ(gf2_rank(basis), basis.size());
        for (const PauliString& c : basis) {
            for (const PauliString& r : rows) {
                ASSERT_TRUE(commutes(c, r)) << c.str() << " vs " << r.str();
            }
        }
    }
}
