// Copyright 2026 The LST Authors
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

#include "lst/gf2.h"

#include <random>

#include <gtest/gtest.h>

namespace lst {
namespace {

// Rank by brute force: number of distinct vectors in the row span is 2^rank.
std::size_t span_rank(const Gf2Matrix& m) {
    std::size_t count = 0;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m.rows()); ++mask) {
        BitVector acc(m.cols());
        for (std::size_t r = 0; r < m.rows(); ++r) {
            if ((mask >> r) & 1) acc ^= m.row(r);
        }
        if (acc.none()) ++count;
    }
    std::size_t kernel = 0;
    while ((std::size_t{1} << kernel) < count) ++kernel;
    return m.rows() - kernel;
}

TEST(Gf2, RankMatchesBruteForce) {
    std::mt19937_64 rng(3);
    for (int t = 0; t < 100; ++t) {
        Gf2Matrix m(1 + rng() % 8, 1 + rng() % 10);
        for (std::size_t r = 0; r < m.rows(); ++r) {
            for (std::size_t c = 0; c < m.cols(); ++c) m.set(r, c, rng() % 3 == 0);
        }
        EXPECT_EQ(m.rank(), span_rank(m));
    }
}

TEST(Gf2, NullSpaceVectorsAreInTheKernel) {
    std::mt19937_64 rng(4);
    for (int t = 0; t < 100; ++t) {
        Gf2Matrix m(1 + rng() % 6, 1 + rng() % 12);
        for (std::size_t r = 0; r < m.rows(); ++r) {
            for (std::size_t c = 0; c < m.cols(); ++c) m.set(r, c, rng() & 1);
        }
        auto basis = m.null_space();
        EXPECT_EQ(basis.size() + m.rank(), m.cols());
        for (const BitVector& v : basis) {
            for (std::size_t r = 0; r < m.rows(); ++r) EXPECT_FALSE(m.row(r).dot(v));
        }
        Gf2Matrix b(basis.size(), m.cols());
        for (std::size_t i = 0; i < basis.size(); ++i) b.row(i) = basis[i];
        EXPECT_EQ(b.rank(), basis.size());
    }
}

TEST(Gf2, PauliNullSpace) {
    std::vector<PauliOp> ops{PauliOp::from_string("XX"), PauliOp::from_string("ZZ"), PauliOp::from_string("YY"),
                             PauliOp::from_string("XI")};
    auto basis = null_space(ops);
    ASSERT_EQ(basis.size(), 1u);
    EXPECT_EQ(basis[0].str(), "1110");
    EXPECT_EQ(symplectic_rank(ops), 3u);
    EXPECT_THROW(null_space(std::span<const PauliOp>{}), std::exception);
}

}  // namespace
}  // namespace lst
