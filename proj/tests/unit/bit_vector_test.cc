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

#include "lst/bit_vector.h"

#include <random>

#include <gtest/gtest.h>

namespace lst {
namespace {

TEST(BitVector, StringRoundTrip) {
    BitVector v = BitVector::from_string("1011000001");
    EXPECT_EQ(v.size(), 10u);
    EXPECT_EQ(v.str(), "1011000001");
    EXPECT_TRUE(v.get(0));
    EXPECT_FALSE(v.get(1));
    EXPECT_EQ(v.popcount(), 4u);
}

TEST(BitVector, OperatorsMatchBitwiseReference) {
    std::mt19937_64 rng(5);
    for (std::size_t n : {1u, 63u, 64u, 65u, 130u, 300u}) {
        BitVector a(n), b(n);
        std::vector<bool> ra(n), rb(n);
        for (std::size_t i = 0; i < n; ++i) {
            ra[i] = rng() & 1;
            rb[i] = rng() & 1;
            a.set(i, ra[i]);
            b.set(i, rb[i]);
        }
        BitVector x = a ^ b, y = a & b, z = a | b;
        std::size_t pop = 0;
        bool parity = false;
        for (std::size_t i = 0; i < n; ++i) {
            EXPECT_EQ(x.get(i), ra[i] != rb[i]);
            EXPECT_EQ(y.get(i), ra[i] && rb[i]);
            EXPECT_EQ(z.get(i), ra[i] || rb[i]);
            pop += ra[i];
            parity ^= ra[i] && rb[i];
        }
        EXPECT_EQ(a.popcount(), pop);
        EXPECT_EQ(a.dot(b), parity);
    }
}

TEST(BitVector, SliceAndAssignSliceAcrossWords) {
    BitVector v(200);
    for (std::size_t i = 0; i < 200; i += 3) v.set(i, true);
    BitVector s = v.slice(60, 80);
    for (std::size_t i = 0; i < 80; ++i) EXPECT_EQ(s.get(i), v.get(60 + i));
    BitVector w(200);
    w.assign_slice(60, s);
    for (std::size_t i = 0; i < 200; ++i) EXPECT_EQ(w.get(i), i >= 60 && i < 140 && v.get(i));
}

TEST(BitVector, ClearAndAny) {
    BitVector v(70);
    EXPECT_TRUE(v.none());
    v.flip(69);
    EXPECT_TRUE(v.any());
    v.clear();
    EXPECT_TRUE(v.none());
}

}  // namespace
}  // namespace lst
