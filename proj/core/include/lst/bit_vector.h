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

#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>

#include <boost/container/small_vector.hpp>

namespace lst {

/// Fixed-length bit vector packed into 64-bit words.
///
/// Bits past size() in the last word are kept zero, so word-wise popcounts and
/// equality comparisons are exact. Up to 128 bits live inline without a heap
/// allocation, which covers every sector size the simulator is tuned for.
class BitVector {
   public:
    using Word = std::uint64_t;
    static constexpr std::size_t kWordBits = 64;

    BitVector() = default;
    explicit BitVector(std::size_t num_bits) : num_bits_(num_bits), words_(words_for(num_bits), 0) {}

    static constexpr std::size_t words_for(std::size_t num_bits) { return (num_bits + kWordBits - 1) / kWordBits; }

    /// Parses a string of '0'/'1' characters, index 0 first.
    static BitVector from_string(std::string_view bits);
    std::string str() const;

    std::size_t size() const { return num_bits_; }
    std::size_t num_words() const { return words_.size(); }

    bool get(std::size_t i) const { return (words_[i / kWordBits] >> (i % kWordBits)) & 1U; }
    void set(std::size_t i, bool value) {
        Word mask = Word{1} << (i % kWordBits);
        if (value) {
            words_[i / kWordBits] |= mask;
        } else {
            words_[i / kWordBits] &= ~mask;
        }
    }
    void flip(std::size_t i) { words_[i / kWordBits] ^= Word{1} << (i % kWordBits); }
    void clear();

    std::span<Word> words() { return {words_.data(), words_.size()}; }
    std::span<const Word> words() const { return {words_.data(), words_.size()}; }

    BitVector& operator^=(const BitVector& other);
    BitVector& operator&=(const BitVector& other);
    BitVector& operator|=(const BitVector& other);

    std::size_t popcount() const;
    bool any() const;
    bool none() const { return !any(); }
    /// Parity of popcount(*this & other).
    bool dot(const BitVector& other) const;

    /// Copies `count` bits starting at `offset` into a new vector.
    BitVector slice(std::size_t offset, std::size_t count) const;
    /// Overwrites bits [offset, offset + src.size()) with src.
    void assign_slice(std::size_t offset, const BitVector& src);

    friend bool operator==(const BitVector& a, const BitVector& b) {
        return a.num_bits_ == b.num_bits_ && a.words_ == b.words_;
    }

   private:
    std::size_t num_bits_ = 0;
    boost::container::small_vector<Word, 2> words_;
};

inline BitVector operator^(BitVector a, const BitVector& b) { return a ^= b; }
inline BitVector operator&(BitVector a, const BitVector& b) { return a &= b; }
inline BitVector operator|(BitVector a, const BitVector& b) { return a |= b; }

}  // namespace lst
