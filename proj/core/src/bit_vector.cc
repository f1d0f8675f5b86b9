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

#include <algorithm>

#include "lst/errors.h"

namespace lst {

BitVector BitVector::from_string(std::string_view bits) {
    BitVector result(bits.size());
    for (std::size_t i = 0; i < bits.size(); ++i) {
        if (bits[i] == '1') {
            result.set(i, true);
        } else if (bits[i] != '0') {
            throw ParseError("bit string contains character '" + std::string(1, bits[i]) + "'");
        }
    }
    return result;
}

std::string BitVector::str() const {
    std::string out(num_bits_, '0');
    for (std::size_t i = 0; i < num_bits_; ++i) {
        if (get(i)) out[i] = '1';
    }
    return out;
}

void BitVector::clear() { std::fill(words_.begin(), words_.end(), Word{0}); }

BitVector& BitVector::operator^=(const BitVector& other) {
    if (other.num_bits_ != num_bits_) throw SizeMismatch("BitVector xor: length mismatch");
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] ^= other.words_[w];
    return *this;
}

BitVector& BitVector::operator&=(const BitVector& other) {
    if (other.num_bits_ != num_bits_) throw SizeMismatch("BitVector and: length mismatch");
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= other.words_[w];
    return *this;
}

BitVector& BitVector::operator|=(const BitVector& other) {
    if (other.num_bits_ != num_bits_) throw SizeMismatch("BitVector or: length mismatch");
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] |= other.words_[w];
    return *this;
}

std::size_t BitVector::popcount() const {
    std::size_t total = 0;
    for (Word w : words_) total += static_cast<std::size_t>(std::popcount(w));
    return total;
}

bool BitVector::any() const {
    return std::any_of(words_.begin(), words_.end(), [](Word w) { return w != 0; });
}

bool BitVector::dot(const BitVector& other) const {
    Word acc = 0;
    for (std::size_t w = 0; w < words_.size(); ++w) acc ^= words_[w] & other.words_[w];
    return std::popcount(acc) & 1;
}

BitVector BitVector::slice(std::size_t offset, std::size_t count) const {
    BitVector out(count);
    for (std::size_t i = 0; i < count; ++i) {
        if (get(offset + i)) out.set(i, true);
    }
    return out;
}

void BitVector::assign_slice(std::size_t offset, const BitVector& src) {
    for (std::size_t i = 0; i < src.size(); ++i) set(offset + i, src.get(i));
}

}  // namespace lst
