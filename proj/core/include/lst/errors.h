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

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace lst {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// Operands disagree on qubit count or another structural dimension.
class SizeMismatch : public Error {
   public:
    using Error::Error;
};

class ParseError : public Error {
   public:
    using Error::Error;
};

/// A stabilizer code failed validation (commutation, independence, logical structure).
class InvalidCode : public Error {
   public:
    using Error::Error;
};

/// Projector generators passed to Tableau::project do not pairwise commute.
class IncompatibleGenerators : public Error {
   public:
    using Error::Error;
};

/// The binary null space of an affine trace is larger than the configured cap.
class NullSpaceTooLarge : public Error {
   public:
    NullSpaceTooLarge(std::size_t dimension, std::uint64_t cap, const std::string& context = "")
        : Error("null space of dimension " + std::to_string(dimension) + " exceeds enumeration cap " +
                std::to_string(cap) + (context.empty() ? "" : " (" + context + ")")),
          dimension_(dimension),
          cap_(cap) {}

    std::size_t dimension() const { return dimension_; }
    std::uint64_t cap() const { return cap_; }

   private:
    std::size_t dimension_;
    std::uint64_t cap_;
};

/// A null-space product evaluated to an imaginary multiple of the identity.
class ImaginaryPhase : public Error {
   public:
    using Error::Error;
};

class InsufficientShots : public Error {
   public:
    using Error::Error;
};

class ZeroDenominatorMean : public Error {
   public:
    using Error::Error;
};

/// Corrupt, truncated or version-mismatched ensemble stream.
class FormatError : public Error {
   public:
    using Error::Error;
};

}  // namespace lst
