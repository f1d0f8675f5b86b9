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

#include <filesystem>
#include <iosfwd>

#include "lst/shadow.h"

namespace lst {

inline constexpr std::uint32_t kEnsembleFormatVersion = 1;

/// Binary ensemble format, little-endian:
///   "LSTSHDW\0", u32 version, u32 n, u32 k, u32 flags, f64 p, u64 seed, u64 count,
///   four length-prefixed strings (code, prep, ensemble, creator), then per snapshot
///   u64 shot index and per sector the packed X/Z words of all 2n images, the sign
///   words and the outcome words; a trailing u64 FNV-1a hash of everything before it.
void write_ensemble(const ShadowEnsemble& ensemble, std::ostream& out);
/// Throws FormatError on bad magic, unknown version, truncation or hash mismatch.
ShadowEnsemble read_ensemble(std::istream& in);

void write_ensemble_file(const ShadowEnsemble& ensemble, const std::filesystem::path& path);
ShadowEnsemble read_ensemble_file(const std::filesystem::path& path);

/// One JSON object per line: a metadata record followed by one record per snapshot.
void write_ensemble_jsonl(const ShadowEnsemble& ensemble, std::ostream& out);

/// FNV-1a over a byte range; exposed for determinism checks.
std::uint64_t fnv1a64(const void* data, std::size_t size, std::uint64_t state = 0xcbf29ce484222325ULL);

}  // namespace lst
