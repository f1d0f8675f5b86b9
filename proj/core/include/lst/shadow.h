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
#include <string>
#include <vector>

#include "lst/bit_vector.h"
#include "lst/clifford.h"
#include "lst/code.h"
#include "lst/noise.h"
#include "lst/tableau.h"

namespace lst {

/// One randomized measurement.
///
/// Sector i was rotated by U_i and measured with outcome bits b_i. The stored element is
/// W_i = U_i^dagger, so the snapshot state W_i |b_i><b_i| W_i^dagger is stabilized by
/// (-1)^{b_ij} W_i Z_j W_i^dagger with destabilizers W_i X_j W_i^dagger.
struct Snapshot {
    std::uint64_t shot_index = 0;
    std::vector<CliffordElement> cliffords;
    std::vector<BitVector> outcomes;

    std::size_t num_sectors() const { return cliffords.size(); }

    friend bool operator==(const Snapshot&, const Snapshot&) = default;
};

struct EnsembleMetadata {
    std::string code_name;
    std::size_t sector_size = 0;  // n, physical qubits per logical qubit
    std::size_t num_sectors = 0;  // k
    NoiseSpec noise;
    std::string prep;
    std::string ensemble = "clifford_tensor";
    std::string created_by;

    friend bool operator==(const EnsembleMetadata&, const EnsembleMetadata&) = default;
};

struct ShadowEnsemble {
    EnsembleMetadata metadata;
    std::vector<Snapshot> snapshots;
};

/// Pure stabilizer state of sector `sector` of a snapshot (n qubits, rank deficit 0).
Tableau snapshot_sector_state(const Snapshot& snapshot, std::size_t sector);

/// Encode, apply one noise frame, rotate each sector by an independent uniform Clifford,
/// measure every qubit. The encoded tableau is shared across shots and copied per shot.
class ShadowAcquirer {
   public:
    /// All sectors must share one [[n, 1]] code.
    ShadowAcquirer(StabilizerCode sector_code, std::size_t num_sectors, LogicalStatePrep prep, NoiseSpec noise);

    const StabilizerCode& sector_code() const { return sector_code_; }
    std::size_t num_sectors() const { return num_sectors_; }
    std::size_t n_qubits() const { return encoded_.n_qubits(); }
    const Tableau& encoded_state() const { return encoded_; }
    const NoiseSpec& noise() const { return noise_; }
    EnsembleMetadata metadata() const;

    /// Shot `shot_index` draws from its own stream derived from the master seed.
    Snapshot acquire(std::uint64_t shot_index) const;
    /// Shots [first, first + count) in index order, computed on `threads` workers.
    std::vector<Snapshot> acquire_range(std::uint64_t first, std::size_t count, std::size_t threads) const;

   private:
    StabilizerCode sector_code_;
    std::size_t num_sectors_;
    LogicalStatePrep prep_;
    NoiseSpec noise_;
    Tableau encoded_;
};

/// Snapshot of one shot with the given state and rng; sector_size divides the qubit count.
Snapshot acquire_shot(const Tableau& encoded, std::size_t sector_size, const NoiseSpec& noise, Rng& rng,
                      std::uint64_t shot_index = 0);

ShadowEnsemble acquire_ensemble(const ShadowAcquirer& acquirer, std::size_t shots, std::size_t threads);

}  // namespace lst
