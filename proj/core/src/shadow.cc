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

#include "lst/shadow.h"

#include <utility>

#include "lst/errors.h"
#include "lst/parallel.h"

namespace lst {

Tableau snapshot_sector_state(const Snapshot& snapshot, std::size_t sector) {
    const CliffordElement& w = snapshot.cliffords.at(sector);
    const BitVector& bits = snapshot.outcomes.at(sector);
    const std::size_t n = w.n_qubits();
    std::vector<PauliOp> stab, destab;
    stab.reserve(n);
    destab.reserve(n);
    for (std::size_t j = 0; j < n; ++j) {
        PauliOp s = w.z_image(j);
        if (bits.get(j)) s.negate();
        stab.push_back(std::move(s));
        destab.push_back(w.x_image(j));
        destab.back().set_phase_exp(0);
    }
    return Tableau::from_rows(std::move(stab), std::move(destab), 0);
}

Snapshot acquire_shot(const Tableau& encoded, std::size_t sector_size, const NoiseSpec& noise, Rng& rng,
                      std::uint64_t shot_index) {
    const std::size_t total = encoded.n_qubits();
    if (sector_size == 0 || total % sector_size != 0) {
        throw SizeMismatch("acquire_shot: sector size does not divide the qubit count");
    }
    Tableau state = encoded;
    state.apply_pauli_frame(sample_pauli_frame(noise, total, rng));

    Snapshot snap;
    snap.shot_index = shot_index;
    const std::size_t k = total / sector_size;
    snap.cliffords.reserve(k);
    for (std::size_t i = 0; i < k; ++i) {
        snap.cliffords.push_back(sample_uniform_clifford(sector_size, rng));
        apply_clifford(state, snap.cliffords.back().inverse(), i * sector_size);
    }
    BitVector bits = state.measure_all_z(rng);
    snap.outcomes.reserve(k);
    for (std::size_t i = 0; i < k; ++i) snap.outcomes.push_back(bits.slice(i * sector_size, sector_size));
    return snap;
}

ShadowAcquirer::ShadowAcquirer(StabilizerCode sector_code, std::size_t num_sectors, LogicalStatePrep prep,
                               NoiseSpec noise)
    : sector_code_(std::move(sector_code)), num_sectors_(num_sectors), prep_(std::move(prep)), noise_(noise) {
    check_noise(noise_);
    if (sector_code_.k != 1) throw SizeMismatch("ShadowAcquirer: sector code must encode one logical qubit");
    if (num_sectors_ == 0) throw SizeMismatch("ShadowAcquirer: need at least one sector");
    std::vector<StabilizerCode> sectors(num_sectors_, sector_code_);
    encoded_ = prepare_logical_state(sectors, prep_);
}

EnsembleMetadata ShadowAcquirer::metadata() const {
    EnsembleMetadata meta;
    meta.code_name = sector_code_.name;
    meta.sector_size = sector_code_.n;
    meta.num_sectors = num_sectors_;
    meta.noise = noise_;
    meta.prep = prep_.name;
    meta.created_by = "lst";
    return meta;
}

Snapshot ShadowAcquirer::acquire(std::uint64_t shot_index) const {
    Rng rng = derive_rng(noise_.seed, shot_index);
    return acquire_shot(encoded_, sector_code_.n, noise_, rng, shot_index);
}

std::vector<Snapshot> ShadowAcquirer::acquire_range(std::uint64_t first, std::size_t count,
                                                    std::size_t threads) const {
    std::vector<Snapshot> out(count);
    parallel_for(count, threads, [&](std::size_t i) { out[i] = acquire(first + i); });
    return out;
}

ShadowEnsemble acquire_ensemble(const ShadowAcquirer& acquirer, std::size_t shots, std::size_t threads) {
    ShadowEnsemble ensemble;
    ensemble.metadata = acquirer.metadata();
    ensemble.snapshots = acquirer.acquire_range(0, shots, threads);
    return ensemble;
}

}  // namespace lst
