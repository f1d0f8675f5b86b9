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

#include "lst/ensemble_io.h"

#include <bit>
#include <cstring>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "lst/errors.h"

namespace lst {
namespace {

static_assert(std::endian::native == std::endian::little, "ensemble format assumes a little-endian host");

constexpr char kMagic[8] = {'L', 'S', 'T', 'S', 'H', 'D', 'W', '\0'};
constexpr std::uint32_t kMaxStringLength = 1 << 16;

class HashingWriter {
   public:
    explicit HashingWriter(std::ostream& out) : out_(out) {}

    void bytes(const void* data, std::size_t size) {
        hash_ = fnv1a64(data, size, hash_);
        out_.write(static_cast<const char*>(data), static_cast<std::streamsize>(size));
    }
    template <class T>
    void pod(T value) {
        bytes(&value, sizeof(T));
    }
    void string(const std::string& s) {
        pod(static_cast<std::uint32_t>(s.size()));
        bytes(s.data(), s.size());
    }
    void words(std::span<const BitVector::Word> w) { bytes(w.data(), w.size() * sizeof(BitVector::Word)); }
    std::uint64_t hash() const { return hash_; }

   private:
    std::ostream& out_;
    std::uint64_t hash_ = 0xcbf29ce484222325ULL;
};

class HashingReader {
   public:
    explicit HashingReader(std::istream& in) : in_(in) {}

    void bytes(void* data, std::size_t size) {
        in_.read(static_cast<char*>(data), static_cast<std::streamsize>(size));
        if (static_cast<std::size_t>(in_.gcount()) != size) throw FormatError("ensemble stream is truncated");
        hash_ = fnv1a64(data, size, hash_);
    }
    template <class T>
    T pod() {
        T value;
        bytes(&value, sizeof(T));
        return value;
    }
    std::string string() {
        auto size = pod<std::uint32_t>();
        if (size > kMaxStringLength) throw FormatError("ensemble string field too long");
        std::string s(size, '\0');
        bytes(s.data(), size);
        return s;
    }
    std::uint64_t hash() const { return hash_; }

   private:
    std::istream& in_;
    std::uint64_t hash_ = 0xcbf29ce484222325ULL;
};

}  // namespace

std::uint64_t fnv1a64(const void* data, std::size_t size, std::uint64_t state) {
    const auto* p = static_cast<const unsigned char*>(data);
    for (std::size_t i = 0; i < size; ++i) {
        state ^= p[i];
        state *= 0x100000001b3ULL;
    }
    return state;
}

void write_ensemble(const ShadowEnsemble& ensemble, std::ostream& out) {
    const EnsembleMetadata& meta = ensemble.metadata;
    const std::size_t n = meta.sector_size;
    const std::size_t k = meta.num_sectors;
    HashingWriter w(out);
    w.bytes(kMagic, sizeof(kMagic));
    w.pod(kEnsembleFormatVersion);
    w.pod(static_cast<std::uint32_t>(n));
    w.pod(static_cast<std::uint32_t>(k));
    w.pod(std::uint32_t{0});
    w.pod(meta.noise.p);
    w.pod(meta.noise.seed);
    w.pod(static_cast<std::uint64_t>(ensemble.snapshots.size()));
    w.string(meta.code_name);
    w.string(meta.prep);
    w.string(meta.ensemble);
    w.string(meta.created_by);

    for (const Snapshot& s : ensemble.snapshots) {
        if (s.cliffords.size() != k || s.outcomes.size() != k) throw SizeMismatch("write_ensemble: sector count mismatch");
        w.pod(s.shot_index);
        for (std::size_t i = 0; i < k; ++i) {
            const CliffordElement& c = s.cliffords[i];
            if (c.n_qubits() != n || s.outcomes[i].size() != n) throw SizeMismatch("write_ensemble: sector size mismatch");
            BitVector signs(2 * n);
            for (std::size_t r = 0; r < 2 * n; ++r) {
                w.words(c.image_x_words(r));
                w.words(c.image_z_words(r));
                signs.set(r, c.image_sign_bit(r));
            }
            w.words(signs.words());
            w.words(s.outcomes[i].words());
        }
    }
    std::uint64_t hash = w.hash();
    out.write(reinterpret_cast<const char*>(&hash), sizeof(hash));
    if (!out) throw FormatError("failed to write ensemble stream");
}

ShadowEnsemble read_ensemble(std::istream& in) {
    HashingReader r(in);
    char magic[8];
    r.bytes(magic, sizeof(magic));
    if (std::memcmp(magic, kMagic, sizeof(kMagic)) != 0) throw FormatError("not an ensemble file (bad magic)");
    auto version = r.pod<std::uint32_t>();
    if (version != kEnsembleFormatVersion) {
        throw FormatError("unsupported ensemble format version " + std::to_string(version));
    }
    ShadowEnsemble ensemble;
    EnsembleMetadata& meta = ensemble.metadata;
    meta.sector_size = r.pod<std::uint32_t>();
    meta.num_sectors = r.pod<std::uint32_t>();
    auto flags = r.pod<std::uint32_t>();
    if (flags != 0) throw FormatError("unknown ensemble flags");
    meta.noise.p = r.pod<double>();
    meta.noise.seed = r.pod<std::uint64_t>();
    auto count = r.pod<std::uint64_t>();
    meta.code_name = r.string();
    meta.prep = r.string();
    meta.ensemble = r.string();
    meta.created_by = r.string();

    const std::size_t n = meta.sector_size;
    const std::size_t k = meta.num_sectors;
    if (n == 0 || k == 0) throw FormatError("ensemble header has zero sector size or count");
    const std::size_t words = BitVector::words_for(n);
    std::vector<BitVector::Word> x(words), z(words);
    BitVector signs(2 * n);

    ensemble.snapshots.reserve(static_cast<std::size_t>(std::min<std::uint64_t>(count, 1 << 20)));
    for (std::uint64_t s = 0; s < count; ++s) {
        Snapshot snap;
        snap.shot_index = r.pod<std::uint64_t>();
        for (std::size_t i = 0; i < k; ++i) {
            CliffordElement c(n);
            for (std::size_t row = 0; row < 2 * n; ++row) {
                r.bytes(x.data(), words * sizeof(BitVector::Word));
                r.bytes(z.data(), words * sizeof(BitVector::Word));
                c.set_image_raw(row, x, z, false);
            }
            auto sw = signs.words();
            r.bytes(sw.data(), sw.size() * sizeof(BitVector::Word));
            for (std::size_t row = 0; row < 2 * n; ++row) {
                if (signs.get(row)) c.set_image_raw(row, c.image_x_words(row), c.image_z_words(row), true);
            }
            BitVector bits(n);
            auto bw = bits.words();
            r.bytes(bw.data(), bw.size() * sizeof(BitVector::Word));
            snap.cliffords.push_back(std::move(c));
            snap.outcomes.push_back(std::move(bits));
        }
        ensemble.snapshots.push_back(std::move(snap));
    }
    std::uint64_t expected = r.hash();
    std::uint64_t stored = 0;
    in.read(reinterpret_cast<char*>(&stored), sizeof(stored));
    if (in.gcount() != sizeof(stored)) throw FormatError("ensemble stream is truncated (missing checksum)");
    if (stored != expected) throw FormatError("ensemble checksum mismatch");
    return ensemble;
}

void write_ensemble_file(const ShadowEnsemble& ensemble, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw FormatError("cannot open " + path.string() + " for writing");
    write_ensemble(ensemble, out);
}

ShadowEnsemble read_ensemble_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw FormatError("cannot open " + path.string());
    return read_ensemble(in);
}

void write_ensemble_jsonl(const ShadowEnsemble& ensemble, std::ostream& out) {
    const EnsembleMetadata& meta = ensemble.metadata;
    nlohmann::json header = {
        {"code", meta.code_name}, {"n", meta.sector_size}, {"k", meta.num_sectors},
        {"p", meta.noise.p},      {"seed", meta.noise.seed}, {"prep", meta.prep},
        {"ensemble", meta.ensemble}, {"count", ensemble.snapshots.size()},
    };
    out << header.dump() << "\n";
    for (const Snapshot& s : ensemble.snapshots) {
        nlohmann::json sectors = nlohmann::json::array();
        for (std::size_t i = 0; i < s.num_sectors(); ++i) {
            nlohmann::json x_images = nlohmann::json::array(), z_images = nlohmann::json::array();
            for (std::size_t j = 0; j < s.cliffords[i].n_qubits(); ++j) {
                x_images.push_back(s.cliffords[i].x_image(j).str());
                z_images.push_back(s.cliffords[i].z_image(j).str());
            }
            sectors.push_back({{"x_images", x_images}, {"z_images", z_images}, {"bits", s.outcomes[i].str()}});
        }
        out << nlohmann::json{{"shot", s.shot_index}, {"sectors", sectors}}.dump() << "\n";
    }
}

}  // namespace lst
