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

#include "lst/code.h"

#include <fstream>
#include <sstream>

#include "lst/errors.h"
#include "lst/gf2.h"

namespace lst {
namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
    return s;
}

std::vector<PauliOp> parse_list(std::initializer_list<std::string_view> texts) {
    std::vector<PauliOp> out;
    for (auto t : texts) out.push_back(PauliOp::from_string(t));
    return out;
}

void require_size(const PauliOp& op, std::size_t n, const std::string& what) {
    if (op.n_qubits() != n) {
        throw InvalidCode(what + " has " + std::to_string(op.n_qubits()) + " qubits, expected " + std::to_string(n));
    }
}

}  // namespace

void validate(const StabilizerCode& code) {
    const std::size_t n = code.n;
    if (n == 0) throw InvalidCode("code has no physical qubits");
    if (code.k > n) throw InvalidCode("more logical than physical qubits");
    if (code.generators.size() != n - code.k) {
        throw InvalidCode("expected " + std::to_string(n - code.k) + " generators, got " +
                          std::to_string(code.generators.size()));
    }
    if (code.logical_x.size() != code.k || code.logical_z.size() != code.k) {
        throw InvalidCode("expected " + std::to_string(code.k) + " logical X and Z operators");
    }
    for (std::size_t i = 0; i < code.generators.size(); ++i) {
        const PauliOp& g = code.generators[i];
        require_size(g, n, "generator " + std::to_string(i));
        if (!g.is_hermitian()) throw InvalidCode("generator " + std::to_string(i) + " is not Hermitian");
        if (g.is_identity()) throw InvalidCode("generator " + std::to_string(i) + " is the identity");
        for (std::size_t j = 0; j < i; ++j) {
            if (!commutes(g, code.generators[j])) {
                throw InvalidCode("generators " + std::to_string(j) + " and " + std::to_string(i) + " anticommute");
            }
        }
    }
    if (!code.generators.empty() && symplectic_rank(code.generators) != code.generators.size()) {
        throw InvalidCode("generators are not independent");
    }
    for (std::size_t i = 0; i < code.k; ++i) {
        for (const auto* set : {&code.logical_x, &code.logical_z}) {
            const char* label = set == &code.logical_x ? "logical X" : "logical Z";
            const PauliOp& l = (*set)[i];
            require_size(l, n, std::string(label) + " " + std::to_string(i));
            if (!l.is_hermitian()) throw InvalidCode(std::string(label) + " " + std::to_string(i) + " is not Hermitian");
            for (std::size_t j = 0; j < code.generators.size(); ++j) {
                if (!commutes(l, code.generators[j])) {
                    throw InvalidCode(std::string(label) + " " + std::to_string(i) + " anticommutes with generator " +
                                      std::to_string(j));
                }
            }
        }
        for (std::size_t j = 0; j < code.k; ++j) {
            bool anti = !commutes(code.logical_x[i], code.logical_z[j]);
            if (anti != (i == j)) {
                throw InvalidCode("logical X " + std::to_string(i) + " and logical Z " + std::to_string(j) +
                                  (anti ? " anticommute" : " commute"));
            }
            if (j < i && !commutes(code.logical_x[i], code.logical_x[j])) {
                throw InvalidCode("logical X " + std::to_string(j) + " and " + std::to_string(i) + " anticommute");
            }
            if (j < i && !commutes(code.logical_z[i], code.logical_z[j])) {
                throw InvalidCode("logical Z " + std::to_string(j) + " and " + std::to_string(i) + " anticommute");
            }
        }
    }
}

StabilizerCode parse_code(std::string_view text, std::string name) {
    StabilizerCode code;
    code.name = std::move(name);
    enum class Section { Header, Generators, LogicalX, LogicalZ } section = Section::Header;
    std::size_t line_no = 0;

    std::istringstream in{std::string(text)};
    std::string raw;
    while (std::getline(in, raw)) {
        ++line_no;
        std::string_view line = raw;
        if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        auto fail = [&](const std::string& msg) { throw ParseError("line " + std::to_string(line_no) + ": " + msg); };

        if (section == Section::Header) {
            std::istringstream header{std::string(line)};
            long long n = -1, k = -1, d = -1;
            header >> n >> k;
            if (!header || n <= 0 || k < 0) fail("expected header 'n k [d]'");
            if (header >> d) {
                if (d <= 0) fail("distance must be positive");
                code.distance = static_cast<std::size_t>(d);
            }
            std::string extra;
            if (header.clear(), header >> extra) fail("unexpected token '" + extra + "' in header");
            code.n = static_cast<std::size_t>(n);
            code.k = static_cast<std::size_t>(k);
            section = Section::Generators;
            continue;
        }
        if (line == "X:") {
            if (section != Section::Generators) fail("'X:' section out of order");
            section = Section::LogicalX;
            continue;
        }
        if (line == "Z:") {
            if (section != Section::LogicalX) fail("'Z:' section must follow 'X:'");
            section = Section::LogicalZ;
            continue;
        }
        PauliOp op;
        try {
            op = PauliOp::from_string(line);
        } catch (const ParseError& e) {
            fail(e.what());
        }
        if (op.n_qubits() != code.n) fail("Pauli string has " + std::to_string(op.n_qubits()) + " qubits");
        if (section == Section::Generators) code.generators.push_back(std::move(op));
        if (section == Section::LogicalX) code.logical_x.push_back(std::move(op));
        if (section == Section::LogicalZ) code.logical_z.push_back(std::move(op));
    }
    if (section == Section::Header) throw ParseError("missing header");
    if (code.k > 0 && section != Section::LogicalZ) throw ParseError("missing 'X:'/'Z:' logical sections");
    validate(code);
    return code;
}

StabilizerCode load_code_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open code file " + path.string());
    std::stringstream buffer;
    buffer << in.rdbuf();
    return parse_code(buffer.str(), path.stem().string());
}

std::string format_code(const StabilizerCode& code) {
    std::ostringstream out;
    if (!code.name.empty()) out << "# " << code.name << "\n";
    out << code.n << " " << code.k;
    if (code.distance) out << " " << *code.distance;
    out << "\n";
    for (const PauliOp& g : code.generators) out << g.str() << "\n";
    out << "X:\n";
    for (const PauliOp& l : code.logical_x) out << l.str() << "\n";
    out << "Z:\n";
    for (const PauliOp& l : code.logical_z) out << l.str() << "\n";
    return out.str();
}

StabilizerCode five_qubit_code() {
    StabilizerCode code;
    code.name = "five_qubit";
    code.n = 5;
    code.k = 1;
    code.distance = 3;
    code.generators = parse_list({"+XZZXI", "+IXZZX", "+XIXZZ", "+ZXIXZ"});
    code.logical_x = parse_list({"+XXXXX"});
    code.logical_z = parse_list({"+ZZZZZ"});
    return code;
}

StabilizerCode steane_code() {
    StabilizerCode code;
    code.name = "steane";
    code.n = 7;
    code.k = 1;
    code.distance = 3;
    code.generators =
        parse_list({"+IIIXXXX", "+IXXIIXX", "+XIXIXIX", "+IIIZZZZ", "+IZZIIZZ", "+ZIZIZIZ"});
    code.logical_x = parse_list({"+XXXXXXX"});
    code.logical_z = parse_list({"+ZZZZZZZ"});
    return code;
}

StabilizerCode trivial_code(std::size_t n) {
    StabilizerCode code;
    code.name = "trivial" + std::to_string(n);
    code.n = n;
    code.k = n;
    code.distance = 1;
    for (std::size_t q = 0; q < n; ++q) {
        code.logical_x.push_back(PauliOp::single(n, q, 'X'));
        code.logical_z.push_back(PauliOp::single(n, q, 'Z'));
    }
    return code;
}

StabilizerCode resolve_code(std::string_view spec) {
    if (spec == "five_qubit" || spec == "5") return five_qubit_code();
    if (spec == "steane" || spec == "7") return steane_code();
    if (spec.substr(0, 8) == "trivial:") {
        std::size_t n = std::stoul(std::string(spec.substr(8)));
        if (n == 0) throw ParseError("trivial code needs at least one qubit");
        return trivial_code(n);
    }
    return load_code_file(std::filesystem::path(spec));
}

StabilizerCode combine_sectors(std::span<const StabilizerCode> sectors) {
    if (sectors.empty()) throw SizeMismatch("combine_sectors: no sectors");
    if (sectors.size() == 1) return sectors.front();
    StabilizerCode out;
    for (const auto& s : sectors) {
        out.n += s.n;
        out.k += s.k;
    }
    std::size_t offset = 0;
    std::optional<std::size_t> distance = sectors.front().distance;
    for (const auto& s : sectors) {
        for (const auto& g : s.generators) out.generators.push_back(embed(g, out.n, offset));
        for (const auto& l : s.logical_x) out.logical_x.push_back(embed(l, out.n, offset));
        for (const auto& l : s.logical_z) out.logical_z.push_back(embed(l, out.n, offset));
        if (!s.distance) {
            distance.reset();
        } else if (distance) {
            distance = std::min(*distance, *s.distance);
        }
        offset += s.n;
    }
    out.distance = distance;
    out.name = sectors.front().name + "^" + std::to_string(sectors.size());
    return out;
}

std::vector<AffinePauliFactor> projector_factors(const StabilizerCode& code) {
    std::vector<AffinePauliFactor> factors;
    factors.reserve(code.generators.size());
    for (const PauliOp& g : code.generators) {
        PauliOp canonical = g;
        canonical.set_phase_exp(0);
        factors.push_back({0.5, 0.5 * g.sign(), std::move(canonical)});
    }
    return factors;
}

PauliOp lift_logical(const StabilizerCode& code, const PauliOp& logical) {
    if (logical.n_qubits() != code.k) {
        throw SizeMismatch("lift_logical: expected a " + std::to_string(code.k) + "-qubit logical operator");
    }
    PauliOp out(code.n);
    out.set_phase_exp(logical.phase_exp() + static_cast<int>((logical.x() & logical.z()).popcount()));
    for (std::size_t j = 0; j < code.k; ++j) {
        if (logical.x().get(j)) out *= code.logical_x[j];
    }
    for (std::size_t j = 0; j < code.k; ++j) {
        if (logical.z().get(j)) out *= code.logical_z[j];
    }
    return out;
}

std::optional<std::size_t> minimum_distance(const StabilizerCode& code, std::size_t max_weight) {
    const std::size_t n = code.n;
    std::vector<PauliOp> logicals = code.logical_x;
    logicals.insert(logicals.end(), code.logical_z.begin(), code.logical_z.end());

    auto is_logical_error = [&](const PauliOp& e) {
        for (const auto& g : code.generators) {
            if (!commutes(e, g)) return false;
        }
        for (const auto& l : logicals) {
            if (!commutes(e, l)) return true;
        }
        return false;
    };

    for (std::size_t w = 1; w <= std::min(max_weight, n); ++w) {
        std::vector<std::size_t> support(w);
        for (std::size_t i = 0; i < w; ++i) support[i] = i;
        while (true) {
            std::size_t combos = 1;
            for (std::size_t i = 0; i < w; ++i) combos *= 3;
            for (std::size_t c = 0; c < combos; ++c) {
                PauliOp e(n);
                std::size_t rest = c;
                for (std::size_t i = 0; i < w; ++i) {
                    e.set_pauli(support[i], "XYZ"[rest % 3]);
                    rest /= 3;
                }
                if (is_logical_error(e)) return w;
            }
            std::size_t i = w;
            while (i > 0 && support[i - 1] == n - w + i - 1) --i;
            if (i == 0) break;
            ++support[i - 1];
            for (std::size_t j = i; j < w; ++j) support[j] = support[j - 1] + 1;
        }
    }
    return std::nullopt;
}

LogicalStatePrep zero_prep(std::size_t k) {
    LogicalStatePrep prep{"zero", {}};
    for (std::size_t j = 0; j < k; ++j) prep.generators.push_back(PauliOp::single(k, j, 'Z'));
    return prep;
}

LogicalStatePrep plus_prep(std::size_t k) {
    LogicalStatePrep prep{"plus", {}};
    for (std::size_t j = 0; j < k; ++j) prep.generators.push_back(PauliOp::single(k, j, 'X'));
    return prep;
}

LogicalStatePrep ghz_prep(std::size_t k) {
    LogicalStatePrep prep{"ghz", {}};
    PauliOp all_x(k);
    for (std::size_t j = 0; j < k; ++j) all_x.set_pauli(j, 'X');
    prep.generators.push_back(all_x);
    for (std::size_t j = 0; j + 1 < k; ++j) {
        PauliOp zz(k);
        zz.set_pauli(j, 'Z');
        zz.set_pauli(j + 1, 'Z');
        prep.generators.push_back(zz);
    }
    return prep;
}

LogicalStatePrep parse_prep(std::string_view spec, std::size_t k) {
    if (spec == "zero") return zero_prep(k);
    if (spec == "plus") return plus_prep(k);
    if (spec == "ghz") return ghz_prep(k);
    LogicalStatePrep prep{std::string(spec), {}};
    while (!spec.empty()) {
        std::size_t comma = spec.find(',');
        std::string_view token = trim(spec.substr(0, comma));
        if (!token.empty()) prep.generators.push_back(PauliOp::from_string(token));
        spec = comma == std::string_view::npos ? std::string_view{} : spec.substr(comma + 1);
    }
    if (prep.generators.size() != k) {
        throw ParseError("state preparation needs " + std::to_string(k) + " generators, got " +
                         std::to_string(prep.generators.size()));
    }
    for (const auto& g : prep.generators) {
        if (g.n_qubits() != k) throw ParseError("state preparation generator has the wrong qubit count");
    }
    return prep;
}

Tableau prepare_logical_state(std::span<const StabilizerCode> sectors, const LogicalStatePrep& prep) {
    StabilizerCode code = combine_sectors(sectors);
    if (prep.generators.size() != code.k || prep.k() != code.k) {
        throw SizeMismatch("prepare_logical_state: preparation has " + std::to_string(prep.k()) +
                           " logical qubits, code has " + std::to_string(code.k));
    }
    std::vector<PauliOp> stabilizers = code.generators;
    for (const auto& g : prep.generators) stabilizers.push_back(lift_logical(code, g));
    return Tableau::from_stabilizers(code.n, stabilizers);
}

}  // namespace lst
