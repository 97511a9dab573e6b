// Copyright 2026 The hgsa Authors
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

#include "hgsa/hamiltonian.h"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <unordered_map>

namespace hgsa {

namespace {

constexpr double kDropThreshold = 1e-12;
constexpr double kImaginaryTolerance = 1e-10;

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) {
        s.remove_prefix(1);
    }
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
        s.remove_suffix(1);
    }
    return s;
}

std::string_view next_token(std::string_view& rest) {
    rest = trim(rest);
    size_t end = 0;
    while (end < rest.size() && rest[end] != ' ' && rest[end] != '\t') {
        ++end;
    }
    std::string_view token = rest.substr(0, end);
    rest.remove_prefix(end);
    return token;
}

bool parse_double(std::string_view s, double& out) {
    if (s.empty()) {
        return false;
    }
    if (s.front() == '+') {
        s.remove_prefix(1);
    }
    auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
    return ec == std::errc() && end == s.data() + s.size() && std::isfinite(out);
}

double parse_coefficient(std::string_view token, size_t line) {
    double re = 0;
    if (!token.empty() && token.front() == '(') {
        if (token.back() != ')') {
            throw ParseError(line, "unterminated complex coefficient '" + std::string(token) + "'");
        }
        std::string_view inner = token.substr(1, token.size() - 2);
        size_t comma = inner.find(',');
        double im = 0;
        if (comma == std::string_view::npos || !parse_double(trim(inner.substr(0, comma)), re) ||
            !parse_double(trim(inner.substr(comma + 1)), im)) {
            throw ParseError(line, "bad complex coefficient '" + std::string(token) + "'");
        }
        if (std::abs(im) > kImaginaryTolerance) {
            throw ParseError(line, "coefficient has non-negligible imaginary part " + std::to_string(im));
        }
        return re;
    }
    if (!parse_double(token, re)) {
        throw ParseError(line, "bad coefficient '" + std::string(token) + "'");
    }
    return re;
}

std::string pattern_key(const PauliString& p) {
    std::string key;
    for (uint64_t w : p.x_words()) {
        key.append(reinterpret_cast<const char*>(&w), sizeof(w));
    }
    for (uint64_t w : p.z_words()) {
        key.append(reinterpret_cast<const char*>(&w), sizeof(w));
    }
    return key;
}

bool is_metadata_key(std::string_view key) {
    if (key.empty()) {
        return false;
    }
    for (char c : key) {
        if (!(std::islower(static_cast<unsigned char>(c)) || std::isdigit(static_cast<unsigned char>(c)) || c == '_')) {
            return false;
        }
    }
    return true;
}

}  // namespace

ParseError::ParseError(size_t line, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}

std::optional<double> QubitHamiltonian::metadata_number(const std::string& key) const {
    auto it = metadata.find(key);
    if (it == metadata.end()) {
        return std::nullopt;
    }
    double v = 0;
    if (!parse_double(trim(it->second), v)) {
        return std::nullopt;
    }
    return v;
}

void check_bitstring(std::string_view bits, size_t num_qubits) {
    if (bits.size() != num_qubits) {
        throw std::invalid_argument(
            "bitstring length " + std::to_string(bits.size()) + " does not match " +
            std::to_string(num_qubits) + " qubits");
    }
    for (char c : bits) {
        if (c != '0' && c != '1') {
            throw std::invalid_argument("bitstring may only contain 0 and 1");
        }
    }
}

QubitHamiltonian parse_hamiltonian(std::string_view text) {
    QubitHamiltonian h;
    bool have_n = false;
    bool have_hf = false;
    std::unordered_map<std::string, size_t> index_of;
    std::vector<Term> merged;
    double offset = 0;

    size_t line_no = 0;
    size_t pos = 0;
    while (pos <= text.size()) {
        size_t eol = text.find('\n', pos);
        if (eol == std::string_view::npos) {
            eol = text.size();
        }
        std::string_view line = trim(text.substr(pos, eol - pos));
        pos = eol + 1;
        ++line_no;

        if (line.empty()) {
            continue;
        }
        if (line.front() == '#') {
            std::string_view rest = line.substr(1);
            std::string_view key = next_token(rest);
            if (is_metadata_key(key)) {
                h.metadata[std::string(key)] = std::string(trim(rest));
            }
            continue;
        }

        std::string_view rest = line;
        std::string_view keyword = next_token(rest);
        if (keyword == "nqubits") {
            if (have_n) {
                throw ParseError(line_no, "duplicate nqubits header");
            }
            std::string_view tok = next_token(rest);
            auto [end, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), h.num_qubits);
            if (ec != std::errc() || end != tok.data() + tok.size() || !trim(rest).empty()) {
                throw ParseError(line_no, "bad nqubits header");
            }
            have_n = true;
        } else if (keyword == "hf") {
            if (!have_n) {
                throw ParseError(line_no, "hf header must follow nqubits");
            }
            if (have_hf) {
                throw ParseError(line_no, "duplicate hf header");
            }
            std::string_view bits = next_token(rest);
            if (!trim(rest).empty()) {
                throw ParseError(line_no, "trailing text after hf bitstring");
            }
            try {
                check_bitstring(bits, h.num_qubits);
            } catch (const std::invalid_argument& e) {
                throw ParseError(line_no, e.what());
            }
            h.hf = std::string(bits);
            have_hf = true;
        } else if (keyword == "term") {
            if (!have_n || !have_hf) {
                throw ParseError(line_no, "term before nqubits/hf header");
            }
            double c = parse_coefficient(next_token(rest), line_no);
            PauliString p;
            try {
                p = PauliString::from_factors(h.num_qubits, rest);
            } catch (const std::exception& e) {
                throw ParseError(line_no, e.what());
            }
            if (p.is_identity_pattern()) {
                offset += c;
                continue;
            }
            std::string key = pattern_key(p);
            auto it = index_of.find(key);
            if (it == index_of.end()) {
                index_of.emplace(std::move(key), merged.size());
                merged.push_back({c, std::move(p)});
            } else {
                merged[it->second].coefficient += c;
            }
        } else {
            throw ParseError(line_no, "unknown directive '" + std::string(keyword) + "'");
        }
    }
    if (!have_n || !have_hf) {
        throw ParseError(line_no, "missing nqubits/hf header");
    }
    for (Term& t : merged) {
        if (std::abs(t.coefficient) >= kDropThreshold) {
            h.terms.push_back(std::move(t));
        }
    }
    h.offset = offset;
    if (auto it = h.metadata.find("name"); it != h.metadata.end()) {
        h.name = it->second;
    }
    return h;
}

QubitHamiltonian load_hamiltonian(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::runtime_error("cannot open " + path.string());
    }
    std::stringstream buffer;
    buffer << in.rdbuf();
    QubitHamiltonian h = parse_hamiltonian(buffer.str());
    if (h.name.empty()) {
        h.name = path.stem().string();
    }
    return h;
}

std::string serialize_hamiltonian(const QubitHamiltonian& h) {
    std::string out;
    char buf[64];
    out += "nqubits " + std::to_string(h.num_qubits) + "\n";
    out += "hf " + h.hf + "\n";
    for (const auto& [key, value] : h.metadata) {
        out += "# " + key + " " + value + "\n";
    }
    if (!h.name.empty() && !h.metadata.contains("name")) {
        out += "# name " + h.name + "\n";
    }
    if (h.offset != 0) {
        std::snprintf(buf, sizeof(buf), "%.17g", h.offset);
        out += std::string("term ") + buf + "\n";
    }
    for (const Term& t : h.terms) {
        std::snprintf(buf, sizeof(buf), "%.17g", t.coefficient);
        out += std::string("term ") + buf + " " + t.pauli.factor_str() + "\n";
    }
    return out;
}

}  // namespace hgsa
