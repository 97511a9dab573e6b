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

#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "hgsa/pauli.h"

namespace hgsa {

/// A real-weighted sum of Pauli strings plus a constant energy offset.
///
/// Terms are non-identity, unique by pattern, and kept in file order. The
/// identity coefficient lives in `offset`. `hf` is the reference occupation
/// bitstring, character j being the value of qubit j.
struct QubitHamiltonian {
    size_t num_qubits = 0;
    std::vector<Term> terms;
    double offset = 0;
    std::string hf;
    std::string name;
    /// `# key value` comment lines with lowercase keys (e.g. ref_fci).
    std::map<std::string, std::string> metadata;

    std::optional<double> metadata_number(const std::string& key) const;
};

class ParseError : public std::runtime_error {
   public:
    ParseError(size_t line, const std::string& message);
    size_t line() const { return line_; }

   private:
    size_t line_;
};

/// Parses the line-oriented `.ham` format:
///
///     nqubits 4
///     hf 1100
///     # comment
///     term -0.09
///     term 0.17 Z0 Z1
///
/// Duplicate patterns are merged by addition and terms whose merged |c| falls
/// below 1e-12 are dropped. Coefficients may be written as `(re,im)`; an
/// imaginary part above 1e-10 is rejected.
QubitHamiltonian parse_hamiltonian(std::string_view text);
QubitHamiltonian load_hamiltonian(const std::filesystem::path& path);

/// Canonical text form; parse_hamiltonian(serialize_hamiltonian(h)) == h.
std::string serialize_hamiltonian(const QubitHamiltonian& h);

/// Validates a 0/1 string of the given length.
void check_bitstring(std::string_view bits, size_t num_qubits);

}  // namespace hgsa
