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

#include <string>
#include <vector>

#include "hgsa/hamiltonian.h"
#include "hgsa/pauli.h"

namespace hgsa {

/// A set of mutually commuting Hamiltonian terms.
struct CommutingGroup {
    std::vector<Term> members;
    bool is_diagonal = false;
    double norm1 = 0;
};

struct GroupedHamiltonian {
    size_t num_qubits = 0;
    std::vector<CommutingGroup> groups;
    double offset = 0;
};

enum class GroupOrder { Descending, Ascending };

/// Splits the terms into general-commuting groups.
///
/// All {I,Z} terms form a single diagonal group. The remaining terms are taken
/// by decreasing |c| (ties in canonical_less order) and each is placed in the
/// first non-diagonal group it commutes with entirely, opening a new group
/// otherwise. Groups are returned sorted by 1-norm (direction per `order`);
/// equal norms put the diagonal group first, then creation order.
GroupedHamiltonian partition(const QubitHamiltonian& h, GroupOrder order = GroupOrder::Descending);

struct CheckResult {
    std::string name;
    bool passed = true;
    std::string detail;
};

struct PartitionReport {
    std::vector<CheckResult> checks;

    bool passed() const;
};

/// Checks a grouping against its source: exact disjoint cover of the
/// non-identity terms, pairwise commutation inside groups (also via dense
/// matrices when n <= 4), the diagonal flag, cached norms, and 1-norm order.
PartitionReport verify_partition(
    const GroupedHamiltonian& gh, const QubitHamiltonian& h, GroupOrder order = GroupOrder::Descending);

}  // namespace hgsa
