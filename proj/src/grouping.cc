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

#include "hgsa/grouping.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "hgsa/dense.h"

namespace hgsa {

namespace {

constexpr size_t kDenseOracleMaxQubits = 4;

}  // namespace

GroupedHamiltonian partition(const QubitHamiltonian& h, GroupOrder order) {
    GroupedHamiltonian out;
    out.num_qubits = h.num_qubits;
    out.offset = h.offset;

    CommutingGroup diagonal;
    diagonal.is_diagonal = true;
    std::vector<const Term*> rest;
    for (const Term& t : h.terms) {
        if (t.pauli.is_diagonal()) {
            diagonal.members.push_back(t);
        } else {
            rest.push_back(&t);
        }
    }
    std::stable_sort(rest.begin(), rest.end(), [](const Term* a, const Term* b) {
        double ca = std::abs(a->coefficient);
        double cb = std::abs(b->coefficient);
        if (ca != cb) {
            return ca > cb;
        }
        return canonical_less(a->pauli, b->pauli);
    });

    std::vector<CommutingGroup> created;
    for (const Term* t : rest) {
        auto fits = [&](const CommutingGroup& g) {
            return std::all_of(g.members.begin(), g.members.end(), [&](const Term& m) {
                return commutes(m.pauli, t->pauli);
            });
        };
        auto it = std::find_if(created.begin(), created.end(), fits);
        if (it == created.end()) {
            created.emplace_back();
            it = created.end() - 1;
        }
        it->members.push_back(*t);
    }

    if (!diagonal.members.empty()) {
        out.groups.push_back(std::move(diagonal));
    }
    for (CommutingGroup& g : created) {
        out.groups.push_back(std::move(g));
    }
    for (CommutingGroup& g : out.groups) {
        g.norm1 = one_norm(g.members);
    }
    // The diagonal group sits at index 0 and creation order follows, so a
    // stable sort on norm alone yields the documented tie-breaks.
    std::stable_sort(out.groups.begin(), out.groups.end(), [order](const CommutingGroup& a, const CommutingGroup& b) {
        return order == GroupOrder::Descending ? a.norm1 > b.norm1 : a.norm1 < b.norm1;
    });
    return out;
}

bool PartitionReport::passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

PartitionReport verify_partition(const GroupedHamiltonian& gh, const QubitHamiltonian& h, GroupOrder order) {
    PartitionReport report;

    // Disjoint cover: every source term appears exactly once with its coefficient.
    {
        CheckResult check{"disjoint_cover", true, ""};
        std::vector<int> seen(h.terms.size(), 0);
        size_t member_count = 0;
        for (size_t gi = 0; gi < gh.groups.size(); ++gi) {
            for (const Term& m : gh.groups[gi].members) {
                ++member_count;
                auto it = std::find_if(h.terms.begin(), h.terms.end(), [&](const Term& t) {
                    return t.pauli.same_pattern(m.pauli) && t.coefficient == m.coefficient;
                });
                if (it == h.terms.end()) {
                    check.passed = false;
                    check.detail = "group " + std::to_string(gi) + " holds unknown term " + m.pauli.factor_str();
                    break;
                }
                ++seen[it - h.terms.begin()];
            }
        }
        for (size_t k = 0; check.passed && k < seen.size(); ++k) {
            if (seen[k] != 1) {
                check.passed = false;
                check.detail = "term " + h.terms[k].pauli.factor_str() + " appears " + std::to_string(seen[k]) + " times";
            }
        }
        if (check.passed && member_count != h.terms.size()) {
            check.passed = false;
            check.detail = "member count differs from term count";
        }
        report.checks.push_back(check);
    }

    {
        CheckResult check{"within_group_commutation", true, ""};
        for (size_t gi = 0; gi < gh.groups.size() && check.passed; ++gi) {
            const auto& members = gh.groups[gi].members;
            for (size_t a = 0; a < members.size() && check.passed; ++a) {
                for (size_t b = a + 1; b < members.size(); ++b) {
                    if (classify_commutation(members[a].pauli, members[b].pauli) == CommutationKind::NonCommuting) {
                        check.passed = false;
                        check.detail = "group " + std::to_string(gi) + ": " + members[a].pauli.factor_str() +
                                       " anticommutes with " + members[b].pauli.factor_str();
                        break;
                    }
                }
            }
        }
        report.checks.push_back(check);
    }

    if (gh.num_qubits <= kDenseOracleMaxQubits) {
        CheckResult check{"within_group_commutation_dense", true, ""};
        for (size_t gi = 0; gi < gh.groups.size() && check.passed; ++gi) {
            const auto& members = gh.groups[gi].members;
            std::vector<Eigen::MatrixXcd> mats;
            for (const Term& m : members) {
                mats.push_back(dense::pauli_matrix(m.pauli));
            }
            for (size_t a = 0; a < mats.size() && check.passed; ++a) {
                for (size_t b = a + 1; b < mats.size(); ++b) {
                    if (!dense::matrices_commute(mats[a], mats[b])) {
                        check.passed = false;
                        check.detail = "group " + std::to_string(gi) + " has a nonzero dense commutator";
                        break;
                    }
                }
            }
        }
        report.checks.push_back(check);
    }

    {
        CheckResult check{"group_invariants", true, ""};
        size_t diagonal_groups = 0;
        for (size_t gi = 0; gi < gh.groups.size(); ++gi) {
            const CommutingGroup& g = gh.groups[gi];
            if (g.members.empty()) {
                check.passed = false;
                check.detail = "group " + std::to_string(gi) + " is empty";
                break;
            }
            if (g.is_diagonal) {
                ++diagonal_groups;
                bool all_diag = std::all_of(g.members.begin(), g.members.end(), [](const Term& t) { return t.pauli.is_diagonal(); });
                if (!all_diag) {
                    check.passed = false;
                    check.detail = "group " + std::to_string(gi) + " is flagged diagonal but has X/Y factors";
                    break;
                }
            }
            if (std::abs(g.norm1 - one_norm(g.members)) > 1e-12) {
                check.passed = false;
                check.detail = "group " + std::to_string(gi) + " caches a stale 1-norm";
                break;
            }
        }
        if (check.passed && diagonal_groups > 1) {
            check.passed = false;
            check.detail = "more than one diagonal group";
        }
        report.checks.push_back(check);
    }

    {
        CheckResult check{"norm_order", true, ""};
        for (size_t gi = 1; gi < gh.groups.size(); ++gi) {
            double prev = gh.groups[gi - 1].norm1;
            double cur = gh.groups[gi].norm1;
            bool ok = order == GroupOrder::Descending ? prev >= cur : prev <= cur;
            if (!ok) {
                check.passed = false;
                check.detail = "groups " + std::to_string(gi - 1) + " and " + std::to_string(gi) + " out of order";
                break;
            }
        }
        report.checks.push_back(check);
    }

    return report;
}

}  // namespace hgsa
