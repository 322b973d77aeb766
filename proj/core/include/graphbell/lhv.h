// Copyright 2026 The graphbell Authors
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


#ifndef GRAPHBELL_LHV_H
#define GRAPHBELL_LHV_H

#include <cstddef>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "graphbell/pauli_string.h"
#include "graphbell/stabilizer_group.h"

namespace graphbell {

/// Slot of the hidden variable for `letter` on `qubit`: 3*qubit + (X:0, Y:1, Z:2).
size_t slot_index(size_t qubit, Letter letter);

/// Bit slot_index(q, letter_at(q)) set for every non-identity qubit.
uint64_t slot_incidence(const PauliString &p);

/// A deterministic local hidden variable model: a +1/-1 value for X, Y and Z
/// on every qubit. Stored as a slot bit mask where a set bit means -1.
class LhvAssignment {
   public:
    LhvAssignment() = default;
    explicit LhvAssignment(size_t num_qubits, uint64_t minus_bits = 0);

    size_t num_qubits() const { return num_qubits_; }
    uint64_t minus_bits() const { return minus_bits_; }
    int value(size_t qubit, Letter letter) const;
    void set(size_t qubit, Letter letter, int value);

    /// Lexicographic order over slots 0, 1, 2, ... with +1 before -1.
    bool lex_less(const LhvAssignment &other) const;

    /// One "XYZ" triple of signs per qubit, e.g. "++- +-+".
    std::string str() const;

    bool operator==(const LhvAssignment &other) const = default;

   private:
    size_t num_qubits_ = 0;
    uint64_t minus_bits_ = 0;
};

/// s.sign times the product of the assigned values over the support of s.
int term_value(const LhvAssignment &a, const StabilizerElement &s);

/// A sum of distinct non-identity stabilizer elements with coefficient +1.
class BellOperator {
   public:
    /// Masks are sorted. Throws InvalidInput on an empty set, the identity
    /// mask, duplicates, or masks outside the group.
    BellOperator(std::shared_ptr<const StabilizerGroup> group, std::vector<uint32_t> term_masks);

    const StabilizerGroup &group() const { return *group_; }
    const std::shared_ptr<const StabilizerGroup> &group_ptr() const { return group_; }
    const std::vector<uint32_t> &term_masks() const { return term_masks_; }
    size_t num_qubits() const { return group_->num_qubits(); }
    size_t q() const { return term_masks_.size(); }
    const StabilizerElement &term(size_t k) const { return (*group_)[term_masks_[k]]; }

    bool operator==(const BellOperator &other) const { return term_masks_ == other.term_masks_; }

   private:
    std::shared_ptr<const StabilizerGroup> group_;
    std::vector<uint32_t> term_masks_;
};

/// Number of terms the assignment predicts as +1.
int satisfied_count(const BellOperator &op, const LhvAssignment &a);

struct ClassicalBoundResult {
    int q = 0;
    int p = 0;
    /// 2p - q.
    int bound = 0;
    /// The lexicographically least assignment reaching p.
    LhvAssignment witness;
};

/// The satisfaction vectors {term j satisfied by a} form an affine binary
/// code: offset XOR span(basis). Bit j of each vector refers to term j of
/// the operator.
struct AffineCode {
    size_t q = 0;
    std::vector<uint64_t> offset;
    /// Echelon basis, one bit vector per row.
    std::vector<std::vector<uint64_t>> basis;
    /// For each basis row, a slot mask whose assignment maps onto that row.
    std::vector<uint64_t> preimages;
    /// Slot masks spanning the assignments that satisfy nothing new; echelon
    /// form with distinct lowest bits.
    std::vector<uint64_t> kernel;

    size_t rank() const { return basis.size(); }
};

AffineCode affine_code_reduction(const BellOperator &op);

/// Fast path: maximizes over the 2^rank codewords.
ClassicalBoundResult classical_bound(const BellOperator &op);

/// Reference path: enumerates every assignment of the slots the operator uses.
ClassicalBoundResult slot_enumeration_bound(const BellOperator &op);

/// Oracle: enumerates all 8^n assignments. n <= 4.
ClassicalBoundResult brute_force_bound(const BellOperator &op);

}  // namespace graphbell

#endif  // GRAPHBELL_LHV_H
