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

#ifndef GRAPHBELL_PAULI_STRING_H
#define GRAPHBELL_PAULI_STRING_H

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace graphbell {

/// Single-qubit Pauli letter. The numeric value is (x bit) | (z bit) << 1
/// with Y the letter that has both bits set.
enum class Letter : uint8_t { I = 0, X = 1, Z = 2, Y = 3 };

char letter_char(Letter letter);

/// An n-qubit Pauli operator i^phase_exp * P_1 (x) ... (x) P_n in binary
/// symplectic form. Qubit q (0-based) is bit q of both masks.
///
/// The letters are the bare Hermitian matrices I, X, Y, Z; any phase picked up
/// while composing letters lands in phase_exp. So X*Z at one qubit is stored
/// as (x=1, z=1, phase_exp=3), i.e. -i Y.
class PauliString {
   public:
    static constexpr size_t kMaxQubits = 16;

    /// Identity on `num_qubits` qubits.
    explicit PauliString(size_t num_qubits);
    PauliString(size_t num_qubits, uint32_t x_mask, uint32_t z_mask, uint8_t phase_exp = 0);

    /// Parses "+XYZ", "-XIZ", "iXY", "-iZZ", or a bare "XYZ" (qubit 1 leftmost).
    /// Accepts '_' as an alias for 'I'.
    static PauliString from_str(std::string_view text);

    /// Builds X/Y/Z on a single qubit.
    static PauliString single(size_t num_qubits, size_t qubit, Letter letter);

    size_t num_qubits() const { return num_qubits_; }
    uint32_t x_mask() const { return x_mask_; }
    uint32_t z_mask() const { return z_mask_; }
    uint8_t phase_exp() const { return phase_exp_; }
    uint32_t support_mask() const { return x_mask_ | z_mask_; }
    size_t weight() const;

    Letter letter_at(size_t qubit) const;

    bool is_identity() const { return x_mask_ == 0 && z_mask_ == 0 && phase_exp_ == 0; }
    bool is_hermitian() const { return (phase_exp_ & 1) == 0; }

    /// +1 or -1 for a Hermitian string. Throws std::domain_error when the
    /// phase is imaginary; stabilizer elements never are.
    int hermitian_sign() const;

    /// "+XYZ" / "-XIZ" / "+iXY" / "-iZZ", qubit 1 leftmost.
    std::string str() const;

    bool operator==(const PauliString &other) const = default;

   private:
    uint8_t num_qubits_;
    uint8_t phase_exp_;
    uint32_t x_mask_;
    uint32_t z_mask_;
};

/// Operator product a*b with exact phase. Throws std::invalid_argument on a
/// qubit-count mismatch.
PauliString multiply(const PauliString &a, const PauliString &b);

inline PauliString operator*(const PauliString &a, const PauliString &b) {
    return multiply(a, b);
}

/// Symplectic inner product test.
bool commutes(const PauliString &a, const PauliString &b);

std::ostream &operator<<(std::ostream &out, const PauliString &p);

}  // namespace graphbell

#endif  // GRAPHBELL_PAULI_STRING_H
