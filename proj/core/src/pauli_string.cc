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

#include "graphbell/pauli_string.h"

#include <bit>
#include <ostream>
#include <stdexcept>

namespace graphbell {

namespace {

void check_qubit_count(size_t num_qubits) {
    if (num_qubits == 0 || num_qubits > PauliString::kMaxQubits) {
        throw std::invalid_argument(
            "Pauli strings support 1.." + std::to_string(PauliString::kMaxQubits) + " qubits, got " +
            std::to_string(num_qubits));
    }
}

}  // namespace

char letter_char(Letter letter) {
    switch (letter) {
        case Letter::I:
            return 'I';
        case Letter::X:
            return 'X';
        case Letter::Y:
            return 'Y';
        case Letter::Z:
            return 'Z';
    }
    return '?';
}

PauliString::PauliString(size_t num_qubits) : PauliString(num_qubits, 0, 0, 0) {
}

PauliString::PauliString(size_t num_qubits, uint32_t x_mask, uint32_t z_mask, uint8_t phase_exp)
    : num_qubits_(0), phase_exp_(phase_exp & 3), x_mask_(x_mask), z_mask_(z_mask) {
    check_qubit_count(num_qubits);
    num_qubits_ = static_cast<uint8_t>(num_qubits);
    uint32_t valid = num_qubits == 32 ? ~0u : ((1u << num_qubits) - 1);
    if ((x_mask | z_mask) & ~valid) {
        throw std::invalid_argument("Pauli masks have bits beyond the qubit count");
    }
}

PauliString PauliString::single(size_t num_qubits, size_t qubit, Letter letter) {
    if (qubit >= num_qubits) {
        throw std::out_of_range("qubit index " + std::to_string(qubit) + " out of range");
    }
    uint32_t bit = 1u << qubit;
    uint8_t code = static_cast<uint8_t>(letter);
    return PauliString(num_qubits, (code & 1) ? bit : 0, (code & 2) ? bit : 0, 0);
}

PauliString PauliString::from_str(std::string_view text) {
    uint8_t phase = 0;
    size_t k = 0;
    if (k < text.size() && (text[k] == '+' || text[k] == '-')) {
        phase = text[k] == '-' ? 2 : 0;
        k++;
    }
    if (k < text.size() && text[k] == 'i') {
        phase = (phase + 1) & 3;
        k++;
    }
    std::string_view body = text.substr(k);
    uint32_t x = 0;
    uint32_t z = 0;
    for (size_t q = 0; q < body.size(); q++) {
        switch (body[q]) {
            case 'I':
            case '_':
                break;
            case 'X':
                x |= 1u << q;
                break;
            case 'Y':
                x |= 1u << q;
                z |= 1u << q;
                break;
            case 'Z':
                z |= 1u << q;
                break;
            default:
                throw std::invalid_argument("bad Pauli character in '" + std::string(text) + "'");
        }
        if (q >= kMaxQubits) {
            throw std::invalid_argument("Pauli string too long: '" + std::string(text) + "'");
        }
    }
    return PauliString(body.size(), x, z, phase);
}

size_t PauliString::weight() const {
    return static_cast<size_t>(std::popcount(support_mask()));
}

Letter PauliString::letter_at(size_t qubit) const {
    if (qubit >= num_qubits_) {
        throw std::out_of_range(
            "qubit index " + std::to_string(qubit) + " out of range for " + std::to_string(num_qubits_) +
            " qubits");
    }
    uint32_t x = (x_mask_ >> qubit) & 1;
    uint32_t z = (z_mask_ >> qubit) & 1;
    return static_cast<Letter>(x | (z << 1));
}

int PauliString::hermitian_sign() const {
    if (!is_hermitian()) {
        throw std::domain_error("Pauli string " + str() + " is not Hermitian");
    }
    return phase_exp_ == 0 ? +1 : -1;
}

std::string PauliString::str() const {
    std::string out;
    out.reserve(num_qubits_ + 2);
    out.push_back((phase_exp_ & 2) ? '-' : '+');
    if (phase_exp_ & 1) {
        out.push_back('i');
    }
    for (size_t q = 0; q < num_qubits_; q++) {
        out.push_back(letter_char(letter_at(q)));
    }
    return out;
}

PauliString multiply(const PauliString &a, const PauliString &b) {
    if (a.num_qubits() != b.num_qubits()) {
        throw std::invalid_argument(
            "cannot multiply Pauli strings on " + std::to_string(a.num_qubits()) + " and " +
            std::to_string(b.num_qubits()) + " qubits");
    }
    uint32_t ax = a.x_mask(), az = a.z_mask();
    uint32_t bx = b.x_mask(), bz = b.z_mask();
    uint32_t a_x = ax & ~az, a_y = ax & az, a_z = ~ax & az;
    uint32_t b_x = bx & ~bz, b_y = bx & bz, b_z = ~bx & bz;
    // XY = iZ, YZ = iX, ZX = iY and the reversed orders pick up -i.
    int plus = std::popcount((a_x & b_y) | (a_y & b_z) | (a_z & b_x));
    int minus = std::popcount((a_y & b_x) | (a_z & b_y) | (a_x & b_z));
    int phase = a.phase_exp() + b.phase_exp() + plus + 3 * minus;
    return PauliString(a.num_qubits(), ax ^ bx, az ^ bz, static_cast<uint8_t>(phase & 3));
}

bool commutes(const PauliString &a, const PauliString &b) {
    if (a.num_qubits() != b.num_qubits()) {
        throw std::invalid_argument("cannot compare Pauli strings of different qubit counts");
    }
    int overlap = std::popcount((a.x_mask() & b.z_mask()) ^ (a.z_mask() & b.x_mask()));
    return (overlap & 1) == 0;
}

std::ostream &operator<<(std::ostream &out, const PauliString &p) {
    return out << p.str();
}

}  // namespace graphbell
