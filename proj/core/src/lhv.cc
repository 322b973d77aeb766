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


#include "graphbell/lhv.h"

#include <algorithm>
#include <bit>

#include "graphbell/errors.h"

namespace graphbell {

namespace {

constexpr size_t kMaxCodeRank = 30;
constexpr size_t kMaxEnumeratedSlots = 30;

uint64_t lowest_bit(uint64_t v) {
    return v & (~v + 1);
}

struct TermTable {
    std::vector<uint64_t> incidence;
    std::vector<uint8_t> minus;
};

TermTable term_table(const BellOperator &op) {
    TermTable t;
    t.incidence.reserve(op.q());
    t.minus.reserve(op.q());
    for (size_t k = 0; k < op.q(); k++) {
        const auto &s = op.term(k);
        t.incidence.push_back(slot_incidence(s.pauli));
        t.minus.push_back(s.sign < 0);
    }
    return t;
}

int count_satisfied(const TermTable &t, uint64_t a) {
    int c = 0;
    for (size_t k = 0; k < t.incidence.size(); k++) {
        c += (std::popcount(a & t.incidence[k]) & 1) == t.minus[k];
    }
    return c;
}

ClassicalBoundResult make_result(const BellOperator &op, int p, uint64_t witness) {
    ClassicalBoundResult r;
    r.q = static_cast<int>(op.q());
    r.p = p;
    r.bound = 2 * p - r.q;
    r.witness = LhvAssignment(op.num_qubits(), witness);
    return r;
}

bool lex_less_bits(uint64_t a, uint64_t b) {
    uint64_t d = a ^ b;
    return d != 0 && (a & lowest_bit(d)) == 0;
}

}  // namespace

size_t slot_index(size_t qubit, Letter letter) {
    switch (letter) {
        case Letter::X:
            return 3 * qubit;
        case Letter::Y:
            return 3 * qubit + 1;
        case Letter::Z:
            return 3 * qubit + 2;
        case Letter::I:
            break;
    }
    throw std::invalid_argument("the identity letter has no hidden-variable slot");
}

uint64_t slot_incidence(const PauliString &p) {
    uint64_t out = 0;
    for (size_t q = 0; q < p.num_qubits(); q++) {
        Letter l = p.letter_at(q);
        if (l != Letter::I) {
            out |= uint64_t{1} << slot_index(q, l);
        }
    }
    return out;
}

LhvAssignment::LhvAssignment(size_t num_qubits, uint64_t minus_bits)
    : num_qubits_(num_qubits), minus_bits_(minus_bits) {
    if (num_qubits > PauliString::kMaxQubits) {
        throw std::invalid_argument("too many qubits for an assignment");
    }
    uint64_t valid = num_qubits * 3 >= 64 ? ~uint64_t{0} : (uint64_t{1} << (3 * num_qubits)) - 1;
    if (minus_bits & ~valid) {
        throw std::invalid_argument("assignment has bits beyond its qubit count");
    }
}

int LhvAssignment::value(size_t qubit, Letter letter) const {
    if (qubit >= num_qubits_) {
        throw std::out_of_range("assignment has no value for qubit " + std::to_string(qubit + 1));
    }
    return (minus_bits_ >> slot_index(qubit, letter) & 1) ? -1 : +1;
}

void LhvAssignment::set(size_t qubit, Letter letter, int value) {
    if (qubit >= num_qubits_) {
        throw std::out_of_range("assignment has no value for qubit " + std::to_string(qubit + 1));
    }
    if (value != 1 && value != -1) {
        throw std::invalid_argument("hidden variables take the values +1 and -1");
    }
    uint64_t bit = uint64_t{1} << slot_index(qubit, letter);
    minus_bits_ = value < 0 ? (minus_bits_ | bit) : (minus_bits_ & ~bit);
}

bool LhvAssignment::lex_less(const LhvAssignment &other) const {
    return lex_less_bits(minus_bits_, other.minus_bits_);
}

std::string LhvAssignment::str() const {
    std::string out;
    for (size_t q = 0; q < num_qubits_; q++) {
        if (q) {
            out += ' ';
        }
        for (size_t l = 0; l < 3; l++) {
            out += (minus_bits_ >> (3 * q + l) & 1) ? '-' : '+';
        }
    }
    return out;
}

int term_value(const LhvAssignment &a, const StabilizerElement &s) {
    if (a.num_qubits() != s.pauli.num_qubits()) {
        throw std::invalid_argument("assignment and stabilizer element differ in qubit count");
    }
    int parity = std::popcount(a.minus_bits() & slot_incidence(s.pauli)) & 1;
    return parity ? -s.sign : s.sign;
}

BellOperator::BellOperator(std::shared_ptr<const StabilizerGroup> group, std::vector<uint32_t> term_masks)
    : group_(std::move(group)), term_masks_(std::move(term_masks)) {
    if (!group_) {
        throw InvalidInput("Bell operator needs a stabilizer group");
    }
    if (term_masks_.empty()) {
        throw InvalidInput("Bell operator needs at least one term");
    }
    std::sort(term_masks_.begin(), term_masks_.end());
    if (std::adjacent_find(term_masks_.begin(), term_masks_.end()) != term_masks_.end()) {
        throw InvalidInput("Bell operator terms must be distinct");
    }
    if (term_masks_.front() == 0) {
        throw InvalidInput("Bell operator cannot contain the identity");
    }
    if (term_masks_.back() >= group_->size()) {
        throw InvalidInput("term mask " + std::to_string(term_masks_.back()) + " is outside the group");
    }
}

int satisfied_count(const BellOperator &op, const LhvAssignment &a) {
    int c = 0;
    for (size_t k = 0; k < op.q(); k++) {
        c += term_value(a, op.term(k)) == 1;
    }
    return c;
}

AffineCode affine_code_reduction(const BellOperator &op) {
    TermTable t = term_table(op);
    size_t q = op.q();
    size_t words = (q + 63) / 64;
    size_t slots = 3 * op.num_qubits();
    AffineCode code;
    code.q = q;
    code.offset.assign(words, 0);
    for (size_t k = 0; k < q; k++) {
        if (!t.minus[k]) {
            code.offset[k / 64] |= uint64_t{1} << (k % 64);
        }
    }
    std::vector<int> pivot_row(q, -1);
    std::vector<size_t> pivots;
    for (size_t s = 0; s < slots; s++) {
        std::vector<uint64_t> v(words, 0);
        for (size_t k = 0; k < q; k++) {
            if (t.incidence[k] >> s & 1) {
                v[k / 64] |= uint64_t{1} << (k % 64);
            }
        }
        uint64_t combo = uint64_t{1} << s;
        while (true) {
            size_t w = 0;
            while (w < words && v[w] == 0) {
                w++;
            }
            if (w == words) {
                break;
            }
            size_t lb = w * 64 + static_cast<size_t>(std::countr_zero(v[w]));
            int r = pivot_row[lb];
            if (r < 0) {
                pivot_row[lb] = static_cast<int>(code.basis.size());
                code.basis.push_back(v);
                code.preimages.push_back(combo);
                combo = 0;
                break;
            }
            for (size_t i = 0; i < words; i++) {
                v[i] ^= code.basis[r][i];
            }
            combo ^= code.preimages[r];
        }
        if (combo) {
            // Insert into the kernel keeping distinct lowest bits.
            while (combo) {
                auto it = std::find_if(code.kernel.begin(), code.kernel.end(),
                                       [&](uint64_t k) { return lowest_bit(k) == lowest_bit(combo); });
                if (it == code.kernel.end()) {
                    code.kernel.push_back(combo);
                    break;
                }
                combo ^= *it;
            }
        }
    }
    std::sort(code.kernel.begin(), code.kernel.end(),
              [](uint64_t a, uint64_t b) { return lowest_bit(a) < lowest_bit(b); });
    return code;
}

ClassicalBoundResult classical_bound(const BellOperator &op) {
    AffineCode code = affine_code_reduction(op);
    size_t r = code.rank();
    if (r > kMaxCodeRank) {
        throw InvalidInput("code rank " + std::to_string(r) + " is too large to enumerate");
    }
    auto lexmin = [&](uint64_t a) {
        for (uint64_t k : code.kernel) {
            if (a & lowest_bit(k)) {
                a ^= k;
            }
        }
        return a;
    };
    size_t words = code.offset.size();
    std::vector<uint64_t> cur = code.offset;
    uint64_t pre = 0;
    int best = -1;
    uint64_t best_a = 0;
    auto visit = [&](int pc) {
        if (pc > best) {
            best = pc;
            best_a = lexmin(pre);
        } else if (pc == best) {
            uint64_t a = lexmin(pre);
            if (lex_less_bits(a, best_a)) {
                best_a = a;
            }
        }
    };
    auto popcount_words = [&]() {
        int pc = 0;
        for (size_t w = 0; w < words; w++) {
            pc += std::popcount(cur[w]);
        }
        return pc;
    };
    visit(popcount_words());
    uint64_t total = uint64_t{1} << r;
    if (words == 1) {
        uint64_t c = cur[0];
        std::vector<uint64_t> rows(r);
        for (size_t i = 0; i < r; i++) {
            rows[i] = code.basis[i][0];
        }
        for (uint64_t i = 1; i < total; i++) {
            int k = std::countr_zero(i);
            c ^= rows[k];
            pre ^= code.preimages[k];
            int pc = std::popcount(c);
            if (pc >= best) {
                visit(pc);
            }
        }
    } else {
        for (uint64_t i = 1; i < total; i++) {
            int k = std::countr_zero(i);
            for (size_t w = 0; w < words; w++) {
                cur[w] ^= code.basis[k][w];
            }
            pre ^= code.preimages[k];
            int pc = popcount_words();
            if (pc >= best) {
                visit(pc);
            }
        }
    }
    return make_result(op, best, best_a);
}

ClassicalBoundResult slot_enumeration_bound(const BellOperator &op) {
    TermTable t = term_table(op);
    uint64_t used = 0;
    for (uint64_t m : t.incidence) {
        used |= m;
    }
    std::vector<uint64_t> used_bits;
    for (uint64_t u = used; u; u &= u - 1) {
        used_bits.push_back(lowest_bit(u));
    }
    size_t m = used_bits.size();
    if (m > kMaxEnumeratedSlots) {
        throw InvalidInput("operator uses " + std::to_string(m) + " slots, too many to enumerate");
    }
    // Counter bit m-1-i drives used slot i so that the first maximum found is
    // the lexicographically least one.
    int best = -1;
    uint64_t best_a = 0;
    uint64_t total = uint64_t{1} << m;
    for (uint64_t c = 0; c < total; c++) {
        uint64_t a = 0;
        for (size_t i = 0; i < m; i++) {
            if (c >> (m - 1 - i) & 1) {
                a |= used_bits[i];
            }
        }
        int pc = count_satisfied(t, a);
        if (pc > best) {
            best = pc;
            best_a = a;
        }
    }
    return make_result(op, best, best_a);
}

ClassicalBoundResult brute_force_bound(const BellOperator &op) {
    size_t n = op.num_qubits();
    if (n > 4) {
        throw InvalidInput("brute force bound supports n <= 4, got " + std::to_string(n));
    }
    TermTable t = term_table(op);
    size_t slots = 3 * n;
    int best = -1;
    uint64_t best_a = 0;
    for (uint64_t c = 0; c < (uint64_t{1} << slots); c++) {
        uint64_t a = 0;
        for (size_t s = 0; s < slots; s++) {
            if (c >> (slots - 1 - s) & 1) {
                a |= uint64_t{1} << s;
            }
        }
        int pc = count_satisfied(t, a);
        if (pc > best) {
            best = pc;
            best_a = a;
        }
    }
    return make_result(op, best, best_a);
}

}  // namespace graphbell
