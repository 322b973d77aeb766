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


#ifndef GRAPHBELL_RATIONAL_H
#define GRAPHBELL_RATIONAL_H

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace graphbell {

/// Exact reduced fraction with a positive denominator.
class Rational {
   public:
    Rational() = default;
    Rational(int64_t num, int64_t den = 1);

    /// Parses "7/3" or "4".
    static Rational from_str(std::string_view text);

    int64_t num() const { return num_; }
    int64_t den() const { return den_; }
    double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }
    Rational reciprocal() const;

    /// "7/3", or "4" for integers.
    std::string str() const;

    friend bool operator==(const Rational &a, const Rational &b) = default;
    friend std::strong_ordering operator<=>(const Rational &a, const Rational &b);

   private:
    int64_t num_ = 0;
    int64_t den_ = 1;
};

std::ostream &operator<<(std::ostream &out, const Rational &r);

}  // namespace graphbell

#endif  // GRAPHBELL_RATIONAL_H
