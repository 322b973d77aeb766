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


#ifndef GRAPHBELL_ERRORS_H
#define GRAPHBELL_ERRORS_H

#include <stdexcept>
#include <string>

namespace graphbell {

/// Malformed user input: bad graph files, unknown catalog names, bad masks.
class InvalidInput : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

/// An internal cross-check failed (non-commuting generators, a quantum value
/// that disagrees with the term count, ...). Always a bug.
class ConsistencyError : public std::logic_error {
   public:
    using std::logic_error::logic_error;
};

}  // namespace graphbell

#endif  // GRAPHBELL_ERRORS_H
