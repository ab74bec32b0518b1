// Copyright 2026 The triortho Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef TRIORTHO_ERRORS_HPP
#define TRIORTHO_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace triortho {

// Domain errors (bad parameters, violated preconditions) derive from
// std::domain_error. Broken internal invariants are InternalError or
// ProtocolViolation. The CLI maps the first family (plus invalid_argument and
// out_of_range) to exit code 2 and the second to 3.

class PoleError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class UnsupportedFactorization : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class DegenerateDivisorError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class InvalidK : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A parameter formula was used outside the regime where it holds.
class FormulaRegimeError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class ProtocolViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

inline void ensure(bool cond, const std::string& what) {
  if (!cond) throw InternalError(what);
}

}  // namespace triortho

#endif  // TRIORTHO_ERRORS_HPP
