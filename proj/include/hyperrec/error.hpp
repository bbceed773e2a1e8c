// Copyright 2026 The HyperRec Authors.
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

#ifndef HYPERREC_ERROR_HPP_
#define HYPERREC_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace hyperrec {

enum class ErrorKind {
  kParse,         // malformed input text
  kValidation,    // well-formed input violating a structural rule
  kIo,            // unreadable or unwritable path
  kPrecondition,  // caller broke an operation's contract
  kParameter,     // invalid configuration value
  kBudget,        // search or retry budget exhausted
  kUndefined,     // statistic undefined for the given input
  kGeneration,    // generator could not complete
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace hyperrec

#endif  // HYPERREC_ERROR_HPP_
