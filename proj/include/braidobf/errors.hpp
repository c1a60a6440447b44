// Copyright 2026 The braidobf developers
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

#pragma once

#include <stdexcept>
#include <string>

namespace braidobf {

// Violation of a mathematical invariant or operation precondition
// (strand mismatch, non-positive input to a positive-only algorithm, ...).
// Maps to exit status 1 in the CLI.
class DomainError : public std::runtime_error {
 public:
  explicit DomainError(const std::string &msg) : std::runtime_error(msg) {}
};

// Malformed textual input (bad header, out-of-range token, trailing junk).
// Maps to exit status 2 in the CLI.
class FormatError : public std::runtime_error {
 public:
  explicit FormatError(const std::string &msg) : std::runtime_error(msg) {}
};

}  // namespace braidobf
