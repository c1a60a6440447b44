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

#include <functional>
#include <string>

namespace braidobf {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0.0;
};

// Runs the thirteen-point verification suite. Invokes on_result once per
// criterion, in order; returns the number of failures. All randomness is
// seeded internally, so repeated runs are identical.
int run_acceptance_suite(
    const std::function<void(const CriterionResult &)> &on_result);

}  // namespace braidobf
