// Copyright 2026 The cind Authors. All Rights Reserved.
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

#ifndef CIND_TOOLS_SELFTEST_HPP_
#define CIND_TOOLS_SELFTEST_HPP_

#include <cstdint>
#include <string>
#include <vector>

namespace cind::tools {

struct SuiteResult {
  std::string name;
  std::size_t passed = 0;
  std::size_t failed = 0;
  std::string first_failure;
};

// Derivation regressions plus seeded soundness sweeps of the axioms,
// diagram extension and the product construction.
std::vector<SuiteResult> run_selftest(std::uint64_t seed);

}  // namespace cind::tools

#endif  // CIND_TOOLS_SELFTEST_HPP_
