// Copyright 2026 The paulient Authors
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

#pragma once

#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

namespace paulient {

struct SelfTestResult {
  std::string module;
  std::string name;
  bool passed = false;
  std::string detail;
};

/// Fast invariant checks for every module, each guarded against exceptions.
std::vector<SelfTestResult> run_selftest();

/// One line per check plus a summary; returns true when all passed.
bool print_selftest(std::ostream& os, const std::vector<SelfTestResult>& results);

}  // namespace paulient
