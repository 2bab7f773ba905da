/*
   Copyright 2026 diffop developers

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace diffop {

struct SuiteResult {
  std::string name;
  int trials = 0;
  int passes = 0;
};

struct SelftestReport {
  std::uint64_t seed = 0;
  int trials = 0;
  std::vector<SuiteResult> suites;
  bool ok = false;
};

/* Runs every property suite with the given per-suite trial count.  Each
   suite draws from its own generator derived from the seed, so reruns with
   one seed reproduce bit for bit.  A trial that throws counts as a
   failure. */
SelftestReport run_selftest(std::uint64_t seed, int trials);

}  // namespace diffop
