// Copyright 2026 The rnbs-sim Authors
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

#ifndef RNBS_SELFCHECK_HPP_
#define RNBS_SELFCHECK_HPP_

#include <string>
#include <vector>

namespace rnbs {

enum class VerifyLevel { kQuick, kFull };

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

// Built-in consistency battery behind the `verify` command. kQuick runs
// permanent kernel agreement, Haar unitarity, distribution normalization,
// the two-photon interference dip, and a Monte-Carlo acceptance-rate
// consistency check; kFull adds larger cross-checks and the
// large-threshold acceptance limit. Checks never throw; failures land in
// the result list. Deterministic: fixed internal seeds.
std::vector<CheckResult> run_verification(VerifyLevel level, int threads = 1);

bool all_passed(const std::vector<CheckResult>& results);

}  // namespace rnbs

#endif  // RNBS_SELFCHECK_HPP_
