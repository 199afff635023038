// Copyright 2026 The STIRUP Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace stirup::harness {

struct CriterionResult {
    int id = 0;
    std::string title;
    bool passed = false;
    std::string detail;
    double seconds = 0.0;
};

/// Runs the eleven acceptance criteria in order. When `progress` is given, each
/// result line is written as soon as the criterion finishes.
std::vector<CriterionResult> run_acceptance(int workers = 0, std::ostream *progress = nullptr);

/// "PASS [n] title: detail (x.x s)" or the FAIL equivalent.
std::string format_result(const CriterionResult &result);

} // namespace stirup::harness
