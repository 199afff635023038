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

#include <string>
#include <vector>

namespace stirup::harness {

/// fig2a..fig2e, fig3, fig4a..fig4c, table1.
const std::vector<std::string> &artifact_ids();

/// Writes the data behind one figure or table as CSV plus a gnuplot script into
/// `out_dir`; returns the written paths. Unknown ids raise ConfigError.
std::vector<std::string> reproduce(const std::string &id, const std::string &out_dir,
                                   int workers, int steps);

} // namespace stirup::harness
