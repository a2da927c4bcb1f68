// Copyright 2026 The vitalpovm Authors
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

#include <iosfwd>
#include <string>
#include <vector>

namespace vitalpovm::cli {

// Exit codes: 0 the requested property holds, 1 refuted (witness in the
// output), 2 input error or undecided.
inline constexpr int kHolds = 0;
inline constexpr int kRefuted = 1;
inline constexpr int kError = 2;

/// Runs one command. args excludes the program name. Frame paths of "-" read
/// from std::cin.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace vitalpovm::cli
