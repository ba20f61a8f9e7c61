// Copyright 2026 The Tailors Authors. All Rights Reserved.
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

#ifndef TAILORS_CLI_H_
#define TAILORS_CLI_H_

#include <iosfwd>
#include <string>
#include <vector>

namespace tailors {

// Entry point of the `tailors` tool. args[0] is the program name. Returns 0 on
// success, 1 on a runtime error (one-line diagnostic on `err`) and 2 on a
// usage error (usage text on `err`).
int RunCli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tailors

#endif  // TAILORS_CLI_H_
