/*
   Copyright 2026 The cyclobez authors

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

#ifndef CYCLOBEZ_CLI_HPP
#define CYCLOBEZ_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace cyclobez::cli {

/// Runs one command (args exclude the program name) against the given
/// streams and returns the process exit code:
///   0 success, 1 verification failure, 2 usage or parse error,
///   3 internal invariant breach.
/// Identical invocations produce byte-identical output.
int run(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace cyclobez::cli

#endif
