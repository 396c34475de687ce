// Copyright 2026 The glint authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef GLINT_CLI_HPP
#define GLINT_CLI_HPP

namespace glint {

// Parses and runs one command line. Returns the process exit code:
//   0  success (including --help)
//   2  usage error (unknown flags, missing required options)
//   3  input validation error (bad values, malformed files, size limits)
//   4  numeric range failure during computation
// All numeric output is printed with 9 significant digits, and every
// source of randomness is controlled by an explicit --seed flag.
int run_cli(int argc, const char* const* argv);

}  // namespace glint

#endif  // GLINT_CLI_HPP
