/*
 *   Copyright 2026 The semimorita Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

// The semi command-line tool as a library entry point, so that tests can
// run it in-process.

#ifndef SEMI_TOOLS_CLI_HPP_
#define SEMI_TOOLS_CLI_HPP_

#include <iosfwd>
#include <string>
#include <vector>

namespace semi::cli {

  // Exit codes: 0 success or a true verdict, 1 a false verdict, 2 an error.
  inline constexpr int kOk    = 0;
  inline constexpr int kFalse = 1;
  inline constexpr int kError = 2;

  // args excludes the program name.
  int run(std::vector<std::string> const& args, std::ostream& out, std::ostream& err);

}  // namespace semi::cli

#endif  // SEMI_TOOLS_CLI_HPP_
