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

// The plain-text formats read and written by the command-line tool.
//
//   semigroup <n>
//   <n rows of n entries; row x lists x*0 ... x*(n-1)>
//   names: <n names>           (optional)
//
//   act <m> over <semigroup file> [left|right]
//   <|S| rows of m entries; row s lists the action of s on 0 ... m-1>
//
// Lines starting with '#' are comments, blank lines are ignored, and the
// text must end with a newline. The semigroup file named by an act is
// resolved relative to the act file's directory.

#ifndef SEMI_TEXT_FORMAT_HPP_
#define SEMI_TEXT_FORMAT_HPP_

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include "acts.hpp"
#include "category.hpp"
#include "congruence.hpp"
#include "semigroup.hpp"

namespace semi {

  // Throws ParseError as "<source>:<line>: <what>"; table errors from
  // from_table propagate with their own codes.
  FiniteSemigroup parse_semigroup(std::string_view text, std::string_view source = "<input>");
  std::string     format_semigroup(FiniteSemigroup const& S);

  FiniteSemigroup read_semigroup(std::filesystem::path const& path);
  void write_text(std::filesystem::path const& path, std::string const& text);

  struct ActHeader {
    std::size_t m = 0;
    std::string over;
    Side        side = Side::left;
  };

  struct ParsedAct {
    ActHeader                     header;
    std::optional<FiniteLeftAct>  left;   // set when side is left
    std::optional<FiniteRightAct> right;  // set when side is right

    [[nodiscard]] FiniteSemigroup const& semigroup() const {
      return left ? left->semigroup() : right->semigroup();
    }
  };

  ActHeader parse_act_header(std::string_view text, std::string_view source = "<input>");
  ParsedAct parse_act(std::string_view       text,
                      FiniteSemigroup const& S,
                      std::string_view       source = "<input>");
  ParsedAct read_act(std::filesystem::path const& path);

  template <Side side>
  std::string format_act(FiniteAct<side> const& X, std::string_view over);

  // One line per arrow: "left right payload".
  std::string dump_cauchy(CauchyCompletion const& C);
  // One line per pair of objects: "u v -> arrow".
  std::string dump_consolidation(Consolidation const& p);
  // One line per class, members ascending.
  std::string dump_partition(Partition const& p);

}  // namespace semi

#endif  // SEMI_TEXT_FORMAT_HPP_
