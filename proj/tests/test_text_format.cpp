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

#include <filesystem>

#include "catch_amalgamated.hpp"
#include "semi/error.hpp"
#include "semi/families.hpp"
#include "semi/text_format.hpp"
#include "support/samples.hpp"

using namespace semi;

namespace {
  ErrorCode code_of(auto&& fn) {
    try {
      fn();
    } catch (Error const& e) {
      return e.code();
    }
    return ErrorCode::UsageError;
  }

  std::string message_of(auto&& fn) {
    try {
      fn();
    } catch (Error const& e) {
      return e.what();
    }
    return {};
  }
}  // namespace

TEST_CASE("semigroup text round trips", "[text]") {
  for (auto const& [name, S] : samples::families()) {
    INFO(name);
    auto const text = format_semigroup(S);
    auto const back = parse_semigroup(text);
    CHECK(back.same_table(S));
    CHECK(back.names() == S.names());
    CHECK(format_semigroup(back) == text);
  }
  CHECK(format_semigroup(semilattice_chain(2)) == "semigroup 2\n0 0\n0 1\n");
}

TEST_CASE("semigroup text with comments and names", "[text]") {
  auto const S = parse_semigroup(
      "# Z2\n"
      "semigroup 2\n"
      "\n"
      "0 1\n"
      "  # between rows\n"
      "1 0\n"
      "names: e g\n");
  CHECK(S.same_table(cyclic_group(2)));
  CHECK(S.name(1) == "g");
}

TEST_CASE("semigroup text errors", "[text]") {
  CHECK(code_of([] { parse_semigroup("semigroup 1\n0"); }) == ErrorCode::ParseError);
  CHECK(code_of([] { parse_semigroup(""); }) == ErrorCode::ParseError);
  CHECK(code_of([] { parse_semigroup("semigroup 0\n"); }) == ErrorCode::ParseError);
  CHECK(code_of([] { parse_semigroup("monoid 1\n0\n"); }) == ErrorCode::ParseError);
  CHECK(code_of([] { parse_semigroup("semigroup 2\n0 0\n"); }) == ErrorCode::ParseError);
  CHECK(code_of([] { parse_semigroup("semigroup 2\n0 0\n0 x\n"); }) == ErrorCode::ParseError);
  CHECK(code_of([] { parse_semigroup("semigroup 2\n0 0\n0 0 0\n"); })
        == ErrorCode::ParseError);
  CHECK(code_of([] { parse_semigroup("semigroup 1\n0\nnames: a b\n"); })
        == ErrorCode::ParseError);
  CHECK(code_of([] { parse_semigroup("semigroup 1\n0\nnames: a\n0\n"); })
        == ErrorCode::ParseError);
  CHECK(code_of([] { parse_semigroup("semigroup 1\n0\n\xc3\xa9\n"); })
        == ErrorCode::ParseError);
  CHECK(code_of([] { parse_semigroup("semigroup 2\n0 2\n0 0\n"); })
        == ErrorCode::OutOfRangeEntry);
  CHECK(code_of([] { parse_semigroup("semigroup 2\n0 0\n1 0\n"); })
        == ErrorCode::NotAssociative);
  CHECK(message_of([] { parse_semigroup("semigroup 2\n0 0\n0 x\n", "t.sg"); })
            .find("t.sg:3:")
        != std::string::npos);
}

TEST_CASE("act text round trips", "[text]") {
  auto const S = brandt_B2();
  auto const X = FiniteLeftAct::regular(S);
  auto const text = format_act(X, "b2.sg");
  CHECK(text.starts_with("act 5 over b2.sg left\n"));
  auto const back = parse_act(text, S);
  REQUIRE(back.left);
  CHECK(*back.left == X);
  CHECK(back.header.over == "b2.sg");

  auto const Y = FiniteRightAct::regular(S);
  auto const r = parse_act(format_act(Y, "b2.sg"), S);
  REQUIRE(r.right);
  CHECK(*r.right == Y);

  // The side defaults to left.
  auto const d = parse_act("act 1 over z2.sg\n0\n0\n", cyclic_group(2));
  CHECK(d.left);
  CHECK(code_of([] { parse_act("act 1 over z2.sg up\n0\n0\n", cyclic_group(2)); })
        == ErrorCode::ParseError);
  CHECK(code_of([] { parse_act("act 2 over z2.sg\n1 0\n1 0\n", cyclic_group(2)); })
        == ErrorCode::NotAnAct);
  CHECK(code_of([] { parse_act("act 1 over z2.sg\n0\n", cyclic_group(2)); })
        == ErrorCode::ParseError);
}

TEST_CASE("act files resolve their semigroup relative to themselves", "[text]") {
  auto const dir = std::filesystem::temp_directory_path() / "semi_text_format_test";
  std::filesystem::create_directories(dir);
  write_text(dir / "z2.sg", format_semigroup(cyclic_group(2)));
  write_text(dir / "swap.act", "act 2 over z2.sg\n0 1\n1 0\n");
  auto const a = read_act(dir / "swap.act");
  REQUIRE(a.left);
  CHECK(a.left->act(1, 0) == 1);
  CHECK(read_semigroup(dir / "z2.sg").same_table(cyclic_group(2)));
  CHECK(code_of([&] { read_semigroup(dir / "missing.sg"); }) == ErrorCode::ParseError);
  std::filesystem::remove_all(dir);
}

TEST_CASE("dumps", "[text]") {
  auto const C = cauchy_completion(semilattice_chain(2));
  CHECK(dump_cauchy(C) == "0 0 0\n0 1 0\n1 0 0\n1 1 0\n1 1 1\n");
  CHECK(dump_consolidation(default_consolidation(C)) == "0 0 -> 0\n0 1 -> 1\n1 0 -> 2\n1 1 -> 4\n");
  CHECK(dump_partition(brandt_B2().green().d_classes) == "0\n1 2 3 4\n");
}
