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

#ifndef SEMI_ERROR_HPP_
#define SEMI_ERROR_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

namespace semi {

  enum class ErrorCode {
    NotAssociative,
    OutOfRangeEntry,
    BadParams,
    NotIdempotent,
    NotAHomomorphism,
    NotStronglyConnected,
    NotAConsolidation,
    NotAnEquivalence,
    XiNotIso,
    XiEndpointsWrong,
    NotACongruence,
    NotOrthodox,
    OracleRefutesMinimality,
    EnumerationTooLarge,
    NotAnAct,
    NotAnEnlargement,
    NotASubsemigroup,
    NoLocalUnits,
    NotLocalIso,
    PipelineInvariantViolated,
    WitnessNotFound,
    UnknownPredicate,
    HypothesesFail,
    NoMaximum,
    ParseError,
    UsageError,
  };

  std::string_view to_string(ErrorCode code) noexcept;

  // Every failure raised by the library carries one of the codes above so
  // that callers (and tests) can branch on the kind of failure.
  class Error : public std::runtime_error {
   public:
    Error(ErrorCode code, std::string const& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what),
          _code(code) {}

    [[nodiscard]] ErrorCode code() const noexcept {
      return _code;
    }

   private:
    ErrorCode _code;
  };

  [[noreturn]] inline void fail(ErrorCode code, std::string const& what) {
    throw Error(code, what);
  }

}  // namespace semi

#endif  // SEMI_ERROR_HPP_
