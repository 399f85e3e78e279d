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

#include "semi/error.hpp"

namespace semi {

  std::string_view to_string(ErrorCode code) noexcept {
    switch (code) {
      case ErrorCode::NotAssociative:
        return "NotAssociative";
      case ErrorCode::OutOfRangeEntry:
        return "OutOfRangeEntry";
      case ErrorCode::BadParams:
        return "BadParams";
      case ErrorCode::NotIdempotent:
        return "NotIdempotent";
      case ErrorCode::NotAHomomorphism:
        return "NotAHomomorphism";
      case ErrorCode::NotStronglyConnected:
        return "NotStronglyConnected";
      case ErrorCode::NotAConsolidation:
        return "NotAConsolidation";
      case ErrorCode::NotAnEquivalence:
        return "NotAnEquivalence";
      case ErrorCode::XiNotIso:
        return "XiNotIso";
      case ErrorCode::XiEndpointsWrong:
        return "XiEndpointsWrong";
      case ErrorCode::NotACongruence:
        return "NotACongruence";
      case ErrorCode::NotOrthodox:
        return "NotOrthodox";
      case ErrorCode::OracleRefutesMinimality:
        return "OracleRefutesMinimality";
      case ErrorCode::EnumerationTooLarge:
        return "EnumerationTooLarge";
      case ErrorCode::NotAnAct:
        return "NotAnAct";
      case ErrorCode::NotAnEnlargement:
        return "NotAnEnlargement";
      case ErrorCode::NotASubsemigroup:
        return "NotASubsemigroup";
      case ErrorCode::NoLocalUnits:
        return "NoLocalUnits";
      case ErrorCode::NotLocalIso:
        return "NotLocalIso";
      case ErrorCode::PipelineInvariantViolated:
        return "PipelineInvariantViolated";
      case ErrorCode::WitnessNotFound:
        return "WitnessNotFound";
      case ErrorCode::UnknownPredicate:
        return "UnknownPredicate";
      case ErrorCode::HypothesesFail:
        return "HypothesesFail";
      case ErrorCode::NoMaximum:
        return "NoMaximum";
      case ErrorCode::ParseError:
        return "ParseError";
      case ErrorCode::UsageError:
        return "UsageError";
    }
    return "Unknown";
  }

}  // namespace semi
