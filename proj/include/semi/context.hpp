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

// Morita contexts (S, T, P, Q, <-,->, [-,-]) between finite semigroups, and
// the context carried by a joint enlargement.

#ifndef SEMI_CONTEXT_HPP_
#define SEMI_CONTEXT_HPP_

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "acts.hpp"

namespace semi {

  struct MoritaContext {
    FiniteSemigroup S;
    FiniteSemigroup T;
    FiniteBiact     P;              // S on the left, T on the right
    FiniteBiact     Q;              // T on the left, S on the right
    std::vector<Elem> pair_pq;      // <p, q> in S at p * |Q| + q
    std::vector<Elem> pair_qp;      // [q, p] in T at q * |P| + p

    [[nodiscard]] Elem pairing(Point p, Point q) const {
      return pair_pq[p * Q.size() + q];
    }
    [[nodiscard]] Elem bracket(Point q, Point p) const {
      return pair_qp[q * P.size() + p];
    }
  };

  // One flag per clause; failures names the first offending elements of
  // each failed clause.
  struct ContextReport {
    bool biacts        = false;  // actions valid and over the right semigroups
    bool balanced      = false;  // <pt, q> = <p, tq> and [qs, p] = [q, sp]
    bool equivariant   = false;  // <sp, q> = s<p, q>, <p, qs> = <p, q>s, dually
    bool left_exchange = false;  // <p, q>p' = p[q, p']
    bool right_exchange = false; // q<p, q'> = [q, p]q'
    bool local_units   = false;  // S and T
    bool unitary       = false;  // P and Q on both sides
    bool left_closed   = false;  // P and Q as left acts
    bool right_closed  = false;  // P and Q as right acts
    bool surjective    = false;  // both pairings
    // Only decided when both pairings are surjective: the pairings are
    // injective on tensor classes, making P (x) Q ~ S and Q (x) P ~ T.
    std::optional<bool> injective;
    std::vector<std::string> failures;

    [[nodiscard]] bool is_context() const noexcept {
      return biacts && balanced && equivariant && left_exchange && right_exchange;
    }
    [[nodiscard]] bool is_unitary_context() const noexcept {
      return is_context() && local_units && unitary && left_closed;
    }
    [[nodiscard]] bool ok() const noexcept {
      return failures.empty();
    }
  };

  // Right closedness and injectivity are only reported as failures when the
  // pairings are surjective, since they need not hold otherwise.
  ContextReport verify_context(MoritaContext const& ctx);

  struct EnlargementContext {
    MoritaContext     context;
    std::vector<Elem> p_elements;  // S'RT' in R, ascending
    std::vector<Elem> q_elements;  // T'RS' in R, ascending
    ContextReport     report;
  };

  // P = S'RT' and Q = T'RS' under multiplication in R, with <p, q> = pq and
  // [q, p] = qp. Throws NotAnEnlargement, or PipelineInvariantViolated when
  // the result is not a unitary context with bijective pairings.
  EnlargementContext context_from_enlargement(FiniteSemigroup const& R,
                                              std::span<Elem const>  s_sub,
                                              std::span<Elem const>  t_sub);

}  // namespace semi

#endif  // SEMI_CONTEXT_HPP_
