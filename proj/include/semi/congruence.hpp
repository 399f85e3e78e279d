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

// Congruences on finite semigroups: generation from pairs, quotients,
// kernels of homomorphisms and the minimum inverse congruence of an
// orthodox semigroup.

#ifndef SEMI_CONGRUENCE_HPP_
#define SEMI_CONGRUENCE_HPP_

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "semigroup.hpp"

namespace semi {

  class Congruence {
   public:
    // Checks compatibility with the multiplication; throws NotACongruence
    // naming an element a, its class representative b and a multiplier x
    // that separate them.
    template <typename Label>
    static Congruence from_labels(FiniteSemigroup S, std::vector<Label> const& labels);

    static Congruence equality(FiniteSemigroup S);
    static Congruence universal(FiniteSemigroup S);

    [[nodiscard]] FiniteSemigroup const& semigroup() const noexcept {
      return _S;
    }
    // Least member of the class of x.
    [[nodiscard]] Elem representative(Elem x) const {
      return _rep[x];
    }
    [[nodiscard]] std::vector<Elem> const& representatives() const noexcept {
      return _rep;
    }
    [[nodiscard]] bool related(Elem x, Elem y) const {
      return _rep[x] == _rep[y];
    }
    [[nodiscard]] Partition   partition() const;
    [[nodiscard]] std::size_t number_of_classes() const;

    // Every pair related here is related in other.
    [[nodiscard]] bool contained_in(Congruence const& other) const;

    bool operator==(Congruence const& other) const {
      return _rep == other._rep;
    }

   private:
    Congruence(FiniteSemigroup S, std::vector<Elem> rep);
    static Congruence from_representatives(FiniteSemigroup S, std::vector<Elem> rep);

    FiniteSemigroup   _S;
    std::vector<Elem> _rep;
  };

  // The least congruence containing the pairs.
  Congruence congruence_closure(FiniteSemigroup const&                 S,
                                std::span<std::pair<Elem, Elem> const> pairs);

  // Elements of the quotient are the classes, listed by least member;
  // class_representative[i] is that member.
  struct Quotient {
    FiniteSemigroup   semigroup;
    Homomorphism      projection;
    std::vector<Elem> class_representative;
  };

  Quotient quotient(Congruence const& rho);

  Congruence kernel(Homomorphism const& h);

  // Every congruence on S, in lexicographic order of their class labels.
  // Throws EnumerationTooLarge when |S| > max_size.
  std::vector<Congruence> all_congruences(FiniteSemigroup const& S,
                                          std::size_t            max_size = 10);

  // Every element of S has exactly one inverse.
  bool has_unique_inverses(FiniteSemigroup const& S);

  // For a regular semigroup whose idempotents form a subsemigroup: a ~ b iff
  // a and b have the same inverses. The result is checked to be a congruence
  // with an inverse quotient, and when |S| <= minimality_limit to lie inside
  // every congruence with an inverse quotient. Throws NotOrthodox,
  // PipelineInvariantViolated or OracleRefutesMinimality.
  Congruence min_inverse_congruence(FiniteSemigroup const& S,
                                    std::size_t            minimality_limit = 8);

  // rho is contained in every congruence on S with an inverse quotient.
  // Enumerates all congruences; see all_congruences for the size limit.
  bool is_below_every_inverse_congruence(Congruence const& rho,
                                         std::size_t       max_size = 10);

  ////////////////////////////////////////////////////////////////////////
  // Congruence::from_labels
  ////////////////////////////////////////////////////////////////////////

  template <typename Label>
  Congruence Congruence::from_labels(FiniteSemigroup S, std::vector<Label> const& labels) {
    Partition const   p = Partition::from_labels(labels);
    std::vector<Elem> rep(labels.size());
    for (auto const& cls : p.classes) {
      for (Elem x : cls) {
        rep[x] = cls.front();
      }
    }
    return from_representatives(std::move(S), std::move(rep));
  }

}  // namespace semi

#endif  // SEMI_CONGRUENCE_HPP_
