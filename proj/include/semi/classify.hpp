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

// Structural predicates, their local versions, and the invariants that
// Morita equivalent semigroups with local units share. Also the two
// constructive classifications: completely simple semigroups are exactly
// those equivalent to a group, and the semilattice pipeline that turns a
// suitable S into a semilattice it is equivalent to.

#ifndef SEMI_CLASSIFY_HPP_
#define SEMI_CLASSIFY_HPP_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "category.hpp"
#include "congruence.hpp"
#include "morita.hpp"
#include "semigroup.hpp"

namespace semi {

  // group, inverse, semilattice, orthodox, l_unipotent, e_solid,
  // union_of_groups, completely_simple.
  std::vector<std::string> predicate_names();

  // Throws UnknownPredicate.
  bool structural_predicate(FiniteSemigroup const& S, std::string_view name);

  // The predicate holds for every local submonoid eSe.
  bool locally(FiniteSemigroup const& S, std::string_view name);

  // J-classes ordered by inclusion of principal two-sided ideals.
  struct IdealPoset {
    std::vector<Elem> representatives;  // least member of each J-class
    BitMatrix         order;            // (i, j) set iff class i <= class j
    bool              is_meet_semilattice = false;

    [[nodiscard]] std::size_t size() const noexcept {
      return representatives.size();
    }
  };

  IdealPoset principal_ideal_poset(FiniteSemigroup const& S);

  // An order isomorphism between the two posets, as a map on classes.
  std::optional<std::vector<std::size_t>> order_isomorphism(IdealPoset const& a,
                                                            IdealPoset const& b);

  struct InvariantsReport {
    bool        is_regular            = false;
    std::size_t regular_d_class_count = 0;
    IdealPoset  principal_ideal_poset;
    // Canonical tables of the local submonoids, one per isomorphism class,
    // sorted.
    std::vector<std::vector<Elem>> local_monoid_fingerprints;
  };

  InvariantsReport invariants_report(FiniteSemigroup const& S);

  // The first field in which the reports differ, described in words, or
  // nothing when they agree.
  std::optional<std::string> invariants_mismatch(InvariantsReport const& a,
                                                 InvariantsReport const& b);

  // Some idempotent e has S = SeS and eSe a group; the least such e.
  std::optional<Elem> group_corner(FiniteSemigroup const& S);

  struct CompletelySimpleReport {
    bool completely_simple = false;
    bool regular_locally_group = false;
    bool group_corner = false;       // some e with S = SeS and eSe a group
    bool equivalent_to_group = false;  // to some local submonoid that is a group
    std::optional<Elem> corner;
    std::optional<Elem> group_idempotent;  // witness for equivalent_to_group

    [[nodiscard]] bool agree() const noexcept {
      return completely_simple == regular_locally_group
             && regular_locally_group == group_corner
             && group_corner == equivalent_to_group;
    }
  };

  // Throws NoLocalUnits.
  CompletelySimpleReport completely_simple_equiv(FiniteSemigroup const& S);

  // A group corner forces complete simplicity, local units or not.
  bool group_corner_implies_completely_simple(FiniteSemigroup const& S);

  struct SemilatticeConsolidation {
    CauchyCompletion      cauchy;
    ConsolidatedSemigroup consolidated;
  };

  // For S regular, locally a semilattice, with a meet semilattice of
  // principal ideals: q(e, f) is the maximum of eSf in the natural partial
  // order. Throws HypothesesFail, NoMaximum, or PipelineInvariantViolated
  // if the consolidated semigroup is not a normal band.
  SemilatticeConsolidation semilattice_consolidation(FiniteSemigroup const& S);

  struct SemilatticeWitness {
    SemilatticeConsolidation consolidation;
    Congruence               gamma;  // least congruence with an inverse quotient
    Quotient                 T;
    LocalIsoReport           projection_report;
    bool                     morita_cross_check = false;
  };

  // Throws HypothesesFail, or PipelineInvariantViolated when T is not a
  // semilattice, the projection is not a local isomorphism or the
  // equivalence decision disagrees.
  SemilatticeWitness semilattice_morita_witness(FiniteSemigroup const& S);

}  // namespace semi

#endif  // SEMI_CLASSIFY_HPP_
