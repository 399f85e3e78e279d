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

// Morita equivalence of finite semigroups with local units: enlargements,
// local isomorphisms, the equivalence decision through Cauchy completions,
// and constructions passing between the different descriptions.
//
// A subsemigroup of R is given by its ascending element list in R.

#ifndef SEMI_MORITA_HPP_
#define SEMI_MORITA_HPP_

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "category.hpp"
#include "semigroup.hpp"

namespace semi {

  // R is an enlargement of S' when S' = S'RS' and R = RS'R.
  struct EnlargementCheck {
    bool                inner = false;  // S'RS' is inside S'
    bool                outer = false;  // RS'R is all of R
    std::optional<Elem> inner_witness;  // least element of S'RS' outside S'
    std::optional<Elem> outer_witness;  // least element of R outside RS'R

    [[nodiscard]] bool holds() const noexcept {
      return inner && outer;
    }
  };

  // Throws NotASubsemigroup, or NoLocalUnits if R or S' lacks local units.
  EnlargementCheck check_enlargement(FiniteSemigroup const& R,
                                     std::span<Elem const>  sub);
  bool is_enlargement(FiniteSemigroup const& R, std::span<Elem const> sub);

  // For an idempotent e of R: e = usv with s = ab in S', x = e(ua) and
  // x' = (bv)e, so that xx' = e and x'x = f lies in S'.
  struct DWitness {
    Elem e, f, x, x_inverse;
    Elem u, s, v, a, b;
  };

  // One witness per idempotent of R, ascending in e, each with the least
  // (u, s, v) and then the least (a, b). Throws NotAnEnlargement, or
  // WitnessNotFound if the construction breaks down.
  std::vector<DWitness> d_transfer(FiniteSemigroup const& R, std::span<Elem const> sub);

  struct LocalIsoReport {
    struct PairFailure {
      Elem        e;
      Elem        f;
      std::string reason;
    };
    // eSf not carried bijectively onto theta(e) T theta(f).
    std::vector<PairFailure> local_bijection_failures;
    // Image idempotents with no idempotent preimage.
    std::vector<Elem> idempotent_lift_failures;
    // Target idempotents D-related to no image idempotent.
    std::vector<Elem> d_density_failures;

    [[nodiscard]] bool holds() const noexcept {
      return local_bijection_failures.empty() && idempotent_lift_failures.empty()
             && d_density_failures.empty();
    }
  };

  LocalIsoReport check_local_isomorphism(Homomorphism const& theta);
  bool           is_local_isomorphism(Homomorphism const& theta);

  // Whether the target of theta is an enlargement of its image; throws
  // NotLocalIso when theta is not a local isomorphism.
  bool enlargement_of_image(Homomorphism const& theta);

  // The Cauchy completions of S and T and an equivalence between them.
  struct MoritaWitness {
    CauchyCompletion source;
    CauchyCompletion target;
    Functor          equivalence;
  };

  // Decides whether C(S) and C(T) are equivalent. Throws NoLocalUnits.
  std::optional<MoritaWitness> morita_equivalent(FiniteSemigroup const& S,
                                                 FiniteSemigroup const& T);

  struct JointEnlargement {
    FiniteSemigroup   R;
    Homomorphism      embed_s;
    Homomorphism      embed_t;
    std::vector<Elem> s_image;  // ascending
    std::vector<Elem> t_image;  // ascending
    std::size_t       consolidated_size = 0;
  };

  // Glues C(S) and C(T) along the equivalence, consolidates, and divides by
  // the congruence generated by identifying arrows with equal middles on
  // each side. Every stage is checked; failures throw
  // PipelineInvariantViolated naming the stage. Throws EnumerationTooLarge
  // when the glued category would exceed max_arrows.
  JointEnlargement joint_enlargement(MoritaWitness const& witness,
                                     std::size_t          max_arrows = 5000);

  // From R enlarging both S' and T': elements x_e, x_e' per idempotent e of
  // S' with x_e' x_e = e and x_e x_e' in T', the consolidation
  // q(i, j) = x_i' x_j on C(S') and psi(i, a, j) = x_i a x_j' into T'.
  struct ConsolidationWitness {
    CauchyCompletion      cauchy;   // of S'
    ConsolidatedSemigroup consolidated;
    FiniteSemigroup       T;        // T' on its own
    Homomorphism          psi;      // consolidated -> T
    std::vector<Elem>     image;    // of psi, ascending, in T
    std::vector<Elem>     x;        // per object of cauchy, in R
    std::vector<Elem>     x_inverse;
  };

  // Throws NotAnEnlargement, WitnessNotFound, or PipelineInvariantViolated
  // when psi fails to be a homomorphism or a local isomorphism, or T' is not
  // an enlargement of the image.
  ConsolidationWitness consolidation_from_enlargement(FiniteSemigroup const& R,
                                                      std::span<Elem const>  s_sub,
                                                      std::span<Elem const>  t_sub);

  struct LocalIsoEquivalence {
    CauchyCompletion target;   // C(T)
    Functor          functor;  // C(S) -> C(T), e |-> psi(e, e, e)
    bool             is_equivalence      = false;
    bool             agrees_with_decision = false;
  };

  // Given a consolidation on C(S) and a local isomorphism
  // psi : C(S)^q -> T, the functor (e, s, f) |-> (psi(e), psi(e, s, f), psi(f))
  // and whether it is an equivalence. Throws NotLocalIso.
  LocalIsoEquivalence equivalence_from_local_isomorphism(
      CauchyCompletion const&      cauchy,
      ConsolidatedSemigroup const& consolidated,
      Homomorphism const&          psi);

}  // namespace semi

#endif  // SEMI_MORITA_HPP_
