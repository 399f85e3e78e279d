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

// The bipartite category built from an equivalence F : A -> B, and the
// consolidation obtained on it by extending consolidations of A and B
// through a single isomorphism crossing between the two parts.

#ifndef SEMI_COLLAGE_HPP_
#define SEMI_COLLAGE_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "category.hpp"

namespace semi {

  enum class Part : std::uint8_t { A, B };

  // Parts of the left and right objects of an arrow. Types multiply as a
  // rectangular band: the type of xy is (left part of x, right part of y).
  struct ArrowType {
    Part left;
    Part right;
    bool operator==(ArrowType const&) const = default;
  };

  std::string to_string(ArrowType t);

  struct Bipartite {
    FiniteCategory a;
    FiniteCategory b;
    FiniteCategory category;

    // Objects [0, a_objects) are the objects of A, in order; object
    // a_objects + v is object v of B.
    std::size_t a_objects = 0;

    std::vector<ArrowType> types;
    // For AA arrows the A arrow they copy; for all other types a B arrow:
    // BB arrows copy it, an AB arrow with left a and right b carries
    // y : F a -> b, and a BA arrow with left b and right a carries y : b -> F a.
    std::vector<Arrow> payload;
    std::vector<Arrow> from_a;  // arrow of A -> AA arrow
    std::vector<Arrow> from_b;  // arrow of B -> BB arrow

    [[nodiscard]] bool in_a(Obj u) const {
      return u < a_objects;
    }
    [[nodiscard]] Obj b_object(Obj v) const {
      return static_cast<Obj>(a_objects + v);
    }
  };

  // Throws NotAnEquivalence if F is not an equivalence. The result is
  // checked: A and B are full subcategories on the two parts and every
  // object is isomorphic to one in the other part (PipelineInvariantViolated
  // otherwise).
  Bipartite collage(Functor const& F);

  // The least isomorphism with right object i0 (an A object) and left object
  // in B.
  Arrow choose_xi(Bipartite const& C, Obj i0 = 0);

  // r(e, f) is p(e, f) on A, q(e, f) on B, q(e, j0) xi p(i0, f) from B to A
  // and p(e, i0) xi^-1 q(j0, f) from A to B, where xi has left object j0 in
  // B and right object i0 in A. Throws XiEndpointsWrong, XiNotIso,
  // NotAConsolidation (p or q on the wrong category), and
  // PipelineInvariantViolated if the cancellation identities below fail.
  Consolidation natural_extension(Bipartite const&     C,
                                  Consolidation const& p,
                                  Consolidation const& q,
                                  Arrow                xi);

  // Checks, in the semigroup C^r, for every pair of arrows of the given types:
  //   AB o xi o xi^-1 o AA = AB o AA,   AA o xi o xi^-1 o BA = AA o BA,
  //   AA o xi^-1 o BB = AA o BB,        BB o xi o AA = BB o AA.
  // Returns an empty string, or the first failing identity.
  std::string extension_identity_defect(Bipartite const&     C,
                                        Consolidation const& r,
                                        Arrow                xi);

}  // namespace semi

#endif  // SEMI_COLLAGE_HPP_
