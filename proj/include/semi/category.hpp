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

// Finite categories, the Cauchy completion of a finite semigroup,
// consolidations and the semigroups they produce, skeletons and the
// equivalence decision.
//
// Arrows are dense identifiers. An arrow x has a left object and a right
// object, and compose(x, y) is defined exactly when right(x) == left(y); the
// result has the left object of x and the right object of y. In the Cauchy
// completion the arrow (e, s, f) has left object e and right object f, and
// (e, a, f)(f, b, g) = (e, ab, g).

#ifndef SEMI_CATEGORY_HPP_
#define SEMI_CATEGORY_HPP_

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "semigroup.hpp"

namespace semi {

  using Obj   = std::uint32_t;
  using Arrow = std::uint32_t;

  inline constexpr Arrow kNoArrow = static_cast<Arrow>(-1);

  class FiniteCategory {
   public:
    // The category with no objects.
    FiniteCategory();

    // compose(x, y) is called once for every pair with right(x) == left(y).
    // With validate set, endpoints of composites, identity laws and
    // associativity are checked and BadParams is thrown on failure; callers
    // whose composition is inherited from a semigroup may skip the check.
    static FiniteCategory make(std::size_t                                 objects,
                               std::vector<Obj>                            left,
                               std::vector<Obj>                            right,
                               std::vector<Arrow>                          identities,
                               std::function<Arrow(Arrow, Arrow)> const&   compose,
                               std::vector<std::string>                    labels   = {},
                               bool                                        validate = true);

    [[nodiscard]] std::size_t number_of_objects() const noexcept;
    [[nodiscard]] std::size_t number_of_arrows() const noexcept;

    [[nodiscard]] Obj   left(Arrow x) const;
    [[nodiscard]] Obj   right(Arrow x) const;
    [[nodiscard]] Arrow identity(Obj u) const;
    [[nodiscard]] bool  is_identity(Arrow x) const;

    // kNoArrow when right(x) != left(y).
    [[nodiscard]] Arrow compose(Arrow x, Arrow y) const;

    // Arrows with left object u and right object v, ascending.
    [[nodiscard]] std::span<Arrow const> hom(Obj u, Obj v) const;
    // Arrows with left object u, ascending.
    [[nodiscard]] std::span<Arrow const> out(Obj u) const;

    [[nodiscard]] std::string label(Arrow x) const;

    // Re-runs the checks of make(validate = true).
    void validate() const;

    // The same object, not merely equal contents.
    [[nodiscard]] bool same(FiniteCategory const& other) const noexcept {
      return _impl == other._impl;
    }

   private:
    struct Impl;
    explicit FiniteCategory(std::shared_ptr<Impl const> impl);
    std::shared_ptr<Impl const> _impl;
  };

  // The two-sided inverse of x, if x is an isomorphism (least if several,
  // although inverses are unique).
  Arrow inverse(FiniteCategory const& C, Arrow x);

  // The least isomorphism with left object u and right object v, or kNoArrow.
  Arrow least_isomorphism(FiniteCategory const& C, Obj u, Obj v);

  // Every ordered pair of objects has an arrow between them.
  bool is_strongly_connected(FiniteCategory const& C);

  // Every arrow x has some x' with x x' x = x and x' x x' = x'.
  bool is_regular_category(FiniteCategory const& C);

  // The full subcategory on the given objects (ascending, distinct).
  // arrow_in_parent[i] is arrow i of the subcategory as an arrow of C, and
  // arrow_of_parent inverts it (kNoArrow outside the subcategory).
  struct Subcategory {
    FiniteCategory     category;
    std::vector<Obj>   object_in_parent;
    std::vector<Arrow> arrow_in_parent;
    std::vector<Arrow> arrow_of_parent;
  };
  Subcategory full_subcategory(FiniteCategory const& C, std::vector<Obj> objects);

  ////////////////////////////////////////////////////////////////////////
  // Functors
  ////////////////////////////////////////////////////////////////////////

  struct Functor {
    FiniteCategory     source;
    FiniteCategory     target;
    std::vector<Obj>   objects;
    std::vector<Arrow> arrows;
  };

  // Empty when F preserves endpoints, identities and composition; otherwise
  // a description of the first failure found.
  std::string functor_defect(Functor const& F);

  bool is_full(Functor const& F);
  bool is_faithful(Functor const& F);
  bool is_essentially_surjective(Functor const& F);
  // Functor, full, faithful and essentially surjective.
  bool is_equivalence(Functor const& F);

  Functor identity_functor(FiniteCategory const& C);

  ////////////////////////////////////////////////////////////////////////
  // Cauchy completion
  ////////////////////////////////////////////////////////////////////////

  struct CauchyCompletion {
    FiniteSemigroup base;
    FiniteCategory  category;
    // Object u is the idempotent idempotent_of[u]; objects follow the
    // ascending order of idempotents.
    std::vector<Elem> idempotent_of;
    // Arrow x is the triple triples[x] = (e, s, f); triples are ascending.
    std::vector<std::array<Elem, 3>> triples;
    // Dense lookup: arrow_index[(u * n + s) * k + v], kNoArrow if absent.
    std::vector<Arrow> arrow_index;

    // Object of an idempotent, or nothing.
    [[nodiscard]] std::optional<Obj> object_of(Elem e) const;
    // Arrow (e, s, f), or kNoArrow when esf != s or e, f are not idempotent.
    [[nodiscard]] Arrow arrow(Elem e, Elem s, Elem f) const;
    [[nodiscard]] Elem middle(Arrow x) const {
      return triples[x][1];
    }
  };

  CauchyCompletion cauchy_completion(FiniteSemigroup const& S);

  ////////////////////////////////////////////////////////////////////////
  // Consolidations
  ////////////////////////////////////////////////////////////////////////

  struct Consolidation {
    FiniteCategory category;
    // entries[u * k + v] has left object u and right object v.
    std::vector<Arrow> entries;

    [[nodiscard]] Arrow operator()(Obj u, Obj v) const {
      return entries[u * category.number_of_objects() + v];
    }

    // Checks endpoints and that diagonal entries are identities; throws
    // NotAConsolidation.
    static Consolidation make(FiniteCategory C, std::vector<Arrow> entries);
  };

  // p(e, f) = (e, ef, f).
  Consolidation default_consolidation(CauchyCompletion const& C);

  // Element x of the semigroup is arrow x of the category, and
  // x o y = x p(right(x), left(y)) y.
  struct ConsolidatedSemigroup {
    FiniteSemigroup semigroup;
    Consolidation   consolidation;
  };

  // Throws NotStronglyConnected, or NotAConsolidation if p belongs to a
  // different category.
  ConsolidatedSemigroup consolidate(FiniteCategory const& C, Consolidation const& p);

  ////////////////////////////////////////////////////////////////////////
  // Skeletons and equivalence
  ////////////////////////////////////////////////////////////////////////

  struct Skeleton {
    // Full subcategory on the least object of each isomorphism class.
    Subcategory        sub;
    std::vector<Obj>   class_of;   // object of C -> object of the skeleton
    std::vector<Arrow> to_rep;     // u -> least iso with left u, right rep(u)
    std::vector<Arrow> from_rep;   // its inverse, left rep(u), right u

    [[nodiscard]] FiniteCategory const& category() const {
      return sub.category;
    }
    // The functor C -> skeleton sending x to from_rep[left] x to_rep[right].
    [[nodiscard]] Functor retraction(FiniteCategory const& C) const;
  };

  Skeleton skeleton(FiniteCategory const& C);

  // An isomorphism between two categories, or nothing.
  std::optional<Functor> find_isomorphism(FiniteCategory const& A,
                                          FiniteCategory const& B);

  // An equivalence C -> D, or nothing; decided by searching for an
  // isomorphism between skeletons.
  std::optional<Functor> are_equivalent(FiniteCategory const& C,
                                        FiniteCategory const& D);

}  // namespace semi

#endif  // SEMI_CATEGORY_HPP_
