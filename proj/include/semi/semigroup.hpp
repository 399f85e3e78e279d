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

// Finite semigroups given by multiplication tables, and the first-order
// structure computed from them: idempotents, Green's relations, regularity,
// inverses, local submonoids and the natural partial order.
//
// Elements are the dense identifiers 0, ..., n - 1. A FiniteSemigroup is
// immutable once validated; derived data (idempotents, Green's relations) is
// computed on first use and then shared, so values may be copied freely and
// used from several threads.

#ifndef SEMI_SEMIGROUP_HPP_
#define SEMI_SEMIGROUP_HPP_

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "bitmatrix.hpp"

namespace semi {

  using Elem = std::uint32_t;

  // A partition of {0, ..., n - 1}. Classes are sorted and listed in order of
  // their least member; class_of[x] is the index of the class containing x.
  struct Partition {
    std::vector<std::uint32_t>     class_of;
    std::vector<std::vector<Elem>> classes;

    // Canonicalises an arbitrary labelling: x and y share a class iff
    // labels[x] == labels[y].
    template <typename Label>
    static Partition from_labels(std::vector<Label> const& labels);

    [[nodiscard]] std::size_t number_of_classes() const noexcept {
      return classes.size();
    }
    [[nodiscard]] bool related(Elem x, Elem y) const {
      return class_of[x] == class_of[y];
    }
    bool operator==(Partition const&) const = default;
  };

  struct GreenData {
    Partition r_classes;
    Partition l_classes;
    Partition h_classes;
    Partition d_classes;  // join of R and L
    Partition j_classes;  // equality of principal two-sided ideals

    std::vector<std::uint8_t> regular;          // per element
    std::vector<std::uint8_t> d_class_regular;  // per D-class

    BitMatrix right_ideals;      // row x: {x} u xS
    BitMatrix left_ideals;       // row x: {x} u Sx
    BitMatrix two_sided_ideals;  // row x: S^1 x S^1
  };

  // How from_table verifies associativity. `generators` checks
  // (xa)y = x(ay) only for a in a generating set, which suffices because the
  // elements satisfying it are closed under products; it costs n^2 times the
  // number of generators instead of n^3.
  enum class AssociativityCheck { exhaustive, generators };

  class FiniteSemigroup {
   public:
    // The trivial semigroup.
    FiniteSemigroup();

    // Validates ranges and associativity. Throws Error with OutOfRangeEntry
    // or NotAssociative; the latter names a violating triple.
    static FiniteSemigroup from_table(
        std::size_t              n,
        std::vector<Elem>        table,
        std::vector<std::string> names = {},
        AssociativityCheck       check = AssociativityCheck::exhaustive);

    [[nodiscard]] std::size_t size() const noexcept;

    [[nodiscard]] Elem product(Elem x, Elem y) const noexcept {
      return _table[x * _n + y];
    }
    [[nodiscard]] Elem operator()(Elem x, Elem y) const noexcept {
      return product(x, y);
    }
    [[nodiscard]] std::span<Elem const> table() const noexcept {
      return {_table, _n * _n};
    }

    [[nodiscard]] std::vector<std::string> const& names() const noexcept;
    [[nodiscard]] std::string                     name(Elem x) const;

    // Ascending.
    [[nodiscard]] std::vector<Elem> const& idempotents() const;
    [[nodiscard]] bool                     is_idempotent(Elem x) const noexcept {
      return product(x, x) == x;
    }
    [[nodiscard]] GreenData const& green() const;

    // Two-sided identity, if any.
    [[nodiscard]] std::optional<Elem> identity() const;

    // Same size and same table; names are ignored.
    [[nodiscard]] bool same_table(FiniteSemigroup const& other) const noexcept;

   private:
    struct Impl;
    explicit FiniteSemigroup(std::shared_ptr<Impl const> impl);

    std::shared_ptr<Impl const> _impl;
    Elem const*                 _table = nullptr;
    std::size_t                 _n     = 0;
  };

  // A semigroup homomorphism, map[x] being the image of x.
  struct Homomorphism {
    FiniteSemigroup   source;
    FiniteSemigroup   target;
    std::vector<Elem> map;

    // Checks map[xy] = map[x] map[y] for all x, y; throws NotAHomomorphism.
    static Homomorphism make(FiniteSemigroup   source,
                             FiniteSemigroup   target,
                             std::vector<Elem> map);

    static Homomorphism identity(FiniteSemigroup const& S);

    [[nodiscard]] Elem operator()(Elem x) const {
      return map[x];
    }
    [[nodiscard]] bool              is_injective() const;
    [[nodiscard]] bool              is_surjective() const;
    [[nodiscard]] std::vector<Elem> image() const;  // ascending
  };

  // first then second.
  Homomorphism compose(Homomorphism const& first, Homomorphism const& second);

  ////////////////////////////////////////////////////////////////////////
  // Operations
  ////////////////////////////////////////////////////////////////////////

  std::vector<Elem> idempotents(FiniteSemigroup const& S);

  // Every s has idempotents e, f with es = s = sf.
  bool has_local_units(FiniteSemigroup const& S);

  // S^2 = S.
  bool is_factorizable(FiniteSemigroup const& S);

  GreenData const& green_data(FiniteSemigroup const& S);
  GreenData const& green_data(FiniteSemigroup&&) = delete;  // would dangle

  // Regularity straight from the definition (some t with sts = s), without
  // going through Green's relations.
  std::vector<std::uint8_t> regular_elements_direct(FiniteSemigroup const& S);

  bool is_regular(FiniteSemigroup const& S);

  // V(s) = { t : sts = s and tst = t }, ascending.
  std::vector<Elem> inverses(FiniteSemigroup const& S, Elem s);

  struct Subsemigroup {
    FiniteSemigroup   semigroup;
    std::vector<Elem> embedding;  // ascending ids in the parent
  };

  // eSe with the induced product; e is its identity. Throws NotIdempotent.
  Subsemigroup local_submonoid(FiniteSemigroup const& S, Elem e);

  // The subsemigroup on the given elements; throws NotASubsemigroup if the
  // set is not closed (or empty).
  Subsemigroup subsemigroup(FiniteSemigroup const& S, std::vector<Elem> elements);

  // Ascending elements of the subsemigroup generated by gens.
  std::vector<Elem> generated_by(FiniteSemigroup const&  S,
                                 std::span<Elem const> gens);

  // Entry (a, b) is set iff a <= b, i.e. a = fb = bg for idempotents f, g.
  BitMatrix natural_partial_order(FiniteSemigroup const& S);

  // A bijective homomorphism S -> T, or nothing.
  std::optional<Homomorphism> are_isomorphic(FiniteSemigroup const& S,
                                             FiniteSemigroup const& T);

  // The lexicographically least multiplication table over all relabellings
  // that keep elements sorted by an isomorphism-invariant signature. Equal
  // outputs iff isomorphic. Throws EnumerationTooLarge past the guard.
  std::vector<Elem> canonical_table(FiniteSemigroup const& S,
                                    std::size_t            guard = 2'000'000);

  // Index and period of the monogenic subsemigroup generated by x.
  std::pair<std::size_t, std::size_t> index_and_period(FiniteSemigroup const& S,
                                                       Elem                   x);

  ////////////////////////////////////////////////////////////////////////
  // Partition::from_labels
  ////////////////////////////////////////////////////////////////////////

  template <typename Label>
  Partition Partition::from_labels(std::vector<Label> const& labels) {
    Partition           out;
    std::size_t const   n = labels.size();
    out.class_of.assign(n, 0);
    std::vector<Label>  seen;
    for (std::size_t x = 0; x < n; ++x) {
      std::size_t c = 0;
      for (; c < seen.size(); ++c) {
        if (seen[c] == labels[x]) {
          break;
        }
      }
      if (c == seen.size()) {
        seen.push_back(labels[x]);
        out.classes.emplace_back();
      }
      out.class_of[x] = static_cast<std::uint32_t>(c);
      out.classes[c].push_back(static_cast<Elem>(x));
    }
    return out;
  }

}  // namespace semi

#endif  // SEMI_SEMIGROUP_HPP_
