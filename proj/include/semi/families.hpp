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

// Constructors for the standard families. Element orderings:
//
//   trivial                      {0}
//   cyclic_group(k)              residues 0..k-1 under addition; 0 is the identity
//   semilattice_chain(k)         0..k-1 under min (so 0 is the zero)
//   left_zero(k), right_zero(k)  xy = x, resp. xy = y
//   rectangular_band(m, k)       (i, j) -> i * k + j, with (i, j)(k, l) = (i, l)
//   brandt_B2                    0, a, b, ab, ba  ->  0, 1, 2, 3, 4
//   rees_matrix(G, I, L, P)      (i, g, l) -> (i * |G| + g) * L + l, with
//                                (i, g, l)(j, h, m) = (i, g P[l][j] h, m)
//   rees_matrix_over_monoid(M, I, L)  as above with every P[l][j] = 1_M
//   null_semigroup(k)            every product is 0
//   nil_monoid                   1, a, 0  ->  0, 1, 2 with a^2 = 0

#ifndef SEMI_FAMILIES_HPP_
#define SEMI_FAMILIES_HPP_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "semigroup.hpp"

namespace semi {

  FiniteSemigroup trivial_semigroup();
  FiniteSemigroup cyclic_group(std::size_t k);
  FiniteSemigroup semilattice_chain(std::size_t k);
  FiniteSemigroup left_zero(std::size_t k);
  FiniteSemigroup right_zero(std::size_t k);
  FiniteSemigroup rectangular_band(std::size_t m, std::size_t k);
  FiniteSemigroup brandt_B2();
  FiniteSemigroup null_semigroup(std::size_t k);
  FiniteSemigroup nil_monoid();

  // sandwich[l][i] must be an element of G, which must be a group.
  FiniteSemigroup rees_matrix(FiniteSemigroup const&                G,
                              std::size_t                           I,
                              std::size_t                           L,
                              std::vector<std::vector<Elem>> const& sandwich);

  // M must be a monoid; the sandwich matrix is all identity.
  FiniteSemigroup rees_matrix_over_monoid(FiniteSemigroup const& M,
                                          std::size_t            I,
                                          std::size_t            L);

  FiniteSemigroup direct_product(FiniteSemigroup const& A, FiniteSemigroup const& B);

  // The semigroup of maps on {0, ..., deg - 1} generated under composition,
  // x * y meaning x first. Elements are numbered in order of discovery by a
  // breadth-first closure from the generators. Throws BadParams for ragged
  // or out-of-range generators and EnumerationTooLarge past max_size.
  FiniteSemigroup transformation_semigroup(std::vector<std::vector<Elem>> const& gens,
                                           std::size_t max_size = 512);

  // Command-line style dispatch: a family name and its parameters. For
  // rees_matrix the parameters are k I L followed by the L x I sandwich
  // entries (row by row) over cyclic_group(k); rees_matrix_over_monoid takes
  // a one-parameter family and its parameter (for example cyclic_group 2)
  // followed by I and L. Throws BadParams.
  FiniteSemigroup generate(std::string_view family,
                           std::vector<std::string> const& params);

  std::vector<std::string> family_names();

  struct NamedSemigroup {
    std::string     name;
    FiniteSemigroup semigroup;
  };

  // The eight small semigroups every sweep runs over: trivial, Z2, Z3, SL2,
  // SL3, LZ2, RB22 and B2.
  std::vector<NamedSemigroup> corpus();

}  // namespace semi

#endif  // SEMI_FAMILIES_HPP_
