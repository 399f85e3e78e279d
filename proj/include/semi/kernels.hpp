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

// The exhaustive inner loops over multiplication tables. Each kernel has a
// plain serial version, kept as the reference the tests compare against, and
// an OpenMP version used by the library. Both must return identical results:
// whenever a kernel reports a witness it is the lexicographically least one.
//
// Tables are row-major: table[x * n + y] = x * y.

#ifndef SEMI_KERNELS_HPP_
#define SEMI_KERNELS_HPP_

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "bitmatrix.hpp"

namespace semi::kernels {

  using Triple = std::array<std::uint32_t, 3>;
  using Pair   = std::array<std::uint32_t, 2>;

  namespace serial {
    std::optional<Triple> find_associativity_violation(
        std::span<std::uint32_t const> table,
        std::size_t                    n);

    // Least (x, a, y) with a drawn from middles and (xa)y != x(ay). Checking
    // a generating set of middles decides associativity of the whole table.
    std::optional<Triple> find_associativity_violation(
        std::span<std::uint32_t const> table,
        std::size_t                    n,
        std::span<std::uint32_t const> middles);

    // Row x holds {x} u xS.
    BitMatrix principal_right_ideals(std::span<std::uint32_t const> table,
                                     std::size_t                    n);
    // Row x holds {x} u Sx.
    BitMatrix principal_left_ideals(std::span<std::uint32_t const> table,
                                    std::size_t                    n);
    // Row x holds the union of the right ideals of the members of L(x).
    BitMatrix principal_two_sided_ideals(BitMatrix const& left,
                                         BitMatrix const& right);

    // Membership flags of {ab : a in lhs, b in rhs}.
    std::vector<std::uint8_t> set_product(std::span<std::uint32_t const> table,
                                          std::size_t                    n,
                                          std::span<std::uint8_t const>  lhs,
                                          std::span<std::uint8_t const>  rhs);

    // Least (a, x) with a related to rep[a] but xa, x rep[a] (or ax, rep[a] x)
    // in different blocks; rep maps every element to its block's least member.
    std::optional<Pair> find_compatibility_violation(
        std::span<std::uint32_t const> table,
        std::size_t                    n,
        std::span<std::uint32_t const> rep);
  }  // namespace serial

  namespace parallel {
    std::optional<Triple> find_associativity_violation(
        std::span<std::uint32_t const> table,
        std::size_t                    n);
    std::optional<Triple> find_associativity_violation(
        std::span<std::uint32_t const> table,
        std::size_t                    n,
        std::span<std::uint32_t const> middles);
    BitMatrix principal_right_ideals(std::span<std::uint32_t const> table,
                                     std::size_t                    n);
    BitMatrix principal_left_ideals(std::span<std::uint32_t const> table,
                                    std::size_t                    n);
    BitMatrix principal_two_sided_ideals(BitMatrix const& left,
                                         BitMatrix const& right);
    std::vector<std::uint8_t> set_product(std::span<std::uint32_t const> table,
                                          std::size_t                    n,
                                          std::span<std::uint8_t const>  lhs,
                                          std::span<std::uint8_t const>  rhs);
    std::optional<Pair> find_compatibility_violation(
        std::span<std::uint32_t const> table,
        std::size_t                    n,
        std::span<std::uint32_t const> rep);

    // Fills out[x * n + y] = fn(x, y); rows are distributed over threads, so
    // fn must be safe to call concurrently.
    template <typename Fn>
    void fill_table(std::size_t n, std::vector<std::uint32_t>& out, Fn&& fn) {
      out.assign(n * n, 0);
      auto const rows = static_cast<std::int64_t>(n);
#pragma omp parallel for schedule(static)
      for (std::int64_t x = 0; x < rows; ++x) {
        for (std::size_t y = 0; y < n; ++y) {
          out[static_cast<std::size_t>(x) * n + y]
              = fn(static_cast<std::uint32_t>(x), static_cast<std::uint32_t>(y));
        }
      }
    }
  }  // namespace parallel

  // A set whose left-normed products (((g1 g2) g3) ...) reach every element
  // of the table, chosen greedily in ascending order. Associativity is not
  // assumed.
  std::vector<std::uint32_t> magma_generators(std::span<std::uint32_t const> table,
                                              std::size_t                    n);

  int max_threads() noexcept;

}  // namespace semi::kernels

#endif  // SEMI_KERNELS_HPP_
