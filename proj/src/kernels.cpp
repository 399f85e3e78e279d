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

#include "semi/kernels.hpp"

#include <atomic>
#include <limits>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace semi::kernels {

  namespace {
    constexpr auto kNone = std::numeric_limits<std::uint32_t>::max();

    // Least (y, z) violating associativity for a fixed x, if any.
    std::optional<Pair> row_violation(std::span<std::uint32_t const> table,
                                      std::size_t                    n,
                                      std::uint32_t                  x) {
      for (std::uint32_t y = 0; y < n; ++y) {
        auto const xy = table[x * n + y];
        for (std::uint32_t z = 0; z < n; ++z) {
          if (table[xy * n + z] != table[x * n + table[y * n + z]]) {
            return Pair{y, z};
          }
        }
      }
      return std::nullopt;
    }

    // Least (a index, y) with (xa)y != x(ay) for a fixed x.
    std::optional<Pair> middle_violation(std::span<std::uint32_t const> table,
                                         std::size_t                    n,
                                         std::span<std::uint32_t const> middles,
                                         std::uint32_t                  x) {
      for (std::uint32_t i = 0; i < middles.size(); ++i) {
        auto const a  = middles[i];
        auto const xa = table[x * n + a];
        for (std::uint32_t y = 0; y < n; ++y) {
          if (table[xa * n + y] != table[x * n + table[a * n + y]]) {
            return Pair{i, y};
          }
        }
      }
      return std::nullopt;
    }

    void add_right_ideal_row(std::span<std::uint32_t const> table,
                             std::size_t                    n,
                             std::size_t                    x,
                             BitMatrix&                     out) {
      out.set(x, x);
      for (std::size_t s = 0; s < n; ++s) {
        out.set(x, table[x * n + s]);
      }
    }

    void add_left_ideal_row(std::span<std::uint32_t const> table,
                            std::size_t                    n,
                            std::size_t                    x,
                            BitMatrix&                     out) {
      out.set(x, x);
      for (std::size_t s = 0; s < n; ++s) {
        out.set(x, table[s * n + x]);
      }
    }

    void add_two_sided_row(BitMatrix const& left,
                           BitMatrix const& right,
                           std::size_t      x,
                           BitMatrix&       out) {
      auto dst = out.row(x);
      for (std::size_t y = 0; y < left.cols(); ++y) {
        if (left.test(x, y)) {
          auto src = right.row(y);
          for (std::size_t w = 0; w < dst.size(); ++w) {
            dst[w] |= src[w];
          }
        }
      }
    }

    std::optional<std::uint32_t> element_violation(
        std::span<std::uint32_t const> table,
        std::size_t                    n,
        std::span<std::uint32_t const> rep,
        std::uint32_t                  a) {
      auto const b = rep[a];
      if (a == b) {
        return std::nullopt;
      }
      for (std::uint32_t x = 0; x < n; ++x) {
        if (rep[table[x * n + a]] != rep[table[x * n + b]]
            || rep[table[a * n + x]] != rep[table[b * n + x]]) {
          return x;
        }
      }
      return std::nullopt;
    }
  }  // namespace

  std::vector<std::uint32_t> magma_generators(std::span<std::uint32_t const> table,
                                              std::size_t                    n) {
    std::vector<std::uint8_t>  reached(n, 0);
    std::vector<std::uint32_t> members;
    std::vector<std::uint32_t> gens;
    std::vector<std::uint32_t> queue;
    auto reach = [&](std::uint32_t y) {
      if (reached[y] == 0) {
        reached[y] = 1;
        members.push_back(y);
        queue.push_back(y);
      }
    };
    for (std::uint32_t g = 0; g < n; ++g) {
      if (reached[g] != 0) {
        continue;
      }
      gens.push_back(g);
      std::size_t const old = members.size();
      for (std::size_t i = 0; i < old; ++i) {
        reach(table[members[i] * n + g]);
      }
      reach(g);
      while (!queue.empty()) {
        auto const y = queue.back();
        queue.pop_back();
        for (auto h : gens) {
          reach(table[y * n + h]);
        }
      }
    }
    return gens;
  }

  int max_threads() noexcept {
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
  }

  ////////////////////////////////////////////////////////////////////////
  // serial
  ////////////////////////////////////////////////////////////////////////

  namespace serial {
    std::optional<Triple> find_associativity_violation(
        std::span<std::uint32_t const> table,
        std::size_t                    n) {
      for (std::uint32_t x = 0; x < n; ++x) {
        if (auto yz = row_violation(table, n, x)) {
          return Triple{x, (*yz)[0], (*yz)[1]};
        }
      }
      return std::nullopt;
    }

    std::optional<Triple> find_associativity_violation(
        std::span<std::uint32_t const> table,
        std::size_t                    n,
        std::span<std::uint32_t const> middles) {
      for (std::uint32_t x = 0; x < n; ++x) {
        if (auto ay = middle_violation(table, n, middles, x)) {
          return Triple{x, middles[(*ay)[0]], (*ay)[1]};
        }
      }
      return std::nullopt;
    }

    BitMatrix principal_right_ideals(std::span<std::uint32_t const> table,
                                     std::size_t                    n) {
      BitMatrix out(n, n);
      for (std::size_t x = 0; x < n; ++x) {
        add_right_ideal_row(table, n, x, out);
      }
      return out;
    }

    BitMatrix principal_left_ideals(std::span<std::uint32_t const> table,
                                    std::size_t                    n) {
      BitMatrix out(n, n);
      for (std::size_t x = 0; x < n; ++x) {
        add_left_ideal_row(table, n, x, out);
      }
      return out;
    }

    BitMatrix principal_two_sided_ideals(BitMatrix const& left,
                                         BitMatrix const& right) {
      BitMatrix out(left.rows(), left.cols());
      for (std::size_t x = 0; x < left.rows(); ++x) {
        add_two_sided_row(left, right, x, out);
      }
      return out;
    }

    std::vector<std::uint8_t> set_product(std::span<std::uint32_t const> table,
                                          std::size_t                    n,
                                          std::span<std::uint8_t const>  lhs,
                                          std::span<std::uint8_t const>  rhs) {
      std::vector<std::uint8_t> out(n, 0);
      for (std::size_t a = 0; a < n; ++a) {
        if (lhs[a] == 0) {
          continue;
        }
        for (std::size_t b = 0; b < n; ++b) {
          if (rhs[b] != 0) {
            out[table[a * n + b]] = 1;
          }
        }
      }
      return out;
    }

    std::optional<Pair> find_compatibility_violation(
        std::span<std::uint32_t const> table,
        std::size_t                    n,
        std::span<std::uint32_t const> rep) {
      for (std::uint32_t a = 0; a < n; ++a) {
        if (auto x = element_violation(table, n, rep, a)) {
          return Pair{a, *x};
        }
      }
      return std::nullopt;
    }
  }  // namespace serial

  ////////////////////////////////////////////////////////////////////////
  // parallel
  ////////////////////////////////////////////////////////////////////////

  namespace parallel {
    std::optional<Triple> find_associativity_violation(
        std::span<std::uint32_t const> table,
        std::size_t                    n) {
      // Rows above the best violating row found so far are skipped; the
      // final answer is the least violating row, as in the serial version.
      std::atomic<std::uint32_t> best{kNone};
      std::vector<Pair>          found(n, Pair{kNone, kNone});
      auto const                 rows = static_cast<std::int64_t>(n);
#pragma omp parallel for schedule(dynamic, 4)
      for (std::int64_t xi = 0; xi < rows; ++xi) {
        auto const x = static_cast<std::uint32_t>(xi);
        if (x > best.load(std::memory_order_relaxed)) {
          continue;
        }
        if (auto yz = row_violation(table, n, x)) {
          found[x]     = *yz;
          auto current = best.load();
          while (x < current && !best.compare_exchange_weak(current, x)) {
          }
        }
      }
      auto const x = best.load();
      if (x == kNone) {
        return std::nullopt;
      }
      return Triple{x, found[x][0], found[x][1]};
    }

    std::optional<Triple> find_associativity_violation(
        std::span<std::uint32_t const> table,
        std::size_t                    n,
        std::span<std::uint32_t const> middles) {
      std::atomic<std::uint32_t> best{kNone};
      std::vector<Pair>          found(n, Pair{kNone, kNone});
      auto const                 rows = static_cast<std::int64_t>(n);
#pragma omp parallel for schedule(dynamic, 4)
      for (std::int64_t xi = 0; xi < rows; ++xi) {
        auto const x = static_cast<std::uint32_t>(xi);
        if (x > best.load(std::memory_order_relaxed)) {
          continue;
        }
        if (auto ay = middle_violation(table, n, middles, x)) {
          found[x]     = *ay;
          auto current = best.load();
          while (x < current && !best.compare_exchange_weak(current, x)) {
          }
        }
      }
      auto const x = best.load();
      if (x == kNone) {
        return std::nullopt;
      }
      return Triple{x, middles[found[x][0]], found[x][1]};
    }

    BitMatrix principal_right_ideals(std::span<std::uint32_t const> table,
                                     std::size_t                    n) {
      BitMatrix  out(n, n);
      auto const rows = static_cast<std::int64_t>(n);
#pragma omp parallel for schedule(static)
      for (std::int64_t x = 0; x < rows; ++x) {
        add_right_ideal_row(table, n, static_cast<std::size_t>(x), out);
      }
      return out;
    }

    BitMatrix principal_left_ideals(std::span<std::uint32_t const> table,
                                    std::size_t                    n) {
      BitMatrix  out(n, n);
      auto const rows = static_cast<std::int64_t>(n);
#pragma omp parallel for schedule(static)
      for (std::int64_t x = 0; x < rows; ++x) {
        add_left_ideal_row(table, n, static_cast<std::size_t>(x), out);
      }
      return out;
    }

    BitMatrix principal_two_sided_ideals(BitMatrix const& left,
                                         BitMatrix const& right) {
      BitMatrix  out(left.rows(), left.cols());
      auto const rows = static_cast<std::int64_t>(left.rows());
#pragma omp parallel for schedule(dynamic, 8)
      for (std::int64_t x = 0; x < rows; ++x) {
        add_two_sided_row(left, right, static_cast<std::size_t>(x), out);
      }
      return out;
    }

    std::vector<std::uint8_t> set_product(std::span<std::uint32_t const> table,
                                          std::size_t                    n,
                                          std::span<std::uint8_t const>  lhs,
                                          std::span<std::uint8_t const>  rhs) {
      // Each thread marks products in its own buffer; buffers are or-ed at the end.
      std::vector<std::uint8_t> out(n, 0);
      std::vector<std::uint32_t> left_members;
      std::vector<std::uint32_t> right_members;
      for (std::uint32_t a = 0; a < n; ++a) {
        if (lhs[a] != 0) {
          left_members.push_back(a);
        }
        if (rhs[a] != 0) {
          right_members.push_back(a);
        }
      }
      auto const rows = static_cast<std::int64_t>(left_members.size());
#pragma omp parallel
      {
        std::vector<std::uint8_t> local(n, 0);
#pragma omp for schedule(static) nowait
        for (std::int64_t i = 0; i < rows; ++i) {
          auto const a = left_members[static_cast<std::size_t>(i)];
          for (auto b : right_members) {
            local[table[a * n + b]] = 1;
          }
        }
#pragma omp critical
        for (std::size_t c = 0; c < n; ++c) {
          out[c] |= local[c];
        }
      }
      return out;
    }

    std::optional<Pair> find_compatibility_violation(
        std::span<std::uint32_t const> table,
        std::size_t                    n,
        std::span<std::uint32_t const> rep) {
      std::atomic<std::uint32_t> best{kNone};
      std::vector<std::uint32_t> found(n, kNone);
      auto const                 rows = static_cast<std::int64_t>(n);
#pragma omp parallel for schedule(dynamic, 8)
      for (std::int64_t ai = 0; ai < rows; ++ai) {
        auto const a = static_cast<std::uint32_t>(ai);
        if (a > best.load(std::memory_order_relaxed)) {
          continue;
        }
        if (auto x = element_violation(table, n, rep, a)) {
          found[a]     = *x;
          auto current = best.load();
          while (a < current && !best.compare_exchange_weak(current, a)) {
          }
        }
      }
      auto const a = best.load();
      if (a == kNone) {
        return std::nullopt;
      }
      return Pair{a, found[a]};
    }
  }  // namespace parallel

}  // namespace semi::kernels
