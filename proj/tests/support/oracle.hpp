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

// Deliberately naive reference computations used to check the library. They
// only read multiplication tables through a plain function object and share
// no code with src/.

#ifndef SEMI_TESTS_ORACLE_HPP_
#define SEMI_TESTS_ORACLE_HPP_

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <set>
#include <vector>

namespace oracle {

  using Table = std::vector<std::uint32_t>;

  struct Magma {
    std::size_t n;
    Table       t;
    std::uint32_t operator()(std::uint32_t x, std::uint32_t y) const {
      return t[x * n + y];
    }
  };

  inline bool associative(Magma const& m) {
    for (std::uint32_t x = 0; x < m.n; ++x)
      for (std::uint32_t y = 0; y < m.n; ++y)
        for (std::uint32_t z = 0; z < m.n; ++z)
          if (m(m(x, y), z) != m(x, m(y, z)))
            return false;
    return true;
  }

  // x in y S^1
  inline bool in_right_ideal(Magma const& m, std::uint32_t x, std::uint32_t y) {
    if (x == y)
      return true;
    for (std::uint32_t s = 0; s < m.n; ++s)
      if (m(y, s) == x)
        return true;
    return false;
  }

  inline bool in_left_ideal(Magma const& m, std::uint32_t x, std::uint32_t y) {
    if (x == y)
      return true;
    for (std::uint32_t s = 0; s < m.n; ++s)
      if (m(s, y) == x)
        return true;
    return false;
  }

  // x in S^1 y S^1
  inline bool in_ideal(Magma const& m, std::uint32_t x, std::uint32_t y) {
    if (in_right_ideal(m, x, y) || in_left_ideal(m, x, y))
      return true;
    for (std::uint32_t s = 0; s < m.n; ++s)
      for (std::uint32_t t = 0; t < m.n; ++t)
        if (m(m(s, y), t) == x)
          return true;
    return false;
  }

  inline bool r_rel(Magma const& m, std::uint32_t x, std::uint32_t y) {
    return in_right_ideal(m, x, y) && in_right_ideal(m, y, x);
  }
  inline bool l_rel(Magma const& m, std::uint32_t x, std::uint32_t y) {
    return in_left_ideal(m, x, y) && in_left_ideal(m, y, x);
  }
  // D = R o L, computed as the composite relation.
  inline bool d_rel(Magma const& m, std::uint32_t x, std::uint32_t y) {
    for (std::uint32_t z = 0; z < m.n; ++z)
      if (r_rel(m, x, z) && l_rel(m, z, y))
        return true;
    return false;
  }
  inline bool j_rel(Magma const& m, std::uint32_t x, std::uint32_t y) {
    return in_ideal(m, x, y) && in_ideal(m, y, x);
  }

  inline bool regular(Magma const& m, std::uint32_t s) {
    for (std::uint32_t t = 0; t < m.n; ++t)
      if (m(m(s, t), s) == s)
        return true;
    return false;
  }

  inline std::vector<std::uint32_t> inverses(Magma const& m, std::uint32_t s) {
    std::vector<std::uint32_t> out;
    for (std::uint32_t t = 0; t < m.n; ++t)
      if (m(m(s, t), s) == s && m(m(t, s), t) == t)
        out.push_back(t);
    return out;
  }

  // Brute force over all bijections; only for n <= 8.
  inline bool isomorphic(Magma const& a, Magma const& b) {
    if (a.n != b.n)
      return false;
    std::vector<std::uint32_t> p(a.n);
    std::iota(p.begin(), p.end(), 0u);
    do {
      bool ok = true;
      for (std::uint32_t x = 0; x < a.n && ok; ++x)
        for (std::uint32_t y = 0; y < a.n && ok; ++y)
          ok = p[a(x, y)] == b(p[x], p[y]);
      if (ok)
        return true;
    } while (std::next_permutation(p.begin(), p.end()));
    return false;
  }

  // Equivalence relation on {0..n-1} from a predicate, as sorted classes.
  inline std::set<std::set<std::uint32_t>> classes_of(
      std::size_t                                          n,
      std::function<bool(std::uint32_t, std::uint32_t)> const& rel) {
    std::set<std::set<std::uint32_t>> out;
    for (std::uint32_t x = 0; x < n; ++x) {
      std::set<std::uint32_t> c;
      for (std::uint32_t y = 0; y < n; ++y)
        if (rel(x, y))
          c.insert(y);
      out.insert(c);
    }
    return out;
  }

  // Every congruence, as a relation matrix rel[x * n + y].
  inline std::vector<std::vector<bool>> all_congruences(Magma const& m) {
    std::vector<std::vector<bool>> out;
    std::vector<std::uint32_t>     block(m.n, 0);
    std::function<void(std::size_t, std::uint32_t)> rec = [&](std::size_t x,
                                                              std::uint32_t used) {
      if (x == m.n) {
        std::vector<bool> rel(m.n * m.n);
        for (std::size_t a = 0; a < m.n; ++a)
          for (std::size_t b = 0; b < m.n; ++b)
            rel[a * m.n + b] = block[a] == block[b];
        for (std::uint32_t a = 0; a < m.n; ++a)
          for (std::uint32_t b = 0; b < m.n; ++b)
            if (rel[a * m.n + b])
              for (std::uint32_t s = 0; s < m.n; ++s)
                if (!rel[m(s, a) * m.n + m(s, b)] || !rel[m(a, s) * m.n + m(b, s)])
                  return;
        out.push_back(rel);
        return;
      }
      for (std::uint32_t c = 0; c <= used; ++c) {
        block[x] = c;
        rec(x + 1, c == used ? used + 1 : used);
      }
    };
    rec(0, 0);
    return out;
  }

  // Intersection of every congruence containing the pairs.
  inline std::vector<bool> generated_congruence(
      Magma const&                                             m,
      std::vector<std::pair<std::uint32_t, std::uint32_t>> const& pairs) {
    std::vector<bool> meet(m.n * m.n, true);
    for (auto const& rel : all_congruences(m)) {
      bool contains = true;
      for (auto [a, b] : pairs)
        contains = contains && rel[a * m.n + b];
      if (!contains)
        continue;
      for (std::size_t i = 0; i < meet.size(); ++i)
        meet[i] = meet[i] && rel[i];
    }
    return meet;
  }

  // Transformation semigroup generated by maps on {0..deg-1}, composed left
  // to right: (f g)(i) = g(f(i)).
  inline Magma transformation_semigroup(
      std::vector<std::vector<std::uint32_t>> const& gens) {
    std::vector<std::vector<std::uint32_t>> elems;
    std::set<std::vector<std::uint32_t>>    seen;
    for (auto const& g : gens)
      if (seen.insert(g).second)
        elems.push_back(g);
    for (std::size_t i = 0; i < elems.size(); ++i) {
      for (auto const& g : gens) {
        std::vector<std::uint32_t> h(g.size());
        for (std::size_t k = 0; k < g.size(); ++k)
          h[k] = g[elems[i][k]];
        if (seen.insert(h).second)
          elems.push_back(h);
      }
    }
    std::sort(elems.begin(), elems.end());
    Magma m{elems.size(), Table(elems.size() * elems.size())};
    for (std::size_t x = 0; x < elems.size(); ++x)
      for (std::size_t y = 0; y < elems.size(); ++y) {
        std::vector<std::uint32_t> h(elems[x].size());
        for (std::size_t k = 0; k < h.size(); ++k)
          h[k] = elems[y][elems[x][k]];
        m.t[x * m.n + y] = static_cast<std::uint32_t>(
            std::lower_bound(elems.begin(), elems.end(), h) - elems.begin());
      }
    return m;
  }

  // Number of classes of A x B under the symmetric, transitive closure of
  // (a.s, b) ~ (a, s.b), by Warshall on the full relation matrix.
  // right(s, a) = a.s and left(s, b) = s.b.
  inline std::size_t tensor_class_count(
      std::size_t                                                  ns,
      std::size_t                                                  na,
      std::size_t                                                  nb,
      std::function<std::uint32_t(std::uint32_t, std::uint32_t)> const& right,
      std::function<std::uint32_t(std::uint32_t, std::uint32_t)> const& left) {
    std::size_t const              k = na * nb;
    std::vector<std::vector<bool>> r(k, std::vector<bool>(k, false));
    for (std::size_t i = 0; i < k; ++i)
      r[i][i] = true;
    for (std::uint32_t s = 0; s < ns; ++s)
      for (std::uint32_t a = 0; a < na; ++a)
        for (std::uint32_t b = 0; b < nb; ++b) {
          std::size_t const u = right(s, a) * nb + b, v = a * nb + left(s, b);
          r[u][v] = r[v][u] = true;
        }
    for (std::size_t m = 0; m < k; ++m)
      for (std::size_t i = 0; i < k; ++i)
        if (r[i][m])
          for (std::size_t j = 0; j < k; ++j)
            if (r[m][j])
              r[i][j] = true;
    std::size_t classes = 0;
    for (std::size_t i = 0; i < k; ++i) {
      bool least = true;
      for (std::size_t j = 0; j < i && least; ++j)
        least = !r[i][j];
      classes += least;
    }
    return classes;
  }

}  // namespace oracle

#endif  // SEMI_TESTS_ORACLE_HPP_
