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

#ifndef SEMI_UNION_FIND_HPP_
#define SEMI_UNION_FIND_HPP_

#include <cstddef>
#include <cstdint>
#include <numeric>
#include <utility>
#include <vector>

namespace semi {

  // Path compression plus union by rank.
  class UnionFind {
   public:
    explicit UnionFind(std::size_t n) : _parent(n), _rank(n, 0) {
      std::iota(_parent.begin(), _parent.end(), std::uint32_t{0});
    }

    [[nodiscard]] std::size_t size() const noexcept {
      return _parent.size();
    }

    std::uint32_t find(std::uint32_t x) {
      std::uint32_t root = x;
      while (_parent[root] != root) {
        root = _parent[root];
      }
      while (_parent[x] != root) {
        x = std::exchange(_parent[x], root);
      }
      return root;
    }

    // Returns false if x and y were already in the same block.
    bool unite(std::uint32_t x, std::uint32_t y) {
      x = find(x);
      y = find(y);
      if (x == y) {
        return false;
      }
      if (_rank[x] < _rank[y]) {
        std::swap(x, y);
      }
      _parent[y] = x;
      if (_rank[x] == _rank[y]) {
        ++_rank[x];
      }
      return true;
    }

    // Block label of every element: the least element of its block.
    [[nodiscard]] std::vector<std::uint32_t> least_representatives() {
      std::size_t const          n = _parent.size();
      std::vector<std::uint32_t> least(n, static_cast<std::uint32_t>(n));
      for (std::uint32_t x = 0; x < n; ++x) {
        auto r = find(x);
        if (least[r] == n) {
          least[r] = x;
        }
      }
      std::vector<std::uint32_t> out(n);
      for (std::uint32_t x = 0; x < n; ++x) {
        out[x] = least[find(x)];
      }
      return out;
    }

   private:
    std::vector<std::uint32_t> _parent;
    std::vector<std::uint8_t>  _rank;
  };

}  // namespace semi

#endif  // SEMI_UNION_FIND_HPP_
