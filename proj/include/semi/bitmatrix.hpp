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

// Dense square bit matrix used for principal ideals and element subsets.

#ifndef SEMI_BITMATRIX_HPP_
#define SEMI_BITMATRIX_HPP_

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace semi {

  class BitMatrix {
   public:
    BitMatrix() = default;
    BitMatrix(std::size_t rows, std::size_t cols)
        : _rows(rows),
          _cols(cols),
          _words((cols + 63) / 64),
          _data(rows * _words, 0) {}

    [[nodiscard]] std::size_t rows() const noexcept {
      return _rows;
    }
    [[nodiscard]] std::size_t cols() const noexcept {
      return _cols;
    }
    [[nodiscard]] std::size_t words_per_row() const noexcept {
      return _words;
    }

    void set(std::size_t r, std::size_t c) noexcept {
      _data[r * _words + c / 64] |= std::uint64_t{1} << (c % 64);
    }

    [[nodiscard]] bool test(std::size_t r, std::size_t c) const noexcept {
      return (_data[r * _words + c / 64] >> (c % 64)) & 1U;
    }

    [[nodiscard]] std::span<std::uint64_t> row(std::size_t r) noexcept {
      return {_data.data() + r * _words, _words};
    }
    [[nodiscard]] std::span<std::uint64_t const> row(std::size_t r) const noexcept {
      return {_data.data() + r * _words, _words};
    }

    void or_row_into(std::size_t src, std::size_t dst) noexcept {
      for (std::size_t w = 0; w < _words; ++w) {
        _data[dst * _words + w] |= _data[src * _words + w];
      }
    }

    [[nodiscard]] bool rows_equal(std::size_t a, std::size_t b) const noexcept {
      return std::equal(row(a).begin(), row(a).end(), row(b).begin());
    }

    // Row a is a subset of row b.
    [[nodiscard]] bool row_subset(std::size_t a, std::size_t b) const noexcept {
      auto ra = row(a);
      auto rb = row(b);
      for (std::size_t w = 0; w < _words; ++w) {
        if ((ra[w] & ~rb[w]) != 0) {
          return false;
        }
      }
      return true;
    }

    [[nodiscard]] std::size_t row_count(std::size_t r) const noexcept {
      std::size_t total = 0;
      for (auto w : row(r)) {
        total += static_cast<std::size_t>(__builtin_popcountll(w));
      }
      return total;
    }

    bool operator==(BitMatrix const&) const = default;

   private:
    std::size_t                _rows  = 0;
    std::size_t                _cols  = 0;
    std::size_t                _words = 0;
    std::vector<std::uint64_t> _data;
  };

}  // namespace semi

#endif  // SEMI_BITMATRIX_HPP_
