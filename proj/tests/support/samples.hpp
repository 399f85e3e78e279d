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

// Semigroups used by the property tests: the named families plus seeded
// random transformation semigroups.

#ifndef SEMI_TESTS_SAMPLES_HPP_
#define SEMI_TESTS_SAMPLES_HPP_

#include <random>
#include <string>
#include <utility>
#include <vector>

#include "oracle.hpp"
#include "semi/families.hpp"
#include "semi/semigroup.hpp"

namespace samples {

  struct Named {
    std::string           name;
    semi::FiniteSemigroup S;
  };

  inline oracle::Magma magma(semi::FiniteSemigroup const& S) {
    auto t = S.table();
    return {S.size(), oracle::Table(t.begin(), t.end())};
  }

  inline semi::FiniteSemigroup from_magma(oracle::Magma const& m) {
    return semi::FiniteSemigroup::from_table(m.n, m.t);
  }

  inline std::vector<Named> families() {
    using namespace semi;
    return {
        {"trivial", trivial_semigroup()},
        {"Z2", cyclic_group(2)},
        {"Z3", cyclic_group(3)},
        {"SL2", semilattice_chain(2)},
        {"SL3", semilattice_chain(3)},
        {"LZ2", left_zero(2)},
        {"RZ3", right_zero(3)},
        {"RB22", rectangular_band(2, 2)},
        {"RB23", rectangular_band(2, 3)},
        {"B2", brandt_B2()},
        {"N2", null_semigroup(2)},
        {"nil", nil_monoid()},
        {"M(Z2;2,2)", rees_matrix_over_monoid(cyclic_group(2), 2, 2)},
        {"M(Z3;2,2;P)", rees_matrix(cyclic_group(3), 2, 2, {{0, 0}, {0, 1}})},
        {"Z2xSL2", direct_product(cyclic_group(2), semilattice_chain(2))},
        {"B2xZ2", direct_product(brandt_B2(), cyclic_group(2))},
    };
  }

  // Transformation semigroups on deg points generated by gens random maps,
  // kept only when no larger than max_size.
  inline std::vector<Named> random_transformation(std::uint32_t seed,
                                                  std::size_t   count,
                                                  std::size_t   max_size = 40) {
    std::mt19937                                 rng(seed);
    std::uniform_int_distribution<std::uint32_t> deg_dist(2, 4);
    std::uniform_int_distribution<std::uint32_t> gen_dist(1, 3);
    std::vector<Named>                           out;
    while (out.size() < count) {
      auto const                              deg = deg_dist(rng);
      std::uniform_int_distribution<std::uint32_t> pt(0, deg - 1);
      std::vector<std::vector<std::uint32_t>> gens(gen_dist(rng));
      for (auto& g : gens) {
        g.resize(deg);
        for (auto& v : g)
          v = pt(rng);
      }
      auto m = oracle::transformation_semigroup(gens);
      if (m.n <= max_size) {
        out.push_back({"T" + std::to_string(out.size()), from_magma(m)});
      }
    }
    return out;
  }

  inline std::vector<Named> all(std::size_t random_count = 30) {
    auto out = families();
    for (auto& x : random_transformation(20261016u, random_count)) {
      out.push_back(std::move(x));
    }
    return out;
  }

}  // namespace samples

#endif  // SEMI_TESTS_SAMPLES_HPP_
