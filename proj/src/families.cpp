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

#include "semi/families.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <map>

#include "semi/error.hpp"

namespace semi {

  namespace {
    template <typename Fn>
    FiniteSemigroup tabulate(std::size_t              n,
                             Fn&&                     product,
                             std::vector<std::string> names = {}) {
      std::vector<Elem> table(n * n);
      for (Elem x = 0; x < n; ++x) {
        for (Elem y = 0; y < n; ++y) {
          table[x * n + y] = static_cast<Elem>(product(x, y));
        }
      }
      return FiniteSemigroup::from_table(n, std::move(table), std::move(names));
    }

    void require_positive(std::size_t k, char const* what) {
      if (k == 0) {
        fail(ErrorCode::BadParams, std::string(what) + " must be positive");
      }
    }

    bool is_group(FiniteSemigroup const& G) {
      auto e = G.identity();
      if (!e) {
        return false;
      }
      for (Elem x = 0; x < G.size(); ++x) {
        bool invertible = false;
        for (Elem y = 0; y < G.size() && !invertible; ++y) {
          invertible = G(x, y) == *e && G(y, x) == *e;
        }
        if (!invertible) {
          return false;
        }
      }
      return true;
    }

    FiniteSemigroup rees_over(FiniteSemigroup const&                G,
                              std::size_t                           I,
                              std::size_t                           L,
                              std::vector<std::vector<Elem>> const& P) {
      std::size_t const g = G.size();
      std::size_t const n = I * g * L;
      auto id = [&](std::size_t i, std::size_t s, std::size_t l) {
        return (i * g + s) * L + l;
      };
      std::vector<std::string> names(n);
      for (std::size_t i = 0; i < I; ++i) {
        for (std::size_t s = 0; s < g; ++s) {
          for (std::size_t l = 0; l < L; ++l) {
            names[id(i, s, l)] = "(" + std::to_string(i) + "," + G.name(static_cast<Elem>(s))
                                 + "," + std::to_string(l) + ")";
          }
        }
      }
      return tabulate(
          n,
          [&](Elem x, Elem y) {
            std::size_t const i = x / (g * L), s = (x / L) % g, l = x % L;
            std::size_t const j = y / (g * L), t = (y / L) % g, m = y % L;
            Elem mid = G(G(static_cast<Elem>(s), P[l][j]), static_cast<Elem>(t));
            (void) j;
            return id(i, mid, m);
          },
          std::move(names));
    }

    std::size_t to_size(std::string const& s) {
      std::size_t value = 0;
      auto [ptr, ec]    = std::from_chars(s.data(), s.data() + s.size(), value);
      if (ec != std::errc{} || ptr != s.data() + s.size()) {
        fail(ErrorCode::BadParams, "expected a non-negative integer, got '" + s + "'");
      }
      return value;
    }

    void expect_count(std::vector<std::string> const& params,
                      std::size_t                     count,
                      std::string_view                family) {
      if (params.size() != count) {
        fail(ErrorCode::BadParams,
             std::string(family) + " takes " + std::to_string(count) + " parameter(s)");
      }
    }
  }  // namespace

  FiniteSemigroup trivial_semigroup() {
    return FiniteSemigroup::from_table(1, {0});
  }

  FiniteSemigroup cyclic_group(std::size_t k) {
    require_positive(k, "order");
    return tabulate(k, [k](Elem x, Elem y) { return (x + y) % k; });
  }

  FiniteSemigroup semilattice_chain(std::size_t k) {
    require_positive(k, "length");
    return tabulate(k, [](Elem x, Elem y) { return std::min(x, y); });
  }

  FiniteSemigroup left_zero(std::size_t k) {
    require_positive(k, "size");
    return tabulate(k, [](Elem x, Elem) { return x; });
  }

  FiniteSemigroup right_zero(std::size_t k) {
    require_positive(k, "size");
    return tabulate(k, [](Elem, Elem y) { return y; });
  }

  FiniteSemigroup rectangular_band(std::size_t m, std::size_t k) {
    require_positive(m, "rows");
    require_positive(k, "columns");
    std::vector<std::string> names;
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < k; ++j) {
        names.push_back("(" + std::to_string(i) + "," + std::to_string(j) + ")");
      }
    }
    return tabulate(
        m * k,
        [k](Elem x, Elem y) { return (x / k) * k + y % k; },
        std::move(names));
  }

  FiniteSemigroup brandt_B2() {
    // 0, a, b, ab, ba
    return FiniteSemigroup::from_table(5,
                                       {0, 0, 0, 0, 0,  // 0
                                        0, 0, 3, 0, 1,  // a
                                        0, 4, 0, 2, 0,  // b
                                        0, 1, 0, 3, 0,  // ab
                                        0, 0, 2, 0, 4}, // ba
                                       {"0", "a", "b", "ab", "ba"});
  }

  FiniteSemigroup null_semigroup(std::size_t k) {
    require_positive(k, "size");
    return tabulate(k, [](Elem, Elem) { return 0; });
  }

  FiniteSemigroup nil_monoid() {
    return FiniteSemigroup::from_table(3,
                                       {0, 1, 2,  // 1
                                        1, 2, 2,  // a
                                        2, 2, 2}, // 0
                                       {"1", "a", "0"});
  }

  FiniteSemigroup rees_matrix(FiniteSemigroup const&                G,
                              std::size_t                           I,
                              std::size_t                           L,
                              std::vector<std::vector<Elem>> const& sandwich) {
    require_positive(I, "I");
    require_positive(L, "Lambda");
    if (!is_group(G)) {
      fail(ErrorCode::BadParams, "rees_matrix needs a group");
    }
    if (sandwich.size() != L) {
      fail(ErrorCode::BadParams, "sandwich matrix needs one row per lambda");
    }
    for (auto const& row : sandwich) {
      if (row.size() != I) {
        fail(ErrorCode::BadParams, "sandwich matrix rows need one entry per i");
      }
      for (auto p : row) {
        if (p >= G.size()) {
          fail(ErrorCode::BadParams,
               "sandwich entry " + std::to_string(p) + " is not in G");
        }
      }
    }
    return rees_over(G, I, L, sandwich);
  }

  FiniteSemigroup rees_matrix_over_monoid(FiniteSemigroup const& M,
                                          std::size_t            I,
                                          std::size_t            L) {
    require_positive(I, "I");
    require_positive(L, "Lambda");
    auto one = M.identity();
    if (!one) {
      fail(ErrorCode::BadParams, "rees_matrix_over_monoid needs a monoid");
    }
    return rees_over(M, I, L, std::vector<std::vector<Elem>>(L, std::vector<Elem>(I, *one)));
  }

  FiniteSemigroup direct_product(FiniteSemigroup const& A, FiniteSemigroup const& B) {
    std::size_t const        b = B.size();
    std::vector<std::string> names;
    for (Elem x = 0; x < A.size(); ++x) {
      for (Elem y = 0; y < b; ++y) {
        names.push_back("(" + A.name(x) + "," + B.name(y) + ")");
      }
    }
    return tabulate(
        A.size() * b,
        [&](Elem x, Elem y) {
          return A(x / b, y / b) * b + B(x % b, y % b);
        },
        std::move(names));
  }

  FiniteSemigroup transformation_semigroup(std::vector<std::vector<Elem>> const& gens,
                                           std::size_t max_size) {
    if (gens.empty() || gens.front().empty()) {
      fail(ErrorCode::BadParams, "transformation_semigroup needs a generator of positive degree");
    }
    std::size_t const deg = gens.front().size();
    for (auto const& g : gens) {
      if (g.size() != deg
          || std::any_of(g.begin(), g.end(), [deg](Elem v) { return v >= deg; })) {
        fail(ErrorCode::BadParams, "generators must be maps on the same finite set");
      }
    }

    using Map = std::vector<Elem>;
    std::vector<Map>    elems;
    std::map<Map, Elem> index;
    auto then = [](Map const& x, Map const& y) {
      Map out(x.size());
      for (std::size_t i = 0; i < x.size(); ++i) {
        out[i] = y[x[i]];
      }
      return out;
    };
    auto add = [&](Map m) {
      if (index.emplace(m, static_cast<Elem>(elems.size())).second) {
        if (elems.size() == max_size) {
          fail(ErrorCode::EnumerationTooLarge,
               "more than " + std::to_string(max_size) + " transformations");
        }
        elems.push_back(std::move(m));
      }
    };
    for (auto const& g : gens) {
      add(g);
    }
    for (std::size_t i = 0; i < elems.size(); ++i) {
      for (auto const& g : gens) {
        add(then(elems[i], g));
      }
    }
    return tabulate(elems.size(),
                    [&](Elem x, Elem y) { return index.at(then(elems[x], elems[y])); });
  }

  std::vector<std::string> family_names() {
    return {"trivial",          "cyclic_group",   "semilattice_chain",
            "left_zero",        "right_zero",     "rectangular_band",
            "brandt_B2",        "null_semigroup", "nil_monoid",
            "rees_matrix",      "rees_matrix_over_monoid"};
  }

  std::vector<NamedSemigroup> corpus() {
    return {{"trivial", trivial_semigroup()},
            {"Z2", cyclic_group(2)},
            {"Z3", cyclic_group(3)},
            {"SL2", semilattice_chain(2)},
            {"SL3", semilattice_chain(3)},
            {"LZ2", left_zero(2)},
            {"RB22", rectangular_band(2, 2)},
            {"B2", brandt_B2()}};
  }

  FiniteSemigroup generate(std::string_view family,
                           std::vector<std::string> const& params) {
    using OneParam = std::function<FiniteSemigroup(std::size_t)>;
    static std::map<std::string_view, OneParam> const one_param{
        {"cyclic_group", cyclic_group},
        {"semilattice_chain", semilattice_chain},
        {"left_zero", left_zero},
        {"right_zero", right_zero},
        {"null_semigroup", null_semigroup}};

    if (family == "trivial" || family == "brandt_B2" || family == "nil_monoid") {
      expect_count(params, 0, family);
      return family == "trivial"     ? trivial_semigroup()
             : family == "brandt_B2" ? brandt_B2()
                                     : nil_monoid();
    }
    if (auto it = one_param.find(family); it != one_param.end()) {
      expect_count(params, 1, family);
      return it->second(to_size(params[0]));
    }
    if (family == "rectangular_band") {
      expect_count(params, 2, family);
      return rectangular_band(to_size(params[0]), to_size(params[1]));
    }
    if (family == "rees_matrix") {
      if (params.size() < 3) {
        fail(ErrorCode::BadParams, "rees_matrix takes k I L and the sandwich entries");
      }
      std::size_t const k = to_size(params[0]);
      std::size_t const I = to_size(params[1]);
      std::size_t const L = to_size(params[2]);
      expect_count(params, 3 + I * L, family);
      std::vector<std::vector<Elem>> P(L, std::vector<Elem>(I));
      for (std::size_t l = 0; l < L; ++l) {
        for (std::size_t i = 0; i < I; ++i) {
          P[l][i] = static_cast<Elem>(to_size(params[3 + l * I + i]));
        }
      }
      return rees_matrix(cyclic_group(k), I, L, P);
    }
    if (family == "rees_matrix_over_monoid") {
      expect_count(params, 4, family);
      auto it = one_param.find(params[0]);
      if (it == one_param.end()) {
        fail(ErrorCode::BadParams, "unknown monoid family '" + params[0] + "'");
      }
      return rees_matrix_over_monoid(it->second(to_size(params[1])),
                                     to_size(params[2]),
                                     to_size(params[3]));
    }
    fail(ErrorCode::BadParams, "unknown family '" + std::string(family) + "'");
  }

}  // namespace semi
