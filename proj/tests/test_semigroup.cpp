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

#include <algorithm>
#include <set>

#include "catch_amalgamated.hpp"
#include "semi/error.hpp"
#include "semi/families.hpp"
#include "semi/semigroup.hpp"
#include "support/oracle.hpp"
#include "support/samples.hpp"

using namespace semi;

namespace {
  std::set<std::set<std::uint32_t>> as_sets(Partition const& p) {
    std::set<std::set<std::uint32_t>> out;
    for (auto const& c : p.classes) {
      out.emplace(c.begin(), c.end());
    }
    return out;
  }
}  // namespace

TEST_CASE("from_table accepts small semigroups", "[semigroup]") {
  auto T = FiniteSemigroup::from_table(1, {0});
  REQUIRE(T.size() == 1);
  auto SL2 = FiniteSemigroup::from_table(2, {0, 0, 0, 1});
  REQUIRE(SL2(1, 1) == 1);
  REQUIRE(SL2(0, 1) == 0);
}

TEST_CASE("from_table rejects bad tables", "[semigroup]") {
  SECTION("out of range entry") {
    try {
      FiniteSemigroup::from_table(2, {0, 0, 0, 2});
      FAIL("no error");
    } catch (Error const& e) {
      REQUIRE(e.code() == ErrorCode::OutOfRangeEntry);
    }
  }
  SECTION("every non-associative table on two points is reported") {
    // The checker must name a violating triple; the oracle confirms it.
    std::size_t rejected = 0;
    for (std::uint32_t code = 0; code < 16; ++code) {
      oracle::Table t{code & 1u, (code >> 1) & 1u, (code >> 2) & 1u, (code >> 3) & 1u};
      oracle::Magma m{2, t};
      bool const    ok = oracle::associative(m);
      try {
        FiniteSemigroup::from_table(2, t);
        REQUIRE(ok);
      } catch (Error const& e) {
        REQUIRE_FALSE(ok);
        REQUIRE(e.code() == ErrorCode::NotAssociative);
        ++rejected;
      }
    }
    // Eight of the sixteen binary operations on two points are associative.
    REQUIRE(rejected == 8);
  }
  SECTION("altered null table") {
    try {
      FiniteSemigroup::from_table(2, {0, 0, 1, 0});
      FAIL("no error");
    } catch (Error const& e) {
      REQUIRE(e.code() == ErrorCode::NotAssociative);
      REQUIRE(std::string(e.what()).find("(1") != std::string::npos);
    }
  }
}

TEST_CASE("families have the documented tables", "[semigroup][families]") {
  auto rb = rectangular_band(2, 2);
  REQUIRE(rb.size() == 4);
  for (Elem x = 0; x < 4; ++x) {
    for (Elem y = 0; y < 4; ++y) {
      REQUIRE(rb(x, y) == (x / 2) * 2 + y % 2);
    }
  }

  auto B2 = brandt_B2();
  Elem const zero = 0, a = 1, b = 2, ab = 3, ba = 4;
  REQUIRE(B2.size() == 5);
  REQUIRE(B2(a, a) == zero);
  REQUIRE(B2(b, b) == zero);
  REQUIRE(B2(B2(a, b), a) == a);
  REQUIRE(B2(B2(b, a), b) == b);
  REQUIRE(B2(a, b) == ab);
  REQUIRE(B2(b, a) == ba);

  auto M = rees_matrix_over_monoid(cyclic_group(2), 2, 2);
  REQUIRE(M.size() == 8);
  for (Elem x = 0; x < 8; ++x) {
    for (Elem y = 0; y < 8; ++y) {
      Elem const i = x / 4, s = (x / 2) % 2, m = y % 2, t = (y / 2) % 2;
      REQUIRE(M(x, y) == (i * 2 + (s + t) % 2) * 2 + m);
    }
  }
}

TEST_CASE("generate validates parameters", "[semigroup][families]") {
  REQUIRE(generate("rectangular_band", {"2", "3"}).size() == 6);
  REQUIRE(generate("rees_matrix", {"2", "2", "1", "0", "1"}).size() == 4);
  REQUIRE(generate("rees_matrix_over_monoid", {"cyclic_group", "2", "2", "2"}).size() == 8);
  auto code_of = [](auto&& fn) {
    try {
      fn();
    } catch (Error const& e) {
      return e.code();
    }
    return ErrorCode::UsageError;
  };
  REQUIRE(code_of([] { generate("rees_matrix", {"2", "1", "1", "5"}); })
          == ErrorCode::BadParams);
  REQUIRE(code_of([] { generate("cyclic_group", {"x"}); }) == ErrorCode::BadParams);
  REQUIRE(code_of([] { generate("nonsense", {}); }) == ErrorCode::BadParams);
  REQUIRE(code_of([] { rees_matrix(semilattice_chain(2), 1, 1, {{0}}); })
          == ErrorCode::BadParams);
  REQUIRE(code_of([] { rees_matrix_over_monoid(null_semigroup(2), 1, 1); })
          == ErrorCode::BadParams);
}

TEST_CASE("transformation semigroups match the oracle", "[semigroup][families]") {
  std::vector<std::vector<std::vector<Elem>>> const cases{
      {{1, 0}},
      {{1, 2, 0}, {0, 0, 2}},
      {{0, 0, 1}, {2, 1, 0}},
      {{1, 2, 3, 0}, {1, 0, 2, 3}},
  };
  for (auto const& gens : cases) {
    auto const S = transformation_semigroup(gens);
    auto const m = oracle::transformation_semigroup(gens);
    REQUIRE(S.size() == m.n);
    REQUIRE(are_isomorphic(S, samples::from_magma(m)));
  }
  REQUIRE(transformation_semigroup({{1, 2, 3, 0}, {1, 0, 2, 3}}).size() == 24);
  REQUIRE_THROWS_AS(transformation_semigroup({{1, 2, 3, 0}, {1, 0, 2, 3}}, 10), Error);
  REQUIRE_THROWS_AS(transformation_semigroup({{0, 1}, {0}}), Error);
  REQUIRE_THROWS_AS(transformation_semigroup({{0, 2}}), Error);
}

TEST_CASE("idempotents", "[semigroup]") {
  REQUIRE(idempotents(semilattice_chain(2)) == std::vector<Elem>{0, 1});
  REQUIRE(idempotents(cyclic_group(2)) == std::vector<Elem>{0});
  REQUIRE(idempotents(brandt_B2()) == std::vector<Elem>{0, 3, 4});
}

TEST_CASE("local units and factorizability", "[semigroup]") {
  REQUIRE(has_local_units(cyclic_group(3)));
  REQUIRE(has_local_units(nil_monoid()));
  REQUIRE(has_local_units(left_zero(2)));
  REQUIRE_FALSE(has_local_units(null_semigroup(2)));
  REQUIRE_FALSE(is_factorizable(null_semigroup(2)));
  REQUIRE(is_factorizable(semilattice_chain(2)));
}

TEST_CASE("Green's relations on small examples", "[semigroup][green]") {
  auto const RB   = rectangular_band(2, 2);
  auto const B2   = brandt_B2();
  auto const SL2  = semilattice_chain(2);
  auto const Nil  = nil_monoid();
  auto const& rb  = green_data(RB);
  REQUIRE(rb.d_classes.number_of_classes() == 1);
  REQUIRE(rb.d_classes.classes[0].size() == 4);

  auto const& b2 = green_data(B2);
  REQUIRE(as_sets(b2.d_classes)
          == std::set<std::set<std::uint32_t>>{{0}, {1, 2, 3, 4}});
  REQUIRE(b2.d_class_regular == std::vector<std::uint8_t>{1, 1});

  auto const& sl = green_data(SL2);
  REQUIRE(sl.d_classes.number_of_classes() == 2);
  REQUIRE(sl.h_classes.number_of_classes() == 2);

  auto const& nil = green_data(Nil);
  REQUIRE(nil.regular == std::vector<std::uint8_t>{1, 0, 1});
}

TEST_CASE("inverses", "[semigroup]") {
  REQUIRE(inverses(cyclic_group(2), 1) == std::vector<Elem>{1});
  REQUIRE(inverses(rectangular_band(2, 2), 0) == std::vector<Elem>{0, 1, 2, 3});
  REQUIRE(inverses(brandt_B2(), 1) == std::vector<Elem>{2});
  REQUIRE(inverses(nil_monoid(), 1).empty());
}

TEST_CASE("local submonoids", "[semigroup]") {
  auto rb = local_submonoid(rectangular_band(2, 2), 0);
  REQUIRE(rb.semigroup.size() == 1);

  auto z2 = local_submonoid(cyclic_group(2), 0);
  REQUIRE(z2.semigroup.same_table(cyclic_group(2)));

  auto b2 = local_submonoid(brandt_B2(), 3);
  REQUIRE(b2.embedding == std::vector<Elem>{0, 3});
  REQUIRE(b2.semigroup.identity() == Elem{1});
  REQUIRE(are_isomorphic(b2.semigroup, semilattice_chain(2)).has_value());

  try {
    local_submonoid(brandt_B2(), 1);
    FAIL("no error");
  } catch (Error const& e) {
    REQUIRE(e.code() == ErrorCode::NotIdempotent);
  }
}

TEST_CASE("subsemigroups", "[semigroup]") {
  auto B2 = brandt_B2();
  REQUIRE(subsemigroup(B2, {0, 3}).semigroup.size() == 2);
  try {
    subsemigroup(B2, {1, 3});
    FAIL("no error");
  } catch (Error const& e) {
    REQUIRE(e.code() == ErrorCode::NotASubsemigroup);
  }
  std::vector<Elem> gens{1, 2};
  REQUIRE(generated_by(B2, gens) == std::vector<Elem>{0, 1, 2, 3, 4});
}

TEST_CASE("natural partial order", "[semigroup]") {
  auto sl = natural_partial_order(semilattice_chain(2));
  REQUIRE(sl.test(0, 1));
  REQUIRE_FALSE(sl.test(1, 0));

  auto z3 = natural_partial_order(cyclic_group(3));
  for (Elem x = 0; x < 3; ++x) {
    for (Elem y = 0; y < 3; ++y) {
      REQUIRE(z3.test(x, y) == (x == y));
    }
  }

  auto b2 = natural_partial_order(brandt_B2());
  for (Elem x = 1; x < 5; ++x) {
    REQUIRE(b2.test(0, x));
    for (Elem y = 1; y < 5; ++y) {
      REQUIRE(b2.test(x, y) == (x == y));
    }
  }
}

TEST_CASE("isomorphism", "[semigroup][iso]") {
  auto SL2 = semilattice_chain(2);
  auto w   = are_isomorphic(SL2, SL2);
  REQUIRE(w.has_value());
  REQUIRE(w->map == std::vector<Elem>{0, 1});
  REQUIRE_FALSE(are_isomorphic(SL2, cyclic_group(2)).has_value());
  REQUIRE_FALSE(are_isomorphic(left_zero(2), right_zero(2)).has_value());

  // A relabelled copy of B2 is found.
  auto B2 = brandt_B2();
  std::vector<Elem> perm{3, 0, 4, 2, 1};
  std::vector<Elem> t(25);
  for (Elem x = 0; x < 5; ++x) {
    for (Elem y = 0; y < 5; ++y) {
      t[perm[x] * 5 + perm[y]] = perm[B2(x, y)];
    }
  }
  auto C = FiniteSemigroup::from_table(5, t);
  auto v = are_isomorphic(B2, C);
  REQUIRE(v.has_value());
  REQUIRE(Homomorphism::make(B2, C, v->map).is_surjective());
  REQUIRE(canonical_table(B2) == canonical_table(C));
}

TEST_CASE("index and period", "[semigroup]") {
  REQUIRE(index_and_period(cyclic_group(3), 1) == std::pair<std::size_t, std::size_t>{1, 3});
  REQUIRE(index_and_period(nil_monoid(), 1) == std::pair<std::size_t, std::size_t>{2, 1});
}

////////////////////////////////////////////////////////////////////////
// Properties over the sample corpus
////////////////////////////////////////////////////////////////////////

TEST_CASE("Green's relations agree with the definitions", "[semigroup][property]") {
  for (auto const& [name, S] : samples::all()) {
    INFO(name);
    auto const  m = samples::magma(S);
    auto const& g = green_data(S);
    auto const  n = S.size();
    REQUIRE(as_sets(g.r_classes)
            == oracle::classes_of(n, [&](auto x, auto y) { return oracle::r_rel(m, x, y); }));
    REQUIRE(as_sets(g.l_classes)
            == oracle::classes_of(n, [&](auto x, auto y) { return oracle::l_rel(m, x, y); }));
    REQUIRE(as_sets(g.d_classes)
            == oracle::classes_of(n, [&](auto x, auto y) { return oracle::d_rel(m, x, y); }));
    REQUIRE(as_sets(g.j_classes)
            == oracle::classes_of(n, [&](auto x, auto y) { return oracle::j_rel(m, x, y); }));
    REQUIRE(g.d_classes == g.j_classes);
    for (Elem s = 0; s < n; ++s) {
      REQUIRE(static_cast<bool>(g.regular[s]) == oracle::regular(m, s));
      REQUIRE(g.regular[s] == regular_elements_direct(S)[s]);
      REQUIRE(inverses(S, s) == oracle::inverses(m, s));
      REQUIRE(g.regular[s] == !inverses(S, s).empty());
    }
  }
}

TEST_CASE("local units imply factorizable", "[semigroup][property]") {
  for (auto const& [name, S] : samples::all()) {
    INFO(name);
    if (has_local_units(S)) {
      REQUIRE(is_factorizable(S));
    }
  }
}

TEST_CASE("natural order on idempotents", "[semigroup][property]") {
  for (auto const& [name, S] : samples::all()) {
    INFO(name);
    auto const  le = natural_partial_order(S);
    auto const& g  = green_data(S);
    for (Elem e : S.idempotents()) {
      for (Elem f : S.idempotents()) {
        REQUIRE(le.test(e, f) == (S(e, f) == e && S(f, e) == e));
      }
    }
    for (Elem a = 0; a < S.size(); ++a) {
      if (!g.regular[a]) {
        continue;
      }
      REQUIRE(le.test(a, a));
      for (Elem b = 0; b < S.size(); ++b) {
        if (a != b && g.regular[b]) {
          REQUIRE_FALSE((le.test(a, b) && le.test(b, a)));
        }
        for (Elem c = 0; c < S.size(); ++c) {
          if (g.regular[b] && g.regular[c] && le.test(a, b) && le.test(b, c)) {
            REQUIRE(le.test(a, c));
          }
        }
      }
    }
  }
}

TEST_CASE("isomorphism agrees with brute force", "[semigroup][iso][property]") {
  std::vector<samples::Named> small;
  for (auto& x : samples::all(60)) {
    if (x.S.size() <= 6) {
      small.push_back(x);
    }
  }
  for (auto const& a : small) {
    auto w = are_isomorphic(a.S, a.S);
    REQUIRE(w.has_value());
    for (auto const& b : small) {
      INFO(a.name << " vs " << b.name);
      bool const expected = oracle::isomorphic(samples::magma(a.S), samples::magma(b.S));
      auto       found    = are_isomorphic(a.S, b.S);
      REQUIRE(found.has_value() == expected);
      REQUIRE((canonical_table(a.S) == canonical_table(b.S)) == expected);
      if (found) {
        auto fwd = Homomorphism::make(a.S, b.S, found->map);
        REQUIRE(fwd.is_injective());
        auto back = are_isomorphic(b.S, a.S);
        REQUIRE(back.has_value());
      }
    }
  }
}

TEST_CASE("generated families are associative", "[semigroup][property]") {
  for (auto const& [name, S] : samples::families()) {
    INFO(name);
    REQUIRE(oracle::associative(samples::magma(S)));
  }
}
