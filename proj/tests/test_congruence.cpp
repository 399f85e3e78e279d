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

#include <random>

#include "catch_amalgamated.hpp"
#include "semi/category.hpp"
#include "semi/congruence.hpp"
#include "semi/error.hpp"
#include "semi/families.hpp"
#include "support/oracle.hpp"
#include "support/samples.hpp"

using namespace semi;

namespace {
  ErrorCode code_of(auto&& fn) {
    try {
      fn();
    } catch (Error const& e) {
      return e.code();
    }
    return ErrorCode::UsageError;
  }

  std::vector<bool> relation(Congruence const& rho) {
    auto const        n = rho.semigroup().size();
    std::vector<bool> out(n * n);
    for (Elem a = 0; a < n; ++a) {
      for (Elem b = 0; b < n; ++b) {
        out[a * n + b] = rho.related(a, b);
      }
    }
    return out;
  }

  struct Consolidated {
    CauchyCompletion      C;
    ConsolidatedSemigroup Cp;
    Homomorphism          middle;
  };

  Consolidated consolidated(FiniteSemigroup const& S) {
    auto C  = cauchy_completion(S);
    auto Cp = consolidate(C.category, default_consolidation(C));
    std::vector<Elem> m;
    for (auto const& t : C.triples) {
      m.push_back(t[1]);
    }
    auto h = Homomorphism::make(Cp.semigroup, S, m);
    return {std::move(C), std::move(Cp), std::move(h)};
  }
}  // namespace

TEST_CASE("closure of small generating sets", "[congruence]") {
  auto SL2 = semilattice_chain(2);
  REQUIRE(congruence_closure(SL2, {}) == Congruence::equality(SL2));
  std::vector<std::pair<Elem, Elem>> pairs{{0, 1}};
  REQUIRE(congruence_closure(SL2, pairs) == Congruence::universal(SL2));

  auto cs  = consolidated(SL2);
  auto pi1 = kernel(cs.middle);
  std::vector<std::pair<Elem, Elem>> gens;
  for (Elem x = 0; x < cs.Cp.semigroup.size(); ++x) {
    gens.emplace_back(x, pi1.representative(x));
  }
  REQUIRE(congruence_closure(cs.Cp.semigroup, gens) == pi1);
}

TEST_CASE("quotients", "[congruence]") {
  auto B2 = brandt_B2();
  auto q  = quotient(Congruence::equality(B2));
  REQUIRE(q.semigroup.same_table(B2));
  REQUIRE(quotient(Congruence::universal(B2)).semigroup.size() == 1);

  auto cs = consolidated(semilattice_chain(2));
  auto qs = quotient(kernel(cs.middle));
  REQUIRE(are_isomorphic(qs.semigroup, semilattice_chain(2)).has_value());
  REQUIRE(kernel(qs.projection) == kernel(cs.middle));

  std::vector<int> labels{0, 1, 1, 0, 2};
  REQUIRE(code_of([&] { Congruence::from_labels(B2, labels); }) == ErrorCode::NotACongruence);
}

TEST_CASE("kernels", "[congruence]") {
  auto SL2 = semilattice_chain(2);
  REQUIRE(kernel(Homomorphism::identity(SL2)) == Congruence::equality(SL2));
  REQUIRE(kernel(Homomorphism::make(SL2, SL2, {0, 0})) == Congruence::universal(SL2));

  auto cs = consolidated(brandt_B2());
  auto k  = kernel(cs.middle);
  for (Elem x = 0; x < cs.Cp.semigroup.size(); ++x) {
    for (Elem y = 0; y < cs.Cp.semigroup.size(); ++y) {
      REQUIRE(k.related(x, y) == (cs.C.triples[x][1] == cs.C.triples[y][1]));
    }
  }
  REQUIRE(k.number_of_classes() == 5);
}

TEST_CASE("minimum inverse congruence", "[congruence]") {
  auto B2 = brandt_B2();
  REQUIRE(min_inverse_congruence(B2) == Congruence::equality(B2));

  auto rb = rectangular_band(2, 2);
  auto g  = min_inverse_congruence(rb);
  REQUIRE(g == Congruence::universal(rb));
  REQUIRE(quotient(g).semigroup.size() == 1);

  REQUIRE(code_of([] { min_inverse_congruence(nil_monoid()); }) == ErrorCode::NotOrthodox);
  // Z2 x RB(2,2) is orthodox with quotient Z2.
  auto zr = direct_product(cyclic_group(2), rectangular_band(2, 2));
  auto q  = quotient(min_inverse_congruence(zr));
  REQUIRE(are_isomorphic(q.semigroup, cyclic_group(2)).has_value());
}

TEST_CASE("all congruences match the oracle", "[congruence][property]") {
  for (auto const& [name, S] : samples::all(30)) {
    if (S.size() > 6) {
      continue;
    }
    INFO(name);
    auto const mine   = all_congruences(S);
    auto const theirs = oracle::all_congruences(samples::magma(S));
    REQUIRE(mine.size() == theirs.size());
    for (std::size_t i = 0; i < mine.size(); ++i) {
      REQUIRE(relation(mine[i]) == theirs[i]);
    }
  }
}

TEST_CASE("closure is the least congruence containing the pairs", "[congruence][property]") {
  std::mt19937 rng(5);
  for (auto const& [name, S] : samples::all(30)) {
    if (S.size() > 6) {
      continue;
    }
    INFO(name);
    auto const m = samples::magma(S);
    std::uniform_int_distribution<Elem> pick(0, static_cast<Elem>(S.size() - 1));
    for (int trial = 0; trial < 6; ++trial) {
      std::vector<std::pair<Elem, Elem>> pairs(static_cast<std::size_t>(trial % 3));
      for (auto& pr : pairs) {
        pr = {pick(rng), pick(rng)};
      }
      auto rho = congruence_closure(S, pairs);
      for (auto [a, b] : pairs) {
        REQUIRE(rho.related(a, b));
      }
      REQUIRE(relation(rho) == oracle::generated_congruence(m, pairs));
    }
  }
}

TEST_CASE("quotient by a kernel is the image", "[congruence][property]") {
  for (auto const& [name, S] : samples::all(10)) {
    INFO(name);
    // Projections onto the quotient by every congruence generated by one
    // pair (x, x^2) are surjective homomorphisms; their kernels round-trip.
    for (Elem x = 0; x < S.size() && x < 6; ++x) {
      std::vector<std::pair<Elem, Elem>> pairs{{x, S(x, x)}};
      auto rho = congruence_closure(S, pairs);
      auto q   = quotient(rho);
      REQUIRE(q.projection.is_surjective());
      REQUIRE(kernel(q.projection) == rho);
      auto q2 = quotient(kernel(q.projection));
      REQUIRE(are_isomorphic(q2.semigroup, q.semigroup).has_value());
    }
  }
}

TEST_CASE("minimum inverse congruences over orthodox samples", "[congruence][property]") {
  std::size_t checked = 0;
  for (auto const& [name, S] : samples::all(60)) {
    INFO(name);
    bool orthodox = is_regular(S);
    for (Elem e : S.idempotents()) {
      for (Elem f : S.idempotents()) {
        orthodox = orthodox && S.is_idempotent(S(e, f));
      }
    }
    if (!orthodox) {
      REQUIRE(code_of([&] { min_inverse_congruence(S); }) == ErrorCode::NotOrthodox);
      continue;
    }
    auto gamma = min_inverse_congruence(S);
    REQUIRE(has_unique_inverses(quotient(gamma).semigroup));
    if (S.size() <= 8) {
      REQUIRE(is_below_every_inverse_congruence(gamma));
      ++checked;
    }
  }
  REQUIRE(checked >= 5);
}
