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

#include <set>

#include "catch_amalgamated.hpp"
#include "semi/context.hpp"
#include "semi/error.hpp"
#include "semi/families.hpp"
#include "semi/morita.hpp"
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

  std::vector<Elem> everything(FiniteSemigroup const& S) {
    std::vector<Elem> out(S.size());
    for (Elem x = 0; x < S.size(); ++x) {
      out[x] = x;
    }
    return out;
  }

  // Naive S = SRS and R = RSR.
  bool naive_enlargement(FiniteSemigroup const& R, std::vector<Elem> const& sub) {
    std::set<Elem> const S(sub.begin(), sub.end());
    std::set<Elem>       srs, rsr;
    for (Elem a : sub)
      for (Elem r = 0; r < R.size(); ++r)
        for (Elem b : sub)
          srs.insert(R(R(a, r), b));
    for (Elem r1 = 0; r1 < R.size(); ++r1)
      for (Elem a : sub)
        for (Elem r2 = 0; r2 < R.size(); ++r2)
          rsr.insert(R(R(r1, a), r2));
    return srs == S && rsr.size() == R.size();
  }

  // The copy {(0, s, 0)} of the group inside M(G; I, L) with identity
  // sandwich entries.
  std::vector<Elem> corner(std::size_t g, std::size_t L) {
    std::vector<Elem> out;
    for (std::size_t s = 0; s < g; ++s) {
      out.push_back(static_cast<Elem>(s * L));
    }
    return out;
  }

  Homomorphism projection(CauchyCompletion const& C, ConsolidatedSemigroup const& Cp) {
    std::vector<Elem> map;
    for (auto const& t : C.triples) {
      map.push_back(t[1]);
    }
    return Homomorphism::make(Cp.semigroup, C.base, map);
  }

  Homomorphism inclusion(FiniteSemigroup const& R, std::vector<Elem> const& sub) {
    auto S = subsemigroup(R, sub);
    return Homomorphism::make(S.semigroup, R, S.embedding);
  }

  struct Pair {
    std::string     name;
    FiniteSemigroup S, T;
  };

  std::vector<Pair> equivalent_pairs() {
    std::vector<Pair> out{
        {"RB22/trivial", rectangular_band(2, 2), trivial_semigroup()},
        {"M(Z2;2,2)/Z2", rees_matrix_over_monoid(cyclic_group(2), 2, 2), cyclic_group(2)},
        {"M(SL2;2,2)/SL2", rees_matrix_over_monoid(semilattice_chain(2), 2, 2),
         semilattice_chain(2)},
        {"B2/SL2", brandt_B2(), semilattice_chain(2)},
        {"LZ2/trivial", left_zero(2), trivial_semigroup()},
    };
    for (auto const& [name, S] : corpus()) {
      out.push_back({name + "/" + name, S, S});
    }
    return out;
  }
}  // namespace

TEST_CASE("enlargement examples", "[morita]") {
  for (auto const& [name, S] : corpus()) {
    INFO(name);
    CHECK(is_enlargement(S, everything(S)));
  }
  auto const R = rees_matrix_over_monoid(cyclic_group(2), 2, 2);
  CHECK(corner(2, 2) == std::vector<Elem>{0, 2});
  CHECK(is_enlargement(R, corner(2, 2)));
  CHECK(naive_enlargement(R, corner(2, 2)));

  auto const SL2 = semilattice_chain(2);
  auto const c   = check_enlargement(SL2, std::vector<Elem>{0});
  CHECK(c.inner);
  CHECK_FALSE(c.outer);
  CHECK(c.outer_witness == Elem{1});
  CHECK_FALSE(naive_enlargement(SL2, {0}));

  // B2 enlarges its copy {0, ab} of SL2.
  auto const B2 = brandt_B2();
  CHECK(is_enlargement(B2, std::vector<Elem>{0, 3}));
  CHECK(naive_enlargement(B2, {0, 3}));
  CHECK(are_isomorphic(subsemigroup(B2, {0, 3}).semigroup, SL2));
}

TEST_CASE("enlargement errors", "[morita]") {
  auto const Z3 = cyclic_group(3);
  CHECK(code_of([&] { is_enlargement(Z3, std::vector<Elem>{1, 2}); })
        == ErrorCode::NotASubsemigroup);
  CHECK(code_of([&] { is_enlargement(Z3, std::vector<Elem>{2, 0}); })
        == ErrorCode::NotASubsemigroup);
  CHECK(code_of([&] { is_enlargement(null_semigroup(2), std::vector<Elem>{0}); })
        == ErrorCode::NoLocalUnits);
  // {a, 0} in the nil monoid has no local units.
  CHECK(code_of([&] { is_enlargement(nil_monoid(), std::vector<Elem>{1, 2}); })
        == ErrorCode::NoLocalUnits);
}

TEST_CASE("enlargement agrees with the naive check", "[morita][property]") {
  for (auto const& [name, R] : samples::families()) {
    if (!has_local_units(R) || R.size() > 12) {
      continue;
    }
    INFO(name);
    // Every subsemigroup generated by one or two elements that has local units.
    for (Elem a = 0; a < R.size(); ++a) {
      for (Elem b = a; b < R.size(); ++b) {
        std::vector<Elem> gens{a, b};
        auto const        sub = generated_by(R, gens);
        if (!has_local_units(subsemigroup(R, sub).semigroup)) {
          continue;
        }
        REQUIRE(is_enlargement(R, sub) == naive_enlargement(R, sub));
      }
    }
  }
}

TEST_CASE("D-transfer witnesses", "[morita]") {
  for (auto const& [name, S] : corpus()) {
    INFO(name);
    auto const& d = S.green().d_classes;
    for (auto const& w : d_transfer(S, everything(S))) {
      CHECK(d.related(w.e, w.f));
      std::size_t same_class = 0;
      for (Elem i : S.idempotents()) {
        same_class += d.related(i, w.e);
      }
      if (same_class == 1) {
        CHECK(w.f == w.e);
      }
    }
  }

  auto const R  = rees_matrix_over_monoid(cyclic_group(2), 2, 2);
  auto const ws = d_transfer(R, corner(2, 2));
  REQUIRE(ws.size() == 4);
  for (auto const& w : ws) {
    CHECK(w.f == 0);
    CHECK(R(w.x, w.x_inverse) == w.e);
    CHECK(R(w.x_inverse, w.x) == w.f);
  }
  std::vector<Elem> es;
  for (auto const& w : ws) {
    es.push_back(w.e);
  }
  CHECK(es == std::vector<Elem>{0, 1, 4, 5});

  auto const B2 = brandt_B2();
  for (auto const& w : d_transfer(B2, std::vector<Elem>{0, 3})) {
    CHECK((w.f == 0 || w.f == 3));
  }
  CHECK(code_of([] {
          d_transfer(semilattice_chain(2), std::vector<Elem>{0});
        })
        == ErrorCode::NotAnEnlargement);
}

TEST_CASE("local isomorphism examples", "[morita]") {
  for (auto const& [name, S] : corpus()) {
    INFO(name);
    CHECK(check_local_isomorphism(Homomorphism::identity(S)).holds());
    auto const C  = cauchy_completion(S);
    auto const Cp = consolidate(C.category, default_consolidation(C));
    auto const pi = projection(C, Cp);
    CHECK(is_local_isomorphism(pi));
    CHECK(enlargement_of_image(pi));
  }

  auto const R = rees_matrix_over_monoid(cyclic_group(2), 2, 2);
  CHECK(is_local_isomorphism(inclusion(R, corner(2, 2))));

  // {0} in SL2: the idempotent 1 is not D-related to anything in the image.
  auto const SL2  = semilattice_chain(2);
  auto const zero = check_local_isomorphism(inclusion(SL2, {0}));
  CHECK(zero.local_bijection_failures.empty());
  CHECK(zero.idempotent_lift_failures.empty());
  CHECK(zero.d_density_failures == std::vector<Elem>{1});
  CHECK(code_of([&] { enlargement_of_image(inclusion(SL2, {0})); }) == ErrorCode::NotLocalIso);

  // Collapsing Z2 is not injective on eSe.
  auto const Z2       = cyclic_group(2);
  auto const collapse = Homomorphism::make(Z2, trivial_semigroup(), {0, 0});
  auto const report   = check_local_isomorphism(collapse);
  REQUIRE(report.local_bijection_failures.size() == 1);
  CHECK(report.local_bijection_failures[0].reason.find("identifies") != std::string::npos);
}

TEST_CASE("local isomorphisms versus enlargements", "[morita][property]") {
  // An inclusion is a local isomorphism exactly when it is an enlargement,
  // and idempotents always lift along finite homomorphisms.
  for (auto const& [name, R] : samples::families()) {
    if (!has_local_units(R) || R.size() > 12) {
      continue;
    }
    INFO(name);
    for (Elem a = 0; a < R.size(); ++a) {
      for (Elem b = a; b < R.size(); ++b) {
        std::vector<Elem> gens{a, b};
        auto const        sub = generated_by(R, gens);
        if (!has_local_units(subsemigroup(R, sub).semigroup)) {
          continue;
        }
        auto const report = check_local_isomorphism(inclusion(R, sub));
        REQUIRE(report.holds() == is_enlargement(R, sub));
        REQUIRE(report.idempotent_lift_failures.empty());
      }
    }
  }
}

TEST_CASE("local isomorphisms compose", "[morita][property]") {
  auto const R   = rees_matrix_over_monoid(cyclic_group(2), 2, 2);
  auto const sub = corner(2, 2);
  auto const in  = inclusion(R, sub);
  auto const C   = cauchy_completion(in.source);
  auto const Cp  = consolidate(C.category, default_consolidation(C));
  auto const pi  = projection(C, Cp);
  REQUIRE(is_local_isomorphism(pi));
  REQUIRE(is_local_isomorphism(in));
  CHECK(is_local_isomorphism(compose(pi, in)));

  for (auto const& [name, S] : corpus()) {
    INFO(name);
    auto const CS  = cauchy_completion(S);
    auto const CSp = consolidate(CS.category, default_consolidation(CS));
    auto const p1  = projection(CS, CSp);
    CHECK(is_local_isomorphism(compose(Homomorphism::identity(CSp.semigroup), p1)));
    CHECK(is_local_isomorphism(compose(p1, Homomorphism::identity(S))));
  }
}

TEST_CASE("Morita equivalence decisions", "[morita]") {
  auto const trivial = trivial_semigroup();
  auto const Z2      = cyclic_group(2);
  auto const SL2     = semilattice_chain(2);
  CHECK(morita_equivalent(rectangular_band(2, 2), trivial).has_value());
  CHECK_FALSE(morita_equivalent(SL2, Z2).has_value());
  CHECK(morita_equivalent(rees_matrix_over_monoid(Z2, 2, 2), Z2).has_value());
  CHECK_FALSE(morita_equivalent(brandt_B2(), Z2).has_value());
  CHECK_FALSE(morita_equivalent(left_zero(2), SL2).has_value());
  // B2 enlarges a copy of SL2, so these two are equivalent.
  CHECK(morita_equivalent(brandt_B2(), SL2).has_value());
  CHECK(code_of([&] { morita_equivalent(null_semigroup(2), Z2); }) == ErrorCode::NoLocalUnits);

  auto const w = morita_equivalent(rectangular_band(2, 2), trivial);
  REQUIRE(w);
  CHECK(is_equivalence(w->equivalence));
  CHECK(w->equivalence.source.same(w->source.category));
  CHECK(w->equivalence.target.same(w->target.category));
}

TEST_CASE("joint enlargement examples", "[morita]") {
  auto run = [](FiniteSemigroup const& S, FiniteSemigroup const& T) {
    auto const w = morita_equivalent(S, T);
    REQUIRE(w);
    return joint_enlargement(*w);
  };
  auto const tt = run(trivial_semigroup(), trivial_semigroup());
  // One arrow of each type survives: a 2x2 rectangular band.
  CHECK(tt.R.size() == 4);
  CHECK(are_isomorphic(tt.R, rectangular_band(2, 2)));
  CHECK(is_enlargement(tt.R, tt.s_image));
  CHECK(is_enlargement(tt.R, tt.t_image));

  auto const rb = run(rectangular_band(2, 2), trivial_semigroup());
  CHECK(rb.s_image.size() == 4);
  CHECK(rb.t_image.size() == 1);
  auto const& d = rb.R.green().d_classes;
  for (Elem a : rb.s_image) {
    CHECK(d.related(a, rb.t_image[0]));
  }

  auto const Z2 = cyclic_group(2);
  auto const zz = run(Z2, Z2);
  CHECK(is_regular(zz.R));
  CHECK(zz.embed_s.is_injective());
  CHECK(zz.embed_t.is_injective());
  CHECK(is_enlargement(zz.R, zz.s_image));
  CHECK(is_enlargement(zz.R, zz.t_image));

  auto const w = morita_equivalent(Z2, Z2);
  CHECK(code_of([&] { joint_enlargement(*w, 3); }) == ErrorCode::EnumerationTooLarge);
}

TEST_CASE("consolidation from enlargement examples", "[morita]") {
  for (auto const* name : {"trivial", "Z2", "SL2", "SL3"}) {
    INFO(name);
    FiniteSemigroup S;
    for (auto const& c : corpus()) {
      if (c.name == name) {
        S = c.semigroup;
      }
    }
    auto const all = everything(S);
    auto const w   = consolidation_from_enlargement(S, all, all);
    // Least witnesses here are x_e = e, giving the default consolidation
    // and psi(i, a, j) = a.
    std::vector<Elem> ids;
    for (Elem e : w.cauchy.idempotent_of) {
      ids.push_back(e);
    }
    CHECK(w.x == ids);
    CHECK(w.x_inverse == ids);
    CHECK(w.consolidated.consolidation.entries == default_consolidation(w.cauchy).entries);
    for (Arrow x = 0; x < w.cauchy.triples.size(); ++x) {
      CHECK(w.psi(x) == w.cauchy.middle(x));
    }
  }

  for (auto const& [name, S] : corpus()) {
    INFO(name);
    auto const all = everything(S);
    auto const w   = consolidation_from_enlargement(S, all, all);
    auto const& q  = w.consolidated.consolidation;
    for (Obj u = 0; u < w.cauchy.idempotent_of.size(); ++u) {
      CHECK(q(u, u) == w.cauchy.category.identity(u));
    }
    CHECK(is_local_isomorphism(w.psi));
    CHECK(enlargement_of_image(w.psi));
  }

  auto const R = rees_matrix_over_monoid(cyclic_group(2), 2, 2);
  auto const w = consolidation_from_enlargement(R, corner(2, 2), everything(R));
  CHECK(is_local_isomorphism(w.psi));
  CHECK(enlargement_of_image(w.psi));
  auto const back = equivalence_from_local_isomorphism(w.cauchy, w.consolidated, w.psi);
  CHECK(back.is_equivalence);
  CHECK(back.agrees_with_decision);

  CHECK(code_of([] {
          auto const SL2 = semilattice_chain(2);
          consolidation_from_enlargement(SL2, std::vector<Elem>{0}, std::vector<Elem>{0, 1});
        })
        == ErrorCode::NotAnEnlargement);
}

TEST_CASE("functor from a local isomorphism", "[morita]") {
  auto const one = trivial_semigroup();
  auto const C   = cauchy_completion(one);
  auto const Cp  = consolidate(C.category, default_consolidation(C));
  auto const r   = equivalence_from_local_isomorphism(C, Cp, projection(C, Cp));
  CHECK(r.is_equivalence);
  CHECK(r.functor.objects == std::vector<Obj>{0});
  CHECK(r.functor.arrows == std::vector<Arrow>{0});

  for (auto const& [name, S] : corpus()) {
    INFO(name);
    auto const CS  = cauchy_completion(S);
    auto const CSp = consolidate(CS.category, default_consolidation(CS));
    auto const out = equivalence_from_local_isomorphism(CS, CSp, projection(CS, CSp));
    CHECK(out.is_equivalence);
    CHECK(out.agrees_with_decision);
  }

  // The inclusion of {0} into SL2 only becomes a candidate psi through a
  // consolidated semigroup; a non-local-isomorphism is refused.
  auto const SL2 = semilattice_chain(2);
  auto const CS  = cauchy_completion(SL2);
  auto const CSp = consolidate(CS.category, default_consolidation(CS));
  std::vector<Elem> to_zero(CSp.semigroup.size(), 0);
  auto const        flat = Homomorphism::make(CSp.semigroup, SL2, to_zero);
  CHECK(code_of([&] { equivalence_from_local_isomorphism(CS, CSp, flat); })
        == ErrorCode::NotLocalIso);
}

TEST_CASE("round trip through every description of equivalence", "[morita][property]") {
  for (auto const& [name, S, T] : equivalent_pairs()) {
    INFO(name);
    auto const w = morita_equivalent(S, T);
    REQUIRE(w);
    auto const J = joint_enlargement(*w);
    CHECK(is_enlargement(J.R, J.s_image));
    CHECK(is_enlargement(J.R, J.t_image));
    if (is_regular(S) && is_regular(T)) {
      CHECK(is_regular(J.R));
    }

    // Every idempotent of R is D-related to one in each copy.
    auto const& d = J.R.green().d_classes;
    for (auto const* image : {&J.s_image, &J.t_image}) {
      auto const ws = d_transfer(J.R, *image);
      CHECK(ws.size() == J.R.idempotents().size());
      for (auto const& x : ws) {
        CHECK(d.related(x.e, x.f));
        CHECK(std::binary_search(image->begin(), image->end(), x.f));
      }
    }

    auto const ctx = context_from_enlargement(J.R, J.s_image, J.t_image);
    CHECK(ctx.report.ok());
    CHECK(ctx.report.surjective);
    CHECK(ctx.report.injective == true);

    auto const c = consolidation_from_enlargement(J.R, J.s_image, J.t_image);
    CHECK(check_local_isomorphism(c.psi).holds());
    auto const back = equivalence_from_local_isomorphism(c.cauchy, c.consolidated, c.psi);
    CHECK(back.is_equivalence);
    CHECK(back.agrees_with_decision);
  }
}
