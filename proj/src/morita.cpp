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

#include "semi/morita.hpp"

#include <algorithm>
#include <functional>
#include <utility>

#include "semi/collage.hpp"
#include "semi/congruence.hpp"
#include "semi/error.hpp"
#include "semi/kernels.hpp"

namespace semi {

  namespace {
    constexpr Elem kNone = static_cast<Elem>(-1);

    [[noreturn]] void broken(std::string const& stage, std::string const& what) {
      fail(ErrorCode::PipelineInvariantViolated, stage + ": " + what);
    }

    std::vector<std::uint8_t> flags_of(std::size_t n, std::span<Elem const> elems) {
      std::vector<std::uint8_t> out(n, 0);
      for (Elem x : elems) {
        out[x] = 1;
      }
      return out;
    }

    // Position of each element of R in sub, kNone outside it.
    std::vector<Elem> index_in(std::size_t n, std::span<Elem const> sub) {
      std::vector<Elem> out(n, kNone);
      for (Elem i = 0; i < sub.size(); ++i) {
        out[sub[i]] = i;
      }
      return out;
    }

    Subsemigroup checked_sub(FiniteSemigroup const& R, std::span<Elem const> sub) {
      if (std::adjacent_find(sub.begin(), sub.end(), std::greater_equal<>()) != sub.end()) {
        fail(ErrorCode::NotASubsemigroup, "elements must be listed in ascending order");
      }
      for (Elem x : sub) {
        if (x >= R.size()) {
          fail(ErrorCode::NotASubsemigroup,
               "element " + std::to_string(x) + " is not in the semigroup");
        }
      }
      auto out = subsemigroup(R, std::vector<Elem>(sub.begin(), sub.end()));
      if (!has_local_units(out.semigroup)) {
        fail(ErrorCode::NoLocalUnits, "the subsemigroup does not have local units");
      }
      return out;
    }

    // Least idempotents e, f with es = s = sf.
    std::pair<Elem, Elem> least_local_units(FiniteSemigroup const& S, Elem s) {
      Elem e = kNone, f = kNone;
      for (Elem i : S.idempotents()) {
        if (e == kNone && S(i, s) == s) {
          e = i;
        }
        if (f == kNone && S(s, i) == s) {
          f = i;
        }
      }
      return {e, f};
    }
  }  // namespace

  ////////////////////////////////////////////////////////////////////////
  // Enlargements
  ////////////////////////////////////////////////////////////////////////

  EnlargementCheck check_enlargement(FiniteSemigroup const& R,
                                     std::span<Elem const>  sub) {
    if (!has_local_units(R)) {
      fail(ErrorCode::NoLocalUnits, "the enlarging semigroup does not have local units");
    }
    checked_sub(R, sub);
    std::size_t const n     = R.size();
    auto const        table = R.table();
    auto const        S     = flags_of(n, sub);
    std::vector<std::uint8_t> const all(n, 1);
    namespace par = kernels::parallel;
    auto const SRS = par::set_product(table, n, par::set_product(table, n, S, all), S);
    auto const RSR = par::set_product(table, n, par::set_product(table, n, all, S), all);

    EnlargementCheck out;
    out.inner = true;
    out.outer = true;
    for (Elem x = 0; x < n; ++x) {
      if (SRS[x] && !S[x] && out.inner) {
        out.inner         = false;
        out.inner_witness = x;
      }
      if (!RSR[x] && out.outer) {
        out.outer         = false;
        out.outer_witness = x;
      }
    }
    return out;
  }

  bool is_enlargement(FiniteSemigroup const& R, std::span<Elem const> sub) {
    return check_enlargement(R, sub).holds();
  }

  std::vector<DWitness> d_transfer(FiniteSemigroup const& R, std::span<Elem const> sub) {
    if (!is_enlargement(R, sub)) {
      fail(ErrorCode::NotAnEnlargement, "R is not an enlargement of the subsemigroup");
    }
    auto const            in_sub = flags_of(R.size(), sub);
    std::vector<DWitness> out;
    for (Elem e : R.idempotents()) {
      std::optional<DWitness> found;
      for (Elem u = 0; u < R.size() && !found; ++u) {
        for (Elem s : sub) {
          Elem const us = R(u, s);
          Elem       v  = 0;
          while (v < R.size() && R(us, v) != e) {
            ++v;
          }
          if (v < R.size()) {
            found = DWitness{e, kNone, kNone, kNone, u, s, v, kNone, kNone};
            break;
          }
        }
      }
      if (!found) {
        fail(ErrorCode::WitnessNotFound,
             "idempotent " + R.name(e) + " does not factor through the subsemigroup");
      }
      auto& w = *found;
      for (Elem a : sub) {
        for (Elem b : sub) {
          if (R(a, b) == w.s) {
            w.a = a;
            w.b = b;
            break;
          }
        }
        if (w.a != kNone) {
          break;
        }
      }
      if (w.a == kNone) {
        fail(ErrorCode::WitnessNotFound, R.name(w.s) + " is not a product in the subsemigroup");
      }
      w.x         = R(e, R(w.u, w.a));
      w.x_inverse = R(R(w.b, w.v), e);
      w.f         = R(w.x_inverse, w.x);
      bool const ok = R(w.x, w.x_inverse) == e && in_sub[w.f] && R.is_idempotent(w.f)
                      && R(R(w.x, w.x_inverse), w.x) == w.x
                      && R(R(w.x_inverse, w.x), w.x_inverse) == w.x_inverse;
      if (!ok) {
        fail(ErrorCode::WitnessNotFound,
             "the factorization of " + R.name(e) + " does not give a D-witness");
      }
      out.push_back(w);
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Local isomorphisms
  ////////////////////////////////////////////////////////////////////////

  LocalIsoReport check_local_isomorphism(Homomorphism const& theta) {
    auto const&    S = theta.source;
    auto const&    T = theta.target;
    LocalIsoReport report;

    for (Elem e : S.idempotents()) {
      for (Elem f : S.idempotents()) {
        std::vector<Elem> local(T.size(), kNone);  // image -> preimage in eSf
        std::vector<std::uint8_t> in_esf(S.size(), 0);
        std::string               reason;
        for (Elem s = 0; s < S.size(); ++s) {
          in_esf[S(S(e, s), f)] = 1;
        }
        for (Elem a = 0; a < S.size() && reason.empty(); ++a) {
          if (!in_esf[a]) {
            continue;
          }
          Elem& slot = local[theta(a)];
          if (slot != kNone) {
            reason = "identifies " + S.name(slot) + " and " + S.name(a);
          }
          slot = a;
        }
        for (Elem t = 0; t < T.size() && reason.empty(); ++t) {
          Elem const target = T(T(theta(e), t), theta(f));
          if (local[target] == kNone) {
            reason = "misses " + T.name(target);
          }
        }
        if (!reason.empty()) {
          report.local_bijection_failures.push_back({e, f, std::move(reason)});
        }
      }
    }

    std::vector<std::uint8_t> lifted(T.size(), 0), in_image(T.size(), 0);
    for (Elem s = 0; s < S.size(); ++s) {
      in_image[theta(s)] = 1;
      if (S.is_idempotent(s)) {
        lifted[theta(s)] = 1;
      }
    }
    for (Elem t : T.idempotents()) {
      if (in_image[t] && !lifted[t]) {
        report.idempotent_lift_failures.push_back(t);
      }
    }

    auto const&               d = T.green().d_classes;
    std::vector<std::uint8_t> reached(d.number_of_classes(), 0);
    for (Elem t : T.idempotents()) {
      if (in_image[t]) {
        reached[d.class_of[t]] = 1;
      }
    }
    for (Elem t : T.idempotents()) {
      if (!reached[d.class_of[t]]) {
        report.d_density_failures.push_back(t);
      }
    }
    return report;
  }

  bool is_local_isomorphism(Homomorphism const& theta) {
    return check_local_isomorphism(theta).holds();
  }

  bool enlargement_of_image(Homomorphism const& theta) {
    if (!is_local_isomorphism(theta)) {
      fail(ErrorCode::NotLocalIso, "the homomorphism is not a local isomorphism");
    }
    auto const image = theta.image();
    return is_enlargement(theta.target, image);
  }

  ////////////////////////////////////////////////////////////////////////
  // Equivalence and joint enlargements
  ////////////////////////////////////////////////////////////////////////

  std::optional<MoritaWitness> morita_equivalent(FiniteSemigroup const& S,
                                                 FiniteSemigroup const& T) {
    if (!has_local_units(S) || !has_local_units(T)) {
      fail(ErrorCode::NoLocalUnits, "Morita equivalence needs local units on both sides");
    }
    auto CS = cauchy_completion(S);
    auto CT = cauchy_completion(T);
    auto F  = are_equivalent(CS.category, CT.category);
    if (!F) {
      return std::nullopt;
    }
    return MoritaWitness{std::move(CS), std::move(CT), std::move(*F)};
  }

  JointEnlargement joint_enlargement(MoritaWitness const& witness,
                                     std::size_t          max_arrows) {
    auto const& CS = witness.source;
    auto const& CT = witness.target;
    auto const& F  = witness.equivalence;
    auto const& A  = CS.category;
    auto const& B  = CT.category;

    // The glued category has the arrows of both sides plus, for each object
    // a of A, every arrow out of and into F(a).
    std::size_t arrows = A.number_of_arrows() + B.number_of_arrows();
    for (Obj a = 0; a < A.number_of_objects(); ++a) {
      arrows += B.out(F.objects[a]).size();
      for (Obj v = 0; v < B.number_of_objects(); ++v) {
        arrows += B.hom(v, F.objects[a]).size();
      }
    }
    if (arrows > max_arrows) {
      fail(ErrorCode::EnumerationTooLarge,
           "the glued category would have " + std::to_string(arrows) + " arrows, limit "
               + std::to_string(max_arrows));
    }

    auto const C  = collage(F);
    auto const p  = default_consolidation(CS);
    auto const q  = default_consolidation(CT);
    Arrow const xi = choose_xi(C);
    auto const r  = natural_extension(C, p, q, xi);
    auto const Cr = consolidate(C.category, r);
    auto const& U = Cr.semigroup;

    // Identify arrows of each side that share a middle element.
    std::vector<std::pair<Elem, Elem>> pairs;
    auto add_side = [&](CauchyCompletion const& side, std::vector<Arrow> const& into) {
      std::vector<Arrow> first(side.base.size(), kNoArrow);
      for (Arrow x = 0; x < side.triples.size(); ++x) {
        Arrow& f = first[side.middle(x)];
        if (f == kNoArrow) {
          f = x;
        } else {
          pairs.emplace_back(into[f], into[x]);
        }
      }
    };
    add_side(CS, C.from_a);
    add_side(CT, C.from_b);
    auto const pi = congruence_closure(U, pairs);

    // pi must not identify anything more on either side.
    auto check_side = [&](CauchyCompletion const& side, std::vector<Arrow> const& into,
                          char const* name) {
      for (Arrow x = 0; x < side.triples.size(); ++x) {
        for (Arrow y = 0; y < side.triples.size(); ++y) {
          bool const same_middle = side.middle(x) == side.middle(y);
          if (pi.related(into[x], into[y]) != same_middle) {
            broken("congruence",
                   std::string("the restriction to the ") + name
                       + " side differs from equality of middles at arrows "
                       + side.category.label(x) + " and " + side.category.label(y));
          }
        }
      }
    };
    check_side(CS, C.from_a, "first");
    check_side(CT, C.from_b, "second");

    auto Q = quotient(pi);

    auto embed = [&](CauchyCompletion const& side, std::vector<Arrow> const& into,
                     char const* name) {
      auto const&       S = side.base;
      std::vector<Elem> map(S.size());
      for (Elem s = 0; s < S.size(); ++s) {
        auto [e, f] = least_local_units(S, s);
        Arrow const x = side.arrow(e, s, f);
        if (x == kNoArrow) {
          broken("embedding", std::string("no arrow for an element of the ") + name + " side");
        }
        map[s] = Q.projection(into[x]);
      }
      std::optional<Homomorphism> h;
      try {
        h = Homomorphism::make(S, Q.semigroup, std::move(map));
      } catch (Error const& err) {
        broken("embedding", std::string("the ") + name + " side: " + err.what());
      }
      if (!h->is_injective()) {
        broken("embedding", std::string("the ") + name + " side is not embedded injectively");
      }
      return std::move(*h);
    };
    auto embed_s = embed(CS, C.from_a, "first");
    auto embed_t = embed(CT, C.from_b, "second");
    auto s_image = embed_s.image();
    auto t_image = embed_t.image();

    if (!is_enlargement(Q.semigroup, s_image)) {
      broken("enlargement", "R is not an enlargement of the first image");
    }
    if (!is_enlargement(Q.semigroup, t_image)) {
      broken("enlargement", "R is not an enlargement of the second image");
    }
    if (is_regular(CS.base) && is_regular(CT.base) && !is_regular(Q.semigroup)) {
      broken("regularity", "both sides are regular but R is not");
    }
    return {std::move(Q.semigroup), std::move(embed_s), std::move(embed_t),
            std::move(s_image),     std::move(t_image), U.size()};
  }

  ////////////////////////////////////////////////////////////////////////
  // Consolidations and local isomorphisms
  ////////////////////////////////////////////////////////////////////////

  ConsolidationWitness consolidation_from_enlargement(FiniteSemigroup const& R,
                                                      std::span<Elem const>  s_sub,
                                                      std::span<Elem const>  t_sub) {
    if (!is_enlargement(R, s_sub) || !is_enlargement(R, t_sub)) {
      fail(ErrorCode::NotAnEnlargement, "R does not enlarge both subsemigroups");
    }
    auto const S      = checked_sub(R, s_sub);
    auto const T      = checked_sub(R, t_sub);
    auto const s_pos  = index_in(R.size(), s_sub);
    auto const t_pos  = index_in(R.size(), t_sub);
    auto       cauchy = cauchy_completion(S.semigroup);
    std::size_t const k = cauchy.idempotent_of.size();

    std::vector<std::vector<Elem>> inverse_cache(R.size());
    std::vector<std::uint8_t>      cached(R.size(), 0);
    std::vector<Elem>              x(k), x_inverse(k);
    for (Obj u = 0; u < k; ++u) {
      Elem const e     = s_sub[cauchy.idempotent_of[u]];
      bool       found = false;
      for (Elem c = 0; c < R.size() && !found; ++c) {
        if (!cached[c]) {
          inverse_cache[c] = inverses(R, c);
          cached[c]        = 1;
        }
        for (Elem c_inv : inverse_cache[c]) {
          if (R(c_inv, c) == e && t_pos[R(c, c_inv)] != kNone) {
            x[u]         = c;
            x_inverse[u] = c_inv;
            found        = true;
            break;
          }
        }
      }
      if (!found) {
        fail(ErrorCode::WitnessNotFound,
             "no x with x'x = " + R.name(e) + " and xx' in the second subsemigroup");
      }
    }

    std::vector<Arrow> entries(k * k);
    for (Obj u = 0; u < k; ++u) {
      for (Obj v = 0; v < k; ++v) {
        Elem const a = s_pos[R(x_inverse[u], x[v])];
        Arrow const arrow
            = a == kNone ? kNoArrow
                         : cauchy.arrow(cauchy.idempotent_of[u], a, cauchy.idempotent_of[v]);
        if (arrow == kNoArrow) {
          broken("consolidation", "x_i' x_j is not in iSj");
        }
        entries[u * k + v] = arrow;
      }
    }
    auto q            = Consolidation::make(cauchy.category, std::move(entries));
    auto consolidated = consolidate(cauchy.category, q);

    std::vector<Elem> map(cauchy.triples.size());
    for (Arrow arrow = 0; arrow < cauchy.triples.size(); ++arrow) {
      Obj const  u     = cauchy.category.left(arrow);
      Obj const  v     = cauchy.category.right(arrow);
      Elem const value = R(R(x[u], s_sub[cauchy.middle(arrow)]), x_inverse[v]);
      if (t_pos[value] == kNone) {
        broken("psi", "x_i a x_j' is outside the second subsemigroup");
      }
      map[arrow] = t_pos[value];
    }
    std::optional<Homomorphism> psi;
    try {
      psi = Homomorphism::make(consolidated.semigroup, T.semigroup, std::move(map));
    } catch (Error const& err) {
      broken("psi", err.what());
    }
    auto const report = check_local_isomorphism(*psi);
    if (!report.holds()) {
      broken("psi", "not a local isomorphism");
    }
    auto image = psi->image();
    if (!is_enlargement(T.semigroup, image)) {
      broken("psi", "the second subsemigroup is not an enlargement of the image");
    }
    return {std::move(cauchy), std::move(consolidated), T.semigroup, std::move(*psi),
            std::move(image),  std::move(x),            std::move(x_inverse)};
  }

  LocalIsoEquivalence equivalence_from_local_isomorphism(
      CauchyCompletion const&      cauchy,
      ConsolidatedSemigroup const& consolidated,
      Homomorphism const&          psi) {
    if (!psi.source.same_table(consolidated.semigroup)) {
      fail(ErrorCode::BadParams, "psi is not defined on the consolidated semigroup");
    }
    if (!is_local_isomorphism(psi)) {
      fail(ErrorCode::NotLocalIso, "psi is not a local isomorphism");
    }
    auto const& C      = cauchy.category;
    auto        target = cauchy_completion(psi.target);

    std::vector<Obj> objects(C.number_of_objects());
    for (Obj u = 0; u < objects.size(); ++u) {
      auto const v = target.object_of(psi(C.identity(u)));
      if (!v) {
        broken("functor", "psi does not send an identity to an idempotent");
      }
      objects[u] = *v;
    }
    std::vector<Arrow> arrows(C.number_of_arrows());
    for (Arrow x = 0; x < arrows.size(); ++x) {
      arrows[x] = target.arrow(target.idempotent_of[objects[C.left(x)]],
                               psi(x),
                               target.idempotent_of[objects[C.right(x)]]);
      if (arrows[x] == kNoArrow) {
        broken("functor", "the image of " + C.label(x) + " is not an arrow");
      }
    }
    Functor functor{C, target.category, std::move(objects), std::move(arrows)};
    if (auto defect = functor_defect(functor); !defect.empty()) {
      broken("functor", defect);
    }
    LocalIsoEquivalence out{std::move(target), std::move(functor)};
    out.is_equivalence = is_equivalence(out.functor);
    out.agrees_with_decision
        = morita_equivalent(cauchy.base, psi.target).has_value() == out.is_equivalence;
    return out;
  }

}  // namespace semi
