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

#include "semi/classify.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "semi/error.hpp"

namespace semi {

  namespace {
    bool is_group(FiniteSemigroup const& S) {
      auto const one = S.identity();
      if (!one || S.idempotents().size() != 1) {
        return false;
      }
      for (Elem x = 0; x < S.size(); ++x) {
        bool unit = false;
        for (Elem y = 0; y < S.size() && !unit; ++y) {
          unit = S(x, y) == *one && S(y, x) == *one;
        }
        if (!unit) {
          return false;
        }
      }
      return true;
    }

    bool idempotents_commute(FiniteSemigroup const& S) {
      auto const& E = S.idempotents();
      for (Elem e : E) {
        for (Elem f : E) {
          if (S(e, f) != S(f, e)) {
            return false;
          }
        }
      }
      return true;
    }

    bool is_commutative(FiniteSemigroup const& S) {
      for (Elem x = 0; x < S.size(); ++x) {
        for (Elem y = x + 1; y < S.size(); ++y) {
          if (S(x, y) != S(y, x)) {
            return false;
          }
        }
      }
      return true;
    }

    bool is_band(FiniteSemigroup const& S) {
      return S.idempotents().size() == S.size();
    }

    bool idempotents_closed(FiniteSemigroup const& S) {
      auto const& E = S.idempotents();
      for (Elem e : E) {
        for (Elem f : E) {
          if (!S.is_idempotent(S(e, f))) {
            return false;
          }
        }
      }
      return true;
    }

    bool at_most_one_idempotent_per(FiniteSemigroup const& S, Partition const& p) {
      std::vector<std::uint8_t> seen(p.number_of_classes(), 0);
      for (Elem e : S.idempotents()) {
        if (seen[p.class_of[e]]++) {
          return false;
        }
      }
      return true;
    }

    bool every_h_class_has_idempotent(FiniteSemigroup const& S) {
      auto const&               h = S.green().h_classes;
      std::vector<std::uint8_t> hit(h.number_of_classes(), 0);
      for (Elem e : S.idempotents()) {
        hit[h.class_of[e]] = 1;
      }
      return std::all_of(hit.begin(), hit.end(), [](auto x) { return x != 0; });
    }

    bool is_e_solid(FiniteSemigroup const& S) {
      if (!is_regular(S)) {
        return false;
      }
      auto const& E   = S.idempotents();
      auto const  sub = subsemigroup(S, generated_by(S, E)).semigroup;
      return every_h_class_has_idempotent(sub);
    }

    bool is_completely_simple(FiniteSemigroup const& S) {
      if (!is_regular(S) || S.green().j_classes.number_of_classes() != 1) {
        return false;
      }
      auto const& E = S.idempotents();
      for (Elem e : E) {
        for (Elem f : E) {
          if (f != e && S(e, f) == f && S(f, e) == f) {
            return false;  // f < e
          }
        }
      }
      return true;
    }

    using Predicate = bool (*)(FiniteSemigroup const&);

    std::map<std::string_view, Predicate> const& predicates() {
      static std::map<std::string_view, Predicate> const table{
          {"group", [](FiniteSemigroup const& S) { return is_group(S); }},
          {"inverse",
           [](FiniteSemigroup const& S) { return is_regular(S) && idempotents_commute(S); }},
          {"semilattice",
           [](FiniteSemigroup const& S) { return is_band(S) && is_commutative(S); }},
          {"orthodox",
           [](FiniteSemigroup const& S) { return is_regular(S) && idempotents_closed(S); }},
          {"l_unipotent",
           [](FiniteSemigroup const& S) {
             return is_regular(S) && at_most_one_idempotent_per(S, S.green().l_classes);
           }},
          {"e_solid", [](FiniteSemigroup const& S) { return is_e_solid(S); }},
          {"union_of_groups",
           [](FiniteSemigroup const& S) { return every_h_class_has_idempotent(S); }},
          {"completely_simple",
           [](FiniteSemigroup const& S) { return is_completely_simple(S); }},
      };
      return table;
    }

    Predicate lookup(std::string_view name) {
      auto it = predicates().find(name);
      if (it == predicates().end()) {
        fail(ErrorCode::UnknownPredicate, "no predicate named '" + std::string(name) + "'");
      }
      return it->second;
    }

    // Up-set and down-set sizes, preserved by order isomorphisms.
    std::vector<std::pair<std::size_t, std::size_t>> signature(IdealPoset const& P) {
      std::vector<std::pair<std::size_t, std::size_t>> out(P.size());
      for (std::size_t i = 0; i < P.size(); ++i) {
        for (std::size_t j = 0; j < P.size(); ++j) {
          out[i].first += P.order.test(j, i);
          out[i].second += P.order.test(i, j);
        }
      }
      return out;
    }

    // S = SeS.
    bool generates_everything(FiniteSemigroup const& S, Elem e) {
      std::vector<std::uint8_t> hit(S.size(), 0);
      std::size_t               count = 0;
      for (Elem x = 0; x < S.size(); ++x) {
        Elem const xe = S(x, e);
        for (Elem y = 0; y < S.size(); ++y) {
          Elem const v = S(xe, y);
          if (!hit[v]) {
            hit[v] = 1;
            ++count;
          }
        }
      }
      return count == S.size();
    }

    // Band in which every local submonoid is commutative.
    bool is_normal_band(FiniteSemigroup const& S) {
      if (!is_band(S)) {
        return false;
      }
      for (Elem e = 0; e < S.size(); ++e) {
        if (!is_commutative(local_submonoid(S, e).semigroup)) {
          return false;
        }
      }
      return true;
    }
  }  // namespace

  std::vector<std::string> predicate_names() {
    return {"group",    "inverse",     "semilattice",     "orthodox",
            "l_unipotent", "e_solid", "union_of_groups", "completely_simple"};
  }

  bool structural_predicate(FiniteSemigroup const& S, std::string_view name) {
    return lookup(name)(S);
  }

  bool locally(FiniteSemigroup const& S, std::string_view name) {
    auto const pred = lookup(name);
    for (Elem e : S.idempotents()) {
      if (!pred(local_submonoid(S, e).semigroup)) {
        return false;
      }
    }
    return true;
  }

  IdealPoset principal_ideal_poset(FiniteSemigroup const& S) {
    auto const& g = S.green();
    IdealPoset  P;
    for (auto const& c : g.j_classes.classes) {
      P.representatives.push_back(c.front());
    }
    std::size_t const k = P.size();
    P.order             = BitMatrix(k, k);
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = 0; j < k; ++j) {
        if (g.two_sided_ideals.test(P.representatives[j], P.representatives[i])) {
          P.order.set(i, j);
        }
      }
    }

    P.is_meet_semilattice = true;
    for (std::size_t i = 0; i < k && P.is_meet_semilattice; ++i) {
      for (std::size_t j = i + 1; j < k && P.is_meet_semilattice; ++j) {
        std::vector<std::size_t> lower;
        for (std::size_t l = 0; l < k; ++l) {
          if (P.order.test(l, i) && P.order.test(l, j)) {
            lower.push_back(l);
          }
        }
        P.is_meet_semilattice = std::any_of(lower.begin(), lower.end(), [&](std::size_t g) {
          return std::all_of(lower.begin(), lower.end(),
                             [&](std::size_t l) { return P.order.test(l, g); });
        });
      }
    }
    return P;
  }

  std::optional<std::vector<std::size_t>> order_isomorphism(IdealPoset const& a,
                                                            IdealPoset const& b) {
    std::size_t const k = a.size();
    if (b.size() != k) {
      return std::nullopt;
    }
    auto const sa = signature(a);
    auto const sb = signature(b);
    {
      auto x = sa, y = sb;
      std::sort(x.begin(), x.end());
      std::sort(y.begin(), y.end());
      if (x != y) {
        return std::nullopt;
      }
    }
    std::vector<std::size_t>  map(k);
    std::vector<std::uint8_t> used(k, 0);
    std::function<bool(std::size_t)> extend = [&](std::size_t i) {
      if (i == k) {
        return true;
      }
      for (std::size_t j = 0; j < k; ++j) {
        if (used[j] || sa[i] != sb[j]) {
          continue;
        }
        bool ok = true;
        for (std::size_t l = 0; l < i && ok; ++l) {
          ok = a.order.test(i, l) == b.order.test(j, map[l])
               && a.order.test(l, i) == b.order.test(map[l], j);
        }
        if (!ok) {
          continue;
        }
        map[i]  = j;
        used[j] = 1;
        if (extend(i + 1)) {
          return true;
        }
        used[j] = 0;
      }
      return false;
    };
    if (!extend(0)) {
      return std::nullopt;
    }
    return map;
  }

  InvariantsReport invariants_report(FiniteSemigroup const& S) {
    InvariantsReport r;
    auto const&      g = S.green();
    r.is_regular       = is_regular(S);
    r.regular_d_class_count
        = std::count(g.d_class_regular.begin(), g.d_class_regular.end(), std::uint8_t{1});
    r.principal_ideal_poset = principal_ideal_poset(S);
    std::set<std::vector<Elem>> prints;
    for (Elem e : S.idempotents()) {
      prints.insert(canonical_table(local_submonoid(S, e).semigroup));
    }
    r.local_monoid_fingerprints.assign(prints.begin(), prints.end());
    return r;
  }

  std::optional<std::string> invariants_mismatch(InvariantsReport const& a,
                                                 InvariantsReport const& b) {
    if (a.is_regular != b.is_regular) {
      return std::string("is_regular: ") + (a.is_regular ? "true" : "false") + " vs "
             + (b.is_regular ? "true" : "false");
    }
    if (a.regular_d_class_count != b.regular_d_class_count) {
      return "regular_d_class_count: " + std::to_string(a.regular_d_class_count) + " vs "
             + std::to_string(b.regular_d_class_count);
    }
    if (!order_isomorphism(a.principal_ideal_poset, b.principal_ideal_poset)) {
      return "principal_ideal_poset: " + std::to_string(a.principal_ideal_poset.size())
             + " vs " + std::to_string(b.principal_ideal_poset.size())
             + " J-classes, not order isomorphic";
    }
    if (a.local_monoid_fingerprints != b.local_monoid_fingerprints) {
      return "local_monoid_fingerprints: "
             + std::to_string(a.local_monoid_fingerprints.size()) + " vs "
             + std::to_string(b.local_monoid_fingerprints.size())
             + " isomorphism classes, not the same set";
    }
    return std::nullopt;
  }

  std::optional<Elem> group_corner(FiniteSemigroup const& S) {
    for (Elem e : S.idempotents()) {
      if (is_group(local_submonoid(S, e).semigroup) && generates_everything(S, e)) {
        return e;
      }
    }
    return std::nullopt;
  }

  CompletelySimpleReport completely_simple_equiv(FiniteSemigroup const& S) {
    if (!has_local_units(S)) {
      fail(ErrorCode::NoLocalUnits, "completely_simple_equiv needs local units");
    }
    CompletelySimpleReport r;
    r.completely_simple     = is_completely_simple(S);
    r.regular_locally_group = is_regular(S) && locally(S, "group");
    r.corner                = group_corner(S);
    r.group_corner          = r.corner.has_value();
    for (Elem e : S.idempotents()) {
      auto const local = local_submonoid(S, e).semigroup;
      if (is_group(local) && morita_equivalent(S, local)) {
        r.group_idempotent    = e;
        r.equivalent_to_group = true;
        break;
      }
    }
    return r;
  }

  bool group_corner_implies_completely_simple(FiniteSemigroup const& S) {
    return !group_corner(S) || is_completely_simple(S);
  }

  SemilatticeConsolidation semilattice_consolidation(FiniteSemigroup const& S) {
    if (!is_regular(S)) {
      fail(ErrorCode::HypothesesFail, "S is not regular");
    }
    if (!locally(S, "semilattice")) {
      fail(ErrorCode::HypothesesFail, "S is not locally a semilattice");
    }
    if (!principal_ideal_poset(S).is_meet_semilattice) {
      fail(ErrorCode::HypothesesFail, "the principal ideals do not form a meet semilattice");
    }

    auto              C     = cauchy_completion(S);
    auto const        leq   = natural_partial_order(S);
    auto const&       E     = C.idempotent_of;
    std::size_t const k     = E.size();
    std::vector<Arrow> entries(k * k);
    std::vector<std::uint8_t> in_set(S.size());
    for (Obj u = 0; u < k; ++u) {
      for (Obj v = 0; v < k; ++v) {
        Elem const e = E[u], f = E[v];
        std::fill(in_set.begin(), in_set.end(), 0);
        std::vector<Elem> members;
        for (Elem x = 0; x < S.size(); ++x) {
          Elem const y = S(S(e, x), f);
          if (!in_set[y]) {
            in_set[y] = 1;
            members.push_back(y);
          }
        }
        std::optional<Elem> top;
        for (Elem m : members) {
          bool const above_all = std::all_of(members.begin(), members.end(),
                                             [&](Elem a) { return leq.test(a, m); });
          if (above_all) {
            if (top) {
              fail(ErrorCode::NoMaximum, "two maxima in eSf for e = " + S.name(e)
                                             + ", f = " + S.name(f));
            }
            top = m;
          }
        }
        if (!top) {
          fail(ErrorCode::NoMaximum,
               "eSf has no maximum for e = " + S.name(e) + ", f = " + S.name(f));
        }
        entries[u * k + v] = C.arrow(e, *top, f);
      }
    }

    auto q  = Consolidation::make(C.category, std::move(entries));
    auto Cq = consolidate(C.category, q);
    if (!is_normal_band(Cq.semigroup)) {
      fail(ErrorCode::PipelineInvariantViolated,
           "semilattice_consolidation: the consolidated semigroup is not a normal band");
    }
    return {std::move(C), std::move(Cq)};
  }

  SemilatticeWitness semilattice_morita_witness(FiniteSemigroup const& S) {
    auto       cons  = semilattice_consolidation(S);
    auto const gamma = min_inverse_congruence(cons.consolidated.semigroup);
    auto       T     = quotient(gamma);
    if (!structural_predicate(T.semigroup, "semilattice")) {
      fail(ErrorCode::PipelineInvariantViolated,
           "semilattice_morita_witness: the quotient is not a semilattice");
    }
    auto report = check_local_isomorphism(T.projection);
    if (!report.holds()) {
      fail(ErrorCode::PipelineInvariantViolated,
           "semilattice_morita_witness: the projection is not a local isomorphism");
    }
    bool const agree = morita_equivalent(S, T.semigroup).has_value();
    if (!agree) {
      fail(ErrorCode::PipelineInvariantViolated,
           "semilattice_morita_witness: S and T are not Morita equivalent");
    }
    return {std::move(cons), gamma, std::move(T), std::move(report), agree};
  }

}  // namespace semi
