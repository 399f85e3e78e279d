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

#include "semi/acts.hpp"

#include <algorithm>
#include <functional>

#include "semi/error.hpp"
#include "semi/union_find.hpp"

namespace semi {

  namespace {
    constexpr Point kUnset = static_cast<Point>(-1);

    std::string point_str(std::size_t x) {
      return std::to_string(x);
    }

    // Value of fn on each class, or nothing if fn is not constant on some
    // class.
    template <typename Fn>
    std::optional<std::vector<Point>> on_classes(TensorProduct const& T, Fn&& fn) {
      std::vector<Point> out(T.number_of_classes(), kUnset);
      for (Point a = 0; a < T.left_size; ++a) {
        for (Point b = 0; b < T.right_size; ++b) {
          Point const value = fn(a, b);
          Point&      slot  = out[T(a, b)];
          if (slot == kUnset) {
            slot = value;
          } else if (slot != value) {
            return std::nullopt;
          }
        }
      }
      return out;
    }

    bool is_bijection(std::vector<Point> const& map, std::size_t target_size) {
      if (map.size() != target_size) {
        return false;
      }
      std::vector<std::uint8_t> hit(target_size, 0);
      for (Point y : map) {
        if (y >= target_size || hit[y]) {
          return false;
        }
        hit[y] = 1;
      }
      return true;
    }

    // Position of f in a lexicographically sorted list.
    std::optional<Point> find_map(std::vector<std::vector<Point>> const& sorted,
                                  std::vector<Point> const&              f) {
      auto it = std::lower_bound(sorted.begin(), sorted.end(), f);
      if (it == sorted.end() || *it != f) {
        return std::nullopt;
      }
      return static_cast<Point>(it - sorted.begin());
    }

    // The maps of hom_S(S, M) that lie in S hom_S(S, M), in order.
    std::vector<std::vector<Point>> unitary_maps(HomAct const& H, Subact const& SH) {
      std::vector<std::vector<Point>> out;
      out.reserve(SH.inclusion.size());
      for (Point i : SH.inclusion) {
        out.push_back(H.maps[i]);
      }
      return out;
    }
  }  // namespace

  ////////////////////////////////////////////////////////////////////////
  // FiniteAct
  ////////////////////////////////////////////////////////////////////////

  template <Side side>
  FiniteAct<side> FiniteAct<side>::make(FiniteSemigroup    S,
                                        std::size_t        m,
                                        std::vector<Point> table) {
    std::size_t const n = S.size();
    if (table.size() != n * m) {
      fail(ErrorCode::NotAnAct,
           "action table has " + point_str(table.size()) + " entries, expected "
               + point_str(n * m));
    }
    for (std::size_t i = 0; i < table.size(); ++i) {
      if (table[i] >= m) {
        fail(ErrorCode::NotAnAct,
             "entry " + point_str(table[i]) + " for s = " + point_str(i / m)
                 + ", x = " + point_str(i % m) + " is out of range");
      }
    }
    auto at = [&](Elem s, Point x) { return table[s * m + x]; };
    for (Elem s = 0; s < n; ++s) {
      for (Elem t = 0; t < n; ++t) {
        for (Point x = 0; x < m; ++x) {
          bool holds;
          if constexpr (side == Side::left) {
            holds = at(S(s, t), x) == at(s, at(t, x));
          } else {
            holds = at(S(s, t), x) == at(t, at(s, x));
          }
          if (!holds) {
            fail(ErrorCode::NotAnAct,
                 "action law fails for s = " + S.name(s) + ", t = " + S.name(t)
                     + ", x = " + point_str(x));
          }
        }
      }
    }
    return FiniteAct(std::move(S), m, std::move(table));
  }

  template <Side side>
  FiniteAct<side> FiniteAct<side>::regular(FiniteSemigroup const& S) {
    std::size_t const  n = S.size();
    std::vector<Point> table(n * n);
    for (Elem s = 0; s < n; ++s) {
      for (Elem x = 0; x < n; ++x) {
        table[s * n + x] = side == Side::left ? S(s, x) : S(x, s);
      }
    }
    return FiniteAct(S, n, std::move(table));
  }

  template class FiniteAct<Side::left>;
  template class FiniteAct<Side::right>;

  ////////////////////////////////////////////////////////////////////////
  // FiniteBiact
  ////////////////////////////////////////////////////////////////////////

  FiniteBiact FiniteBiact::make(FiniteLeftAct left, FiniteRightAct right) {
    if (left.size() != right.size()) {
      fail(ErrorCode::NotAnAct, "left and right actions have different carriers");
    }
    auto const& S = left.semigroup();
    auto const& T = right.semigroup();
    for (Elem s = 0; s < S.size(); ++s) {
      for (Elem t = 0; t < T.size(); ++t) {
        for (Point x = 0; x < left.size(); ++x) {
          if (right.act(t, left.act(s, x)) != left.act(s, right.act(t, x))) {
            fail(ErrorCode::NotAnAct,
                 "actions do not commute at s = " + S.name(s) + ", t = " + T.name(t)
                     + ", x = " + point_str(x));
          }
        }
      }
    }
    return FiniteBiact(std::move(left), std::move(right));
  }

  FiniteBiact FiniteBiact::regular(FiniteSemigroup const& S) {
    return FiniteBiact(FiniteLeftAct::regular(S), FiniteRightAct::regular(S));
  }

  ////////////////////////////////////////////////////////////////////////
  // Tensor products
  ////////////////////////////////////////////////////////////////////////

  TensorProduct tensor(FiniteRightAct const& A, FiniteLeftAct const& B) {
    if (!A.semigroup().same_table(B.semigroup())) {
      fail(ErrorCode::BadParams, "tensor factors act by different semigroups");
    }
    std::size_t const na = A.size(), nb = B.size();
    UnionFind         uf(na * nb);
    for (Elem s = 0; s < A.semigroup().size(); ++s) {
      for (Point a = 0; a < na; ++a) {
        for (Point b = 0; b < nb; ++b) {
          uf.unite(static_cast<std::uint32_t>(A.act(s, a) * nb + b),
                   static_cast<std::uint32_t>(a * nb + B.act(s, b)));
        }
      }
    }
    TensorProduct out;
    out.left_size  = na;
    out.right_size = nb;
    out.class_of.assign(na * nb, 0);
    auto const                 least = uf.least_representatives();
    std::vector<std::uint32_t> number(na * nb, kUnset);
    for (std::uint32_t i = 0; i < na * nb; ++i) {
      if (least[i] == i) {
        number[i] = static_cast<std::uint32_t>(out.representative.size());
        out.representative.emplace_back(i / nb, i % nb);
      }
      out.class_of[i] = number[least[i]];
    }
    return out;
  }

  LeftTensor tensor_with_semigroup(FiniteLeftAct const& X) {
    auto const&   S       = X.semigroup();
    TensorProduct classes = tensor(FiniteRightAct::regular(S), X);
    std::size_t const  k  = classes.number_of_classes();
    std::vector<Point> table(S.size() * k);
    for (Elem t = 0; t < S.size(); ++t) {
      for (Point c = 0; c < k; ++c) {
        auto [s, x]      = classes.representative[c];
        table[t * k + c] = classes(S(t, s), x);
      }
    }
    auto act = FiniteLeftAct::make(S, k, std::move(table));
    return {std::move(classes), std::move(act)};
  }

  BiactTensor tensor(FiniteBiact const& P, FiniteBiact const& Q) {
    TensorProduct      classes = tensor(P.right(), Q.left());
    std::size_t const  k       = classes.number_of_classes();
    auto const&        S       = P.left().semigroup();
    auto const&        U       = Q.right().semigroup();
    std::vector<Point> left(S.size() * k), right(U.size() * k);
    for (Point c = 0; c < k; ++c) {
      auto [p, q] = classes.representative[c];
      for (Elem s = 0; s < S.size(); ++s) {
        left[s * k + c] = classes(P.left().act(s, p), q);
      }
      for (Elem u = 0; u < U.size(); ++u) {
        right[u * k + c] = classes(p, Q.right().act(u, q));
      }
    }
    auto biact = FiniteBiact::make(FiniteLeftAct::make(S, k, std::move(left)),
                                   FiniteRightAct::make(U, k, std::move(right)));
    return {std::move(classes), std::move(biact)};
  }

  ////////////////////////////////////////////////////////////////////////
  // Unitary acts and subacts
  ////////////////////////////////////////////////////////////////////////

  template <Side side>
  bool is_unitary(FiniteAct<side> const& X) {
    std::vector<std::uint8_t> hit(X.size(), 0);
    for (Point y : X.table()) {
      hit[y] = 1;
    }
    return std::all_of(hit.begin(), hit.end(), [](auto h) { return h != 0; });
  }

  template bool is_unitary(FiniteLeftAct const&);
  template bool is_unitary(FiniteRightAct const&);

  Subact unitary_part(FiniteLeftAct const& X) {
    std::vector<Point> inclusion(X.table());
    std::sort(inclusion.begin(), inclusion.end());
    inclusion.erase(std::unique(inclusion.begin(), inclusion.end()), inclusion.end());
    std::vector<Point> index(X.size(), kUnset);
    for (Point i = 0; i < inclusion.size(); ++i) {
      index[inclusion[i]] = i;
    }
    std::size_t const  k = inclusion.size();
    auto const&        S = X.semigroup();
    std::vector<Point> table(S.size() * k);
    for (Elem s = 0; s < S.size(); ++s) {
      for (Point i = 0; i < k; ++i) {
        table[s * k + i] = index[X.act(s, inclusion[i])];
      }
    }
    return {FiniteLeftAct::make(S, k, std::move(table)), std::move(inclusion)};
  }

  bool is_act_homomorphism(FiniteLeftAct const&      X,
                           FiniteLeftAct const&      Y,
                           std::vector<Point> const& map) {
    if (map.size() != X.size()) {
      return false;
    }
    for (Elem s = 0; s < X.semigroup().size(); ++s) {
      for (Point x = 0; x < X.size(); ++x) {
        if (map[x] >= Y.size() || map[X.act(s, x)] != Y.act(s, map[x])) {
          return false;
        }
      }
    }
    return true;
  }

  std::optional<std::vector<Point>> find_act_isomorphism(FiniteLeftAct const& X,
                                                         FiniteLeftAct const& Y) {
    if (X.size() != Y.size() || !X.semigroup().same_table(Y.semigroup())) {
      return std::nullopt;
    }
    std::size_t const  m = X.size();
    std::size_t const  n = X.semigroup().size();
    std::vector<Point> fwd(m, kUnset), bwd(m, kUnset);
    std::vector<Point> trail;

    // Assigns x -> y and everything it forces; false on a clash.
    auto assign = [&](Point x0, Point y0) {
      std::vector<std::pair<Point, Point>> work{{x0, y0}};
      while (!work.empty()) {
        auto [x, y] = work.back();
        work.pop_back();
        if (fwd[x] != kUnset || bwd[y] != kUnset) {
          if (fwd[x] != y) {
            return false;
          }
          continue;
        }
        fwd[x] = y;
        bwd[y] = x;
        trail.push_back(x);
        for (Elem s = 0; s < n; ++s) {
          work.emplace_back(X.act(s, x), Y.act(s, y));
        }
      }
      return true;
    };
    auto undo = [&](std::size_t mark) {
      while (trail.size() > mark) {
        bwd[fwd[trail.back()]] = kUnset;
        fwd[trail.back()]      = kUnset;
        trail.pop_back();
      }
    };

    std::function<bool(Point)> search = [&](Point from) {
      while (from < m && fwd[from] != kUnset) {
        ++from;
      }
      if (from == m) {
        return true;
      }
      for (Point y = 0; y < m; ++y) {
        if (bwd[y] != kUnset) {
          continue;
        }
        std::size_t const mark = trail.size();
        if (assign(from, y) && search(from + 1)) {
          return true;
        }
        undo(mark);
      }
      return false;
    };
    if (!search(0)) {
      return std::nullopt;
    }
    return fwd;
  }

  ////////////////////////////////////////////////////////////////////////
  // mu, hom and Se
  ////////////////////////////////////////////////////////////////////////

  namespace {
    template <typename Fn>
    MuMap finish_mu(TensorProduct classes, std::size_t m, Fn&& fn) {
      MuMap out;
      out.classes = std::move(classes);
      auto map    = on_classes(out.classes, fn);
      if (!map) {
        fail(ErrorCode::PipelineInvariantViolated, "the action map is not well defined");
      }
      out.map = std::move(*map);
      std::vector<std::uint8_t> hit(m, 0);
      out.injective = true;
      for (Point y : out.map) {
        out.injective = out.injective && !hit[y];
        hit[y]        = 1;
      }
      out.surjective = std::all_of(hit.begin(), hit.end(), [](auto h) { return h != 0; });
      return out;
    }
  }  // namespace

  MuMap mu_map(FiniteLeftAct const& X) {
    return finish_mu(tensor(FiniteRightAct::regular(X.semigroup()), X),
                     X.size(),
                     [&](Point s, Point x) { return X.act(s, x); });
  }

  MuMap mu_map(FiniteRightAct const& X) {
    return finish_mu(tensor(X, FiniteLeftAct::regular(X.semigroup())),
                     X.size(),
                     [&](Point x, Point s) { return X.act(s, x); });
  }

  bool is_closed(FiniteLeftAct const& X) {
    return mu_map(X).closed();
  }

  bool is_closed(FiniteRightAct const& X) {
    return mu_map(X).closed();
  }

  HomAct hom_act(FiniteLeftAct const& M, std::size_t guard) {
    auto const&       S = M.semigroup();
    std::size_t const n = S.size();
    std::size_t const m = M.size();
    std::size_t       candidates = 1;
    for (std::size_t i = 0; i < n && m > 1; ++i) {
      candidates *= m;
      if (candidates > guard) {
        fail(ErrorCode::EnumerationTooLarge,
             "hom(S, M) has " + point_str(m) + "^" + point_str(n)
                 + " candidate functions");
      }
    }
    // Constraint (s, x): f(sx) = s f(x), checked once both sx and x have
    // values, i.e. at position max(sx, x).
    std::vector<std::vector<std::pair<Elem, Elem>>> due(n);
    for (Elem s = 0; s < n; ++s) {
      for (Elem x = 0; x < n; ++x) {
        due[std::max(S(s, x), x)].emplace_back(s, x);
      }
    }
    HomAct             out{FiniteLeftAct::make(S, 0, {}), {}};
    std::vector<Point> f(n, 0);
    std::function<void(std::size_t)> extend = [&](std::size_t k) {
      if (k == n) {
        out.maps.push_back(f);
        return;
      }
      for (Point v = 0; v < m; ++v) {
        f[k]    = v;
        bool ok = std::all_of(due[k].begin(), due[k].end(), [&](auto const& c) {
          return f[S(c.first, c.second)] == M.act(c.first, f[c.second]);
        });
        if (ok) {
          extend(k + 1);
        }
      }
    };
    if (m > 0) {
      extend(0);
    }

    std::size_t const  k = out.maps.size();
    std::vector<Point> table(n * k);
    std::vector<Point> g(n);
    for (Elem s = 0; s < n; ++s) {
      for (Point i = 0; i < k; ++i) {
        for (Elem x = 0; x < n; ++x) {
          g[x] = out.maps[i][S(x, s)];
        }
        auto j = find_map(out.maps, g);
        if (!j) {
          fail(ErrorCode::PipelineInvariantViolated, "s.f left hom(S, M)");
        }
        table[s * k + i] = *j;
      }
    }
    out.act = FiniteLeftAct::make(S, k, std::move(table));
    return out;
  }

  PrincipalLeftAct act_Se(FiniteSemigroup const& S, Elem e) {
    if (e >= S.size() || !S.is_idempotent(e)) {
      fail(ErrorCode::NotIdempotent, "element " + point_str(e) + " is not an idempotent");
    }
    std::vector<Elem> carrier;
    for (Elem s = 0; s < S.size(); ++s) {
      carrier.push_back(S(s, e));
    }
    std::sort(carrier.begin(), carrier.end());
    carrier.erase(std::unique(carrier.begin(), carrier.end()), carrier.end());
    std::size_t const  k = carrier.size();
    std::vector<Point> table(S.size() * k);
    for (Elem s = 0; s < S.size(); ++s) {
      for (Point i = 0; i < k; ++i) {
        auto it = std::lower_bound(carrier.begin(), carrier.end(), S(s, carrier[i]));
        table[s * k + i] = static_cast<Point>(it - carrier.begin());
      }
    }
    PrincipalLeftAct out{FiniteLeftAct::make(S, k, std::move(table)), std::move(carrier)};
    if (!is_closed(out.act)) {
      fail(ErrorCode::PipelineInvariantViolated,
           "S" + S.name(e) + " is not closed");
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // verify_adjunction
  ////////////////////////////////////////////////////////////////////////

  AdjunctionReport verify_adjunction(FiniteLeftAct const& M, std::size_t guard) {
    auto const& S = M.semigroup();
    if (!has_local_units(S)) {
      fail(ErrorCode::NoLocalUnits, "the semigroup does not have local units");
    }
    if (!is_unitary(M)) {
      fail(ErrorCode::BadParams, "the act is not unitary");
    }
    AdjunctionReport report;
    auto const       regular = FiniteRightAct::regular(S);

    auto const mu     = mu_map(M);
    report.closed     = mu.closed();
    auto const SM     = tensor_with_semigroup(M);
    report.isomorphic = find_act_isomorphism(SM.act, M).has_value();
    auto const& T1    = SM.classes;

    // epsilon_M : S (x) S hom(S, M) -> M and 1 (x) rho_M.
    auto const H    = hom_act(M, guard);
    auto const SH   = unitary_part(H.act);
    auto const maps = unitary_maps(H, SH);
    auto const T2   = tensor(regular, SH.act);
    auto const eps  = on_classes(T2, [&](Point s, Point h) { return maps[h][s]; });
    if (!eps) {
      report.failures.push_back("epsilon_M is not well defined");
    } else {
      report.counit_bijective = is_bijection(*eps, M.size());
    }

    std::vector<Point> rho(M.size(), kUnset);
    for (Point m = 0; m < M.size(); ++m) {
      std::vector<Point> f(S.size());
      for (Elem x = 0; x < S.size(); ++x) {
        f[x] = M.act(x, m);
      }
      if (auto i = find_map(maps, f)) {
        rho[m] = *i;
      } else {
        report.failures.push_back("rho_" + point_str(m) + " is not in S hom(S, M)");
      }
    }
    if (std::find(rho.begin(), rho.end(), kUnset) == rho.end()) {
      auto one_rho = on_classes(T1, [&](Point s, Point m) { return T2(s, rho[m]); });
      report.one_tensor_rho_bijective
          = one_rho && is_bijection(*one_rho, T2.number_of_classes());
    }
    if (!report.one_tensor_rho_bijective) {
      report.failures.push_back("1 (x) rho_M is not a bijection");
    }

    // The unit and counit at S (x) M.
    auto const H2    = hom_act(SM.act, guard);
    auto const SH2   = unitary_part(H2.act);
    auto const maps2 = unitary_maps(H2, SH2);
    auto const T3    = tensor(regular, SH2.act);
    std::vector<Point> eta(M.size(), kUnset);
    for (Point m = 0; m < M.size(); ++m) {
      std::vector<Point> f(S.size());
      for (Elem s = 0; s < S.size(); ++s) {
        f[s] = T1(s, m);
      }
      if (auto i = find_map(maps2, f)) {
        eta[m] = *i;
      } else {
        report.failures.push_back("eta_M(" + point_str(m) + ") is not in S hom(S, S (x) M)");
      }
    }
    auto const eps2 = on_classes(T3, [&](Point s, Point h) { return maps2[h][s]; });
    if (!eps2) {
      report.failures.push_back("epsilon_{S (x) M} is not well defined");
    }
    if (eps2 && std::find(eta.begin(), eta.end(), kUnset) == eta.end()) {
      auto unit = on_classes(T1, [&](Point s, Point m) { return T3(s, eta[m]); });
      if (!unit) {
        report.failures.push_back("1 (x) eta_M is not well defined");
      } else {
        report.unit_then_counit_identity = true;
        for (Point c = 0; c < T1.number_of_classes(); ++c) {
          report.unit_then_counit_identity
              = report.unit_then_counit_identity && (*eps2)[(*unit)[c]] == c;
        }
        report.counit_then_unit_identity = true;
        for (Point d = 0; d < T3.number_of_classes(); ++d) {
          report.counit_then_unit_identity
              = report.counit_then_unit_identity && (*unit)[(*eps2)[d]] == d;
        }
      }
    }
    if (!report.unit_then_counit_identity) {
      report.failures.push_back("epsilon_{S (x) M} after 1 (x) eta_M is not the identity");
    }
    if (!report.counit_then_unit_identity) {
      report.failures.push_back("1 (x) eta_M after epsilon_{S (x) M} is not the identity");
    }
    if (!report.conditions_agree()) {
      report.failures.push_back("closed, S (x) M ~ M and epsilon_M bijective disagree");
    }
    return report;
  }

  ////////////////////////////////////////////////////////////////////////
  // all_left_acts
  ////////////////////////////////////////////////////////////////////////

  std::vector<FiniteLeftAct> all_left_acts(FiniteSemigroup const& S,
                                           std::size_t            m,
                                           std::size_t            guard) {
    std::size_t const n     = S.size();
    std::size_t const cells = n * m;
    std::size_t       count = 1;
    for (std::size_t i = 0; i < cells && m > 1; ++i) {
      count *= m;
      if (count > guard) {
        fail(ErrorCode::EnumerationTooLarge,
             point_str(m) + "^" + point_str(cells) + " action tables");
      }
    }
    if (m == 0) {
      return {FiniteLeftAct::make(S, 0, {})};
    }
    // Table i has cell k equal to digit k of i in base m, most significant
    // first, so ascending i is lexicographic order.
    auto decode = [&](std::size_t i, std::vector<Point>& table) {
      for (std::size_t k = cells; k-- > 0;) {
        table[k] = static_cast<Point>(i % m);
        i /= m;
      }
    };
    std::vector<std::uint8_t> valid(count, 0);
    auto const                total = static_cast<std::int64_t>(count);
#pragma omp parallel
    {
      std::vector<Point> table(cells);
#pragma omp for schedule(static)
      for (std::int64_t i = 0; i < total; ++i) {
        decode(static_cast<std::size_t>(i), table);
        bool ok = true;
        for (Elem s = 0; s < n && ok; ++s) {
          for (Elem t = 0; t < n && ok; ++t) {
            for (Point x = 0; x < m && ok; ++x) {
              ok = table[S(s, t) * m + x] == table[s * m + table[t * m + x]];
            }
          }
        }
        valid[static_cast<std::size_t>(i)] = ok;
      }
    }
    std::vector<FiniteLeftAct> out;
    std::vector<Point>         table(cells);
    for (std::size_t i = 0; i < count; ++i) {
      if (valid[i]) {
        decode(i, table);
        out.push_back(FiniteLeftAct::make(S, m, table));
      }
    }
    return out;
  }

}  // namespace semi
