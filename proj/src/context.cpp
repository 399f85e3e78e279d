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

#include "semi/context.hpp"

#include <algorithm>

#include "semi/error.hpp"
#include "semi/kernels.hpp"
#include "semi/morita.hpp"

namespace semi {

  namespace {
    constexpr Elem kNone = static_cast<Elem>(-1);

    std::string at(std::initializer_list<std::pair<char const*, std::size_t>> values) {
      std::string out = " at";
      for (auto const& [name, value] : values) {
        out += std::string(" ") + name + " = " + std::to_string(value);
      }
      return out;
    }

    bool covers(std::vector<Elem> const& values, std::size_t n) {
      std::vector<std::uint8_t> hit(n, 0);
      for (Elem v : values) {
        if (v < n) {
          hit[v] = 1;
        }
      }
      return std::all_of(hit.begin(), hit.end(), [](auto h) { return h != 0; });
    }

    // The pairing on tensor classes is injective; pair(a, b) must already be
    // known to be constant on classes.
    template <typename Fn>
    bool injective_on_classes(TensorProduct const& classes, std::size_t n, Fn&& pair) {
      std::vector<std::uint8_t> hit(n, 0);
      for (auto [a, b] : classes.representative) {
        Elem const v = pair(a, b);
        if (hit[v]) {
          return false;
        }
        hit[v] = 1;
      }
      return true;
    }
  }  // namespace

  ContextReport verify_context(MoritaContext const& ctx) {
    ContextReport r;
    auto const&   S  = ctx.S;
    auto const&   T  = ctx.T;
    auto const&   P  = ctx.P;
    auto const&   Q  = ctx.Q;
    std::size_t const np = P.size(), nq = Q.size();
    auto fail_clause = [&](bool& flag, std::string what) {
      if (flag) {
        flag = false;
        r.failures.push_back(std::move(what));
      }
    };

    r.biacts = P.left().semigroup().same_table(S) && P.right().semigroup().same_table(T)
               && Q.left().semigroup().same_table(T) && Q.right().semigroup().same_table(S);
    if (!r.biacts) {
      r.failures.push_back("biacts are over the wrong semigroups");
    } else {
      try {
        FiniteBiact::make(P.left(), P.right());
        FiniteBiact::make(Q.left(), Q.right());
      } catch (Error const& e) {
        fail_clause(r.biacts, e.what());
      }
    }
    bool const in_range
        = ctx.pair_pq.size() == np * nq && ctx.pair_qp.size() == nq * np
          && std::all_of(ctx.pair_pq.begin(), ctx.pair_pq.end(),
                         [&](Elem s) { return s < S.size(); })
          && std::all_of(ctx.pair_qp.begin(), ctx.pair_qp.end(),
                         [&](Elem t) { return t < T.size(); });
    if (!r.biacts || !in_range) {
      if (!in_range) {
        r.failures.push_back("pairing tables have the wrong shape or values");
      }
      return r;
    }

    r.balanced = r.equivariant = r.left_exchange = r.right_exchange = true;
    for (Point p = 0; p < np; ++p) {
      for (Point q = 0; q < nq; ++q) {
        for (Elem t = 0; t < T.size(); ++t) {
          if (ctx.pairing(P.right().act(t, p), q) != ctx.pairing(p, Q.left().act(t, q))) {
            fail_clause(r.balanced, "<pt, q> != <p, tq>" + at({{"p", p}, {"q", q}, {"t", t}}));
          }
          if (ctx.bracket(Q.left().act(t, q), p) != T(t, ctx.bracket(q, p))
              || ctx.bracket(q, P.right().act(t, p)) != T(ctx.bracket(q, p), t)) {
            fail_clause(r.equivariant,
                        "[-,-] is not a (T, T)-map" + at({{"q", q}, {"p", p}, {"t", t}}));
          }
        }
        for (Elem s = 0; s < S.size(); ++s) {
          if (ctx.bracket(Q.right().act(s, q), p) != ctx.bracket(q, P.left().act(s, p))) {
            fail_clause(r.balanced, "[qs, p] != [q, sp]" + at({{"q", q}, {"p", p}, {"s", s}}));
          }
          if (ctx.pairing(P.left().act(s, p), q) != S(s, ctx.pairing(p, q))
              || ctx.pairing(p, Q.right().act(s, q)) != S(ctx.pairing(p, q), s)) {
            fail_clause(r.equivariant,
                        "<-,-> is not an (S, S)-map" + at({{"p", p}, {"q", q}, {"s", s}}));
          }
        }
        for (Point p2 = 0; p2 < np; ++p2) {
          if (P.left().act(ctx.pairing(p, q), p2) != P.right().act(ctx.bracket(q, p2), p)) {
            fail_clause(r.left_exchange,
                        "<p, q>p' != p[q, p']" + at({{"p", p}, {"q", q}, {"p'", p2}}));
          }
        }
        for (Point q2 = 0; q2 < nq; ++q2) {
          if (Q.right().act(ctx.pairing(p, q2), q) != Q.left().act(ctx.bracket(q, p), q2)) {
            fail_clause(r.right_exchange,
                        "q<p, q'> != [q, p]q'" + at({{"q", q}, {"p", p}, {"q'", q2}}));
          }
        }
      }
    }

    r.local_units = has_local_units(S) && has_local_units(T);
    if (!r.local_units) {
      r.failures.push_back("S or T lacks local units");
    }
    r.unitary = is_unitary(P.left()) && is_unitary(P.right()) && is_unitary(Q.left())
                && is_unitary(Q.right());
    if (!r.unitary) {
      r.failures.push_back("P or Q is not unitary");
    }
    r.left_closed = is_closed(P.left()) && is_closed(Q.left());
    if (!r.left_closed) {
      r.failures.push_back("P or Q is not closed as a left act");
    }
    r.right_closed = is_closed(P.right()) && is_closed(Q.right());

    r.surjective = covers(ctx.pair_pq, S.size()) && covers(ctx.pair_qp, T.size());
    if (r.surjective) {
      if (!r.right_closed) {
        r.failures.push_back("P or Q is not closed as a right act");
      }
      if (r.balanced) {
        auto const PQ = tensor(P.right(), Q.left());
        auto const QP = tensor(Q.right(), P.left());
        r.injective
            = injective_on_classes(PQ, S.size(),
                                   [&](Point p, Point q) { return ctx.pairing(p, q); })
              && injective_on_classes(QP, T.size(),
                                      [&](Point q, Point p) { return ctx.bracket(q, p); });
        if (!*r.injective) {
          r.failures.push_back("a surjective pairing is not injective on tensor classes");
        }
      }
    }
    return r;
  }

  EnlargementContext context_from_enlargement(FiniteSemigroup const& R,
                                              std::span<Elem const>  s_sub,
                                              std::span<Elem const>  t_sub) {
    if (!is_enlargement(R, s_sub) || !is_enlargement(R, t_sub)) {
      fail(ErrorCode::NotAnEnlargement, "R does not enlarge both subsemigroups");
    }
    std::size_t const n     = R.size();
    auto const        table = R.table();
    auto flags = [&](std::span<Elem const> sub) {
      std::vector<std::uint8_t> out(n, 0);
      for (Elem x : sub) {
        out[x] = 1;
      }
      return out;
    };
    auto elements = [&](std::vector<std::uint8_t> const& f) {
      std::vector<Elem> out;
      for (Elem x = 0; x < n; ++x) {
        if (f[x]) {
          out.push_back(x);
        }
      }
      return out;
    };
    auto position = [&](std::vector<Elem> const& sorted, Elem x) {
      auto it = std::lower_bound(sorted.begin(), sorted.end(), x);
      return it != sorted.end() && *it == x ? static_cast<Elem>(it - sorted.begin()) : kNone;
    };
    namespace par = kernels::parallel;
    std::vector<std::uint8_t> const all(n, 1);
    auto const fs = flags(s_sub), ft = flags(t_sub);
    auto const P  = elements(par::set_product(table, n, par::set_product(table, n, fs, all), ft));
    auto const Q  = elements(par::set_product(table, n, par::set_product(table, n, ft, all), fs));
    std::vector<Elem> const S_el(s_sub.begin(), s_sub.end()), T_el(t_sub.begin(), t_sub.end());
    auto const S = subsemigroup(R, S_el).semigroup;
    auto const T = subsemigroup(R, T_el).semigroup;

    // Action of the elements `by` (listed in R) on the carrier, multiplying
    // on the given side; the product must stay in the carrier.
    auto action = [&](std::vector<Elem> const& by, std::vector<Elem> const& carrier,
                      bool on_left) {
      std::vector<Point> out(by.size() * carrier.size());
      for (std::size_t i = 0; i < by.size(); ++i) {
        for (std::size_t c = 0; c < carrier.size(); ++c) {
          Elem const v = on_left ? R(by[i], carrier[c]) : R(carrier[c], by[i]);
          Elem const k = position(carrier, v);
          if (k == kNone) {
            fail(ErrorCode::PipelineInvariantViolated, "a product left P or Q");
          }
          out[i * carrier.size() + c] = k;
        }
      }
      return out;
    };
    auto biact = [&](FiniteSemigroup const& L, std::vector<Elem> const& l_el,
                     FiniteSemigroup const& Rt, std::vector<Elem> const& r_el,
                     std::vector<Elem> const& carrier) {
      return FiniteBiact::make(
          FiniteLeftAct::make(L, carrier.size(), action(l_el, carrier, true)),
          FiniteRightAct::make(Rt, carrier.size(), action(r_el, carrier, false)));
    };
    auto pairing = [&](std::vector<Elem> const& X, std::vector<Elem> const& Y,
                       std::vector<Elem> const& into) {
      std::vector<Elem> out(X.size() * Y.size());
      for (std::size_t i = 0; i < X.size(); ++i) {
        for (std::size_t j = 0; j < Y.size(); ++j) {
          Elem const k = position(into, R(X[i], Y[j]));
          if (k == kNone) {
            fail(ErrorCode::PipelineInvariantViolated, "a pairing value left S' or T'");
          }
          out[i * Y.size() + j] = k;
        }
      }
      return out;
    };

    MoritaContext ctx{S,
                      T,
                      biact(S, S_el, T, T_el, P),
                      biact(T, T_el, S, S_el, Q),
                      pairing(P, Q, S_el),
                      pairing(Q, P, T_el)};
    auto report = verify_context(ctx);
    if (!report.ok() || !report.is_unitary_context() || !report.surjective
        || !report.right_closed || report.injective != true) {
      fail(ErrorCode::PipelineInvariantViolated,
           "the enlargement context fails: "
               + (report.failures.empty() ? std::string("a clause") : report.failures.front()));
    }
    return {std::move(ctx), P, Q, std::move(report)};
  }

}  // namespace semi
