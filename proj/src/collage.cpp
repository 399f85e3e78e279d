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

#include "semi/collage.hpp"

#include "semi/error.hpp"

namespace semi {

  namespace {
    constexpr ArrowType kAA{Part::A, Part::A};
    constexpr ArrowType kAB{Part::A, Part::B};
    constexpr ArrowType kBA{Part::B, Part::A};
    constexpr ArrowType kBB{Part::B, Part::B};

    [[noreturn]] void violated(std::string const& what) {
      fail(ErrorCode::PipelineInvariantViolated, "collage: " + what);
    }

    Arrow circ(FiniteCategory const& C, Consolidation const& r, Arrow x, Arrow y) {
      return C.compose(C.compose(x, r(C.right(x), C.left(y))), y);
    }
  }  // namespace

  std::string to_string(ArrowType t) {
    std::string out;
    out += t.left == Part::A ? 'A' : 'B';
    out += t.right == Part::A ? 'A' : 'B';
    return out;
  }

  Bipartite collage(Functor const& F) {
    if (!is_equivalence(F)) {
      fail(ErrorCode::NotAnEquivalence,
           "the functor is not full, faithful and essentially surjective");
    }
    FiniteCategory const& A  = F.source;
    FiniteCategory const& B  = F.target;
    auto const            na = A.number_of_objects();
    auto const            nb = B.number_of_objects();
    auto const            ma = A.number_of_arrows();
    auto const            mb = B.number_of_arrows();

    Bipartite out;
    out.a         = A;
    out.b         = B;
    out.a_objects = na;

    std::vector<Obj>         left, right;
    std::vector<std::string> labels;
    auto add = [&](Obj l, Obj r, ArrowType t, Arrow payload, std::string label) {
      left.push_back(l);
      right.push_back(r);
      out.types.push_back(t);
      out.payload.push_back(payload);
      labels.push_back(std::move(label));
      return static_cast<Arrow>(out.payload.size() - 1);
    };

    for (Arrow x = 0; x < ma; ++x) {
      out.from_a.push_back(add(A.left(x), A.right(x), kAA, x, "A" + A.label(x)));
    }
    for (Arrow y = 0; y < mb; ++y) {
      out.from_b.push_back(
          add(out.b_object(B.left(y)), out.b_object(B.right(y)), kBB, y, "B" + B.label(y)));
    }
    // ab[a * mb + y] is the AB arrow with left a carrying y : F a -> b.
    std::vector<Arrow> ab(na * mb, kNoArrow), ba(na * mb, kNoArrow);
    for (Obj a = 0; a < na; ++a) {
      for (Arrow y : B.out(F.objects[a])) {
        ab[a * mb + y] = add(a, out.b_object(B.right(y)), kAB, y,
                             "AB[" + std::to_string(a) + "]" + B.label(y));
      }
    }
    for (Obj a = 0; a < na; ++a) {
      for (Obj v = 0; v < nb; ++v) {
        for (Arrow y : B.hom(v, F.objects[a])) {
          ba[a * mb + y] = add(out.b_object(v), a, kBA, y,
                               "BA[" + std::to_string(a) + "]" + B.label(y));
        }
      }
    }
    // lift[(a * na + a2) * mb + z] is the A arrow a -> a2 over z.
    std::vector<Arrow> lift(na * na * mb, kNoArrow);
    for (Arrow x = 0; x < ma; ++x) {
      lift[(A.left(x) * na + A.right(x)) * mb + F.arrows[x]] = x;
    }

    std::vector<Arrow> ids;
    for (Obj a = 0; a < na; ++a) {
      ids.push_back(out.from_a[A.identity(a)]);
    }
    for (Obj v = 0; v < nb; ++v) {
      ids.push_back(out.from_b[B.identity(v)]);
    }

    auto const& types   = out.types;
    auto const& payload = out.payload;
    auto const& from_a  = out.from_a;
    auto const& from_b  = out.from_b;
    auto compose = [&](Arrow x, Arrow y) -> Arrow {
      ArrowType const tx = types[x];
      ArrowType const ty = types[y];
      Arrow const     px = payload[x];
      Arrow const     py = payload[y];
      if (tx == kAA && ty == kAA) {
        return from_a[A.compose(px, py)];
      }
      if (tx == kAA && ty == kAB) {
        return ab[left[x] * mb + B.compose(F.arrows[px], py)];
      }
      if (tx == kAB && ty == kBB) {
        return ab[left[x] * mb + B.compose(px, py)];
      }
      if (tx == kAB && ty == kBA) {
        return from_a[lift[(left[x] * na + right[y]) * mb + B.compose(px, py)]];
      }
      if (tx == kBA && ty == kAA) {
        return ba[right[y] * mb + B.compose(px, F.arrows[py])];
      }
      if (tx == kBA && ty == kAB) {
        return from_b[B.compose(px, py)];
      }
      if (tx == kBB && ty == kBA) {
        return ba[right[y] * mb + B.compose(px, py)];
      }
      return from_b[B.compose(px, py)];
    };
    auto const m = out.payload.size();
    out.category = FiniteCategory::make(na + nb, left, right, std::move(ids), compose,
                                        std::move(labels), false);

    try {
      out.category.validate();
    } catch (Error const& e) {
      violated(e.what());
    }
    for (Arrow x = 0; x < m; ++x) {
      for (Arrow y : out.category.out(out.category.right(x))) {
        ArrowType const t = types[out.category.compose(x, y)];
        if (t.left != types[x].left || t.right != types[y].right) {
          violated("arrow types do not multiply as a rectangular band");
        }
      }
    }
    // The parts are full subcategories isomorphic to A and B.
    for (Obj u = 0; u < na + nb; ++u) {
      for (Obj v = 0; v < na + nb; ++v) {
        std::size_t expected = 0;
        if (u < na && v < na) {
          expected = A.hom(u, v).size();
        } else if (u >= na && v >= na) {
          expected = B.hom(u - na, v - na).size();
        } else {
          continue;
        }
        if (out.category.hom(u, v).size() != expected) {
          violated("a part is not a full subcategory");
        }
      }
    }
    for (Obj u = 0; u < na + nb; ++u) {
      bool found = false;
      for (Obj v = u < na ? na : 0; v < (u < na ? na + nb : na) && !found; ++v) {
        found = least_isomorphism(out.category, u, v) != kNoArrow;
      }
      if (!found) {
        violated("object " + std::to_string(u) + " has no isomorphism across the parts");
      }
    }
    return out;
  }

  Arrow choose_xi(Bipartite const& C, Obj i0) {
    if (!C.in_a(i0)) {
      fail(ErrorCode::XiEndpointsWrong, "i0 must be an object of A");
    }
    auto const k = C.category.number_of_objects();
    Arrow      best = kNoArrow;
    for (Obj v = static_cast<Obj>(C.a_objects); v < k; ++v) {
      Arrow const x = least_isomorphism(C.category, v, i0);
      if (x != kNoArrow && (best == kNoArrow || x < best)) {
        best = x;
      }
    }
    if (best == kNoArrow) {
      fail(ErrorCode::XiNotIso, "no isomorphism from B reaches i0");
    }
    return best;
  }

  Consolidation natural_extension(Bipartite const&     C,
                                  Consolidation const& p,
                                  Consolidation const& q,
                                  Arrow                xi) {
    FiniteCategory const& K = C.category;
    if (!p.category.same(C.a) || !q.category.same(C.b)) {
      fail(ErrorCode::NotAConsolidation, "p must live on A and q on B");
    }
    if (xi >= K.number_of_arrows() || C.in_a(K.left(xi)) || !C.in_a(K.right(xi))) {
      fail(ErrorCode::XiEndpointsWrong,
           "xi must have its left object in B and its right object in A");
    }
    Arrow const xi_inv = inverse(K, xi);
    if (xi_inv == kNoArrow) {
      fail(ErrorCode::XiNotIso, "xi is not an isomorphism");
    }
    Obj const  i0 = K.right(xi);
    Obj const  j0 = static_cast<Obj>(K.left(xi) - C.a_objects);
    auto const na = static_cast<Obj>(C.a_objects);
    auto const k  = K.number_of_objects();

    auto pa = [&](Obj e, Obj f) { return C.from_a[p(e, f)]; };
    auto qb = [&](Obj e, Obj f) { return C.from_b[q(e - na, f - na)]; };

    std::vector<Arrow> entries(k * k);
    for (Obj e = 0; e < k; ++e) {
      for (Obj f = 0; f < k; ++f) {
        Arrow r;
        if (e < na && f < na) {
          r = pa(e, f);
        } else if (e >= na && f >= na) {
          r = qb(e, f);
        } else if (e >= na) {
          r = K.compose(K.compose(qb(e, na + j0), xi), pa(i0, f));
        } else {
          r = K.compose(K.compose(pa(e, i0), xi_inv), qb(na + j0, f));
        }
        entries[e * k + f] = r;
      }
    }
    auto r = Consolidation::make(K, std::move(entries));
    if (auto defect = extension_identity_defect(C, r, xi); !defect.empty()) {
      fail(ErrorCode::PipelineInvariantViolated, "natural extension: " + defect);
    }
    return r;
  }

  std::string extension_identity_defect(Bipartite const&     C,
                                        Consolidation const& r,
                                        Arrow                xi) {
    FiniteCategory const& K      = C.category;
    Arrow const           xi_inv = inverse(K, xi);
    if (xi_inv == kNoArrow) {
      return "xi is not an isomorphism";
    }
    std::vector<Arrow> of[2][2];
    for (Arrow x = 0; x < K.number_of_arrows(); ++x) {
      of[static_cast<int>(C.types[x].left)][static_cast<int>(C.types[x].right)].push_back(x);
    }
    auto const& AA = of[0][0];
    auto const& AB = of[0][1];
    auto const& BA = of[1][0];
    auto const& BB = of[1][1];
    auto c = [&](Arrow x, Arrow y) { return circ(K, r, x, y); };

    for (Arrow x : AB) {
      Arrow const lhs = c(c(x, xi), xi_inv);
      for (Arrow y : AA) {
        if (c(lhs, y) != c(x, y)) {
          return "AB o xi o xi^-1 o AA != AB o AA at (" + K.label(x) + ", " + K.label(y) + ")";
        }
      }
    }
    for (Arrow x : AA) {
      Arrow const lhs = c(c(x, xi), xi_inv);
      for (Arrow y : BA) {
        if (c(lhs, y) != c(x, y)) {
          return "AA o xi o xi^-1 o BA != AA o BA at (" + K.label(x) + ", " + K.label(y) + ")";
        }
      }
      Arrow const lhs3 = c(x, xi_inv);
      for (Arrow y : BB) {
        if (c(lhs3, y) != c(x, y)) {
          return "AA o xi^-1 o BB != AA o BB at (" + K.label(x) + ", " + K.label(y) + ")";
        }
      }
    }
    for (Arrow x : BB) {
      Arrow const lhs = c(x, xi);
      for (Arrow y : AA) {
        if (c(lhs, y) != c(x, y)) {
          return "BB o xi o AA != BB o AA at (" + K.label(x) + ", " + K.label(y) + ")";
        }
      }
    }
    return {};
  }

}  // namespace semi
