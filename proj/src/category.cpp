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

#include "semi/category.hpp"

#include <algorithm>
#include <numeric>

#include "semi/error.hpp"
#include "semi/kernels.hpp"

namespace semi {

  struct FiniteCategory::Impl {
    std::size_t              k = 0;
    std::vector<Obj>         left;
    std::vector<Obj>         right;
    std::vector<Arrow>       identities;
    std::vector<std::string> labels;

    std::vector<std::vector<Arrow>> homs;  // k * k lists
    std::vector<std::vector<Arrow>> outs;  // k lists
    std::vector<std::uint32_t>      out_pos;
    std::vector<std::size_t>        offset;
    std::vector<Arrow>              comp;
  };

  namespace {
    std::string str(std::size_t x) {
      return std::to_string(x);
    }

    [[noreturn]] void bad_category(std::string const& what) {
      fail(ErrorCode::BadParams, "not a category: " + what);
    }
  }  // namespace

  ////////////////////////////////////////////////////////////////////////
  // FiniteCategory
  ////////////////////////////////////////////////////////////////////////

  FiniteCategory::FiniteCategory() : _impl(std::make_shared<Impl const>()) {}

  FiniteCategory::FiniteCategory(std::shared_ptr<Impl const> impl)
      : _impl(std::move(impl)) {}

  FiniteCategory FiniteCategory::make(std::size_t                               objects,
                                      std::vector<Obj>                          left,
                                      std::vector<Obj>                          right,
                                      std::vector<Arrow>                        identities,
                                      std::function<Arrow(Arrow, Arrow)> const& compose,
                                      std::vector<std::string>                  labels,
                                      bool                                      validate) {
    std::size_t const m = left.size();
    if (right.size() != m || identities.size() != objects) {
      bad_category("endpoint and identity lists have the wrong sizes");
    }
    if (!labels.empty() && labels.size() != m) {
      bad_category("expected one label per arrow");
    }
    for (Arrow x = 0; x < m; ++x) {
      if (left[x] >= objects || right[x] >= objects) {
        bad_category("arrow " + str(x) + " has an endpoint out of range");
      }
    }
    for (Obj u = 0; u < objects; ++u) {
      Arrow const i = identities[u];
      if (i >= m || left[i] != u || right[i] != u) {
        bad_category("identity of object " + str(u) + " is not a loop at it");
      }
    }

    auto impl        = std::make_shared<Impl>();
    impl->k          = objects;
    impl->left       = std::move(left);
    impl->right      = std::move(right);
    impl->identities = std::move(identities);
    impl->labels     = std::move(labels);
    impl->homs.resize(objects * objects);
    impl->outs.resize(objects);
    impl->out_pos.resize(m);
    for (Arrow x = 0; x < m; ++x) {
      impl->homs[impl->left[x] * objects + impl->right[x]].push_back(x);
      impl->out_pos[x] = static_cast<std::uint32_t>(impl->outs[impl->left[x]].size());
      impl->outs[impl->left[x]].push_back(x);
    }
    impl->offset.resize(m + 1);
    impl->offset[0] = 0;
    for (Arrow x = 0; x < m; ++x) {
      impl->offset[x + 1] = impl->offset[x] + impl->outs[impl->right[x]].size();
    }
    impl->comp.resize(impl->offset[m]);
    for (Arrow x = 0; x < m; ++x) {
      auto const& next = impl->outs[impl->right[x]];
      for (std::size_t j = 0; j < next.size(); ++j) {
        Arrow const xy = compose(x, next[j]);
        if (xy >= m) {
          bad_category("composite of " + str(x) + " and " + str(next[j])
                       + " is out of range");
        }
        impl->comp[impl->offset[x] + j] = xy;
      }
    }
    FiniteCategory C(std::move(impl));
    if (validate) {
      C.validate();
    }
    return C;
  }

  void FiniteCategory::validate() const {
    auto const& I = *_impl;
    for (Arrow x = 0; x < I.left.size(); ++x) {
      if (compose(I.identities[I.left[x]], x) != x
          || compose(x, I.identities[I.right[x]]) != x) {
        bad_category("identity law fails at arrow " + str(x));
      }
      for (Arrow y : out(I.right[x])) {
        Arrow const xy = compose(x, y);
        if (I.left[xy] != I.left[x] || I.right[xy] != I.right[y]) {
          bad_category("composite of " + str(x) + " and " + str(y)
                       + " has the wrong endpoints");
        }
        for (Arrow z : out(I.right[y])) {
          if (compose(xy, z) != compose(x, compose(y, z))) {
            bad_category("composition is not associative at (" + str(x) + ", "
                         + str(y) + ", " + str(z) + ")");
          }
        }
      }
    }
  }

  std::size_t FiniteCategory::number_of_objects() const noexcept {
    return _impl->k;
  }

  std::size_t FiniteCategory::number_of_arrows() const noexcept {
    return _impl->left.size();
  }

  Obj FiniteCategory::left(Arrow x) const {
    return _impl->left[x];
  }

  Obj FiniteCategory::right(Arrow x) const {
    return _impl->right[x];
  }

  Arrow FiniteCategory::identity(Obj u) const {
    return _impl->identities[u];
  }

  bool FiniteCategory::is_identity(Arrow x) const {
    return _impl->left[x] == _impl->right[x] && _impl->identities[_impl->left[x]] == x;
  }

  Arrow FiniteCategory::compose(Arrow x, Arrow y) const {
    auto const& I = *_impl;
    if (I.right[x] != I.left[y]) {
      return kNoArrow;
    }
    return I.comp[I.offset[x] + I.out_pos[y]];
  }

  std::span<Arrow const> FiniteCategory::hom(Obj u, Obj v) const {
    return _impl->homs[u * _impl->k + v];
  }

  std::span<Arrow const> FiniteCategory::out(Obj u) const {
    return _impl->outs[u];
  }

  std::string FiniteCategory::label(Arrow x) const {
    if (_impl->labels.empty()) {
      return str(x);
    }
    return _impl->labels[x];
  }

  ////////////////////////////////////////////////////////////////////////
  // Basic properties
  ////////////////////////////////////////////////////////////////////////

  Arrow inverse(FiniteCategory const& C, Arrow x) {
    Obj const u = C.left(x);
    Obj const v = C.right(x);
    for (Arrow y : C.hom(v, u)) {
      if (C.compose(x, y) == C.identity(u) && C.compose(y, x) == C.identity(v)) {
        return y;
      }
    }
    return kNoArrow;
  }

  Arrow least_isomorphism(FiniteCategory const& C, Obj u, Obj v) {
    for (Arrow x : C.hom(u, v)) {
      if (inverse(C, x) != kNoArrow) {
        return x;
      }
    }
    return kNoArrow;
  }

  bool is_strongly_connected(FiniteCategory const& C) {
    for (Obj u = 0; u < C.number_of_objects(); ++u) {
      for (Obj v = 0; v < C.number_of_objects(); ++v) {
        if (C.hom(u, v).empty()) {
          return false;
        }
      }
    }
    return true;
  }

  bool is_regular_category(FiniteCategory const& C) {
    for (Arrow x = 0; x < C.number_of_arrows(); ++x) {
      bool found = false;
      for (Arrow y : C.hom(C.right(x), C.left(x))) {
        Arrow const xy = C.compose(x, y);
        Arrow const yx = C.compose(y, x);
        if (C.compose(xy, x) == x && C.compose(yx, y) == y) {
          found = true;
          break;
        }
      }
      if (!found) {
        return false;
      }
    }
    return true;
  }

  Subcategory full_subcategory(FiniteCategory const& C, std::vector<Obj> objects) {
    std::vector<Obj> sub_of(C.number_of_objects(), static_cast<Obj>(-1));
    for (std::size_t i = 0; i < objects.size(); ++i) {
      if (objects[i] >= C.number_of_objects() || (i > 0 && objects[i] <= objects[i - 1])) {
        fail(ErrorCode::BadParams, "subcategory objects must be ascending and in range");
      }
      sub_of[objects[i]] = static_cast<Obj>(i);
    }
    Subcategory out;
    out.object_in_parent = std::move(objects);
    out.arrow_of_parent.assign(C.number_of_arrows(), kNoArrow);
    std::vector<Obj> left, right;
    for (Arrow x = 0; x < C.number_of_arrows(); ++x) {
      Obj const u = sub_of[C.left(x)];
      Obj const v = sub_of[C.right(x)];
      if (u != static_cast<Obj>(-1) && v != static_cast<Obj>(-1)) {
        out.arrow_of_parent[x] = static_cast<Arrow>(out.arrow_in_parent.size());
        out.arrow_in_parent.push_back(x);
        left.push_back(u);
        right.push_back(v);
      }
    }
    std::vector<Arrow>       ids;
    std::vector<std::string> labels;
    for (Obj u : out.object_in_parent) {
      ids.push_back(out.arrow_of_parent[C.identity(u)]);
    }
    for (Arrow x : out.arrow_in_parent) {
      labels.push_back(C.label(x));
    }
    auto const& in  = out.arrow_in_parent;
    auto const& map = out.arrow_of_parent;
    out.category    = FiniteCategory::make(
        out.object_in_parent.size(), std::move(left), std::move(right), std::move(ids),
        [&](Arrow x, Arrow y) { return map[C.compose(in[x], in[y])]; },
        std::move(labels),
        false);
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Functors
  ////////////////////////////////////////////////////////////////////////

  std::string functor_defect(Functor const& F) {
    auto const& A = F.source;
    auto const& B = F.target;
    if (F.objects.size() != A.number_of_objects()
        || F.arrows.size() != A.number_of_arrows()) {
      return "object or arrow map has the wrong size";
    }
    for (Obj u = 0; u < A.number_of_objects(); ++u) {
      if (F.objects[u] >= B.number_of_objects()) {
        return "object " + str(u) + " maps out of range";
      }
      if (F.arrows[A.identity(u)] != B.identity(F.objects[u])) {
        return "identity at object " + str(u) + " is not preserved";
      }
    }
    for (Arrow x = 0; x < A.number_of_arrows(); ++x) {
      Arrow const fx = F.arrows[x];
      if (fx >= B.number_of_arrows() || B.left(fx) != F.objects[A.left(x)]
          || B.right(fx) != F.objects[A.right(x)]) {
        return "arrow " + str(x) + " does not keep its endpoints";
      }
    }
    for (Arrow x = 0; x < A.number_of_arrows(); ++x) {
      for (Arrow y : A.out(A.right(x))) {
        if (F.arrows[A.compose(x, y)] != B.compose(F.arrows[x], F.arrows[y])) {
          return "composite of " + str(x) + " and " + str(y) + " is not preserved";
        }
      }
    }
    return {};
  }

  namespace {
    // Per hom-set, counts how often each target arrow is hit.
    template <typename Pred>
    bool every_hom(Functor const& F, Pred&& pred) {
      auto const& A = F.source;
      auto const& B = F.target;
      for (Obj u = 0; u < A.number_of_objects(); ++u) {
        for (Obj v = 0; v < A.number_of_objects(); ++v) {
          auto const source = A.hom(u, v);
          auto const target = B.hom(F.objects[u], F.objects[v]);
          std::vector<Arrow> image;
          for (Arrow x : source) {
            image.push_back(F.arrows[x]);
          }
          std::sort(image.begin(), image.end());
          if (!pred(source.size(), image, target)) {
            return false;
          }
        }
      }
      return true;
    }
  }  // namespace

  bool is_full(Functor const& F) {
    return every_hom(F, [](std::size_t, std::vector<Arrow>& image, auto target) {
      image.erase(std::unique(image.begin(), image.end()), image.end());
      return image.size() == target.size();
    });
  }

  bool is_faithful(Functor const& F) {
    return every_hom(F, [](std::size_t n, std::vector<Arrow>& image, auto) {
      return static_cast<std::size_t>(std::unique(image.begin(), image.end())
                                      - image.begin())
             == n;
    });
  }

  bool is_essentially_surjective(Functor const& F) {
    auto const&       B = F.target;
    std::vector<bool> hit(B.number_of_objects(), false);
    for (Obj u : F.objects) {
      hit[u] = true;
    }
    for (Obj w = 0; w < B.number_of_objects(); ++w) {
      bool found = hit[w];
      for (Obj v = 0; v < B.number_of_objects() && !found; ++v) {
        found = hit[v] && least_isomorphism(B, v, w) != kNoArrow;
      }
      if (!found) {
        return false;
      }
    }
    return true;
  }

  bool is_equivalence(Functor const& F) {
    return functor_defect(F).empty() && is_full(F) && is_faithful(F)
           && is_essentially_surjective(F);
  }

  Functor identity_functor(FiniteCategory const& C) {
    Functor F{C, C, std::vector<Obj>(C.number_of_objects()),
              std::vector<Arrow>(C.number_of_arrows())};
    std::iota(F.objects.begin(), F.objects.end(), Obj{0});
    std::iota(F.arrows.begin(), F.arrows.end(), Arrow{0});
    return F;
  }

  ////////////////////////////////////////////////////////////////////////
  // Cauchy completion
  ////////////////////////////////////////////////////////////////////////

  std::optional<Obj> CauchyCompletion::object_of(Elem e) const {
    auto it = std::lower_bound(idempotent_of.begin(), idempotent_of.end(), e);
    if (it == idempotent_of.end() || *it != e) {
      return std::nullopt;
    }
    return static_cast<Obj>(it - idempotent_of.begin());
  }

  Arrow CauchyCompletion::arrow(Elem e, Elem s, Elem f) const {
    auto u = object_of(e);
    auto v = object_of(f);
    if (!u || !v || s >= base.size()) {
      return kNoArrow;
    }
    auto const k = idempotent_of.size();
    return arrow_index[(*u * base.size() + s) * k + *v];
  }

  CauchyCompletion cauchy_completion(FiniteSemigroup const& S) {
    CauchyCompletion C;
    C.base          = S;
    C.idempotent_of = S.idempotents();
    auto const k    = C.idempotent_of.size();
    auto const n    = S.size();
    C.arrow_index.assign(k * n * k, kNoArrow);

    std::vector<Obj>         left, right;
    std::vector<std::string> labels;
    for (Obj u = 0; u < k; ++u) {
      Elem const e = C.idempotent_of[u];
      for (Elem s = 0; s < n; ++s) {
        if (S(e, s) != s) {
          continue;
        }
        for (Obj v = 0; v < k; ++v) {
          Elem const f = C.idempotent_of[v];
          if (S(s, f) != s) {
            continue;
          }
          C.arrow_index[(u * n + s) * k + v] = static_cast<Arrow>(C.triples.size());
          C.triples.push_back({e, s, f});
          left.push_back(u);
          right.push_back(v);
          labels.push_back("(" + S.name(e) + "," + S.name(s) + "," + S.name(f) + ")");
        }
      }
    }
    std::vector<Arrow> ids(k);
    for (Obj u = 0; u < k; ++u) {
      Elem const e = C.idempotent_of[u];
      ids[u]       = C.arrow_index[(u * n + e) * k + u];
    }
    C.category = FiniteCategory::make(
        k, std::move(left), std::move(right), std::move(ids),
        [&](Arrow x, Arrow y) {
          auto const& [e, a, f1] = C.triples[x];
          auto const& [f2, b, g] = C.triples[y];
          (void) f1;
          (void) f2;
          return C.arrow(e, S(a, b), g);
        },
        std::move(labels),
        false);
    return C;
  }

  ////////////////////////////////////////////////////////////////////////
  // Consolidations
  ////////////////////////////////////////////////////////////////////////

  Consolidation Consolidation::make(FiniteCategory C, std::vector<Arrow> entries) {
    auto const k = C.number_of_objects();
    if (entries.size() != k * k) {
      fail(ErrorCode::NotAConsolidation, "expected one entry per ordered pair of objects");
    }
    for (Obj u = 0; u < k; ++u) {
      for (Obj v = 0; v < k; ++v) {
        Arrow const p = entries[u * k + v];
        if (p >= C.number_of_arrows() || C.left(p) != u || C.right(p) != v) {
          fail(ErrorCode::NotAConsolidation,
               "entry (" + str(u) + ", " + str(v) + ") has the wrong endpoints");
        }
        if (u == v && p != C.identity(u)) {
          fail(ErrorCode::NotAConsolidation,
               "diagonal entry at " + str(u) + " is not the identity");
        }
      }
    }
    return Consolidation{std::move(C), std::move(entries)};
  }

  Consolidation default_consolidation(CauchyCompletion const& C) {
    auto const         k = C.idempotent_of.size();
    std::vector<Arrow> entries(k * k);
    for (Obj u = 0; u < k; ++u) {
      for (Obj v = 0; v < k; ++v) {
        Elem const e       = C.idempotent_of[u];
        Elem const f       = C.idempotent_of[v];
        entries[u * k + v] = C.arrow(e, C.base(e, f), f);
      }
    }
    return Consolidation::make(C.category, std::move(entries));
  }

  ConsolidatedSemigroup consolidate(FiniteCategory const& C, Consolidation const& p) {
    if (!is_strongly_connected(C)) {
      fail(ErrorCode::NotStronglyConnected,
           "some ordered pair of objects has no arrow between them");
    }
    if (!p.category.same(C)) {
      fail(ErrorCode::NotAConsolidation, "consolidation belongs to another category");
    }
    auto const             n = C.number_of_arrows();
    std::vector<Elem>      table;
    kernels::parallel::fill_table(n, table, [&](Arrow x, Arrow y) {
      return C.compose(C.compose(x, p(C.right(x), C.left(y))), y);
    });
    std::vector<std::string> names(n);
    for (Arrow x = 0; x < n; ++x) {
      names[x] = C.label(x);
    }
    return {FiniteSemigroup::from_table(
                n, std::move(table), std::move(names), AssociativityCheck::generators),
            p};
  }

  ////////////////////////////////////////////////////////////////////////
  // Skeletons
  ////////////////////////////////////////////////////////////////////////

  Functor Skeleton::retraction(FiniteCategory const& C) const {
    Functor F{C, category(), class_of, std::vector<Arrow>(C.number_of_arrows())};
    for (Arrow x = 0; x < C.number_of_arrows(); ++x) {
      Arrow const y = C.compose(C.compose(from_rep[C.left(x)], x), to_rep[C.right(x)]);
      F.arrows[x]   = sub.arrow_of_parent[y];
    }
    return F;
  }

  Skeleton skeleton(FiniteCategory const& C) {
    auto const       k = C.number_of_objects();
    Skeleton         sk;
    std::vector<Obj> reps;
    constexpr Obj    kUnassigned = static_cast<Obj>(-1);
    sk.class_of.assign(k, kUnassigned);
    sk.to_rep.assign(k, kNoArrow);
    sk.from_rep.assign(k, kNoArrow);
    for (Obj u = 0; u < k; ++u) {
      if (sk.class_of[u] != kUnassigned) {
        continue;
      }
      Obj const c    = static_cast<Obj>(reps.size());
      sk.class_of[u] = c;
      sk.to_rep[u] = sk.from_rep[u] = C.identity(u);
      reps.push_back(u);
      for (Obj v = u + 1; v < k; ++v) {
        if (sk.class_of[v] != kUnassigned) {
          continue;
        }
        Arrow const x = least_isomorphism(C, v, u);
        if (x != kNoArrow) {
          sk.class_of[v] = c;
          sk.to_rep[v]   = x;
          sk.from_rep[v] = inverse(C, x);
        }
      }
    }
    sk.sub = full_subcategory(C, std::move(reps));
    return sk;
  }

  ////////////////////////////////////////////////////////////////////////
  // Isomorphism search
  ////////////////////////////////////////////////////////////////////////

  namespace {
    using ArrowSignature = std::array<std::uint32_t, 4>;

    std::vector<ArrowSignature> arrow_signatures(FiniteCategory const& C) {
      std::vector<ArrowSignature> out(C.number_of_arrows());
      for (Arrow x = 0; x < C.number_of_arrows(); ++x) {
        bool const     loop = C.left(x) == C.right(x);
        std::uint32_t  fix_right = 0, fix_left = 0;
        for (Arrow y : C.out(C.right(x))) {
          fix_right += C.compose(x, y) == x ? 1 : 0;
        }
        for (Arrow y : C.hom(C.left(x), C.left(x))) {
          fix_left += C.compose(y, x) == x ? 1 : 0;
        }
        out[x] = {inverse(C, x) != kNoArrow ? 1U : 0U,
                  loop && C.compose(x, x) == x ? 1U : 0U,
                  fix_right,
                  fix_left};
      }
      return out;
    }

    std::vector<std::uint64_t> object_signature(FiniteCategory const& C, Obj u) {
      std::vector<std::uint64_t> outs, ins;
      for (Obj v = 0; v < C.number_of_objects(); ++v) {
        outs.push_back(C.hom(u, v).size());
        ins.push_back(C.hom(v, u).size());
      }
      std::sort(outs.begin(), outs.end());
      std::sort(ins.begin(), ins.end());
      std::vector<std::uint64_t> sig{C.hom(u, u).size()};
      sig.insert(sig.end(), outs.begin(), outs.end());
      sig.insert(sig.end(), ins.begin(), ins.end());
      return sig;
    }

    class CategoryIsoSearch {
     public:
      CategoryIsoSearch(FiniteCategory const& A, FiniteCategory const& B)
          : _A(A),
            _B(B),
            _obj(A.number_of_objects(), kNone),
            _obj_used(B.number_of_objects(), 0),
            _map(A.number_of_arrows(), kNoArrow),
            _used(B.number_of_arrows(), 0),
            _sig_a(arrow_signatures(A)),
            _sig_b(arrow_signatures(B)) {
        for (Obj u = 0; u < A.number_of_objects(); ++u) {
          _osig_a.push_back(object_signature(A, u));
        }
        for (Obj v = 0; v < B.number_of_objects(); ++v) {
          _osig_b.push_back(object_signature(B, v));
        }
      }

      std::optional<Functor> run() {
        if (_A.number_of_objects() != _B.number_of_objects()
            || _A.number_of_arrows() != _B.number_of_arrows()) {
          return std::nullopt;
        }
        auto sa = _sig_a, sb = _sig_b;
        std::sort(sa.begin(), sa.end());
        std::sort(sb.begin(), sb.end());
        if (sa != sb) {
          return std::nullopt;
        }
        if (!objects(0)) {
          return std::nullopt;
        }
        return Functor{_A, _B, _obj, _map};
      }

     private:
      static constexpr Obj kNone = static_cast<Obj>(-1);

      bool objects(Obj u) {
        if (u == _A.number_of_objects()) {
          return arrows_from(0);
        }
        for (Obj v = 0; v < _B.number_of_objects(); ++v) {
          if (_obj_used[v] != 0 || _osig_a[u] != _osig_b[v]) {
            continue;
          }
          bool ok = true;
          for (Obj w = 0; w < u && ok; ++w) {
            ok = _A.hom(u, w).size() == _B.hom(v, _obj[w]).size()
                 && _A.hom(w, u).size() == _B.hom(_obj[w], v).size();
          }
          if (!ok) {
            continue;
          }
          _obj[u]      = v;
          _obj_used[v] = 1;
          std::size_t const mark = _trail.size();
          if (extend(_A.identity(u), _B.identity(v)) && objects(u + 1)) {
            return true;
          }
          undo(mark);
          _obj[u]      = kNone;
          _obj_used[v] = 0;
        }
        return false;
      }

      bool arrows_from(Arrow x) {
        while (x < _A.number_of_arrows() && _map[x] != kNoArrow) {
          ++x;
        }
        if (x == _A.number_of_arrows()) {
          return true;
        }
        for (Arrow y : _B.hom(_obj[_A.left(x)], _obj[_A.right(x)])) {
          if (_used[y] != 0 || _sig_a[x] != _sig_b[y]) {
            continue;
          }
          std::size_t const mark = _trail.size();
          if (extend(x, y) && arrows_from(x + 1)) {
            return true;
          }
          undo(mark);
        }
        return false;
      }

      bool extend(Arrow x, Arrow y) {
        std::vector<std::pair<Arrow, Arrow>> work{{x, y}};
        while (!work.empty()) {
          auto [a, b] = work.back();
          work.pop_back();
          if (_map[a] == b) {
            continue;
          }
          if (_map[a] != kNoArrow || _used[b] != 0 || _sig_a[a] != _sig_b[b]
              || _B.left(b) != _obj[_A.left(a)] || _B.right(b) != _obj[_A.right(a)]) {
            return false;
          }
          _map[a]  = b;
          _used[b] = 1;
          _trail.push_back(a);
          for (std::size_t i = 0; i < _trail.size(); ++i) {
            Arrow const z = _trail[i];
            if (_A.right(a) == _A.left(z)) {
              work.emplace_back(_A.compose(a, z), _B.compose(b, _map[z]));
            }
            if (_A.right(z) == _A.left(a)) {
              work.emplace_back(_A.compose(z, a), _B.compose(_map[z], b));
            }
          }
        }
        return true;
      }

      void undo(std::size_t mark) {
        while (_trail.size() > mark) {
          Arrow const a = _trail.back();
          _trail.pop_back();
          _used[_map[a]] = 0;
          _map[a]        = kNoArrow;
        }
      }

      FiniteCategory const&                   _A;
      FiniteCategory const&                   _B;
      std::vector<Obj>                        _obj;
      std::vector<std::uint8_t>               _obj_used;
      std::vector<Arrow>                      _map;
      std::vector<std::uint8_t>               _used;
      std::vector<Arrow>                      _trail;
      std::vector<ArrowSignature>             _sig_a;
      std::vector<ArrowSignature>             _sig_b;
      std::vector<std::vector<std::uint64_t>> _osig_a;
      std::vector<std::vector<std::uint64_t>> _osig_b;
    };
  }  // namespace

  std::optional<Functor> find_isomorphism(FiniteCategory const& A,
                                          FiniteCategory const& B) {
    return CategoryIsoSearch(A, B).run();
  }

  std::optional<Functor> are_equivalent(FiniteCategory const& C, FiniteCategory const& D) {
    Skeleton const sc  = skeleton(C);
    Skeleton const sd  = skeleton(D);
    auto           iso = find_isomorphism(sc.category(), sd.category());
    if (!iso) {
      return std::nullopt;
    }
    Functor const R = sc.retraction(C);
    Functor       F{C, D, std::vector<Obj>(C.number_of_objects()),
                    std::vector<Arrow>(C.number_of_arrows())};
    for (Obj u = 0; u < C.number_of_objects(); ++u) {
      F.objects[u] = sd.sub.object_in_parent[iso->objects[R.objects[u]]];
    }
    for (Arrow x = 0; x < C.number_of_arrows(); ++x) {
      F.arrows[x] = sd.sub.arrow_in_parent[iso->arrows[R.arrows[x]]];
    }
    if (!is_equivalence(F)) {
      fail(ErrorCode::NotAnEquivalence, "assembled functor is not an equivalence");
    }
    return F;
  }

}  // namespace semi
