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

#include "semi/semigroup.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <tuple>

#include "semi/error.hpp"
#include "semi/kernels.hpp"
#include "semi/union_find.hpp"

namespace semi {

  struct FiniteSemigroup::Impl {
    std::size_t              n = 0;
    std::vector<Elem>        table;
    std::vector<std::string> names;

    mutable std::once_flag                idempotents_once;
    mutable std::vector<Elem>             idempotents;
    mutable std::once_flag                green_once;
    mutable std::unique_ptr<GreenData>    green;
  };

  namespace {
    constexpr Elem kUnset = static_cast<Elem>(-1);

    // Equal rows get equal labels; labels are dense and follow the order in
    // which rows are first met.
    std::vector<std::uint32_t> row_labels(BitMatrix const& m) {
      std::map<std::vector<std::uint64_t>, std::uint32_t> seen;
      std::vector<std::uint32_t>                          out(m.rows());
      for (std::size_t x = 0; x < m.rows(); ++x) {
        auto row = m.row(x);
        auto [it, inserted]
            = seen.try_emplace(std::vector<std::uint64_t>(row.begin(), row.end()),
                               static_cast<std::uint32_t>(seen.size()));
        out[x] = it->second;
      }
      return out;
    }

    std::unique_ptr<GreenData> compute_green(FiniteSemigroup const& S) {
      auto        green = std::make_unique<GreenData>();
      auto const  n     = S.size();
      auto const  table = S.table();

      green->right_ideals = kernels::parallel::principal_right_ideals(table, n);
      green->left_ideals  = kernels::parallel::principal_left_ideals(table, n);
      green->two_sided_ideals = kernels::parallel::principal_two_sided_ideals(
          green->left_ideals, green->right_ideals);

      green->r_classes = Partition::from_labels(row_labels(green->right_ideals));
      green->l_classes = Partition::from_labels(row_labels(green->left_ideals));
      green->j_classes
          = Partition::from_labels(row_labels(green->two_sided_ideals));

      std::vector<std::pair<std::uint32_t, std::uint32_t>> h_labels(n);
      for (Elem x = 0; x < n; ++x) {
        h_labels[x] = {green->r_classes.class_of[x], green->l_classes.class_of[x]};
      }
      green->h_classes = Partition::from_labels(h_labels);

      UnionFind uf(n);
      for (auto const& cls : green->r_classes.classes) {
        for (auto x : cls) {
          uf.unite(cls.front(), x);
        }
      }
      for (auto const& cls : green->l_classes.classes) {
        for (auto x : cls) {
          uf.unite(cls.front(), x);
        }
      }
      green->d_classes = Partition::from_labels(uf.least_representatives());

      green->d_class_regular.assign(green->d_classes.number_of_classes(), 0);
      for (auto e : S.idempotents()) {
        green->d_class_regular[green->d_classes.class_of[e]] = 1;
      }
      green->regular.assign(n, 0);
      for (Elem x = 0; x < n; ++x) {
        green->regular[x] = green->d_class_regular[green->d_classes.class_of[x]];
      }
      return green;
    }

    using Signature = std::vector<std::uint64_t>;

    std::vector<Signature> element_signatures(FiniteSemigroup const& S) {
      auto const&            g = S.green();
      std::vector<Signature> out(S.size());
      for (Elem x = 0; x < S.size(); ++x) {
        auto [index, period] = index_and_period(S, x);
        out[x] = {S.is_idempotent(x) ? 1U : 0U,
                  g.regular[x],
                  g.r_classes.classes[g.r_classes.class_of[x]].size(),
                  g.l_classes.classes[g.l_classes.class_of[x]].size(),
                  g.h_classes.classes[g.h_classes.class_of[x]].size(),
                  g.d_classes.classes[g.d_classes.class_of[x]].size(),
                  g.right_ideals.row_count(x),
                  g.left_ideals.row_count(x),
                  g.two_sided_ideals.row_count(x),
                  index,
                  period};
      }
      return out;
    }

    // Greedy generating set: every element not yet generated, in ascending
    // order, becomes a generator.
    std::vector<Elem> greedy_generators(FiniteSemigroup const& S) {
      std::vector<std::uint8_t> in(S.size(), 0);
      std::vector<Elem>         members;
      std::vector<Elem>         gens;
      for (Elem x = 0; x < S.size(); ++x) {
        if (in[x] != 0) {
          continue;
        }
        gens.push_back(x);
        std::vector<Elem> queue{x};
        in[x] = 1;
        members.push_back(x);
        while (!queue.empty()) {
          Elem y = queue.back();
          queue.pop_back();
          for (std::size_t i = 0; i < members.size(); ++i) {
            for (Elem p : {S(y, members[i]), S(members[i], y)}) {
              if (in[p] == 0) {
                in[p] = 1;
                members.push_back(p);
                queue.push_back(p);
              }
            }
          }
        }
      }
      return gens;
    }

    class IsoSearch {
     public:
      IsoSearch(FiniteSemigroup const& S, FiniteSemigroup const& T)
          : _S(S),
            _T(T),
            _sig_s(element_signatures(S)),
            _sig_t(element_signatures(T)),
            _gens(greedy_generators(S)),
            _map(S.size(), kUnset),
            _used(T.size(), 0) {}

      std::optional<std::vector<Elem>> run() {
        auto a = _sig_s;
        auto b = _sig_t;
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        if (a != b) {
          return std::nullopt;
        }
        if (search(0)) {
          return _map;
        }
        return std::nullopt;
      }

     private:
      bool search(std::size_t i) {
        if (i == _gens.size()) {
          return _trail.size() == _S.size();
        }
        Elem const g = _gens[i];
        if (_map[g] != kUnset) {
          return search(i + 1);
        }
        for (Elem t = 0; t < _T.size(); ++t) {
          if (_used[t] != 0 || _sig_s[g] != _sig_t[t]) {
            continue;
          }
          std::size_t const mark = _trail.size();
          if (extend(g, t) && search(i + 1)) {
            return true;
          }
          undo(mark);
        }
        return false;
      }

      // Assigns g -> t and everything it forces; false on a contradiction.
      bool extend(Elem g, Elem t) {
        std::vector<std::pair<Elem, Elem>> work{{g, t}};
        while (!work.empty()) {
          auto [a, b] = work.back();
          work.pop_back();
          if (_map[a] == b) {
            continue;
          }
          if (_map[a] != kUnset || _used[b] != 0 || _sig_s[a] != _sig_t[b]) {
            return false;
          }
          _map[a]  = b;
          _used[b] = 1;
          _trail.push_back(a);
          for (std::size_t k = 0; k < _trail.size(); ++k) {
            Elem z = _trail[k];
            work.emplace_back(_S(a, z), _T(b, _map[z]));
            work.emplace_back(_S(z, a), _T(_map[z], b));
          }
        }
        return true;
      }

      void undo(std::size_t mark) {
        while (_trail.size() > mark) {
          Elem a = _trail.back();
          _trail.pop_back();
          _used[_map[a]] = 0;
          _map[a]        = kUnset;
        }
      }

      FiniteSemigroup const&    _S;
      FiniteSemigroup const&    _T;
      std::vector<Signature>    _sig_s;
      std::vector<Signature>    _sig_t;
      std::vector<Elem>         _gens;
      std::vector<Elem>         _map;
      std::vector<std::uint8_t> _used;
      std::vector<Elem>         _trail;
    };
  }  // namespace

  ////////////////////////////////////////////////////////////////////////
  // FiniteSemigroup
  ////////////////////////////////////////////////////////////////////////

  FiniteSemigroup::FiniteSemigroup() {
    static FiniteSemigroup const trivial = from_table(1, {0});
    *this = trivial;
  }

  FiniteSemigroup::FiniteSemigroup(std::shared_ptr<Impl const> impl)
      : _impl(std::move(impl)),
        _table(_impl->table.data()),
        _n(_impl->n) {}

  FiniteSemigroup FiniteSemigroup::from_table(std::size_t              n,
                                              std::vector<Elem>        table,
                                              std::vector<std::string> names,
                                              AssociativityCheck       check) {
    if (n == 0) {
      fail(ErrorCode::BadParams, "a semigroup needs at least one element");
    }
    if (table.size() != n * n) {
      fail(ErrorCode::BadParams,
           "expected " + std::to_string(n * n) + " table entries, got "
               + std::to_string(table.size()));
    }
    for (std::size_t i = 0; i < table.size(); ++i) {
      if (table[i] >= n) {
        fail(ErrorCode::OutOfRangeEntry,
             "entry " + std::to_string(table[i]) + " at (" + std::to_string(i / n)
                 + ", " + std::to_string(i % n) + ") is not in [0, "
                 + std::to_string(n) + ")");
      }
    }
    if (!names.empty() && names.size() != n) {
      fail(ErrorCode::BadParams, "expected " + std::to_string(n) + " names");
    }
    auto const bad
        = check == AssociativityCheck::exhaustive
              ? kernels::parallel::find_associativity_violation(table, n)
              : kernels::parallel::find_associativity_violation(
                  table, n, kernels::magma_generators(table, n));
    if (bad) {
      auto [x, y, z] = *bad;
      fail(ErrorCode::NotAssociative,
           "(xy)z != x(yz) for (x, y, z) = (" + std::to_string(x) + ", "
               + std::to_string(y) + ", " + std::to_string(z) + ")");
    }
    auto impl   = std::make_shared<Impl>();
    impl->n     = n;
    impl->table = std::move(table);
    impl->names = std::move(names);
    return FiniteSemigroup(std::move(impl));
  }

  std::size_t FiniteSemigroup::size() const noexcept {
    return _n;
  }

  std::vector<std::string> const& FiniteSemigroup::names() const noexcept {
    return _impl->names;
  }

  std::string FiniteSemigroup::name(Elem x) const {
    if (_impl->names.empty()) {
      return std::to_string(x);
    }
    return _impl->names[x];
  }

  std::vector<Elem> const& FiniteSemigroup::idempotents() const {
    std::call_once(_impl->idempotents_once, [this] {
      for (Elem x = 0; x < _n; ++x) {
        if (is_idempotent(x)) {
          _impl->idempotents.push_back(x);
        }
      }
    });
    return _impl->idempotents;
  }

  GreenData const& FiniteSemigroup::green() const {
    std::call_once(_impl->green_once,
                   [this] { _impl->green = compute_green(*this); });
    return *_impl->green;
  }

  std::optional<Elem> FiniteSemigroup::identity() const {
    for (auto e : idempotents()) {
      bool ok = true;
      for (Elem x = 0; x < _n && ok; ++x) {
        ok = product(e, x) == x && product(x, e) == x;
      }
      if (ok) {
        return e;
      }
    }
    return std::nullopt;
  }

  bool FiniteSemigroup::same_table(FiniteSemigroup const& other) const noexcept {
    return _n == other._n && std::equal(_table, _table + _n * _n, other._table);
  }

  ////////////////////////////////////////////////////////////////////////
  // Homomorphism
  ////////////////////////////////////////////////////////////////////////

  Homomorphism Homomorphism::make(FiniteSemigroup   source,
                                  FiniteSemigroup   target,
                                  std::vector<Elem> map) {
    if (map.size() != source.size()) {
      fail(ErrorCode::NotAHomomorphism, "map has the wrong length");
    }
    for (auto y : map) {
      if (y >= target.size()) {
        fail(ErrorCode::NotAHomomorphism, "image out of range");
      }
    }
    for (Elem x = 0; x < source.size(); ++x) {
      for (Elem y = 0; y < source.size(); ++y) {
        if (map[source(x, y)] != target(map[x], map[y])) {
          fail(ErrorCode::NotAHomomorphism,
               "h(xy) != h(x)h(y) at (" + std::to_string(x) + ", "
                   + std::to_string(y) + ")");
        }
      }
    }
    return Homomorphism{std::move(source), std::move(target), std::move(map)};
  }

  Homomorphism Homomorphism::identity(FiniteSemigroup const& S) {
    std::vector<Elem> map(S.size());
    std::iota(map.begin(), map.end(), Elem{0});
    return Homomorphism{S, S, std::move(map)};
  }

  bool Homomorphism::is_injective() const {
    return image().size() == map.size();
  }

  bool Homomorphism::is_surjective() const {
    return image().size() == target.size();
  }

  std::vector<Elem> Homomorphism::image() const {
    std::vector<Elem> out(map);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

  Homomorphism compose(Homomorphism const& first, Homomorphism const& second) {
    if (!first.target.same_table(second.source)) {
      fail(ErrorCode::BadParams, "homomorphisms are not composable");
    }
    std::vector<Elem> map(first.map.size());
    for (Elem x = 0; x < map.size(); ++x) {
      map[x] = second.map[first.map[x]];
    }
    return Homomorphism{first.source, second.target, std::move(map)};
  }

  ////////////////////////////////////////////////////////////////////////
  // Operations
  ////////////////////////////////////////////////////////////////////////

  std::vector<Elem> idempotents(FiniteSemigroup const& S) {
    return S.idempotents();
  }

  bool has_local_units(FiniteSemigroup const& S) {
    auto const& E = S.idempotents();
    for (Elem s = 0; s < S.size(); ++s) {
      bool left  = std::any_of(E.begin(), E.end(), [&](Elem e) { return S(e, s) == s; });
      bool right = std::any_of(E.begin(), E.end(), [&](Elem f) { return S(s, f) == s; });
      if (!left || !right) {
        return false;
      }
    }
    return true;
  }

  bool is_factorizable(FiniteSemigroup const& S) {
    std::vector<std::uint8_t> all(S.size(), 1);
    auto sq = kernels::parallel::set_product(S.table(), S.size(), all, all);
    return std::all_of(sq.begin(), sq.end(), [](auto b) { return b != 0; });
  }

  GreenData const& green_data(FiniteSemigroup const& S) {
    return S.green();
  }

  std::vector<std::uint8_t> regular_elements_direct(FiniteSemigroup const& S) {
    std::vector<std::uint8_t> out(S.size(), 0);
    for (Elem s = 0; s < S.size(); ++s) {
      for (Elem t = 0; t < S.size() && out[s] == 0; ++t) {
        if (S(S(s, t), s) == s) {
          out[s] = 1;
        }
      }
    }
    return out;
  }

  bool is_regular(FiniteSemigroup const& S) {
    auto const& r = S.green().regular;
    return std::all_of(r.begin(), r.end(), [](auto b) { return b != 0; });
  }

  std::vector<Elem> inverses(FiniteSemigroup const& S, Elem s) {
    if (s >= S.size()) {
      fail(ErrorCode::BadParams, "element out of range");
    }
    std::vector<Elem> out;
    for (Elem t = 0; t < S.size(); ++t) {
      if (S(S(s, t), s) == s && S(S(t, s), t) == t) {
        out.push_back(t);
      }
    }
    return out;
  }

  Subsemigroup subsemigroup(FiniteSemigroup const& S, std::vector<Elem> elements) {
    std::sort(elements.begin(), elements.end());
    elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
    if (elements.empty()) {
      fail(ErrorCode::NotASubsemigroup, "empty subset");
    }
    std::vector<Elem> index(S.size(), kUnset);
    for (Elem i = 0; i < elements.size(); ++i) {
      if (elements[i] >= S.size()) {
        fail(ErrorCode::NotASubsemigroup, "element out of range");
      }
      index[elements[i]] = i;
    }
    std::size_t const        m = elements.size();
    std::vector<Elem>        table(m * m);
    std::vector<std::string> names;
    for (Elem i = 0; i < m; ++i) {
      for (Elem j = 0; j < m; ++j) {
        Elem p = index[S(elements[i], elements[j])];
        if (p == kUnset) {
          fail(ErrorCode::NotASubsemigroup,
               "product " + S.name(elements[i]) + " * " + S.name(elements[j])
                   + " leaves the subset");
        }
        table[i * m + j] = p;
      }
    }
    if (!S.names().empty()) {
      for (auto x : elements) {
        names.push_back(S.name(x));
      }
    }
    return Subsemigroup{
        FiniteSemigroup::from_table(m, std::move(table), std::move(names)),
        std::move(elements)};
  }

  Subsemigroup local_submonoid(FiniteSemigroup const& S, Elem e) {
    if (e >= S.size() || !S.is_idempotent(e)) {
      fail(ErrorCode::NotIdempotent, "element " + std::to_string(e));
    }
    std::vector<Elem> elements;
    for (Elem x = 0; x < S.size(); ++x) {
      elements.push_back(S(S(e, x), e));
    }
    return subsemigroup(S, std::move(elements));
  }

  std::vector<Elem> generated_by(FiniteSemigroup const& S, std::span<Elem const> gens) {
    std::vector<std::uint8_t> in(S.size(), 0);
    std::vector<Elem>         members;
    for (auto g : gens) {
      if (in[g] == 0) {
        in[g] = 1;
        members.push_back(g);
      }
    }
    for (std::size_t i = 0; i < members.size(); ++i) {
      for (std::size_t j = 0; j <= i; ++j) {
        for (Elem p : {S(members[i], members[j]), S(members[j], members[i])}) {
          if (in[p] == 0) {
            in[p] = 1;
            members.push_back(p);
          }
        }
      }
    }
    std::sort(members.begin(), members.end());
    return members;
  }

  BitMatrix natural_partial_order(FiniteSemigroup const& S) {
    std::size_t const n = S.size();
    BitMatrix         out(n, n);
    auto const&       E = S.idempotents();
    std::vector<std::uint8_t> from_left(n);
    std::vector<std::uint8_t> from_right(n);
    for (Elem b = 0; b < n; ++b) {
      std::fill(from_left.begin(), from_left.end(), 0);
      std::fill(from_right.begin(), from_right.end(), 0);
      for (auto f : E) {
        from_left[S(f, b)]  = 1;
        from_right[S(b, f)] = 1;
      }
      for (Elem a = 0; a < n; ++a) {
        if (from_left[a] != 0 && from_right[a] != 0) {
          out.set(a, b);
        }
      }
    }
    return out;
  }

  std::pair<std::size_t, std::size_t> index_and_period(FiniteSemigroup const& S,
                                                       Elem                   x) {
    std::vector<std::size_t> first_seen(S.size(), 0);
    Elem                     power = x;
    for (std::size_t k = 1;; ++k) {
      if (first_seen[power] != 0) {
        return {first_seen[power], k - first_seen[power]};
      }
      first_seen[power] = k;
      power             = S(power, x);
    }
  }

  std::optional<Homomorphism> are_isomorphic(FiniteSemigroup const& S,
                                             FiniteSemigroup const& T) {
    if (S.size() != T.size() || S.idempotents().size() != T.idempotents().size()) {
      return std::nullopt;
    }
    IsoSearch search(S, T);
    if (auto map = search.run()) {
      return Homomorphism{S, T, std::move(*map)};
    }
    return std::nullopt;
  }

  std::vector<Elem> canonical_table(FiniteSemigroup const& S, std::size_t guard) {
    std::size_t const n    = S.size();
    auto              sigs = element_signatures(S);

    std::vector<Elem> order(n);
    std::iota(order.begin(), order.end(), Elem{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](Elem a, Elem b) { return sigs[a] < sigs[b]; });

    // Blocks of equal signature; only permutations inside blocks are tried.
    std::vector<std::pair<std::size_t, std::size_t>> blocks;
    double                                           work = 1;
    for (std::size_t i = 0; i < n;) {
      std::size_t j = i;
      while (j < n && sigs[order[j]] == sigs[order[i]]) {
        ++j;
      }
      blocks.emplace_back(i, j);
      for (std::size_t k = 2; k <= j - i; ++k) {
        work *= static_cast<double>(k);
      }
      i = j;
    }
    if (work > static_cast<double>(guard)) {
      fail(ErrorCode::EnumerationTooLarge,
           "canonical form needs " + std::to_string(work) + " relabellings");
    }

    std::vector<Elem> best;
    std::vector<Elem> label(n);
    std::vector<Elem> candidate(n * n);

    auto evaluate = [&] {
      for (Elem k = 0; k < n; ++k) {
        label[order[k]] = k;
      }
      for (Elem i = 0; i < n; ++i) {
        for (Elem j = 0; j < n; ++j) {
          candidate[i * n + j] = label[S(order[i], order[j])];
        }
      }
      if (best.empty() || candidate < best) {
        best = candidate;
      }
    };

    for (auto [lo, hi] : blocks) {
      std::sort(order.begin() + static_cast<std::ptrdiff_t>(lo),
                order.begin() + static_cast<std::ptrdiff_t>(hi));
    }
    // Odometer over the per-block permutations.
    while (true) {
      evaluate();
      std::size_t b = 0;
      for (; b < blocks.size(); ++b) {
        auto [lo, hi] = blocks[b];
        if (std::next_permutation(order.begin() + static_cast<std::ptrdiff_t>(lo),
                                  order.begin() + static_cast<std::ptrdiff_t>(hi))) {
          break;
        }
      }
      if (b == blocks.size()) {
        break;
      }
    }
    return best;
  }

}  // namespace semi
