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

#include "semi/congruence.hpp"

#include <algorithm>

#include "semi/error.hpp"
#include "semi/kernels.hpp"
#include "semi/union_find.hpp"

namespace semi {

  Congruence::Congruence(FiniteSemigroup S, std::vector<Elem> rep)
      : _S(std::move(S)), _rep(std::move(rep)) {}

  Congruence Congruence::from_representatives(FiniteSemigroup S, std::vector<Elem> rep) {
    if (rep.size() != S.size()) {
      fail(ErrorCode::BadParams, "expected one label per element");
    }
    if (auto bad = kernels::parallel::find_compatibility_violation(S.table(), S.size(), rep)) {
      auto [a, x] = *bad;
      fail(ErrorCode::NotACongruence,
           "elements " + S.name(a) + " and " + S.name(rep[a])
               + " are related but are separated by multiplying with " + S.name(x));
    }
    return Congruence(std::move(S), std::move(rep));
  }

  Congruence Congruence::equality(FiniteSemigroup S) {
    std::vector<Elem> rep(S.size());
    for (Elem x = 0; x < S.size(); ++x) {
      rep[x] = x;
    }
    return Congruence(std::move(S), std::move(rep));
  }

  Congruence Congruence::universal(FiniteSemigroup S) {
    std::vector<Elem> rep(S.size(), 0);
    return Congruence(std::move(S), std::move(rep));
  }

  Partition Congruence::partition() const {
    return Partition::from_labels(_rep);
  }

  std::size_t Congruence::number_of_classes() const {
    std::size_t count = 0;
    for (Elem x = 0; x < _rep.size(); ++x) {
      count += _rep[x] == x ? 1 : 0;
    }
    return count;
  }

  bool Congruence::contained_in(Congruence const& other) const {
    for (Elem x = 0; x < _rep.size(); ++x) {
      if (!other.related(x, _rep[x])) {
        return false;
      }
    }
    return true;
  }

  Congruence congruence_closure(FiniteSemigroup const&                 S,
                                std::span<std::pair<Elem, Elem> const> pairs) {
    auto const                         n = S.size();
    UnionFind                          uf(n);
    std::vector<std::pair<Elem, Elem>> work(pairs.begin(), pairs.end());
    for (auto [a, b] : work) {
      if (a >= n || b >= n) {
        fail(ErrorCode::BadParams, "pair entry out of range");
      }
    }
    while (!work.empty()) {
      auto [a, b] = work.back();
      work.pop_back();
      if (!uf.unite(a, b)) {
        continue;
      }
      for (Elem x = 0; x < n; ++x) {
        work.emplace_back(S(x, a), S(x, b));
        work.emplace_back(S(a, x), S(b, x));
      }
    }
    auto labels = uf.least_representatives();
    return Congruence::from_labels(S, labels);
  }

  Quotient quotient(Congruence const& rho) {
    FiniteSemigroup const& S = rho.semigroup();
    auto const             n = S.size();
    std::vector<Elem>      class_of(n);
    std::vector<Elem>      reps;
    for (Elem x = 0; x < n; ++x) {
      if (rho.representative(x) == x) {
        class_of[x] = static_cast<Elem>(reps.size());
        reps.push_back(x);
      }
    }
    for (Elem x = 0; x < n; ++x) {
      class_of[x] = class_of[rho.representative(x)];
    }
    auto const               k = reps.size();
    std::vector<Elem>        table(k * k);
    std::vector<std::string> names(k);
    for (Elem i = 0; i < k; ++i) {
      names[i] = S.name(reps[i]);
      for (Elem j = 0; j < k; ++j) {
        table[i * k + j] = class_of[S(reps[i], reps[j])];
      }
    }
    auto Q = FiniteSemigroup::from_table(
        k, std::move(table), std::move(names), AssociativityCheck::generators);
    auto projection = Homomorphism::make(S, Q, class_of);
    return {std::move(Q), std::move(projection), std::move(reps)};
  }

  Congruence kernel(Homomorphism const& h) {
    return Congruence::from_labels(h.source, h.map);
  }

  std::vector<Congruence> all_congruences(FiniteSemigroup const& S, std::size_t max_size) {
    auto const n = S.size();
    if (n > max_size) {
      fail(ErrorCode::EnumerationTooLarge,
           "congruence enumeration limited to " + std::to_string(max_size) + " elements");
    }
    // Set partitions as restricted growth strings: label[x] is at most one
    // more than every earlier label.
    std::vector<Congruence> out;
    std::vector<Elem>       label(n, 0);
    std::vector<Elem>       rep(n);
    auto                    visit = [&](auto&& self, Elem x, Elem top) -> void {
      if (x == n) {
        std::vector<Elem> first(top + 1, static_cast<Elem>(-1));
        for (Elem y = 0; y < n; ++y) {
          if (first[label[y]] == static_cast<Elem>(-1)) {
            first[label[y]] = y;
          }
          rep[y] = first[label[y]];
        }
        if (!kernels::serial::find_compatibility_violation(S.table(), n, rep)) {
          out.push_back(Congruence::from_labels(S, label));
        }
        return;
      }
      for (Elem l = 0; l <= top + 1; ++l) {
        label[x] = l;
        self(self, x + 1, std::max(top, l));
      }
    };
    visit(visit, 1, 0);
    return out;
  }

  bool has_unique_inverses(FiniteSemigroup const& S) {
    for (Elem x = 0; x < S.size(); ++x) {
      if (inverses(S, x).size() != 1) {
        return false;
      }
    }
    return true;
  }

  bool is_below_every_inverse_congruence(Congruence const& rho, std::size_t max_size) {
    for (auto const& sigma : all_congruences(rho.semigroup(), max_size)) {
      if (has_unique_inverses(quotient(sigma).semigroup) && !rho.contained_in(sigma)) {
        return false;
      }
    }
    return true;
  }

  Congruence min_inverse_congruence(FiniteSemigroup const& S, std::size_t minimality_limit) {
    if (!is_regular(S)) {
      fail(ErrorCode::NotOrthodox, "the semigroup is not regular");
    }
    for (Elem e : S.idempotents()) {
      for (Elem f : S.idempotents()) {
        if (!S.is_idempotent(S(e, f))) {
          fail(ErrorCode::NotOrthodox,
               "the product of idempotents " + S.name(e) + " and " + S.name(f)
                   + " is not idempotent");
        }
      }
    }
    std::vector<std::vector<Elem>> labels(S.size());
    for (Elem x = 0; x < S.size(); ++x) {
      labels[x] = inverses(S, x);
    }
    Congruence gamma = Congruence::equality(S);
    try {
      gamma = Congruence::from_labels(S, labels);
    } catch (Error const& e) {
      fail(ErrorCode::PipelineInvariantViolated,
           std::string("equal inverse sets do not give a congruence: ") + e.what());
    }
    if (!has_unique_inverses(quotient(gamma).semigroup)) {
      fail(ErrorCode::PipelineInvariantViolated, "the quotient is not an inverse semigroup");
    }
    if (S.size() <= minimality_limit && !is_below_every_inverse_congruence(gamma, minimality_limit)) {
      fail(ErrorCode::OracleRefutesMinimality,
           "some congruence with an inverse quotient does not contain it");
    }
    return gamma;
  }

}  // namespace semi
