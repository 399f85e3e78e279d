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

// Finite acts of a semigroup on {0, ..., m - 1}, tensor products and the
// maps relating S (x) M, M and S hom(S, M) for a left act M.
//
// Action tables are indexed by the semigroup element first: for a left act
// table[s * m + x] = s.x, and for a right act table[s * m + x] = x.s.

#ifndef SEMI_ACTS_HPP_
#define SEMI_ACTS_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "semigroup.hpp"

namespace semi {

  using Point = std::uint32_t;

  enum class Side { left, right };

  template <Side side>
  class FiniteAct {
   public:
    // Checks entries are in range and the action law; throws NotAnAct.
    static FiniteAct make(FiniteSemigroup S, std::size_t m, std::vector<Point> table);

    // S acting on itself by multiplication.
    static FiniteAct regular(FiniteSemigroup const& S);

    [[nodiscard]] FiniteSemigroup const& semigroup() const noexcept {
      return _S;
    }
    [[nodiscard]] std::size_t size() const noexcept {
      return _m;
    }
    // s.x for a left act, x.s for a right act.
    [[nodiscard]] Point act(Elem s, Point x) const noexcept {
      return _table[s * _m + x];
    }
    [[nodiscard]] std::vector<Point> const& table() const noexcept {
      return _table;
    }

    bool operator==(FiniteAct const& other) const {
      return _m == other._m && _table == other._table && _S.same_table(other._S);
    }

   private:
    FiniteAct(FiniteSemigroup S, std::size_t m, std::vector<Point> table)
        : _S(std::move(S)), _m(m), _table(std::move(table)) {}

    FiniteSemigroup    _S;
    std::size_t        _m = 0;
    std::vector<Point> _table;
  };

  using FiniteLeftAct  = FiniteAct<Side::left>;
  using FiniteRightAct = FiniteAct<Side::right>;

  // S acting on the left and T on the right of the same carrier, with
  // (s.x).t = s.(x.t).
  class FiniteBiact {
   public:
    // Throws NotAnAct.
    static FiniteBiact make(FiniteLeftAct left, FiniteRightAct right);
    static FiniteBiact regular(FiniteSemigroup const& S);

    [[nodiscard]] FiniteLeftAct const& left() const noexcept {
      return _left;
    }
    [[nodiscard]] FiniteRightAct const& right() const noexcept {
      return _right;
    }
    [[nodiscard]] std::size_t size() const noexcept {
      return _left.size();
    }

   private:
    FiniteBiact(FiniteLeftAct left, FiniteRightAct right)
        : _left(std::move(left)), _right(std::move(right)) {}

    FiniteLeftAct  _left;
    FiniteRightAct _right;
  };

  // A (x) B as the partition of A x B generated by (a.s, b) ~ (a, s.b).
  // Classes are numbered by their least pair (a, b) in lexicographic order.
  struct TensorProduct {
    std::size_t                        left_size  = 0;
    std::size_t                        right_size = 0;
    std::vector<std::uint32_t>         class_of;         // a * right_size + b
    std::vector<std::pair<Point, Point>> representative;  // least pair per class

    [[nodiscard]] std::uint32_t operator()(Point a, Point b) const {
      return class_of[a * right_size + b];
    }
    [[nodiscard]] std::size_t number_of_classes() const noexcept {
      return representative.size();
    }
  };

  // Throws BadParams if A and B are over different semigroups.
  TensorProduct tensor(FiniteRightAct const& A, FiniteLeftAct const& B);

  // S (x) X with S acting on the left of the first factor.
  struct LeftTensor {
    TensorProduct classes;
    FiniteLeftAct act;
  };
  LeftTensor tensor_with_semigroup(FiniteLeftAct const& X);

  // P (x) Q for an (S, T)-biact P and a (T, U)-biact Q, as an (S, U)-biact.
  struct BiactTensor {
    TensorProduct classes;
    FiniteBiact   biact;
  };
  BiactTensor tensor(FiniteBiact const& P, FiniteBiact const& Q);

  // SX = X (XS = X for a right act).
  template <Side side>
  bool is_unitary(FiniteAct<side> const& X);

  // SX as a subact; inclusion[i] is the point of X that point i stands for.
  struct Subact {
    FiniteLeftAct      act;
    std::vector<Point> inclusion;  // ascending
  };
  Subact unitary_part(FiniteLeftAct const& X);

  // map[x] = f(x) is compatible with the actions.
  bool is_act_homomorphism(FiniteLeftAct const&      X,
                           FiniteLeftAct const&      Y,
                           std::vector<Point> const& map);

  // A bijective homomorphism X -> Y, or nothing.
  std::optional<std::vector<Point>> find_act_isomorphism(FiniteLeftAct const& X,
                                                         FiniteLeftAct const& Y);

  // The multiplication map s (x) x |-> s.x out of S (x) X.
  struct MuMap {
    TensorProduct      classes;
    std::vector<Point> map;  // per class
    bool               surjective = false;
    bool               injective  = false;

    [[nodiscard]] bool closed() const noexcept {
      return surjective && injective;
    }
  };
  MuMap mu_map(FiniteLeftAct const& X);
  // x (x) s |-> x.s out of X (x) S.
  MuMap mu_map(FiniteRightAct const& X);

  bool is_closed(FiniteLeftAct const& X);
  bool is_closed(FiniteRightAct const& X);

  // hom_S(S, M): the S-maps f: S -> M in lexicographic order of their value
  // lists, acted on by (x)(s.f) = (xs)f. Throws EnumerationTooLarge when
  // |M|^|S| exceeds guard.
  struct HomAct {
    FiniteLeftAct                   act;
    std::vector<std::vector<Point>> maps;
  };
  HomAct hom_act(FiniteLeftAct const& M, std::size_t guard = 1'000'000);

  // Se under left multiplication; carrier[i] is the element point i stands
  // for. Throws NotIdempotent.
  struct PrincipalLeftAct {
    FiniteLeftAct     act;
    std::vector<Elem> carrier;  // ascending
  };
  PrincipalLeftAct act_Se(FiniteSemigroup const& S, Elem e);

  struct AdjunctionReport {
    bool unit_then_counit_identity = false;  // on S (x) M
    bool counit_then_unit_identity = false;  // on S (x) S hom(S, S (x) M)
    bool one_tensor_rho_bijective  = false;
    bool closed                    = false;  // mu_M bijective
    bool isomorphic                = false;  // some S (x) M ~ M
    bool counit_bijective          = false;  // epsilon_M bijective
    std::vector<std::string> failures;

    [[nodiscard]] bool conditions_agree() const noexcept {
      return closed == isomorphic && isomorphic == counit_bijective;
    }
    [[nodiscard]] bool ok() const noexcept {
      return failures.empty();
    }
  };

  // Builds the unit and counit maps on finite carriers and checks they
  // behave as an adjunction on M, that 1 (x) rho_M is a bijection and that
  // the three descriptions of closedness agree. Throws NoLocalUnits, or
  // BadParams if M is not unitary, or EnumerationTooLarge from hom_act.
  AdjunctionReport verify_adjunction(FiniteLeftAct const& M,
                                     std::size_t          guard = 1'000'000);

  // Every left act of S on m points, in lexicographic order of tables.
  // Throws EnumerationTooLarge when m^(|S| m) exceeds guard.
  std::vector<FiniteLeftAct> all_left_acts(FiniteSemigroup const& S,
                                           std::size_t            m,
                                           std::size_t            guard = 10'000'000);

}  // namespace semi

#endif  // SEMI_ACTS_HPP_
