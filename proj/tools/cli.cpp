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

#include "cli.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <functional>
#include <map>
#include <optional>
#include <ostream>
#include <random>
#include <sstream>
#include <utility>

#include "semi/acts.hpp"
#include "semi/classify.hpp"
#include "semi/congruence.hpp"
#include "semi/error.hpp"
#include "semi/families.hpp"
#include "semi/morita.hpp"
#include "semi/text_format.hpp"

namespace semi::cli {

  namespace {
    struct Options {
      bool                     json = false;
      std::string              output;
      std::uint64_t            seed     = 20260101;
      std::size_t              max_size = 5000;
      std::vector<std::string> inputs;
      bool                     min_inverse = false;
    };

    // An ordered list of fields and a free-form body. Text mode prints the
    // verdict, "key: value" lines and the body; flat mode prints only
    // "key=value" lines.
    struct Report {
      std::optional<std::string>                       verdict;
      std::vector<std::pair<std::string, std::string>> fields;
      std::string                                      body;
      int                                              code = kOk;

      void add(std::string key, std::string value) {
        fields.emplace_back(std::move(key), std::move(value));
      }
      void add(std::string key, bool value) {
        add(std::move(key), std::string(value ? "true" : "false"));
      }
      void add(std::string key, std::size_t value) {
        add(std::move(key), std::to_string(value));
      }

      [[nodiscard]] std::string render(bool flat) const {
        std::string out;
        if (verdict && !flat) {
          out += *verdict + "\n";
        }
        for (auto const& [k, v] : fields) {
          out += k + (flat ? "=" : ": ") + v + "\n";
        }
        if (!flat) {
          out += body;
        }
        return out;
      }
    };

    [[noreturn]] void usage(std::string const& what) {
      fail(ErrorCode::UsageError, what);
    }

    std::string list(std::vector<Elem> const& xs) {
      std::string out;
      for (std::size_t i = 0; i < xs.size(); ++i) {
        out += (i == 0 ? "" : " ") + std::to_string(xs[i]);
      }
      return out;
    }

    std::size_t to_number(std::string const& s) {
      try {
        std::size_t used  = 0;
        auto const  value = std::stoull(s, &used);
        if (used == s.size()) {
          return value;
        }
      } catch (std::exception const&) {
      }
      usage("expected a non-negative integer, got '" + s + "'");
    }

    // A path to a table file, or a family spec "name[:param[:param...]]".
    FiniteSemigroup load(std::string const& input) {
      if (std::filesystem::exists(input)) {
        return read_semigroup(input);
      }
      std::vector<std::string> parts;
      std::stringstream        in(input);
      for (std::string part; std::getline(in, part, ':');) {
        parts.push_back(part);
      }
      auto const names = family_names();
      if (parts.empty() || std::find(names.begin(), names.end(), parts[0]) == names.end()) {
        usage("'" + input + "' is neither a file nor a family");
      }
      return generate(parts[0], {parts.begin() + 1, parts.end()});
    }

    void expect_inputs(Options const& o, std::size_t count, char const* verb) {
      if (o.inputs.size() != count) {
        usage(std::string(verb) + " takes " + std::to_string(count) + " input(s)");
      }
    }

    void green_fields(Report& r, FiniteSemigroup const& S) {
      auto const& g = S.green();
      r.add("r_classes", g.r_classes.number_of_classes());
      r.add("l_classes", g.l_classes.number_of_classes());
      r.add("h_classes", g.h_classes.number_of_classes());
      r.add("d_classes", g.d_classes.number_of_classes());
      r.add("j_classes", g.j_classes.number_of_classes());
      r.add("regular_d_classes",
            static_cast<std::size_t>(std::count(g.d_class_regular.begin(),
                                                g.d_class_regular.end(), std::uint8_t{1})));
    }

    Report analyze(Options const& o) {
      expect_inputs(o, 1, "analyze");
      auto const S = load(o.inputs[0]);
      Report     r;
      r.add("size", S.size());
      r.add("idempotents", list(S.idempotents()));
      auto const one = S.identity();
      r.add("identity", one ? std::to_string(*one) : std::string("none"));
      r.add("regular", is_regular(S));
      r.add("local_units", has_local_units(S));
      r.add("factorizable", is_factorizable(S));
      green_fields(r, S);
      r.body = "d-classes:\n" + dump_partition(S.green().d_classes);
      return r;
    }

    Report cauchy(Options const& o) {
      expect_inputs(o, 1, "cauchy");
      auto const C = cauchy_completion(load(o.inputs[0]));
      Report     r;
      r.add("objects", C.category.number_of_objects());
      r.add("arrows", C.category.number_of_arrows());
      r.add("objects_are", list(C.idempotent_of));
      r.add("strongly_connected", is_strongly_connected(C.category));
      r.body = "arrows:\n" + dump_cauchy(C);
      return r;
    }

    Report consolidate_verb(Options const& o) {
      expect_inputs(o, 1, "consolidate");
      auto const S = load(o.inputs[0]);
      auto const C = cauchy_completion(S);
      auto const p = default_consolidation(C);
      auto const Q = consolidate(C.category, p);
      Report     r;
      r.add("size", Q.semigroup.size());
      r.add("local_units", has_local_units(Q.semigroup));
      r.add("regular", is_regular(Q.semigroup));
      r.body = "consolidation:\n" + dump_consolidation(p) + format_semigroup(Q.semigroup);
      if (!o.output.empty()) {
        write_text(o.output, format_semigroup(Q.semigroup));
      }
      return r;
    }

    Report quotient_verb(Options const& o) {
      if (o.inputs.empty()) {
        usage("quotient takes a semigroup and pairs of elements");
      }
      auto const S = load(o.inputs[0]);
      std::optional<Congruence> rho;
      if (o.min_inverse) {
        if (o.inputs.size() != 1) {
          usage("quotient --min-inverse takes no pairs");
        }
        rho = min_inverse_congruence(S);
      } else {
        if (o.inputs.size() % 2 != 1) {
          usage("quotient needs an even number of elements");
        }
        std::vector<std::pair<Elem, Elem>> pairs;
        for (std::size_t i = 1; i < o.inputs.size(); i += 2) {
          auto const a = to_number(o.inputs[i]);
          auto const b = to_number(o.inputs[i + 1]);
          if (a >= S.size() || b >= S.size()) {
            usage("element out of range");
          }
          pairs.emplace_back(static_cast<Elem>(a), static_cast<Elem>(b));
        }
        rho = congruence_closure(S, pairs);
      }
      auto const Q = quotient(*rho);
      Report     r;
      r.add("classes", rho->number_of_classes());
      r.body = "classes:\n" + dump_partition(rho->partition()) + format_semigroup(Q.semigroup);
      if (!o.output.empty()) {
        write_text(o.output, format_semigroup(Q.semigroup));
      }
      return r;
    }

    Report tensor_verb(Options const& o) {
      expect_inputs(o, 2, "tensor");
      auto const A = read_act(o.inputs[0]);
      auto const B = read_act(o.inputs[1]);
      if (!A.right || !B.left) {
        usage("tensor takes a right act and then a left act");
      }
      if (!A.right->semigroup().same_table(B.left->semigroup())) {
        usage("the two acts are over different semigroups");
      }
      auto const T = tensor(*A.right, *B.left);
      Report     r;
      r.add("left_points", T.left_size);
      r.add("right_points", T.right_size);
      r.add("classes", T.number_of_classes());
      r.body = "classes:\n";
      for (std::size_t c = 0; c < T.number_of_classes(); ++c) {
        auto const [a, b] = T.representative[c];
        r.body += std::to_string(c) + ": " + std::to_string(a) + " " + std::to_string(b) + "\n";
      }
      return r;
    }

    Report morita_verb(Options const& o) {
      expect_inputs(o, 2, "morita");
      auto const S = load(o.inputs[0]);
      auto const T = load(o.inputs[1]);
      auto const w = morita_equivalent(S, T);
      Report     r;
      r.verdict = std::string("MORITA-EQUIVALENT: ") + (w ? "yes" : "no");
      r.add("morita_equivalent", std::string(w ? "yes" : "no"));
      if (!w) {
        r.code    = kFalse;
        auto diff = invariants_mismatch(invariants_report(S), invariants_report(T));
        r.add("failing_invariant",
              diff ? *diff : std::string("none; the Cauchy completions are not equivalent"));
        return r;
      }
      auto const& F = w->equivalence;
      r.add("source_objects", F.source.number_of_objects());
      r.add("target_objects", F.target.number_of_objects());
      r.body = "object map:\n";
      for (Obj u = 0; u < F.objects.size(); ++u) {
        r.body += S.name(w->source.idempotent_of[u]) + " -> "
                  + T.name(w->target.idempotent_of[F.objects[u]]) + "\n";
      }
      try {
        auto const J = joint_enlargement(*w, o.max_size);
        r.add("joint_enlargement_size", J.R.size());
        r.add("s_image", list(J.s_image));
        r.add("t_image", list(J.t_image));
      } catch (Error const& e) {
        if (e.code() != ErrorCode::EnumerationTooLarge) {
          throw;
        }
        r.add("joint_enlargement_size", std::string("skipped, exceeds --max-size"));
      }
      return r;
    }

    Report enlarge_verb(Options const& o) {
      if (o.inputs.size() < 2) {
        usage("enlarge takes a semigroup and the elements of a subsemigroup");
      }
      auto const        R = load(o.inputs[0]);
      std::vector<Elem> sub;
      for (std::size_t i = 1; i < o.inputs.size(); ++i) {
        sub.push_back(static_cast<Elem>(to_number(o.inputs[i])));
      }
      std::sort(sub.begin(), sub.end());
      sub.erase(std::unique(sub.begin(), sub.end()), sub.end());
      auto const c = check_enlargement(R, sub);
      Report     r;
      r.verdict = std::string("ENLARGEMENT: ") + (c.holds() ? "yes" : "no");
      r.add("enlargement", std::string(c.holds() ? "yes" : "no"));
      r.add("inner", c.inner);
      r.add("outer", c.outer);
      if (c.inner_witness) {
        r.add("inner_witness", std::to_string(*c.inner_witness));
      }
      if (c.outer_witness) {
        r.add("outer_witness", std::to_string(*c.outer_witness));
      }
      if (!c.holds()) {
        r.code = kFalse;
        return r;
      }
      r.body = "d-transfer (e f x x'):\n";
      for (auto const& w : d_transfer(R, sub)) {
        r.body += std::to_string(w.e) + " " + std::to_string(w.f) + " " + std::to_string(w.x)
                  + " " + std::to_string(w.x_inverse) + "\n";
      }
      return r;
    }

    Report classify_verb(Options const& o) {
      expect_inputs(o, 1, "classify");
      auto const S = load(o.inputs[0]);
      Report     r;
      for (auto const& p : predicate_names()) {
        r.add(p, structural_predicate(S, p));
        r.add("locally_" + p, locally(S, p));
      }
      auto const inv = invariants_report(S);
      r.add("regular", inv.is_regular);
      r.add("regular_d_class_count", inv.regular_d_class_count);
      r.add("ideal_poset_size", inv.principal_ideal_poset.size());
      r.add("ideal_poset_meet_semilattice", inv.principal_ideal_poset.is_meet_semilattice);
      r.add("local_monoid_classes", inv.local_monoid_fingerprints.size());
      if (has_local_units(S)) {
        auto const cs = completely_simple_equiv(S);
        r.add("completely_simple_conditions_agree", cs.agree());
      }
      std::string order;
      auto const& P = inv.principal_ideal_poset;
      for (std::size_t i = 0; i < P.size(); ++i) {
        for (std::size_t j = 0; j < P.size(); ++j) {
          if (i != j && P.order.test(i, j)) {
            order += std::to_string(P.representatives[i]) + " < "
                     + std::to_string(P.representatives[j]) + "\n";
          }
        }
      }
      r.body = "ideal order (by least member of each J-class):\n" + order;
      return r;
    }

    Report generate_verb(Options const& o) {
      if (o.inputs.empty()) {
        usage("generate takes a family name and its parameters");
      }
      auto const S = generate(o.inputs[0], {o.inputs.begin() + 1, o.inputs.end()});
      Report     r;
      if (o.output.empty()) {
        r.body = format_semigroup(S);
      } else {
        write_text(o.output, format_semigroup(S));
        r.add("written", o.output);
      }
      r.add("size", S.size());
      return r;
    }

    // Quick invariant checks over the corpus and seeded random
    // transformation semigroups.
    Report selftest(Options const& o) {
      if (!o.inputs.empty()) {
        usage("selftest takes no inputs");
      }
      auto cases = corpus();
      std::mt19937_64 rng(o.seed);
      for (int i = 0; static_cast<int>(cases.size()) < 14; ++i) {
        std::size_t const deg  = 2 + rng() % 2;
        std::size_t const gens = 1 + rng() % 2;
        std::vector<std::vector<Elem>> g(gens, std::vector<Elem>(deg));
        for (auto& m : g) {
          for (auto& v : m) {
            v = static_cast<Elem>(rng() % deg);
          }
        }
        cases.push_back({"random" + std::to_string(i), transformation_semigroup(g)});
      }

      Report      r;
      std::size_t failures = 0;
      auto check = [&](std::string const& what, std::string const& name, auto&& fn) {
        bool ok = false;
        try {
          ok = fn();
        } catch (Error const& e) {
          r.body += "  " + std::string(e.what()) + "\n";
        }
        failures += !ok;
        r.body += what + " " + name + ": " + (ok ? "ok" : "FAIL") + "\n";
      };
      for (auto const& [name, S] : cases) {
        check("text-round-trip", name, [&] {
          return parse_semigroup(format_semigroup(S)).same_table(S);
        });
        check("regular-direct", name, [&] {
          return regular_elements_direct(S) == S.green().regular;
        });
        check("d-equals-j", name, [&] { return S.green().d_classes == S.green().j_classes; });
        if (!has_local_units(S)) {
          continue;
        }
        check("self-equivalent", name, [&] { return morita_equivalent(S, S).has_value(); });
        check("consolidated-local-units", name, [&] {
          auto const C = cauchy_completion(S);
          auto const Q = consolidate(C.category, default_consolidation(C)).semigroup;
          return has_local_units(Q) && is_regular(Q) == is_regular(S);
        });
        check("completely-simple-agree", name,
              [&] { return completely_simple_equiv(S).agree(); });
      }
      r.add("seed", std::to_string(o.seed));
      r.add("semigroups", cases.size());
      r.add("failures", failures);
      r.code = failures == 0 ? kOk : kFalse;
      return r;
    }
  }  // namespace

  int run(std::vector<std::string> const& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Finite semigroups, their Cauchy completions and Morita equivalence",
                 "semi"};
    app.require_subcommand(1, 1);
    Options o;
    app.add_flag("--json", o.json, "Flat key=value report");
    app.add_option("-o", o.output, "Output file");
    app.add_option("--seed", o.seed, "Seed for randomized checks");
    app.add_option("--max-size", o.max_size, "Guard for pipeline enumerations");

    using Verb = std::function<Report(Options const&)>;
    std::vector<std::tuple<std::string, std::string, Verb>> const verbs{
        {"analyze", "Size, idempotents, Green's classes and regularity", analyze},
        {"cauchy", "Dump the Cauchy completion", cauchy},
        {"consolidate", "Consolidate C(S) with p(e, f) = (e, ef, f)", consolidate_verb},
        {"quotient", "Quotient by the congruence generated by pairs", quotient_verb},
        {"tensor", "Tensor a right act with a left act", tensor_verb},
        {"morita", "Decide Morita equivalence of two semigroups", morita_verb},
        {"enlarge", "Check that R enlarges a subsemigroup", enlarge_verb},
        {"classify", "Structural predicates and Morita invariants", classify_verb},
        {"generate", "Write a semigroup from a named family", generate_verb},
        {"selftest", "Run quick invariant checks", selftest},
    };
    std::map<CLI::App*, Verb const*> dispatch;
    for (auto const& [name, help, fn] : verbs) {
      auto* sub = app.add_subcommand(name, help);
      sub->add_option("inputs", o.inputs, "Files, family specs or elements");
      sub->fallthrough();
      if (name == "quotient") {
        sub->add_flag("--min-inverse", o.min_inverse,
                      "Use the least congruence with an inverse quotient");
      }
      dispatch[sub] = &fn;
    }

    try {
      std::vector<std::string> reversed(args.rbegin(), args.rend());
      app.parse(reversed);
    } catch (CLI::CallForHelp const&) {
      out << app.help();
      return kOk;
    } catch (CLI::ParseError const& e) {
      err << "semi: " << e.what() << "\n";
      return kError;
    }

    auto* chosen = app.get_subcommands().front();
    try {
      Report const r    = (*dispatch.at(chosen))(o);
      auto const   text = r.render(o.json);
      if (!o.output.empty() && chosen->get_name() != "generate"
          && chosen->get_name() != "consolidate" && chosen->get_name() != "quotient") {
        write_text(o.output, text);
      } else {
        out << text;
      }
      return r.code;
    } catch (Error const& e) {
      err << "semi " << chosen->get_name() << ": " << e.what() << "\n";
      return kError;
    }
  }

}  // namespace semi::cli
