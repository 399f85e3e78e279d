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

#include "semi/text_format.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

#include "semi/error.hpp"

namespace semi {

  namespace {
    struct Line {
      std::size_t              number;
      std::vector<std::string> tokens;
    };

    // Splits into non-comment, non-blank lines of whitespace-separated tokens.
    std::vector<Line> tokenize(std::string_view text, std::string_view source) {
      if (!text.empty() && text.back() != '\n') {
        fail(ErrorCode::ParseError, std::string(source) + ": missing trailing newline");
      }
      std::vector<Line> out;
      std::size_t       number = 0;
      std::size_t       pos    = 0;
      while (pos < text.size()) {
        auto const end  = text.find('\n', pos);
        auto const line = text.substr(pos, end - pos);
        pos             = end + 1;
        ++number;
        for (char c : line) {
          if (static_cast<unsigned char>(c) > 127) {
            fail(ErrorCode::ParseError,
                 std::string(source) + ":" + std::to_string(number) + ": non-ASCII byte");
          }
        }
        std::istringstream       in{std::string(line)};
        std::vector<std::string> tokens;
        for (std::string t; in >> t;) {
          tokens.push_back(std::move(t));
        }
        if (tokens.empty() || tokens.front().starts_with('#')) {
          continue;
        }
        out.push_back({number, std::move(tokens)});
      }
      return out;
    }

    [[noreturn]] void bad(std::string_view source, std::size_t line, std::string const& what) {
      fail(ErrorCode::ParseError, std::string(source) + ":" + std::to_string(line) + ": " + what);
    }

    std::size_t number(std::string const& token, std::string_view source, std::size_t line) {
      std::size_t value = 0;
      auto [ptr, ec]    = std::from_chars(token.data(), token.data() + token.size(), value);
      if (ec != std::errc{} || ptr != token.data() + token.size()) {
        bad(source, line, "expected a non-negative integer, got '" + token + "'");
      }
      return value;
    }

    // Reads rows x cols entries from lines [first, first + rows).
    std::vector<Elem> read_rows(std::vector<Line> const& lines,
                                std::size_t              first,
                                std::size_t              rows,
                                std::size_t              cols,
                                std::string_view         source) {
      if (lines.size() < first + rows) {
        bad(source, lines.empty() ? 0 : lines.back().number,
            "expected " + std::to_string(rows) + " rows");
      }
      std::vector<Elem> out;
      out.reserve(rows * cols);
      for (std::size_t r = 0; r < rows; ++r) {
        auto const& l = lines[first + r];
        if (l.tokens.size() != cols) {
          bad(source, l.number,
              "expected " + std::to_string(cols) + " entries, got "
                  + std::to_string(l.tokens.size()));
        }
        for (auto const& t : l.tokens) {
          out.push_back(static_cast<Elem>(number(t, source, l.number)));
        }
      }
      return out;
    }

    std::string slurp(std::filesystem::path const& path) {
      std::ifstream in(path, std::ios::binary);
      if (!in) {
        fail(ErrorCode::ParseError, path.string() + ": cannot open");
      }
      std::ostringstream buf;
      buf << in.rdbuf();
      return buf.str();
    }

    template <typename Rows>
    void append_rows(std::string& out, Rows const& table, std::size_t rows, std::size_t cols) {
      for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < cols; ++c) {
          out += (c == 0 ? "" : " ") + std::to_string(table[r * cols + c]);
        }
        out += '\n';
      }
    }
  }  // namespace

  FiniteSemigroup parse_semigroup(std::string_view text, std::string_view source) {
    auto const lines = tokenize(text, source);
    if (lines.empty()) {
      fail(ErrorCode::ParseError, std::string(source) + ": empty input");
    }
    auto const& head = lines.front();
    if (head.tokens.size() != 2 || head.tokens[0] != "semigroup") {
      bad(source, head.number, "expected 'semigroup <n>'");
    }
    std::size_t const n = number(head.tokens[1], source, head.number);
    if (n == 0) {
      bad(source, head.number, "a semigroup needs at least one element");
    }
    auto table = read_rows(lines, 1, n, n, source);

    std::vector<std::string> names;
    if (lines.size() > n + 1) {
      auto const& l = lines[n + 1];
      if (l.tokens.front() != "names:") {
        bad(source, l.number, "expected 'names:' or end of input");
      }
      if (l.tokens.size() != n + 1) {
        bad(source, l.number, "expected " + std::to_string(n) + " names");
      }
      names.assign(l.tokens.begin() + 1, l.tokens.end());
      if (lines.size() > n + 2) {
        bad(source, lines[n + 2].number, "unexpected trailing content");
      }
    }
    return FiniteSemigroup::from_table(n, std::move(table), std::move(names));
  }

  std::string format_semigroup(FiniteSemigroup const& S) {
    std::string out = "semigroup " + std::to_string(S.size()) + "\n";
    append_rows(out, S.table(), S.size(), S.size());
    if (!S.names().empty()) {
      out += "names:";
      for (auto const& name : S.names()) {
        out += " " + name;
      }
      out += '\n';
    }
    return out;
  }

  FiniteSemigroup read_semigroup(std::filesystem::path const& path) {
    return parse_semigroup(slurp(path), path.string());
  }

  void write_text(std::filesystem::path const& path, std::string const& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out || !(out << text)) {
      fail(ErrorCode::ParseError, path.string() + ": cannot write");
    }
  }

  ActHeader parse_act_header(std::string_view text, std::string_view source) {
    auto const lines = tokenize(text, source);
    if (lines.empty()) {
      fail(ErrorCode::ParseError, std::string(source) + ": empty input");
    }
    auto const& t = lines.front().tokens;
    auto const  n = lines.front().number;
    if (t.size() < 4 || t.size() > 5 || t[0] != "act" || t[2] != "over") {
      bad(source, n, "expected 'act <m> over <semigroup file> [left|right]'");
    }
    ActHeader h;
    h.m    = number(t[1], source, n);
    h.over = t[3];
    if (t.size() == 5) {
      if (t[4] == "right") {
        h.side = Side::right;
      } else if (t[4] != "left") {
        bad(source, n, "side must be 'left' or 'right', got '" + t[4] + "'");
      }
    }
    return h;
  }

  ParsedAct parse_act(std::string_view text, FiniteSemigroup const& S, std::string_view source) {
    ParsedAct r{parse_act_header(text, source), std::nullopt, std::nullopt};
    auto const lines = tokenize(text, source);
    auto       table = read_rows(lines, 1, S.size(), r.header.m, source);
    if (lines.size() > S.size() + 1) {
      bad(source, lines[S.size() + 1].number, "unexpected trailing content");
    }
    if (r.header.side == Side::left) {
      r.left = FiniteLeftAct::make(S, r.header.m, std::move(table));
    } else {
      r.right = FiniteRightAct::make(S, r.header.m, std::move(table));
    }
    return r;
  }

  ParsedAct read_act(std::filesystem::path const& path) {
    auto const text   = slurp(path);
    auto const header = parse_act_header(text, path.string());
    auto const S      = read_semigroup(path.parent_path() / header.over);
    return parse_act(text, S, path.string());
  }

  template <Side side>
  std::string format_act(FiniteAct<side> const& X, std::string_view over) {
    std::string out = "act " + std::to_string(X.size()) + " over " + std::string(over)
                      + (side == Side::left ? " left\n" : " right\n");
    append_rows(out, X.table(), X.semigroup().size(), X.size());
    return out;
  }

  template std::string format_act(FiniteAct<Side::left> const&, std::string_view);
  template std::string format_act(FiniteAct<Side::right> const&, std::string_view);

  std::string dump_cauchy(CauchyCompletion const& C) {
    std::string out;
    auto const& cat = C.category;
    for (Arrow x = 0; x < cat.number_of_arrows(); ++x) {
      out += std::to_string(cat.left(x)) + " " + std::to_string(cat.right(x)) + " "
             + C.base.name(C.middle(x)) + "\n";
    }
    return out;
  }

  std::string dump_consolidation(Consolidation const& p) {
    std::string       out;
    std::size_t const k = p.category.number_of_objects();
    for (Obj u = 0; u < k; ++u) {
      for (Obj v = 0; v < k; ++v) {
        out += std::to_string(u) + " " + std::to_string(v) + " -> "
               + std::to_string(p(u, v)) + "\n";
      }
    }
    return out;
  }

  std::string dump_partition(Partition const& p) {
    std::string out;
    for (auto const& c : p.classes) {
      for (std::size_t i = 0; i < c.size(); ++i) {
        out += (i == 0 ? "" : " ") + std::to_string(c[i]);
      }
      out += '\n';
    }
    return out;
  }

}  // namespace semi
