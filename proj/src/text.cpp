// Copyright 2026 The gt Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <algorithm>
#include <charconv>
#include <set>
#include <sstream>
#include <vector>

#include "gt/text.hpp"

namespace gt {

namespace {

std::string format_location(const std::string& message, const SourceSpan& span) {
  return std::to_string(span.line) + ":" + std::to_string(span.column) + ": " + message;
}

enum class TokenKind { kOpen, kClose, kSymbol, kInt, kEnd };

struct Token {
  TokenKind kind;
  std::string_view text;
  SourceSpan span;
};

const char* describe(TokenKind k) {
  switch (k) {
    case TokenKind::kOpen: return "'('";
    case TokenKind::kClose: return "')'";
    case TokenKind::kSymbol: return "name";
    case TokenKind::kInt: return "integer";
    case TokenKind::kEnd: return "end of input";
  }
  return "?";
}

bool is_symbol_start(char c) {
  return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || c == '_';
}
bool is_symbol_char(char c) {
  return is_symbol_start(c) || (c >= '0' && c <= '9') || c == '-';
}
bool is_digit(char c) { return c >= '0' && c <= '9'; }

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    for (;;) {
      skip_blank();
      const SourceSpan start = here();
      if (pos_ >= text_.size()) {
        out.push_back({TokenKind::kEnd, {}, start});
        return out;
      }
      const char c = text_[pos_];
      if (c == '(' || c == ')') {
        advance();
        out.push_back({c == '(' ? TokenKind::kOpen : TokenKind::kClose,
                       text_.substr(start.start, 1), finish(start)});
      } else if (is_symbol_start(c)) {
        while (pos_ < text_.size() && is_symbol_char(text_[pos_])) advance();
        out.push_back({TokenKind::kSymbol, text_.substr(start.start, pos_ - start.start),
                       finish(start)});
      } else if (is_digit(c) || (c == '-' && pos_ + 1 < text_.size() && is_digit(text_[pos_ + 1]))) {
        advance();
        while (pos_ < text_.size() && is_digit(text_[pos_])) advance();
        if (pos_ < text_.size() && is_symbol_char(text_[pos_])) {
          while (pos_ < text_.size() && is_symbol_char(text_[pos_])) advance();
          throw ParseError("malformed integer", finish(start), "integer");
        }
        out.push_back({TokenKind::kInt, text_.substr(start.start, pos_ - start.start),
                       finish(start)});
      } else {
        advance();
        std::string shown = (static_cast<unsigned char>(c) >= 0x20 && c != 0x7f)
                                ? std::string(1, c)
                                : "\\x" + std::to_string(static_cast<unsigned char>(c));
        throw ParseError("unexpected character '" + shown + "'", finish(start),
                         "'(', ')', name or integer");
      }
    }
  }

 private:
  SourceSpan here() const { return SourceSpan{pos_, pos_, line_, column_}; }
  SourceSpan finish(SourceSpan s) const {
    s.end = pos_;
    return s;
  }

  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    ++pos_;
  }

  void skip_blank() {
    while (pos_ < text_.size()) {
      const char c = text_[pos_];
      if (c == ';') {
        while (pos_ < text_.size() && text_[pos_] != '\n') advance();
      } else if (c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v') {
        advance();
      } else {
        return;
      }
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t column_ = 1;
};

constexpr std::size_t kMaxDepth = 1000;
constexpr std::string_view kLeafKeyword = "leaf";

class Parser {
 public:
  explicit Parser(std::string_view text) : tokens_(Lexer(text).run()) {}

  const Token& leading_keyword() {
    expect(TokenKind::kOpen, "'('");
    return expect(TokenKind::kSymbol, "'game' or 'ngame'");
  }

  ExtensiveGame extensive() {
    open_keyword("game");
    players_ = player_header();
    const Token& tree_start = peek();
    GameNode root = tree(0);
    close("')' closing the game");
    expect_end();
    ExtensiveGame game(players_, root);
    // Structural checks already ran token by token; anything left is a bug
    // in this parser, but report it as a parse failure rather than crash.
    const auto diags = validate(game);
    if (!diags.empty()) {
      throw ParseError(diags.front().code + " at " + diags.front().where + ": " +
                           diags.front().message,
                       tree_start.span);
    }
    return game;
  }

  NormalFormGame normal() {
    open_keyword("ngame");
    const Token& header = peek();
    auto players = player_header();
    if (players.size() != 2) {
      throw ParseError("normal-form games need exactly 2 players, got " +
                           std::to_string(players.size()),
                       header.span, "2 player names");
    }
    open_keyword("cols");
    std::vector<std::string> cols;
    std::set<std::string, std::less<>> col_seen;
    do {
      const Token& t = expect(TokenKind::kSymbol, "column label");
      if (!col_seen.emplace(t.text).second) {
        throw ParseError("duplicate column label '" + std::string(t.text) + "'", t.span);
      }
      cols.emplace_back(t.text);
    } while (peek().kind == TokenKind::kSymbol);
    close("')' closing cols");

    std::vector<std::string> rows;
    std::vector<std::vector<NormalFormGame::Cell>> cells;
    std::set<std::string, std::less<>> row_seen;
    do {
      const Token& row_open = open_keyword("row");
      const Token& label = expect(TokenKind::kSymbol, "row label");
      if (!row_seen.emplace(label.text).second) {
        throw ParseError("duplicate row label '" + std::string(label.text) + "'", label.span);
      }
      rows.emplace_back(label.text);
      auto& row = cells.emplace_back();
      do {
        open_keyword("cell");
        const Payoff a = integer();
        const Payoff b = integer();
        close("')' closing cell (a cell holds exactly 2 payoffs)");
        row.push_back({a, b});
      } while (peek().kind == TokenKind::kOpen);
      const Token& row_close = close("')' closing row");
      if (row.size() != cols.size()) {
        throw ParseError("ragged row '" + std::string(label.text) + "': " +
                             std::to_string(row.size()) + " cells for " +
                             std::to_string(cols.size()) + " columns",
                         join(row_open.span, row_close.span));
      }
    } while (peek().kind == TokenKind::kOpen);
    close("')' closing the game");
    expect_end();
    return NormalFormGame({players[0], players[1]}, std::move(rows), std::move(cols),
                          std::move(cells));
  }

 private:
  static SourceSpan join(SourceSpan a, const SourceSpan& b) {
    a.end = b.end;
    return a;
  }

  const Token& peek() const { return tokens_[pos_]; }

  const Token& next() {
    const Token& t = tokens_[pos_];
    if (t.kind != TokenKind::kEnd) ++pos_;
    return t;
  }

  [[noreturn]] void unexpected(const Token& t, const std::string& expected) const {
    std::string found = t.kind == TokenKind::kEnd ? "end of input"
                                                  : std::string(describe(t.kind)) + " '" +
                                                        std::string(t.text) + "'";
    throw ParseError("expected " + expected + ", found " + found, t.span, expected);
  }

  const Token& expect(TokenKind kind, const std::string& expected) {
    const Token& t = next();
    if (t.kind != kind) unexpected(t, expected);
    return t;
  }

  const Token& open_keyword(std::string_view keyword) {
    const Token& open = expect(TokenKind::kOpen, "'(" + std::string(keyword) + "'");
    const Token& t = next();
    if (t.kind != TokenKind::kSymbol || t.text != keyword) {
      unexpected(t, "'" + std::string(keyword) + "'");
    }
    return open;
  }

  const Token& close(const std::string& expected) { return expect(TokenKind::kClose, expected); }

  void expect_end() {
    const Token& t = peek();
    if (t.kind != TokenKind::kEnd) unexpected(t, "end of input");
  }

  Payoff integer() {
    const Token& t = expect(TokenKind::kInt, "integer payoff");
    std::int64_t v = 0;
    const auto* first = t.text.data();
    const auto* last = first + t.text.size();
    auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc() || ptr != last) {
      throw ParseError("integer out of range '" + std::string(t.text) + "'", t.span);
    }
    return Payoff{v};
  }

  std::vector<std::string> player_header() {
    open_keyword("players");
    std::vector<std::string> players;
    do {
      const Token& t = expect(TokenKind::kSymbol, "player name");
      if (t.text == kLeafKeyword) {
        throw ParseError("'leaf' is reserved and cannot name a player", t.span);
      }
      if (std::find(players.begin(), players.end(), t.text) != players.end()) {
        throw ParseError("duplicate player '" + std::string(t.text) + "'", t.span);
      }
      players.emplace_back(t.text);
    } while (peek().kind == TokenKind::kSymbol);
    close("')' closing players");
    return players;
  }

  GameNode tree(std::size_t depth) {
    const Token& open = expect(TokenKind::kOpen, "'(' starting a node or leaf");
    if (depth > kMaxDepth) {
      throw ParseError("tree nested deeper than " + std::to_string(kMaxDepth) + " levels",
                       open.span);
    }
    const Token& head = expect(TokenKind::kSymbol, "player name or 'leaf'");
    if (head.text == kLeafKeyword) {
      std::vector<Payoff> payoffs;
      while (peek().kind == TokenKind::kInt) payoffs.push_back(integer());
      const Token& end = peek();
      if (end.kind != TokenKind::kClose) unexpected(end, "integer payoff or ')'");
      if (payoffs.size() != players_.size()) {
        throw ParseError("payoff arity: leaf has " + std::to_string(payoffs.size()) +
                             " payoffs, expected " + std::to_string(players_.size()),
                         join(open.span, end.span), "one integer per player");
      }
      next();
      return GameNode::leaf(std::move(payoffs));
    }
    const auto owner = std::find(players_.begin(), players_.end(), head.text);
    if (owner == players_.end()) {
      throw ParseError("unknown player '" + std::string(head.text) + "'", head.span,
                       "declared player name or 'leaf'");
    }
    std::vector<Move> moves;
    std::set<std::string_view> labels;
    do {
      expect(TokenKind::kOpen, "'(' starting a move");
      const Token& label = expect(TokenKind::kSymbol, "move label");
      if (!labels.insert(label.text).second) {
        throw ParseError("duplicate move label '" + std::string(label.text) + "'", label.span);
      }
      GameNode child = tree(depth + 1);
      close("')' closing move '" + std::string(label.text) + "'");
      moves.push_back(Move{std::string(label.text), std::move(child)});
    } while (peek().kind == TokenKind::kOpen);
    close("')' closing node of " + std::string(head.text));
    return GameNode::decision(
        PlayerId{static_cast<std::size_t>(std::distance(players_.begin(), owner))},
        std::move(moves));
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  std::vector<std::string> players_;
};

void write_payoffs(std::ostream& out, std::span<const Payoff> payoffs) {
  for (const auto& p : payoffs) out << ' ' << p.value;
}

void write_subtree(std::ostream& out, const ExtensiveGame& game, NodeId id, std::size_t indent) {
  const auto& n = game.node(id);
  const std::string pad(indent * 2, ' ');
  if (n.is_leaf()) {
    out << pad << "(leaf";
    write_payoffs(out, n.payoffs);
    out << ')';
    return;
  }
  out << pad << '(' << game.player_name(*n.owner);
  for (const auto& e : n.moves) {
    const auto& child = game.node(e.child);
    out << '\n' << pad << "  (" << e.label;
    if (child.is_leaf()) {
      out << " (leaf";
      write_payoffs(out, child.payoffs);
      out << "))";
    } else {
      out << '\n';
      write_subtree(out, game, e.child, indent + 2);
      out << ')';
    }
  }
  out << ')';
}

void write_players(std::ostream& out, std::span<const std::string> players) {
  out << "(players";
  for (const auto& p : players) out << ' ' << p;
  out << ')';
}

}  // namespace

ParseError::ParseError(std::string message, SourceSpan span, std::string expected)
    : Error(format_location(message, span)),
      message_(std::move(message)),
      span_(span),
      expected_(std::move(expected)) {}

ExtensiveGame parse_extensive(std::string_view text) { return Parser(text).extensive(); }

NormalFormGame parse_normal(std::string_view text) { return Parser(text).normal(); }

AnyGame parse_game(std::string_view text) {
  Parser probe(text);
  const Token& keyword = probe.leading_keyword();
  if (keyword.text == "game") return parse_extensive(text);
  if (keyword.text == "ngame") return parse_normal(text);
  throw ParseError("expected 'game' or 'ngame', found '" + std::string(keyword.text) + "'",
                   keyword.span, "'game' or 'ngame'");
}

std::string serialize_extensive(const ExtensiveGame& game) {
  std::ostringstream out;
  out << "(game ";
  write_players(out, game.players());
  out << '\n';
  write_subtree(out, game, game.root(), 1);
  out << ")\n";
  return out.str();
}

std::string serialize_normal(const NormalFormGame& game) {
  std::ostringstream out;
  out << "(ngame ";
  write_players(out, game.players());
  out << " (cols";
  for (const auto& c : game.col_labels()) out << ' ' << c;
  out << ')';
  for (std::size_t r = 0; r < game.num_rows(); ++r) {
    out << "\n  (row " << game.row_labels()[r];
    for (std::size_t c = 0; c < game.num_cols(); ++c) {
      const auto& cell = game.cell(r, c);
      out << " (cell " << cell[0].value << ' ' << cell[1].value << ')';
    }
    out << ')';
  }
  out << ")\n";
  return out.str();
}

}  // namespace gt
