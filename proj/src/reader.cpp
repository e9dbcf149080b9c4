#include "sldtree/reader.hpp"

#include <cctype>
#include <charconv>
#include <map>
#include <optional>
#include <vector>

namespace sldtree {

SyntaxError::SyntaxError(const std::string& message, SourcePosition pos)
    : std::runtime_error("syntax error at " + std::to_string(pos.line) + ":" +
                         std::to_string(pos.column) + ": " + message),
      detail_(message),
      pos_(pos) {}

namespace {

enum class Tok {
  Atom,       // name or quoted atom
  Var,        // Variable or _
  Int,
  Punct,      // ( ) [ ] | ,
  Op,         // :- ; \+ ! < > =< >=
  End,        // clause-terminating '.'
  Eof,
};

struct Token {
  Tok kind = Tok::Eof;
  std::string text;
  std::int64_t value = 0;
  bool quoted = false;
  // True when '(' immediately follows the previous token with no layout.
  bool glued = false;
  SourcePosition pos;
};

class Lexer {
public:
  explicit Lexer(std::string_view text) : text_(text) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    for (;;) {
      bool had_layout = skip_layout();
      Token t = next();
      t.glued = !had_layout;
      out.push_back(t);
      if (t.kind == Tok::Eof) return out;
    }
  }

private:
  char peek(std::size_t ahead = 0) const {
    return i_ + ahead < text_.size() ? text_[i_ + ahead] : '\0';
  }
  bool at_end() const { return i_ >= text_.size(); }

  void advance() {
    if (text_[i_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++i_;
  }

  SourcePosition here() const { return {line_, col_}; }

  bool skip_layout() {
    bool any = false;
    while (!at_end()) {
      char c = peek();
      if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
        any = true;
      } else if (c == '%') {
        while (!at_end() && peek() != '\n') advance();
        any = true;
      } else if (c == '/' && peek(1) == '*') {
        SourcePosition start = here();
        advance();
        advance();
        while (!at_end() && !(peek() == '*' && peek(1) == '/')) advance();
        if (at_end()) throw SyntaxError("unterminated block comment", start);
        advance();
        advance();
        any = true;
      } else {
        break;
      }
    }
    return any;
  }

  static bool is_alnum(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

  Token next() {
    Token t;
    t.pos = here();
    if (at_end()) {
      t.kind = Tok::Eof;
      return t;
    }
    char c = peek();
    if (std::islower(static_cast<unsigned char>(c))) {
      t.kind = Tok::Atom;
      while (!at_end() && is_alnum(peek())) {
        t.text += peek();
        advance();
      }
      return t;
    }
    if (std::isupper(static_cast<unsigned char>(c)) || c == '_') {
      t.kind = Tok::Var;
      while (!at_end() && is_alnum(peek())) {
        t.text += peek();
        advance();
      }
      return t;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) ||
        (c == '-' && std::isdigit(static_cast<unsigned char>(peek(1))))) {
      t.kind = Tok::Int;
      t.text += c;
      advance();
      while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
        t.text += peek();
        advance();
      }
      auto [ptr, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), t.value);
      if (ec != std::errc()) throw SyntaxError("integer out of range: " + t.text, t.pos);
      return t;
    }
    if (c == '\'') {
      t.kind = Tok::Atom;
      t.quoted = true;
      advance();
      for (;;) {
        if (at_end()) throw SyntaxError("unterminated quoted atom", t.pos);
        char q = peek();
        if (q == '\'') {
          advance();
          if (peek() == '\'') {
            t.text += '\'';
            advance();
            continue;
          }
          break;
        }
        if (q == '\\') {
          advance();
          if (at_end()) throw SyntaxError("unterminated quoted atom", t.pos);
          char e = peek();
          switch (e) {
            case 'n': t.text += '\n'; break;
            case 't': t.text += '\t'; break;
            case '\\': t.text += '\\'; break;
            case '\'': t.text += '\''; break;
            default: throw SyntaxError(std::string("unknown escape \\") + e, here());
          }
          advance();
          continue;
        }
        if (q == '\n') throw SyntaxError("newline in quoted atom", here());
        t.text += q;
        advance();
      }
      return t;
    }
    if (c == '[' && peek(1) == ']') {
      t.kind = Tok::Atom;
      t.text = "[]";
      advance();
      advance();
      return t;
    }
    switch (c) {
      case '(': case ')': case '[': case ']': case '|': case ',':
        t.kind = Tok::Punct;
        t.text = c;
        advance();
        return t;
      case ';': case '!':
        t.kind = Tok::Op;
        t.text = c;
        advance();
        return t;
      default:
        break;
    }
    if (c == '.') {
      char n = peek(1);
      if (n == '\0' || n == '%' || std::isspace(static_cast<unsigned char>(n))) {
        t.kind = Tok::End;
        t.text = ".";
        advance();
        return t;
      }
      throw SyntaxError("unexpected '.'", t.pos);
    }
    for (std::string_view op : {":-", "\\+", "=<", ">=", "<", ">"}) {
      if (text_.substr(i_, op.size()) == op) {
        t.kind = Tok::Op;
        t.text = std::string(op);
        for (std::size_t k = 0; k < op.size(); ++k) advance();
        return t;
      }
    }
    throw SyntaxError(std::string("unexpected character '") + c + "'", t.pos);
  }

  std::string_view text_;
  std::size_t i_ = 0;
  int line_ = 1;
  int col_ = 1;
};

std::optional<CompareOp> compare_op(const Token& t) {
  if (t.kind != Tok::Op) return std::nullopt;
  if (t.text == "<") return CompareOp::Less;
  if (t.text == ">") return CompareOp::Greater;
  if (t.text == "=<") return CompareOp::LessEq;
  if (t.text == ">=") return CompareOp::GreaterEq;
  return std::nullopt;
}

class Parser {
public:
  explicit Parser(std::string_view text) : toks_(Lexer(text).run()) {}

  Program program() {
    Program p;
    while (peek().kind != Tok::Eof) {
      p.add(clause());
    }
    return p;
  }

  Clause clause() {
    vars_.clear();
    const Token& start = peek();
    Term head = term();
    if (!head.is_callable()) throw SyntaxError("clause head is not callable", start.pos);
    GoalSeq body;
    if (is_op(":-")) {
      take();
      body = disjunction();
    }
    expect_end("clause");
    return Clause{std::move(head), std::move(body)};
  }

  Clause single_clause() {
    Clause c = clause();
    expect_eof();
    return c;
  }

  GoalSeq query() {
    vars_.clear();
    GoalSeq goals = disjunction();
    if (peek().kind == Tok::End) take();
    expect_eof();
    return goals;
  }

  Term single_term() {
    vars_.clear();
    Term t = term();
    if (peek().kind == Tok::End) take();
    expect_eof();
    return t;
  }

private:
  const Token& peek(std::size_t ahead = 0) const {
    return toks_[std::min(pos_ + ahead, toks_.size() - 1)];
  }
  const Token& take() {
    const Token& t = toks_[pos_];
    if (pos_ + 1 < toks_.size()) ++pos_;
    return t;
  }
  bool is_punct(std::string_view s) const { return peek().kind == Tok::Punct && peek().text == s; }
  bool is_op(std::string_view s) const { return peek().kind == Tok::Op && peek().text == s; }

  [[noreturn]] void fail_here(const std::string& what) const {
    const Token& t = peek();
    std::string found = t.kind == Tok::Eof ? "end of input" : "'" + t.text + "'";
    throw SyntaxError(what + ", found " + found, t.pos);
  }

  void expect_punct(std::string_view s) {
    if (!is_punct(s)) fail_here("expected '" + std::string(s) + "'");
    take();
  }

  void expect_end(std::string_view what) {
    if (peek().kind != Tok::End) fail_here("expected '.' to end " + std::string(what));
    take();
  }

  void expect_eof() {
    if (peek().kind != Tok::Eof) fail_here("expected end of input");
  }

  // disjunction := conjunction (';' conjunction)*, right-associative
  GoalSeq disjunction() {
    GoalSeq left = conjunction();
    if (!is_op(";")) return left;
    take();
    GoalSeq right = disjunction();
    return {Goal{Disjunction{std::move(left), std::move(right)}}};
  }

  // conjunction := unary (',' unary)*
  GoalSeq conjunction() {
    GoalSeq out = unary();
    while (is_punct(",")) {
      take();
      GoalSeq more = unary();
      out.insert(out.end(), std::make_move_iterator(more.begin()),
                 std::make_move_iterator(more.end()));
    }
    return out;
  }

  GoalSeq unary() {
    if (is_op("\\+")) {
      take();
      GoalSeq inner = unary();
      return {Goal{Negation{std::move(inner)}}};
    }
    return primary();
  }

  GoalSeq primary() {
    const Token& t = peek();
    if (t.kind == Tok::Punct && t.text == "(") {
      take();
      GoalSeq inner = disjunction();
      expect_punct(")");
      return inner;
    }
    if (t.kind == Tok::Op && t.text == "!") {
      take();
      return {Goal::cut()};
    }
    if (t.kind == Tok::Atom && !t.quoted && t.text == "not" && peek(1).kind == Tok::Punct &&
        peek(1).text == "(" && peek(1).glued) {
      take();
      take();
      GoalSeq inner = disjunction();
      expect_punct(")");
      return {Goal{Negation{std::move(inner)}}};
    }
    if (t.kind == Tok::End || t.kind == Tok::Eof || t.kind == Tok::Op ||
        (t.kind == Tok::Punct && t.text != "[")) {
      fail_here("expected a goal");
    }
    SourcePosition at = t.pos;
    Term lhs = term();
    if (auto op = compare_op(peek())) {
      take();
      Term rhs = term();
      return {Goal{CompareGoal{*op, std::move(lhs), std::move(rhs)}}};
    }
    return {goal_from_term(lhs, at)};
  }

  static Goal goal_from_term(const Term& t, SourcePosition at) {
    if (t.is_var()) throw SyntaxError("variable " + t.as_var().name + " used as a goal", at);
    if (!t.is_callable()) throw SyntaxError("goal is not callable: " + to_string(t), at);
    if (t.is_atom("true")) return Goal::truth();
    if (t.is_atom("fail")) return Goal::fail();
    if (t.is_atom("false")) return Goal{FailGoal{true}};
    return Goal::call(t);
  }

  Term term() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::Var: {
        take();
        return variable(t.text);
      }
      case Tok::Int: {
        take();
        return Term::integer(t.value);
      }
      case Tok::Atom: {
        Token name = take();
        if (is_punct("(") && peek().glued) {
          take();
          std::vector<Term> args;
          args.push_back(term());
          while (is_punct(",")) {
            take();
            args.push_back(term());
          }
          expect_punct(")");
          return Term::compound(name.text, std::move(args));
        }
        return Term::atom(name.text);
      }
      case Tok::Punct:
        if (t.text == "[") return list();
        if (t.text == "(") {
          take();
          Term inner = term();
          expect_punct(")");
          return inner;
        }
        break;
      default:
        break;
    }
    fail_here("expected a term");
  }

  Term list() {
    expect_punct("[");
    if (is_punct("]")) {
      take();
      return Term();
    }
    std::vector<Term> items;
    items.push_back(term());
    while (is_punct(",")) {
      take();
      items.push_back(term());
    }
    Term tail;
    if (is_punct("|")) {
      take();
      tail = term();
    }
    expect_punct("]");
    return list_term(items, tail);
  }

  Term variable(const std::string& name) {
    if (name == "_") return Term::var(make_variable(name));
    auto it = vars_.find(name);
    if (it == vars_.end()) it = vars_.emplace(name, make_variable(name)).first;
    return Term::var(it->second);
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  std::map<std::string, Variable> vars_;
};

}  // namespace

Program parse_program(std::string_view text) { return Parser(text).program(); }

GoalSeq parse_query(std::string_view text) {
  Parser p(text);
  return p.query();
}

Term parse_term(std::string_view text) { return Parser(text).single_term(); }

Clause parse_clause(std::string_view text) {
  Parser p(text);
  return p.single_clause();
}

}  // namespace sldtree
