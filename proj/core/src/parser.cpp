// Recursive-descent parser for formulas, literal sets and the `exists`
// prefix.
//
//   iff     := implies ('<->' implies)*        left-associative
//   implies := or ('->' implies)?              right-associative
//   or      := and ('|' and)*
//   and     := unary ('&' unary)*
//   unary   := '!' unary | primary
//   primary := ATOM | 'true' | 'false' | '(' iff ')'

#include <cctype>
#include <string>

#include "partialsat/assignment.hpp"
#include "partialsat/errors.hpp"
#include "partialsat/formula.hpp"
#include "partialsat/quantified.hpp"

namespace partialsat {

namespace {

enum class Tok {
  Ident,
  True,
  False,
  Exists,
  Not,
  And,
  Or,
  Implies,
  Iff,
  LParen,
  RParen,
  Comma,
  Dot,
  End,
};

struct Token {
  Tok kind;
  std::string text;
  std::size_t line;
  std::size_t column;
};

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) {}

  Token next() {
    skip_blank();
    const std::size_t line = line_;
    const std::size_t col = col_;
    if (pos_ >= src_.size()) return {Tok::End, "", line, col};
    const char c = src_[pos_];
    auto single = [&](Tok k) {
      advance(1);
      return Token{k, std::string(1, c), line, col};
    };
    switch (c) {
      case '!':
        return single(Tok::Not);
      case '&':
        return single(Tok::And);
      case '|':
        return single(Tok::Or);
      case '(':
        return single(Tok::LParen);
      case ')':
        return single(Tok::RParen);
      case ',':
        return single(Tok::Comma);
      case '.':
        return single(Tok::Dot);
      default:
        break;
    }
    if (src_.substr(pos_, 2) == "->") {
      advance(2);
      return {Tok::Implies, "->", line, col};
    }
    if (src_.substr(pos_, 3) == "<->") {
      advance(3);
      return {Tok::Iff, "<->", line, col};
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t end = pos_;
      while (end < src_.size() &&
             (std::isalnum(static_cast<unsigned char>(src_[end])) ||
              src_[end] == '_')) {
        ++end;
      }
      std::string word(src_.substr(pos_, end - pos_));
      advance(end - pos_);
      Tok k = Tok::Ident;
      if (word == "true") k = Tok::True;
      if (word == "false") k = Tok::False;
      if (word == "exists") k = Tok::Exists;
      return {k, std::move(word), line, col};
    }
    throw ParseError(std::string("unknown token '") + c + "'", line, col);
  }

 private:
  void advance(std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) {
      if (src_[pos_] == '\n') {
        ++line_;
        col_ = 1;
      } else {
        ++col_;
      }
      ++pos_;
    }
  }

  void skip_blank() {
    while (pos_ < src_.size()) {
      const char c = src_[pos_];
      if (c == '#') {
        while (pos_ < src_.size() && src_[pos_] != '\n') advance(1);
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        advance(1);
      } else {
        break;
      }
    }
  }

  std::string_view src_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t col_ = 1;
};

class Parser {
 public:
  explicit Parser(std::string_view src) : lex_(src) { cur_ = lex_.next(); }

  Formula formula() { return iff(); }

  ExistentialFormula existential() {
    ExistentialFormula ef;
    if (accept(Tok::Exists)) {
      if (cur_.kind != Tok::Ident) fail("expected a quantified atom");
      while (cur_.kind == Tok::Ident) {
        ef.quantified.insert(Atom(cur_.text));
        shift();
      }
      expect(Tok::Dot, "'.'");
    }
    ef.matrix = formula();
    return ef;
  }

  std::vector<Literal> literals() {
    std::vector<Literal> out;
    if (cur_.kind == Tok::End) return out;
    for (;;) {
      bool positive = true;
      while (accept(Tok::Not)) positive = !positive;
      if (cur_.kind != Tok::Ident) fail("expected a literal");
      out.push_back({Atom(cur_.text), positive});
      shift();
      if (!accept(Tok::Comma)) break;
    }
    return out;
  }

  void finish() {
    if (cur_.kind != Tok::End) fail("unexpected '" + cur_.text + "'");
  }

 private:
  Formula iff() {
    Formula f = implies();
    while (accept(Tok::Iff)) f = Formula::iff(f, implies());
    return f;
  }

  Formula implies() {
    Formula f = disjunction();
    if (accept(Tok::Implies)) return Formula::implies(f, implies());
    return f;
  }

  Formula disjunction() {
    Formula f = conjunction();
    while (accept(Tok::Or)) f = f | conjunction();
    return f;
  }

  Formula conjunction() {
    Formula f = unary();
    while (accept(Tok::And)) f = f & unary();
    return f;
  }

  Formula unary() {
    if (accept(Tok::Not)) return !unary();
    return primary();
  }

  Formula primary() {
    switch (cur_.kind) {
      case Tok::True:
        shift();
        return Formula::top();
      case Tok::False:
        shift();
        return Formula::bottom();
      case Tok::Ident: {
        Formula v = Formula::var(cur_.text);
        shift();
        return v;
      }
      case Tok::LParen: {
        shift();
        Formula f = iff();
        expect(Tok::RParen, "')'");
        return f;
      }
      case Tok::End:
        fail("unexpected end of input");
      default:
        fail("unexpected '" + cur_.text + "'");
    }
  }

  bool accept(Tok k) {
    if (cur_.kind != k) return false;
    shift();
    return true;
  }

  void expect(Tok k, const char* what) {
    if (!accept(k)) fail(std::string("expected ") + what);
  }

  void shift() { cur_ = lex_.next(); }

  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg, cur_.line, cur_.column);
  }

  Lexer lex_;
  Token cur_;
};

}  // namespace

Formula parse(std::string_view text) {
  Parser p(text);
  Formula f = p.formula();
  p.finish();
  return f;
}

ExistentialFormula parse_existential(std::string_view text) {
  Parser p(text);
  ExistentialFormula ef = p.existential();
  p.finish();
  return ef;
}

Assignment Assignment::parse(std::string_view text) {
  Parser p(text);
  auto lits = p.literals();
  p.finish();
  return from_literals(lits);
}

}  // namespace partialsat
