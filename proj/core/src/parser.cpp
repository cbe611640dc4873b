#include <cctype>
#include <string>
#include <vector>

#include "ctlenum/error.hpp"
#include "ctlenum/formula.hpp"

namespace ctlenum {
namespace {

enum class Tok {
  Ident,
  Keyword,
  Bang,
  Amp,
  Bar,
  Arrow,
  LParen,
  RParen,
  LBracket,
  RBracket,
  End,
};

struct Token {
  Tok kind;
  std::string text;
  std::size_t line;
  std::size_t column;
};

bool is_keyword(const std::string& s) {
  static const char* const kKeywords[] = {"true", "false", "AX", "EX", "AF",
                                          "EF",   "AG",    "EG", "A",  "E",
                                          "U",    "R"};
  for (const char* k : kKeywords) {
    if (s == k) return true;
  }
  return false;
}

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> out;
  std::size_t line = 1, col = 1;
  std::size_t i = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
      ++i;
    }
  };
  while (i < text.size()) {
    const char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    const std::size_t l = line, cl = col;
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < text.size() &&
             (std::isalnum(static_cast<unsigned char>(text[j])) ||
              text[j] == '_' || text[j] == '^')) {
        ++j;
      }
      std::string word(text.substr(i, j - i));
      Tok kind = is_keyword(word) ? Tok::Keyword : Tok::Ident;
      out.push_back({kind, std::move(word), l, cl});
      advance(j - i);
      continue;
    }
    Tok kind;
    std::size_t len = 1;
    switch (c) {
      case '!': kind = Tok::Bang; break;
      case '&': kind = Tok::Amp; break;
      case '|': kind = Tok::Bar; break;
      case '(': kind = Tok::LParen; break;
      case ')': kind = Tok::RParen; break;
      case '[': kind = Tok::LBracket; break;
      case ']': kind = Tok::RBracket; break;
      case '-':
        if (i + 1 < text.size() && text[i + 1] == '>') {
          kind = Tok::Arrow;
          len = 2;
          break;
        }
        throw ParseError(l, cl, "'->'", "'-'");
      default:
        throw ParseError(l, cl, "a formula token",
                         std::string("'") + c + "'");
    }
    out.push_back({kind, std::string(text.substr(i, len)), l, cl});
    advance(len);
  }
  out.push_back({Tok::End, "", line, col});
  return out;
}

class Parser {
 public:
  explicit Parser(std::vector<Token> tokens) : toks_(std::move(tokens)) {}

  Formula parse() {
    Formula f = implication();
    expect(Tok::End, "end of input");
    return f;
  }

 private:
  const Token& peek() const { return toks_[pos_]; }

  bool accept(Tok kind) {
    if (peek().kind != kind) return false;
    ++pos_;
    return true;
  }

  bool accept_keyword(const char* kw) {
    if (peek().kind != Tok::Keyword || peek().text != kw) return false;
    ++pos_;
    return true;
  }

  [[noreturn]] void fail(const std::string& expected) const {
    const Token& t = peek();
    std::string found = t.kind == Tok::End ? "end of input" : "'" + t.text + "'";
    throw ParseError(t.line, t.column, expected, found);
  }

  void expect(Tok kind, const std::string& expected) {
    if (!accept(kind)) fail(expected);
  }

  Formula implication() {
    Formula lhs = disjunction();
    if (accept(Tok::Arrow)) {
      Formula rhs = implication();
      return Formula::disj(Formula::negation(std::move(lhs)), std::move(rhs));
    }
    return lhs;
  }

  Formula disjunction() {
    Formula f = conjunction();
    while (accept(Tok::Bar)) f = Formula::disj(std::move(f), conjunction());
    return f;
  }

  Formula conjunction() {
    Formula f = unary();
    while (accept(Tok::Amp)) f = Formula::conj(std::move(f), unary());
    return f;
  }

  Formula unary() {
    if (accept(Tok::Bang)) return Formula::negation(unary());
    static const std::pair<const char*, Op> kPrefix[] = {
        {"AX", Op::AX}, {"EX", Op::EX}, {"AF", Op::AF},
        {"EF", Op::EF}, {"AG", Op::AG}, {"EG", Op::EG}};
    for (const auto& [kw, op] : kPrefix) {
      if (accept_keyword(kw)) return Formula::unary(op, unary());
    }
    return primary();
  }

  Formula primary() {
    const Token& t = peek();
    if (t.kind == Tok::Ident) {
      ++pos_;
      return Formula::atom(t.text);
    }
    if (accept_keyword("true")) return Formula::top();
    if (accept_keyword("false")) return Formula::bottom();
    if (accept(Tok::LParen)) {
      Formula f = implication();
      expect(Tok::RParen, "')'");
      return f;
    }
    const bool universal = t.kind == Tok::Keyword && t.text == "A";
    const bool existential = t.kind == Tok::Keyword && t.text == "E";
    if (universal || existential) {
      ++pos_;
      expect(Tok::LBracket, "'['");
      Formula lhs = implication();
      Op op;
      if (accept_keyword("U")) {
        op = universal ? Op::AU : Op::EU;
      } else if (accept_keyword("R")) {
        op = universal ? Op::AR : Op::ER;
      } else {
        fail("'U' or 'R'");
      }
      Formula rhs = implication();
      expect(Tok::RBracket, "']'");
      return Formula::binary(op, std::move(lhs), std::move(rhs));
    }
    fail("an atom, constant, '(', 'A[', 'E[' or a unary operator");
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

}  // namespace

Formula parse_formula(std::string_view text) {
  return Parser(tokenize(text)).parse();
}

}  // namespace ctlenum
