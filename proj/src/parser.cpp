#include "flogic/parser.hpp"

#include <cctype>
#include <optional>

namespace flogic {

namespace {

enum class Tok { Ident, True, False, Not, And, Or, LParen, RParen, LBrack, RBrack, Rel, Num, End };

struct Token {
  Tok kind;
  std::string text;
  int line;
  int column;
};

class Lexer {
 public:
  Lexer(std::string_view src, int first_line) : src_(src), line_(first_line) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    for (;;) {
      skip_space();
      int line = line_, col = col_;
      if (pos_ >= src_.size()) {
        out.push_back({Tok::End, "", line, col});
        return out;
      }
      char c = src_[pos_];
      if (std::isalpha(static_cast<unsigned char>(c))) {
        std::size_t start = pos_;
        while (pos_ < src_.size() &&
               (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_')) {
          advance();
        }
        std::string word(src_.substr(start, pos_ - start));
        Tok k = word == "true" ? Tok::True : word == "false" ? Tok::False : Tok::Ident;
        out.push_back({k, word, line, col});
      } else if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
        std::size_t start = pos_;
        while (pos_ < src_.size() && (std::isdigit(static_cast<unsigned char>(src_[pos_])) ||
                                      src_[pos_] == '.' || src_[pos_] == '/')) {
          advance();
        }
        out.push_back({Tok::Num, std::string(src_.substr(start, pos_ - start)), line, col});
      } else if (c == '>' || c == '<') {
        advance();
        std::string op(1, c);
        if (pos_ < src_.size() && src_[pos_] == '=') {
          advance();
          op += '=';
        }
        out.push_back({Tok::Rel, op, line, col});
      } else {
        Tok k;
        switch (c) {
          case '~':
            k = Tok::Not;
            break;
          case '&':
            k = Tok::And;
            break;
          case '|':
            k = Tok::Or;
            break;
          case '(':
            k = Tok::LParen;
            break;
          case ')':
            k = Tok::RParen;
            break;
          case '[':
            k = Tok::LBrack;
            break;
          case ']':
            k = Tok::RBrack;
            break;
          case '=':
            k = Tok::Rel;
            break;
          default:
            throw ParseError(std::string("unexpected character '") + c + "'", line, col);
        }
        advance();
        out.push_back({k, std::string(1, c), line, col});
      }
    }
  }

 private:
  void advance() {
    if (src_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  void skip_space() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) advance();
  }

  std::string_view src_;
  std::size_t pos_ = 0;
  int line_;
  int col_ = 1;
};

class Parser {
 public:
  Parser(std::string_view src, int first_line) : toks_(Lexer(src, first_line).run()) {}

  Prop whole_prop() {
    Prop p = prop_or();
    expect_end();
    return p;
  }

  MetaProp whole_meta() {
    MetaProp m = meta_or();
    expect_end();
    return m;
  }

 private:
  const Token& peek() const { return toks_[pos_]; }
  const Token& next() { return toks_[pos_++]; }

  [[noreturn]] void fail(const std::string& msg, const Token& t) const {
    std::string found = t.kind == Tok::End ? "end of input" : "'" + t.text + "'";
    throw ParseError(msg + ", found " + found, t.line, t.column);
  }

  void expect(Tok k, const char* what) {
    if (peek().kind != k) fail(std::string("expected ") + what, peek());
    ++pos_;
  }

  void expect_end() {
    if (peek().kind != Tok::End) fail("expected end of input", peek());
  }

  Prop prop_or() {
    Prop p = prop_and();
    while (peek().kind == Tok::Or) {
      ++pos_;
      p = p | prop_and();
    }
    return p;
  }

  Prop prop_and() {
    Prop p = prop_unary();
    while (peek().kind == Tok::And) {
      ++pos_;
      p = p & prop_unary();
    }
    return p;
  }

  Prop prop_unary() {
    const Token& t = next();
    switch (t.kind) {
      case Tok::True:
        return Prop::top();
      case Tok::False:
        return Prop::bottom();
      case Tok::Ident:
        return Prop::atom(t.text);
      case Tok::Not:
        return ~prop_unary();
      case Tok::LParen: {
        Prop p = prop_or();
        expect(Tok::RParen, "')'");
        return p;
      }
      default:
        fail("expected proposition", t);
    }
  }

  MetaProp meta_or() {
    MetaProp m = meta_and();
    while (peek().kind == Tok::Or) {
      ++pos_;
      m = m | meta_and();
    }
    return m;
  }

  MetaProp meta_and() {
    MetaProp m = meta_unary();
    while (peek().kind == Tok::And) {
      ++pos_;
      m = m & meta_unary();
    }
    return m;
  }

  MetaProp meta_unary() {
    const Token& t = next();
    switch (t.kind) {
      case Tok::True:
        return MetaProp::top();
      case Tok::False:
        return MetaProp::bottom();
      case Tok::Not:
        return ~meta_unary();
      case Tok::LParen: {
        MetaProp m = meta_or();
        expect(Tok::RParen, "')'");
        return m;
      }
      case Tok::LBrack:
        return meta_atom();
      default:
        fail("expected meta proposition", t);
    }
  }

  MetaProp meta_atom() {
    Prop p = prop_or();
    const Token& rel = next();
    if (rel.kind != Tok::Rel) fail("expected relation", rel);
    const Token& num = next();
    if (num.kind != Tok::Num) fail("expected threshold", num);
    Threshold n;
    try {
      n = parse_threshold(num.text);
    } catch (const std::exception& e) {
      throw ParseError(e.what(), num.line, num.column);
    }
    expect(Tok::RBrack, "']'");
    if (rel.text == ">=") return geq(p, n);
    if (rel.text == ">") return gt(p, n);
    if (rel.text == "<=") return leq(p, n);
    if (rel.text == "<") return lt(p, n);
    return leq(p, n) & geq(p, n);
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

template <typename F>
void for_each_line(std::string_view text, F&& f) {
  int line = 1;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view body = text.substr(start, end - start);
    if (auto hash = body.find('#'); hash != std::string_view::npos) body = body.substr(0, hash);
    bool blank = true;
    for (char c : body) {
      if (!std::isspace(static_cast<unsigned char>(c))) blank = false;
    }
    if (!blank) f(body, line);
    start = end + 1;
    ++line;
  }
}

}  // namespace

Prop parse_prop(std::string_view text) { return Parser(text, 1).whole_prop(); }

MetaProp parse_meta(std::string_view text) { return Parser(text, 1).whole_meta(); }

MetaTheory parse_theory(std::string_view text) {
  MetaTheory theory;
  for_each_line(text, [&](std::string_view body, int line) { theory.insert(Parser(body, line).whole_meta()); });
  return theory;
}

std::vector<Prop> parse_prop_list(std::string_view text) {
  std::vector<Prop> out;
  for_each_line(text, [&](std::string_view body, int line) { out.push_back(Parser(body, line).whole_prop()); });
  return out;
}

}  // namespace flogic
