#include "expr.hpp"

#include <cctype>

#include "constructions.hpp"
#include "structure.hpp"

namespace ringlab {

namespace {

struct Token {
  enum class Type { ident, number, string, lparen, rparen, comma, end };
  Type type;
  std::string text;
  int64_t value = 0;
  size_t offset = 0;
};

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  Token next() {
    while (pos_ < text_.size() && std::isspace(uchar(text_[pos_]))) ++pos_;
    size_t at = pos_;
    if (pos_ >= text_.size()) return {Token::Type::end, "", 0, at};
    char c = text_[pos_];
    if (c == '(') return ++pos_, Token{Token::Type::lparen, "(", 0, at};
    if (c == ')') return ++pos_, Token{Token::Type::rparen, ")", 0, at};
    if (c == ',') return ++pos_, Token{Token::Type::comma, ",", 0, at};
    if (std::isdigit(uchar(c))) {
      int64_t v = 0;
      std::string txt;
      while (pos_ < text_.size() && std::isdigit(uchar(text_[pos_]))) {
        if (v > (INT64_MAX - 9) / 10)
          fail(Errc::parse_error,
               "integer literal too large at byte " + std::to_string(at));
        v = v * 10 + (text_[pos_] - '0');
        txt += text_[pos_++];
      }
      return {Token::Type::number, txt, v, at};
    }
    if (std::isalpha(uchar(c)) || c == '_') {
      std::string txt;
      while (pos_ < text_.size() &&
             (std::isalnum(uchar(text_[pos_])) || text_[pos_] == '_'))
        txt += char(std::tolower(uchar(text_[pos_++])));
      return {Token::Type::ident, txt, 0, at};
    }
    if (c == '"') {
      ++pos_;
      std::string out;
      while (pos_ < text_.size() && text_[pos_] != '"') {
        if (text_[pos_] == '\\' && pos_ + 1 < text_.size()) ++pos_;
        out += text_[pos_++];
      }
      if (pos_ >= text_.size())
        fail(Errc::parse_error,
             "unterminated string starting at byte " + std::to_string(at));
      ++pos_;
      return {Token::Type::string, out, 0, at};
    }
    fail(Errc::parse_error, std::string("unexpected character '") + c +
                                "' at byte " + std::to_string(at));
  }

 private:
  static unsigned char uchar(char c) { return static_cast<unsigned char>(c); }
  std::string_view text_;
  size_t pos_ = 0;
};

class Parser {
 public:
  explicit Parser(std::string_view text) : lexer_(text) { advance(); }

  RingExprPtr parse() {
    RingExprPtr e = expression();
    expect(Token::Type::end, "end of input");
    return e;
  }

 private:
  void advance() { tok_ = lexer_.next(); }

  void expect(Token::Type t, const std::string& what) {
    if (tok_.type != t)
      fail(Errc::parse_error, "expected " + what + " at byte " +
                                  std::to_string(tok_.offset));
    if (t != Token::Type::end) advance();
  }

  int64_t number(const std::string& what) {
    if (tok_.type != Token::Type::number)
      fail(Errc::parse_error, "expected " + what + " at byte " +
                                  std::to_string(tok_.offset));
    int64_t v = tok_.value;
    advance();
    return v;
  }

  RingExprPtr expression() {
    if (tok_.type != Token::Type::ident)
      fail(Errc::parse_error,
           "expected a ring constructor at byte " + std::to_string(tok_.offset));
    std::string name = tok_.text;
    size_t at = tok_.offset;
    advance();
    expect(Token::Type::lparen, "'('");

    auto node = std::make_shared<RingExpr>();
    if (name == "zmod") {
      node->kind = RingExpr::Kind::zmod;
      node->a = number("modulus");
    } else if (name == "gf") {
      node->kind = RingExpr::Kind::gf;
      node->a = number("characteristic");
      node->b = 1;
      if (tok_.type == Token::Type::comma) {
        advance();
        node->b = number("extension degree");
      }
    } else if (name == "m" || name == "t") {
      node->kind = name == "m" ? RingExpr::Kind::mat : RingExpr::Kind::tri;
      node->a = number("dimension");
      expect(Token::Type::comma, "','");
      node->kids.push_back(expression());
    } else if (name == "prod") {
      node->kind = RingExpr::Kind::prod;
      node->kids.push_back(expression());
      expect(Token::Type::comma, "','");
      node->kids.push_back(expression());
    } else if (name == "trivext") {
      node->kind = RingExpr::Kind::trivext;
      node->kids.push_back(expression());
    } else if (name == "corner") {
      node->kind = RingExpr::Kind::corner;
      node->kids.push_back(expression());
      expect(Token::Type::comma, "','");
      node->a = number("idempotent index");
    } else if (name == "quot") {
      node->kind = RingExpr::Kind::quot;
      node->kids.push_back(expression());
      if (tok_.type != Token::Type::comma)
        fail(Errc::parse_error, "quot needs at least one generator label at byte " +
                                    std::to_string(tok_.offset));
      while (tok_.type == Token::Type::comma) {
        advance();
        if (tok_.type == Token::Type::string || tok_.type == Token::Type::number)
          node->labels.push_back(tok_.text);
        else
          fail(Errc::parse_error, "expected a generator label at byte " +
                                      std::to_string(tok_.offset));
        advance();
      }
    } else if (name == "series") {
      node->kind = RingExpr::Kind::series;
      node->kids.push_back(expression());
      expect(Token::Type::comma, "','");
      node->a = number("truncation");
    } else if (name == "paper") {
      node->kind = RingExpr::Kind::paper;
      if (tok_.type != Token::Type::ident || (tok_.text != "e2" && tok_.text != "e5"))
        fail(Errc::parse_error,
             "expected case id e2 or e5 at byte " + std::to_string(tok_.offset));
      node->paper_id = tok_.text;
      advance();
      expect(Token::Type::comma, "','");
      node->a = number("truncation");
    } else {
      fail(Errc::parse_error, "unknown ring constructor '" + name +
                                  "' at byte " + std::to_string(at));
    }
    expect(Token::Type::rparen, "')'");
    return node;
  }

  Lexer lexer_;
  Token tok_;
};

std::string quote_label(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  out += '"';
  return out;
}

}  // namespace

RingExprPtr parse_ring_expr(std::string_view text) {
  return Parser(text).parse();
}

std::string serialize(const RingExpr& e) {
  using K = RingExpr::Kind;
  switch (e.kind) {
    case K::zmod:
      return "zmod(" + std::to_string(e.a) + ")";
    case K::gf:
      return e.b == 1 ? "gf(" + std::to_string(e.a) + ")"
                      : "gf(" + std::to_string(e.a) + "," + std::to_string(e.b) + ")";
    case K::mat:
      return "m(" + std::to_string(e.a) + "," + serialize(*e.kids[0]) + ")";
    case K::tri:
      return "t(" + std::to_string(e.a) + "," + serialize(*e.kids[0]) + ")";
    case K::prod:
      return "prod(" + serialize(*e.kids[0]) + "," + serialize(*e.kids[1]) + ")";
    case K::trivext:
      return "trivext(" + serialize(*e.kids[0]) + ")";
    case K::corner:
      return "corner(" + serialize(*e.kids[0]) + "," + std::to_string(e.a) + ")";
    case K::quot: {
      std::string out = "quot(" + serialize(*e.kids[0]);
      for (const std::string& l : e.labels) out += "," + quote_label(l);
      return out + ")";
    }
    case K::series:
      return "series(" + serialize(*e.kids[0]) + "," + std::to_string(e.a) + ")";
    case K::paper:
      return "paper(" + e.paper_id + "," + std::to_string(e.a) + ")";
  }
  fail(Errc::internal, "unreachable");
}

bool expr_equal(const RingExpr& x, const RingExpr& y) {
  if (x.kind != y.kind || x.a != y.a || x.b != y.b || x.paper_id != y.paper_id ||
      x.labels != y.labels || x.kids.size() != y.kids.size())
    return false;
  for (size_t i = 0; i < x.kids.size(); ++i)
    if (!expr_equal(*x.kids[i], *y.kids[i])) return false;
  return true;
}

FiniteRing build_ring(const RingExpr& e, uint32_t cap) {
  using K = RingExpr::Kind;
  auto check_dim = [&](int64_t v, const char* what) {
    if (v < 1 || v > 16) fail(Errc::precondition, std::string(what) + " out of range");
    return int(v);
  };
  switch (e.kind) {
    case K::zmod:
      return zmod(e.a, cap);
    case K::gf:
      return gf(e.a, e.b, cap);
    case K::mat:
      return matrix_ring(check_dim(e.a, "matrix dimension"), build_ring(*e.kids[0], cap));
    case K::tri:
      return upper_triangular(check_dim(e.a, "matrix dimension"),
                              build_ring(*e.kids[0], cap));
    case K::prod:
      return direct_product(build_ring(*e.kids[0], cap), build_ring(*e.kids[1], cap));
    case K::trivext:
      return trivial_extension(build_ring(*e.kids[0], cap));
    case K::corner: {
      FiniteRing inner = materialize(build_ring(*e.kids[0], cap), cap);
      ElementSet idems = idempotents(inner);
      if (e.a < 0 || size_t(e.a) >= idems.members.size())
        fail(Errc::precondition,
             "corner index " + std::to_string(e.a) + " out of range: ring has " +
                 std::to_string(idems.members.size()) + " idempotents");
      return corner(inner, Elem::of_int(idems.members[size_t(e.a)]), cap,
                    serialize(e));
    }
    case K::quot: {
      FiniteRing inner = materialize(build_ring(*e.kids[0], cap), cap);
      const TableRing& t = inner.table();
      std::vector<uint16_t> gens;
      for (const std::string& l : e.labels) {
        auto idx = t.index_of_label(l);
        if (!idx)
          fail(Errc::precondition,
               "no element labelled '" + l + "' in " + inner.describe());
        gens.push_back(*idx);
      }
      return quotient(inner, gens, serialize(e));
    }
    case K::series: {
      if (e.a < 1 || e.a > 64) fail(Errc::precondition, "truncation out of range");
      return truncated_series(build_ring(*e.kids[0], cap), int(e.a));
    }
    case K::paper:
      return example_ring(e.paper_id == "e2" ? ExampleRingId::E2 : ExampleRingId::E5,
                          int(e.a), cap);
  }
  fail(Errc::internal, "unreachable");
}

}  // namespace ringlab
