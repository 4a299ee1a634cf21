#include "apir/parse.hpp"

#include <cctype>
#include <charconv>
#include <sstream>

#include "apir/pattern.hpp"

namespace apir {

namespace {

struct Token {
  enum Kind { LParen, RParen, Atom, End };
  Kind kind = End;
  std::string text;
  int line = 1;
  int column = 1;
};

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) {}

  Token next() {
    skip_trivia();
    Token t;
    t.line = line_;
    t.column = column_;
    if (pos_ >= src_.size()) return t;
    char c = src_[pos_];
    if (c == '(') {
      step();
      t.kind = Token::LParen;
      t.text = "(";
      return t;
    }
    if (c == ')') {
      step();
      t.kind = Token::RParen;
      t.text = ")";
      return t;
    }
    t.kind = Token::Atom;
    while (pos_ < src_.size()) {
      char a = src_[pos_];
      if (std::isspace(static_cast<unsigned char>(a)) || a == '(' || a == ')' || a == ';')
        break;
      t.text.push_back(a);
      step();
    }
    return t;
  }

 private:
  void step() {
    if (src_[pos_] == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    ++pos_;
  }

  void skip_trivia() {
    while (pos_ < src_.size()) {
      char c = src_[pos_];
      if (std::isspace(static_cast<unsigned char>(c))) {
        step();
      } else if (c == ';') {
        while (pos_ < src_.size() && src_[pos_] != '\n') step();
      } else {
        break;
      }
    }
  }

  std::string_view src_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int column_ = 1;
};

[[noreturn]] void fail(const Token& t, const std::string& msg) {
  throw ParseError(msg, t.line, t.column);
}

bool is_nat(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

class Parser {
 public:
  Parser(std::string_view src, bool allow_vars) : lexer_(src), allow_vars_(allow_vars) {
    cur_ = lexer_.next();
  }

  PatternPtr parse_whole() {
    PatternPtr e = parse_node();
    if (cur_.kind != Token::End) fail(cur_, "trailing input after expression");
    return e;
  }

 private:
  Token advance() {
    Token t = cur_;
    cur_ = lexer_.next();
    return t;
  }

  Token expect_atom(const char* what) {
    if (cur_.kind != Token::Atom) fail(cur_, std::string("expected ") + what);
    return advance();
  }

  void expect_rparen(const std::string& head) {
    if (cur_.kind != Token::RParen)
      fail(cur_, "arity mismatch: too many operands for '" + head + "'");
    advance();
  }

  std::int64_t parse_nat(const char* what) {
    Token t = expect_atom(what);
    if (!is_nat(t.text)) fail(t, std::string("expected ") + what + ", got '" + t.text + "'");
    std::int64_t v = 0;
    auto [p, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), v);
    if (ec != std::errc{}) fail(t, "integer literal out of range");
    return v;
  }

  // NAT, or a ?var when parsing a pattern. Returns (value, varname).
  std::pair<std::int64_t, std::string> parse_nat_or_var(const char* what) {
    if (cur_.kind == Token::Atom && !cur_.text.empty() && cur_.text[0] == '?') {
      Token t = advance();
      if (!allow_vars_) fail(t, "pattern variable not allowed here");
      return {0, t.text.substr(1)};
    }
    return {parse_nat(what), {}};
  }

  Dims parse_group(const char* head, bool at_least_one) {
    if (cur_.kind != Token::LParen) fail(cur_, std::string("expected (") + head + " ...)");
    advance();
    Token h = expect_atom("group head");
    if (h.text != head) fail(h, std::string("expected '") + head + "', got '" + h.text + "'");
    Dims out;
    while (cur_.kind == Token::Atom) out.push_back(parse_nat("natural number"));
    if (cur_.kind != Token::RParen) fail(cur_, std::string("malformed (") + head + " ...) group");
    if (at_least_one && out.empty()) fail(cur_, std::string("(") + head + " ...) needs at least one entry");
    advance();
    return out;
  }

  PatternPtr leaf_var(const std::string& name) {
    auto n = std::make_shared<PatternNode>();
    n->var = name;
    return n;
  }

  PatternPtr node(Tag tag, std::optional<Payload> payload, std::string payload_var,
                  std::vector<PatternPtr> children) {
    auto n = std::make_shared<PatternNode>();
    n->tag = tag;
    n->payload = std::move(payload);
    n->payload_var = std::move(payload_var);
    n->children = std::move(children);
    return n;
  }

  PatternPtr parse_node() {
    if (cur_.kind == Token::Atom) {
      Token t = advance();
      if (!t.text.empty() && t.text[0] == '?') {
        if (!allow_vars_) fail(t, "pattern variable not allowed in a program");
        if (t.text.size() == 1) fail(t, "empty pattern variable name");
        return leaf_var(t.text.substr(1));
      }
      if (is_nat(t.text)) fail(t, "expected expression, got number '" + t.text + "'");
      return node(Tag::TensorRef, Payload{t.text}, {}, {});
    }
    if (cur_.kind != Token::LParen) fail(cur_, "expected expression");
    advance();
    Token head = expect_atom("head symbol");
    const std::string& h = head.text;

    if (h == "access") {
      auto child = parse_node();
      auto [n, var] = parse_nat_or_var("access split point");
      expect_rparen(h);
      if (!var.empty()) return node(Tag::Access, std::nullopt, var, {child});
      return node(Tag::Access, Payload{n}, {}, {child});
    }
    if (h == "transpose") {
      auto child = parse_node();
      if (cur_.kind == Token::Atom && !cur_.text.empty() && cur_.text[0] == '?') {
        Token t = advance();
        if (!allow_vars_) fail(t, "pattern variable not allowed here");
        expect_rparen(h);
        return node(Tag::Transpose, std::nullopt, t.text.substr(1), {child});
      }
      Dims perm = parse_group("list", true);
      expect_rparen(h);
      return node(Tag::Transpose, Payload{perm}, {}, {child});
    }
    if (h == "cartProd") {
      auto a = parse_node();
      auto b = parse_node();
      expect_rparen(h);
      return node(Tag::CartProd, Payload{std::monostate{}}, {}, {a, b});
    }
    if (h == "windows") {
      auto child = parse_node();
      Dims w = parse_group("shape", true);
      Dims s = parse_group("shape", true);
      expect_rparen(h);
      return node(Tag::Windows, Payload{WindowsSpec{std::move(w), std::move(s)}}, {}, {child});
    }
    if (h == "slice") {
      auto child = parse_node();
      Dim d = parse_nat("slice dimension");
      Dim lo = parse_nat("slice lower bound");
      Dim hi = parse_nat("slice upper bound");
      expect_rparen(h);
      return node(Tag::Slice, Payload{SliceSpec{d, lo, hi}}, {}, {child});
    }
    if (h == "squeeze") {
      auto child = parse_node();
      auto [d, var] = parse_nat_or_var("squeeze dimension");
      expect_rparen(h);
      if (!var.empty()) return node(Tag::Squeeze, std::nullopt, var, {child});
      return node(Tag::Squeeze, Payload{d}, {}, {child});
    }
    if (h == "flatten") {
      auto child = parse_node();
      expect_rparen(h);
      return node(Tag::Flatten, Payload{std::monostate{}}, {}, {child});
    }
    if (h == "reshape") {
      auto child = parse_node();
      if (cur_.kind == Token::Atom && !cur_.text.empty() && cur_.text[0] == '?') {
        Token t = advance();
        if (!allow_vars_) fail(t, "pattern variable not allowed here");
        expect_rparen(h);
        return node(Tag::Reshape, std::nullopt, t.text.substr(1), {child});
      }
      if (cur_.kind != Token::LParen) fail(cur_, "expected (accessShape ...)");
      advance();
      Token ash = expect_atom("accessShape");
      if (ash.text != "accessShape") fail(ash, "expected 'accessShape', got '" + ash.text + "'");
      AccessPatternShape target;
      target.access = parse_group("shape", false);
      target.compute = parse_group("shape", false);
      if (cur_.kind != Token::RParen) fail(cur_, "malformed (accessShape ...) group");
      advance();
      expect_rparen(h);
      return node(Tag::Reshape, Payload{std::move(target)}, {}, {child});
    }
    if (h == "pair") {
      auto a = parse_node();
      auto b = parse_node();
      expect_rparen(h);
      return node(Tag::Pair, Payload{std::monostate{}}, {}, {a, b});
    }
    if (h == "concat") {
      auto a = parse_node();
      auto b = parse_node();
      auto [d, var] = parse_nat_or_var("concat dimension");
      expect_rparen(h);
      if (!var.empty()) return node(Tag::Concat, std::nullopt, var, {a, b});
      return node(Tag::Concat, Payload{d}, {}, {a, b});
    }
    if (h == "compute") {
      Token opTok = expect_atom("operator");
      Operator op;
      if (opTok.text == "dotProd") {
        op = Operator::DotProd;
      } else if (opTok.text == "reduceSum") {
        op = Operator::ReduceSum;
      } else if (opTok.text == "reduceMax") {
        op = Operator::ReduceMax;
      } else {
        fail(opTok, "unknown operator '" + opTok.text + "'");
      }
      auto child = parse_node();
      expect_rparen(h);
      return node(Tag::Compute, Payload{op}, {}, {child});
    }
    if (h == "systolicArray") {
      Dim rows = parse_nat("systolic array rows");
      Dim cols = parse_nat("systolic array columns");
      auto a = parse_node();
      auto b = parse_node();
      expect_rparen(h);
      return node(Tag::SystolicArray, Payload{ArraySpec{rows, cols}}, {}, {a, b});
    }
    fail(head, "unknown head symbol '" + h + "'");
  }

  Lexer lexer_;
  Token cur_;
  bool allow_vars_;
};

ExprPtr to_expr(const PatternNode& p) {
  // Vars are rejected at parse time when allow_vars is false.
  std::vector<ExprPtr> children;
  children.reserve(p.children.size());
  for (const auto& c : p.children) children.push_back(to_expr(*c));
  return std::make_shared<Expr>(Expr{p.tag, *p.payload, std::move(children)});
}

}  // namespace

ExprPtr parse(std::string_view text) {
  Parser parser(text, /*allow_vars=*/false);
  return to_expr(*parser.parse_whole());
}

PatternPtr parse_pattern(std::string_view text) {
  Parser parser(text, /*allow_vars=*/true);
  return parser.parse_whole();
}

ShapeEnv parse_shape_env(std::string_view text) {
  ShapeEnv env;
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    auto colon = line.find(':');
    if (colon == std::string::npos)
      throw ParseError("shape env line missing ':'", lineno, 1);
    std::string name = line.substr(first, colon - first);
    while (!name.empty() && (name.back() == ' ' || name.back() == '\t')) name.pop_back();
    if (name.empty()) throw ParseError("shape env line missing tensor name", lineno, 1);
    Dims dims;
    std::istringstream rest(line.substr(colon + 1));
    std::string tok;
    while (rest >> tok) {
      if (!is_nat(tok))
        throw ParseError("invalid dimension '" + tok + "' for tensor '" + name + "'", lineno, 1);
      Dim d = std::stoll(tok);
      if (d < 1)
        throw ParseError("dimension extents must be >= 1 (tensor '" + name + "')", lineno, 1);
      dims.push_back(d);
    }
    if (env.count(name))
      throw ParseError("duplicate shape entry for tensor '" + name + "'", lineno, 1);
    env.emplace(std::move(name), std::move(dims));
  }
  return env;
}

}  // namespace apir
