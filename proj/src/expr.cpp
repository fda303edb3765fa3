#include "hodge/expr.hpp"

#include <cassert>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <utility>
#include <vector>

namespace hodge {

struct ExprNode {
  ExprKind kind;
  Complex value{0.0, 0.0};  // Constant
  int index = -1;           // Coord / CoordBar
  int exponent = 0;         // Power
  // Children default to empty handles, not zero constants: leaf nodes never
  // read them, and routing them through ScalarExpr() would re-enter that
  // constructor's shared zero while it is being initialized.
  ScalarExpr a = detail::make_expr(nullptr);  // left child / power base
  ScalarExpr b = detail::make_expr(nullptr);  // right child
};

namespace detail {
ScalarExpr make_expr(std::shared_ptr<const ExprNode> node) {
  return ScalarExpr(std::move(node));
}
}  // namespace detail

namespace {

ScalarExpr make_node(ExprNode node) {
  return detail::make_expr(std::make_shared<const ExprNode>(std::move(node)));
}

// Integer power by repeated squaring; exact conjugation symmetry because only
// multiplications and one division are performed.
Complex pow_int(Complex base, int n) {
  if (n == 0) return Complex(1.0, 0.0);
  unsigned long long m =
      n > 0 ? static_cast<unsigned long long>(n)
            : static_cast<unsigned long long>(-static_cast<long long>(n));
  Complex acc(1.0, 0.0);
  Complex cur = base;
  while (m > 0) {
    if (m & 1ull) acc *= cur;
    cur *= cur;
    m >>= 1;
  }
  if (n < 0) {
    if (acc == Complex(0.0, 0.0)) {
      throw SingularEval("negative integer power of zero");
    }
    acc = Complex(1.0, 0.0) / acc;
  }
  return acc;
}

}  // namespace

ScalarExpr::ScalarExpr(std::shared_ptr<const ExprNode> node)
    : node_(std::move(node)) {}

ScalarExpr::ScalarExpr() {
  static const std::shared_ptr<const ExprNode> zero =
      std::make_shared<const ExprNode>(ExprNode{ExprKind::Constant});
  node_ = zero;
}

ScalarExpr ScalarExpr::constant(Complex value) {
  ExprNode n{ExprKind::Constant};
  n.value = value;
  return make_node(std::move(n));
}

ScalarExpr ScalarExpr::coord(int index) {
  assert(index >= 0);
  ExprNode n{ExprKind::Coord};
  n.index = index;
  return make_node(std::move(n));
}

ScalarExpr ScalarExpr::coord_bar(int index) {
  assert(index >= 0);
  ExprNode n{ExprKind::CoordBar};
  n.index = index;
  return make_node(std::move(n));
}

ExprKind ScalarExpr::kind() const { return node_->kind; }
Complex ScalarExpr::constant_value() const { return node_->value; }
int ScalarExpr::coord_index() const { return node_->index; }
int ScalarExpr::exponent() const { return node_->exponent; }
const ScalarExpr& ScalarExpr::lhs() const { return node_->a; }
const ScalarExpr& ScalarExpr::rhs() const { return node_->b; }
const ScalarExpr& ScalarExpr::base() const { return node_->a; }

bool ScalarExpr::is_zero() const {
  return node_->kind == ExprKind::Constant && node_->value == Complex(0.0, 0.0);
}

bool ScalarExpr::is_one() const {
  return node_->kind == ExprKind::Constant && node_->value == Complex(1.0, 0.0);
}

bool ScalarExpr::structurally_holomorphic() const {
  switch (node_->kind) {
    case ExprKind::Constant:
      return true;
    case ExprKind::Coord:
      return true;
    case ExprKind::CoordBar:
      return false;
    case ExprKind::Power:
      return node_->a.structurally_holomorphic();
    case ExprKind::Sum:
    case ExprKind::Product:
    case ExprKind::Quotient:
      return node_->a.structurally_holomorphic() &&
             node_->b.structurally_holomorphic();
  }
  return false;
}

int ScalarExpr::coord_count() const {
  switch (node_->kind) {
    case ExprKind::Constant:
      return 0;
    case ExprKind::Coord:
    case ExprKind::CoordBar:
      return node_->index + 1;
    case ExprKind::Power:
      return node_->a.coord_count();
    case ExprKind::Sum:
    case ExprKind::Product:
    case ExprKind::Quotient:
      return std::max(node_->a.coord_count(), node_->b.coord_count());
  }
  return 0;
}

std::size_t ScalarExpr::node_count() const {
  switch (node_->kind) {
    case ExprKind::Constant:
    case ExprKind::Coord:
    case ExprKind::CoordBar:
      return 1;
    case ExprKind::Power:
      return 1 + node_->a.node_count();
    case ExprKind::Sum:
    case ExprKind::Product:
    case ExprKind::Quotient:
      return 1 + node_->a.node_count() + node_->b.node_count();
  }
  return 1;
}

bool operator==(const ScalarExpr& a, const ScalarExpr& b) {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case ExprKind::Constant:
      return a.constant_value() == b.constant_value();
    case ExprKind::Coord:
    case ExprKind::CoordBar:
      return a.coord_index() == b.coord_index();
    case ExprKind::Power:
      return a.exponent() == b.exponent() && a.base() == b.base();
    case ExprKind::Sum:
    case ExprKind::Product:
    case ExprKind::Quotient:
      return a.lhs() == b.lhs() && a.rhs() == b.rhs();
  }
  return false;
}

ScalarExpr operator+(const ScalarExpr& a, const ScalarExpr& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.kind() == ExprKind::Constant && b.kind() == ExprKind::Constant) {
    return ScalarExpr::constant(a.constant_value() + b.constant_value());
  }
  ExprNode n{ExprKind::Sum};
  n.a = a;
  n.b = b;
  return make_node(std::move(n));
}

ScalarExpr operator*(const ScalarExpr& a, const ScalarExpr& b) {
  if (a.is_zero() || b.is_zero()) return ScalarExpr();
  if (a.is_one()) return b;
  if (b.is_one()) return a;
  if (a.kind() == ExprKind::Constant && b.kind() == ExprKind::Constant) {
    return ScalarExpr::constant(a.constant_value() * b.constant_value());
  }
  ExprNode n{ExprKind::Product};
  n.a = a;
  n.b = b;
  return make_node(std::move(n));
}

ScalarExpr operator/(const ScalarExpr& a, const ScalarExpr& b) {
  if (b.is_one()) return a;
  if (a.is_zero()) return a;
  if (a.kind() == ExprKind::Constant && b.kind() == ExprKind::Constant &&
      b.constant_value() != Complex(0.0, 0.0)) {
    return ScalarExpr::constant(a.constant_value() / b.constant_value());
  }
  ExprNode n{ExprKind::Quotient};
  n.a = a;
  n.b = b;
  return make_node(std::move(n));
}

ScalarExpr operator-(const ScalarExpr& a) {
  return ScalarExpr::constant(Complex(-1.0, 0.0)) * a;
}

ScalarExpr operator-(const ScalarExpr& a, const ScalarExpr& b) {
  return a + (-b);
}

ScalarExpr pow(const ScalarExpr& e, int n) {
  if (n == 0) return ScalarExpr::constant(Complex(1.0, 0.0));
  if (n == 1) return e;
  if (e.kind() == ExprKind::Constant) {
    Complex c = e.constant_value();
    if (c != Complex(0.0, 0.0) || n > 0) {
      return ScalarExpr::constant(pow_int(c, n));
    }
  }
  ExprNode node{ExprKind::Power};
  node.exponent = n;
  node.a = e;
  return make_node(std::move(node));
}

ScalarExpr conj(const ScalarExpr& e) {
  switch (e.kind()) {
    case ExprKind::Constant:
      return ScalarExpr::constant(std::conj(e.constant_value()));
    case ExprKind::Coord:
      return ScalarExpr::coord_bar(e.coord_index());
    case ExprKind::CoordBar:
      return ScalarExpr::coord(e.coord_index());
    case ExprKind::Sum:
      return conj(e.lhs()) + conj(e.rhs());
    case ExprKind::Product:
      return conj(e.lhs()) * conj(e.rhs());
    case ExprKind::Quotient:
      return conj(e.lhs()) / conj(e.rhs());
    case ExprKind::Power:
      return pow(conj(e.base()), e.exponent());
  }
  return e;
}

Complex eval(const ScalarExpr& e, const BasePoint& t) {
  switch (e.kind()) {
    case ExprKind::Constant:
      return e.constant_value();
    case ExprKind::Coord: {
      const int j = e.coord_index();
      if (j >= static_cast<int>(t.size())) {
        throw DomainError("expression references coordinate t" +
                          std::to_string(j + 1) + " but the point has only " +
                          std::to_string(t.size()) + " coordinate(s)");
      }
      return t[static_cast<std::size_t>(j)];
    }
    case ExprKind::CoordBar: {
      const int j = e.coord_index();
      if (j >= static_cast<int>(t.size())) {
        throw DomainError("expression references coordinate t" +
                          std::to_string(j + 1) + " but the point has only " +
                          std::to_string(t.size()) + " coordinate(s)");
      }
      return std::conj(t[static_cast<std::size_t>(j)]);
    }
    case ExprKind::Sum:
      return eval(e.lhs(), t) + eval(e.rhs(), t);
    case ExprKind::Product:
      return eval(e.lhs(), t) * eval(e.rhs(), t);
    case ExprKind::Quotient: {
      const Complex den = eval(e.rhs(), t);
      if (den == Complex(0.0, 0.0)) {
        throw SingularEval("zero denominator in quotient");
      }
      return eval(e.lhs(), t) / den;
    }
    case ExprKind::Power:
      return pow_int(eval(e.base(), t), e.exponent());
  }
  return Complex(0.0, 0.0);
}

ScalarExpr wirtinger(const ScalarExpr& e, int j, Wirtinger dir) {
  const bool holo = dir == Wirtinger::Holomorphic;
  switch (e.kind()) {
    case ExprKind::Constant:
      return ScalarExpr();
    case ExprKind::Coord:
      return (holo && e.coord_index() == j)
                 ? ScalarExpr::constant(Complex(1.0, 0.0))
                 : ScalarExpr();
    case ExprKind::CoordBar:
      return (!holo && e.coord_index() == j)
                 ? ScalarExpr::constant(Complex(1.0, 0.0))
                 : ScalarExpr();
    case ExprKind::Sum:
      return wirtinger(e.lhs(), j, dir) + wirtinger(e.rhs(), j, dir);
    case ExprKind::Product:
      return wirtinger(e.lhs(), j, dir) * e.rhs() +
             e.lhs() * wirtinger(e.rhs(), j, dir);
    case ExprKind::Quotient: {
      // (a/b)' = (a' b - a b') / b^2
      const ScalarExpr da = wirtinger(e.lhs(), j, dir);
      const ScalarExpr db = wirtinger(e.rhs(), j, dir);
      return (da * e.rhs() - e.lhs() * db) / pow(e.rhs(), 2);
    }
    case ExprKind::Power: {
      // (a^n)' = n a^(n-1) a', valid for negative n as well
      const int n = e.exponent();
      const ScalarExpr da = wirtinger(e.base(), j, dir);
      return ScalarExpr::constant(Complex(static_cast<double>(n), 0.0)) *
             pow(e.base(), n - 1) * da;
    }
  }
  return ScalarExpr();
}

// ---------------------------------------------------------------------------
// Printing
// ---------------------------------------------------------------------------

namespace {

std::string fmt_double(double x) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), x);
  return std::string(buf, res.ptr);
}

// Renders a complex constant. atomic=true means the text can stand as a
// factor/power base without extra parentheses.
struct ConstText {
  std::string text;
  bool atomic;
};

ConstText fmt_complex(Complex c) {
  const double re = c.real();
  const double im = c.imag();
  if (im == 0.0) {
    if (re >= 0.0) return {fmt_double(re), true};
    return {"(-" + fmt_double(-re) + ")", true};
  }
  if (re == 0.0) {
    if (im == 1.0) return {"i", true};
    if (im > 0.0) return {fmt_double(im) + "i", true};
    if (im == -1.0) return {"(-1i)", true};
    return {"(-" + fmt_double(-im) + "i)", true};
  }
  std::string out = "(";
  out += (re < 0.0) ? "-" + fmt_double(-re) : fmt_double(re);
  out += (im < 0.0) ? " - " : " + ";
  const double mag = std::abs(im);
  out += (mag == 1.0 ? std::string("1") : fmt_double(mag)) + "i)";
  return {out, true};
}

// Precedence tiers: 0 sum, 1 product/quotient, 2 power, 3 atom.
int precedence(const ScalarExpr& e) {
  switch (e.kind()) {
    case ExprKind::Sum:
      return 0;
    case ExprKind::Product:
    case ExprKind::Quotient:
      return 1;
    case ExprKind::Power:
      return 2;
    default:
      return 3;
  }
}

std::string print(const ScalarExpr& e, int min_prec) {
  std::string out;
  switch (e.kind()) {
    case ExprKind::Constant:
      out = fmt_complex(e.constant_value()).text;
      break;
    case ExprKind::Coord:
      out = "t" + std::to_string(e.coord_index() + 1);
      break;
    case ExprKind::CoordBar:
      out = "conj(t" + std::to_string(e.coord_index() + 1) + ")";
      break;
    case ExprKind::Sum: {
      // a + (-1) * b and a + negative-constant print with '-', matching the
      // trees the parser builds for "a - b".
      const ScalarExpr rhs = e.rhs();
      if (rhs.kind() == ExprKind::Product &&
          rhs.lhs().kind() == ExprKind::Constant &&
          rhs.lhs().constant_value() == Complex(-1.0, 0.0)) {
        out = print(e.lhs(), 0) + " - " + print(rhs.rhs(), 1);
        break;
      }
      if (rhs.kind() == ExprKind::Constant) {
        const Complex c = rhs.constant_value();
        const bool negative_real = c.imag() == 0.0 && c.real() < 0.0;
        const bool negative_imag = c.real() == 0.0 && c.imag() < 0.0;
        if (negative_real || negative_imag) {
          out = print(e.lhs(), 0) + " - " + fmt_complex(-c).text;
          break;
        }
      }
      out = print(e.lhs(), 0) + " + " + print(e.rhs(), 1);
      break;
    }
    case ExprKind::Product:
      out = print(e.lhs(), 1) + " * " + print(e.rhs(), 2);
      break;
    case ExprKind::Quotient:
      out = print(e.lhs(), 1) + " / " + print(e.rhs(), 2);
      break;
    case ExprKind::Power:
      // The grammar allows a single '^' per factor, so a Power base must be
      // an atom; wrap anything weaker.
      out = print(e.base(), 3) + "^" + std::to_string(e.exponent());
      break;
  }
  if (precedence(e) < min_prec) return "(" + out + ")";
  return out;
}

}  // namespace

std::string to_string(const ScalarExpr& e) { return print(e, 0); }

// ---------------------------------------------------------------------------
// Parsing
// ---------------------------------------------------------------------------

namespace {

enum class TokType {
  Number,   // real or imaginary decimal literal
  ImagUnit, // bare 'i'
  Var,      // t<k>
  Conj,     // 'conj'
  Plus,
  Minus,
  Star,
  Slash,
  Caret,
  LParen,
  RParen,
  End,
};

struct Token {
  TokType type = TokType::End;
  Complex number{0.0, 0.0};
  bool integral = false;  // Number only: plain digits, usable as an exponent
  int var_index = 0;      // Var only, zero-based
  int line = 1;
  int column = 1;
  std::string text;
};

const char* token_name(TokType t) {
  switch (t) {
    case TokType::Number: return "a number";
    case TokType::ImagUnit: return "'i'";
    case TokType::Var: return "a coordinate";
    case TokType::Conj: return "'conj'";
    case TokType::Plus: return "'+'";
    case TokType::Minus: return "'-'";
    case TokType::Star: return "'*'";
    case TokType::Slash: return "'/'";
    case TokType::Caret: return "'^'";
    case TokType::LParen: return "'('";
    case TokType::RParen: return "')'";
    case TokType::End: return "end of input";
  }
  return "?";
}

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  Token next() {
    skip_ws();
    Token tok;
    tok.line = line_;
    tok.column = column_;
    if (pos_ >= text_.size()) {
      tok.type = TokType::End;
      return tok;
    }
    const char c = text_[pos_];
    switch (c) {
      case '+': return simple(tok, TokType::Plus);
      case '-': return simple(tok, TokType::Minus);
      case '*': return simple(tok, TokType::Star);
      case '/': return simple(tok, TokType::Slash);
      case '^': return simple(tok, TokType::Caret);
      case '(': return simple(tok, TokType::LParen);
      case ')': return simple(tok, TokType::RParen);
      default: break;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
      return lex_number(tok);
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      return lex_ident(tok);
    }
    throw ParseError(std::string("unexpected character '") + c + "'", line_,
                     column_, {});
  }

 private:
  Token simple(Token tok, TokType type) {
    tok.type = type;
    tok.text = text_.substr(pos_, 1);
    advance();
    return tok;
  }

  void skip_ws() {
    while (pos_ < text_.size()) {
      const char c = text_[pos_];
      if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
        advance();
      } else {
        break;
      }
    }
  }

  void advance() {
    if (pos_ < text_.size()) {
      if (text_[pos_] == '\n') {
        ++line_;
        column_ = 1;
      } else {
        ++column_;
      }
      ++pos_;
    }
  }

  Token lex_number(Token tok) {
    const std::size_t start = pos_;
    bool has_dot = false;
    bool has_exp = false;
    while (pos_ < text_.size()) {
      const char c = text_[pos_];
      if (std::isdigit(static_cast<unsigned char>(c))) {
        advance();
      } else if (c == '.' && !has_dot && !has_exp) {
        has_dot = true;
        advance();
      } else if ((c == 'e' || c == 'E') && !has_exp && pos_ + 1 < text_.size()) {
        // exponent only if followed by digits (optionally signed)
        std::size_t look = pos_ + 1;
        if (text_[look] == '+' || text_[look] == '-') ++look;
        if (look < text_.size() &&
            std::isdigit(static_cast<unsigned char>(text_[look]))) {
          has_exp = true;
          advance();  // e
          if (text_[pos_] == '+' || text_[pos_] == '-') advance();
        } else {
          break;
        }
      } else {
        break;
      }
    }
    std::string digits(text_.substr(start, pos_ - start));
    if (digits.empty() || digits == ".") {
      throw ParseError("malformed number", tok.line, tok.column, {});
    }
    double value = 0.0;
    auto res = std::from_chars(digits.data(), digits.data() + digits.size(),
                               value);
    if (res.ec != std::errc() || res.ptr != digits.data() + digits.size()) {
      throw ParseError("malformed number '" + digits + "'", tok.line,
                       tok.column, {});
    }
    bool imaginary = false;
    if (pos_ < text_.size() && text_[pos_] == 'i') {
      // 'i' immediately after the digits makes the literal imaginary, unless
      // it starts a longer identifier (there are none beginning with 'i'
      // besides the unit itself, but be strict anyway).
      if (pos_ + 1 >= text_.size() ||
          !std::isalnum(static_cast<unsigned char>(text_[pos_ + 1]))) {
        imaginary = true;
        advance();
      }
    }
    tok.type = TokType::Number;
    tok.number = imaginary ? Complex(0.0, value) : Complex(value, 0.0);
    tok.integral = !has_dot && !has_exp && !imaginary;
    tok.text = std::string(text_.substr(start, pos_ - start));
    return tok;
  }

  Token lex_ident(Token tok) {
    const std::size_t start = pos_;
    while (pos_ < text_.size() &&
           std::isalpha(static_cast<unsigned char>(text_[pos_]))) {
      advance();
    }
    std::string word(text_.substr(start, pos_ - start));
    if (word == "conj") {
      tok.type = TokType::Conj;
      tok.text = word;
      return tok;
    }
    if (word == "i") {
      tok.type = TokType::ImagUnit;
      tok.text = word;
      return tok;
    }
    if (word == "t") {
      const std::size_t digit_start = pos_;
      while (pos_ < text_.size() &&
             std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        advance();
      }
      std::string digits(text_.substr(digit_start, pos_ - digit_start));
      if (digits.empty()) {
        throw ParseError("coordinate requires a positive index, e.g. t1",
                         tok.line, tok.column, {});
      }
      int idx = 0;
      auto res = std::from_chars(digits.data(), digits.data() + digits.size(),
                                 idx);
      if (res.ec != std::errc() || idx <= 0) {
        throw ParseError("coordinate index must be a positive integer",
                         tok.line, tok.column, {});
      }
      tok.type = TokType::Var;
      tok.var_index = idx - 1;
      tok.text = "t" + digits;
      return tok;
    }
    throw ParseError("unknown identifier '" + word + "'", tok.line, tok.column,
                     {"a number", "'i'", "a coordinate like t1", "'conj'"});
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int column_ = 1;
};

class Parser {
 public:
  explicit Parser(std::string_view text) : lexer_(text) { consume(); }

  ScalarExpr parse() {
    ScalarExpr e = parse_expr_rule();
    expect(TokType::End, {"'+'", "'-'", "'*'", "'/'", "'^'", "end of input"});
    return e;
  }

 private:
  void consume() { current_ = lexer_.next(); }

  [[noreturn]] void fail(const std::vector<std::string>& expected) {
    throw ParseError(std::string("unexpected ") + token_name(current_.type) +
                         (current_.text.empty() ? ""
                                                : " '" + current_.text + "'"),
                     current_.line, current_.column, expected);
  }

  void expect(TokType type, const std::vector<std::string>& expected) {
    if (current_.type != type) fail(expected);
  }

  ScalarExpr parse_expr_rule() {
    bool negate = false;
    if (current_.type == TokType::Plus) {
      consume();
    } else if (current_.type == TokType::Minus) {
      negate = true;
      consume();
    }
    ScalarExpr acc = parse_term();
    if (negate) acc = -acc;
    while (current_.type == TokType::Plus ||
           current_.type == TokType::Minus) {
      const bool minus = current_.type == TokType::Minus;
      consume();
      ScalarExpr rhs = parse_term();
      acc = minus ? acc - rhs : acc + rhs;
    }
    return acc;
  }

  ScalarExpr parse_term() {
    ScalarExpr acc = parse_factor();
    while (current_.type == TokType::Star ||
           current_.type == TokType::Slash) {
      const bool divide = current_.type == TokType::Slash;
      consume();
      ScalarExpr rhs = parse_factor();
      acc = divide ? acc / rhs : acc * rhs;
    }
    return acc;
  }

  ScalarExpr parse_factor() {
    ScalarExpr atom = parse_atom();
    if (current_.type != TokType::Caret) return atom;
    consume();
    int sign = 1;
    if (current_.type == TokType::Minus) {
      sign = -1;
      consume();
    } else if (current_.type == TokType::Plus) {
      consume();
    }
    if (current_.type != TokType::Number || !current_.integral) {
      fail({"an integer exponent"});
    }
    const double mag = current_.number.real();
    if (mag > 64.0) {
      throw ParseError("exponent magnitude exceeds 64", current_.line,
                       current_.column, {});
    }
    const int n = sign * static_cast<int>(mag);
    consume();
    return pow(atom, n);
  }

  ScalarExpr parse_atom() {
    switch (current_.type) {
      case TokType::Number: {
        ScalarExpr e = ScalarExpr::constant(current_.number);
        consume();
        return e;
      }
      case TokType::ImagUnit: {
        consume();
        return ScalarExpr::constant(Complex(0.0, 1.0));
      }
      case TokType::Var: {
        ScalarExpr e = ScalarExpr::coord(current_.var_index);
        consume();
        return e;
      }
      case TokType::Conj: {
        consume();
        expect(TokType::LParen, {"'('"});
        consume();
        ScalarExpr inner = parse_expr_rule();
        expect(TokType::RParen, {"')'"});
        consume();
        return conj(inner);
      }
      case TokType::LParen: {
        consume();
        ScalarExpr inner = parse_expr_rule();
        expect(TokType::RParen, {"')'"});
        consume();
        return inner;
      }
      default:
        fail({"a number", "'i'", "a coordinate like t1", "'conj'", "'('"});
    }
  }

  Lexer lexer_;
  Token current_;
};

}  // namespace

ScalarExpr parse_expr(std::string_view text) { return Parser(text).parse(); }

}  // namespace hodge
