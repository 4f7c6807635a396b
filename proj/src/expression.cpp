#include "filtsym/expression.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <vector>

namespace filtsym {

namespace {

using Op = ExprNode::Op;

ExprPtr make_number(double v) {
  auto node = std::make_shared<ExprNode>();
  node->op = Op::Number;
  node->value = v;
  return node;
}

ExprPtr make_node(Op op, ExprPtr lhs, ExprPtr rhs = nullptr) {
  auto node = std::make_shared<ExprNode>();
  node->op = op;
  node->lhs = std::move(lhs);
  node->rhs = std::move(rhs);
  return node;
}

struct Token {
  enum class Kind { Number, Ident, Plus, Minus, Star, Slash, Caret, LParen, RParen, End };
  Kind kind = Kind::End;
  double number = 0.0;
  std::string text;
  std::size_t pos = 0;
};

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) {}

  Token next() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) {
      ++pos_;
    }
    Token tok;
    tok.pos = pos_;
    if (pos_ >= src_.size()) return tok;

    const char c = src_[pos_];
    switch (c) {
      case '+': tok.kind = Token::Kind::Plus; ++pos_; return tok;
      case '-': tok.kind = Token::Kind::Minus; ++pos_; return tok;
      case '*': tok.kind = Token::Kind::Star; ++pos_; return tok;
      case '/': tok.kind = Token::Kind::Slash; ++pos_; return tok;
      case '^': tok.kind = Token::Kind::Caret; ++pos_; return tok;
      case '(': tok.kind = Token::Kind::LParen; ++pos_; return tok;
      case ')': tok.kind = Token::Kind::RParen; ++pos_; return tok;
      default: break;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t end = pos_;
      while (end < src_.size() && std::isdigit(static_cast<unsigned char>(src_[end]))) ++end;
      if (end < src_.size() && src_[end] == '.') {
        ++end;
        while (end < src_.size() && std::isdigit(static_cast<unsigned char>(src_[end]))) ++end;
      }
      if (end < src_.size() && (src_[end] == 'e' || src_[end] == 'E')) {
        std::size_t exp_end = end + 1;
        if (exp_end < src_.size() && (src_[exp_end] == '+' || src_[exp_end] == '-')) ++exp_end;
        if (exp_end < src_.size() && std::isdigit(static_cast<unsigned char>(src_[exp_end]))) {
          ++exp_end;
          while (exp_end < src_.size() &&
                 std::isdigit(static_cast<unsigned char>(src_[exp_end]))) {
            ++exp_end;
          }
          end = exp_end;
        }
      }
      const std::string text(src_.substr(pos_, end - pos_));
      tok.kind = Token::Kind::Number;
      tok.number = std::strtod(text.c_str(), nullptr);
      pos_ = end;
      return tok;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t end = pos_;
      while (end < src_.size() &&
             (std::isalnum(static_cast<unsigned char>(src_[end])) || src_[end] == '_')) {
        ++end;
      }
      tok.kind = Token::Kind::Ident;
      tok.text = std::string(src_.substr(pos_, end - pos_));
      pos_ = end;
      return tok;
    }
    throw ParseError(pos_, std::string("unknown character '") + c + "' at position " +
                               std::to_string(pos_));
  }

 private:
  std::string_view src_;
  std::size_t pos_ = 0;
};

// Binding powers; ^ binds tighter than unary minus, which binds tighter
// than * and /.
constexpr int kAddBp = 1;
constexpr int kMulBp = 3;
constexpr int kNegBp = 5;
constexpr int kPowBp = 7;

class Parser {
 public:
  Parser(std::string_view src, std::string_view t_name, std::string_view x_name)
      : lexer_(src), t_name_(t_name), x_name_(x_name) {
    advance();
  }

  ExprPtr parse_full() {
    if (cur_.kind == Token::Kind::End) {
      throw ParseError(cur_.pos, "empty expression");
    }
    ExprPtr e = parse_expr(0);
    if (cur_.kind != Token::Kind::End) {
      throw ParseError(cur_.pos, "unexpected token at position " + std::to_string(cur_.pos));
    }
    return e;
  }

 private:
  void advance() { cur_ = lexer_.next(); }

  [[noreturn]] void fail(const std::string& what) {
    if (cur_.kind == Token::Kind::End) {
      throw ParseError(cur_.pos, what + " at end of input");
    }
    throw ParseError(cur_.pos, what + " at position " + std::to_string(cur_.pos));
  }

  ExprPtr parse_expr(int min_bp) {
    ExprPtr lhs = parse_prefix();
    for (;;) {
      Op op;
      int left_bp, right_bp;
      switch (cur_.kind) {
        case Token::Kind::Plus: op = Op::Add; left_bp = kAddBp; right_bp = kAddBp + 1; break;
        case Token::Kind::Minus: op = Op::Sub; left_bp = kAddBp; right_bp = kAddBp + 1; break;
        case Token::Kind::Star: op = Op::Mul; left_bp = kMulBp; right_bp = kMulBp + 1; break;
        case Token::Kind::Slash: op = Op::Div; left_bp = kMulBp; right_bp = kMulBp + 1; break;
        case Token::Kind::Caret: op = Op::Pow; left_bp = kPowBp + 1; right_bp = kPowBp; break;
        default: return lhs;
      }
      if (left_bp <= min_bp) return lhs;
      advance();
      ExprPtr rhs = parse_expr(right_bp);
      lhs = make_node(op, std::move(lhs), std::move(rhs));
    }
  }

  ExprPtr parse_prefix() {
    switch (cur_.kind) {
      case Token::Kind::Minus: {
        advance();
        return make_node(Op::Neg, parse_expr(kNegBp));
      }
      case Token::Kind::Number: {
        const double v = cur_.number;
        advance();
        return make_number(v);
      }
      case Token::Kind::LParen: {
        advance();
        ExprPtr inner = parse_expr(0);
        if (cur_.kind != Token::Kind::RParen) fail("expected ')'");
        advance();
        return inner;
      }
      case Token::Kind::Ident: {
        const std::string name = cur_.text;
        const std::size_t pos = cur_.pos;
        advance();
        if (name == t_name_) return make_node(Op::VarT, nullptr);
        if (name == x_name_) return make_node(Op::VarX, nullptr);
        Op fn;
        if (name == "ln") fn = Op::Ln;
        else if (name == "exp") fn = Op::Exp;
        else if (name == "sin") fn = Op::Sin;
        else if (name == "cos") fn = Op::Cos;
        else if (name == "tan") fn = Op::Tan;
        else if (name == "arctan") fn = Op::Arctan;
        else {
          throw ParseError(pos, "unknown identifier '" + name + "' at position " +
                                    std::to_string(pos));
        }
        if (cur_.kind != Token::Kind::LParen) fail("expected '(' after " + name);
        advance();
        ExprPtr arg = parse_expr(0);
        if (cur_.kind != Token::Kind::RParen) fail("expected ')'");
        advance();
        return make_node(fn, std::move(arg));
      }
      default:
        fail("expected an operand");
    }
  }

  Lexer lexer_;
  Token cur_;
  std::string t_name_;
  std::string x_name_;
};

double eval_node(const ExprNode& node, double t, double x) {
  switch (node.op) {
    case Op::Number: return node.value;
    case Op::VarT: return t;
    case Op::VarX: return x;
    case Op::Neg: return -eval_node(*node.lhs, t, x);
    case Op::Add: return eval_node(*node.lhs, t, x) + eval_node(*node.rhs, t, x);
    case Op::Sub: return eval_node(*node.lhs, t, x) - eval_node(*node.rhs, t, x);
    case Op::Mul: return eval_node(*node.lhs, t, x) * eval_node(*node.rhs, t, x);
    case Op::Div: return eval_node(*node.lhs, t, x) / eval_node(*node.rhs, t, x);
    case Op::Pow: return std::pow(eval_node(*node.lhs, t, x), eval_node(*node.rhs, t, x));
    case Op::Ln: return std::log(eval_node(*node.lhs, t, x));
    case Op::Exp: return std::exp(eval_node(*node.lhs, t, x));
    case Op::Sin: return std::sin(eval_node(*node.lhs, t, x));
    case Op::Cos: return std::cos(eval_node(*node.lhs, t, x));
    case Op::Tan: return std::tan(eval_node(*node.lhs, t, x));
    case Op::Arctan: return std::atan(eval_node(*node.lhs, t, x));
  }
  return 0.0;
}

int precedence(Op op) {
  switch (op) {
    case Op::Add:
    case Op::Sub: return kAddBp;
    case Op::Mul:
    case Op::Div: return kMulBp;
    case Op::Neg: return kNegBp;
    case Op::Pow: return kPowBp;
    default: return 9;  // atoms and calls never need parentheses
  }
}

std::string format_number(double v) {
  char buf[32];
  auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

void print_node(const ExprNode& node, std::string& out) {
  auto child = [&out](const ExprNode& c, bool need_parens) {
    if (need_parens) out += '(';
    print_node(c, out);
    if (need_parens) out += ')';
  };
  switch (node.op) {
    case Op::Number: out += format_number(node.value); return;
    case Op::VarT: out += 't'; return;
    case Op::VarX: out += 'x'; return;
    case Op::Neg:
      out += '-';
      child(*node.lhs, precedence(node.lhs->op) < kNegBp);
      return;
    case Op::Add:
    case Op::Sub:
    case Op::Mul:
    case Op::Div: {
      const int p = precedence(node.op);
      child(*node.lhs, precedence(node.lhs->op) < p);
      out += node.op == Op::Add ? " + " : node.op == Op::Sub ? " - "
             : node.op == Op::Mul ? " * " : " / ";
      // - and / are left-associative: an equal-precedence right child
      // must keep its parentheses.
      child(*node.rhs, precedence(node.rhs->op) <= p);
      return;
    }
    case Op::Pow:
      child(*node.lhs, precedence(node.lhs->op) <= kPowBp);
      out += " ^ ";
      child(*node.rhs, precedence(node.rhs->op) < kPowBp);
      return;
    case Op::Ln: out += "ln("; break;
    case Op::Exp: out += "exp("; break;
    case Op::Sin: out += "sin("; break;
    case Op::Cos: out += "cos("; break;
    case Op::Tan: out += "tan("; break;
    case Op::Arctan: out += "arctan("; break;
  }
  print_node(*node.lhs, out);
  out += ')';
}

bool equal_nodes(const ExprNode& a, const ExprNode& b) {
  if (a.op != b.op) return false;
  if (a.op == Op::Number) return a.value == b.value;
  if (static_cast<bool>(a.lhs) != static_cast<bool>(b.lhs)) return false;
  if (static_cast<bool>(a.rhs) != static_cast<bool>(b.rhs)) return false;
  if (a.lhs && !equal_nodes(*a.lhs, *b.lhs)) return false;
  if (a.rhs && !equal_nodes(*a.rhs, *b.rhs)) return false;
  return true;
}

}  // namespace

FieldExpression FieldExpression::parse(std::string_view src) {
  return FieldExpression(Parser(src, "t", "x").parse_full());
}

FieldExpression FieldExpression::parse_univariate(std::string_view src,
                                                  std::string_view var) {
  return FieldExpression(Parser(src, "", var).parse_full());
}

double FieldExpression::eval(double t, double x) const {
  return eval_node(*root_, t, x);
}

std::string FieldExpression::str() const {
  std::string out;
  print_node(*root_, out);
  return out;
}

bool FieldExpression::equals(const FieldExpression& other) const {
  return equal_nodes(*root_, *other.root_);
}

ScalarField FieldExpression::field() const {
  ExprPtr root = root_;
  return ScalarField([root](double t, double x) { return eval_node(*root, t, x); },
                     Domain::all());
}

}  // namespace filtsym
