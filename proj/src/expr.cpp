#include "cliff/expr.hpp"

#include "cliff/error.hpp"

#include <cctype>
#include <cmath>
#include <iomanip>
#include <sstream>

namespace cliff::expr {

namespace {

class Parser {
public:
  Parser(std::string_view text, const Signature &sig) : text_(text), sig_(sig) {}

  NodePtr parse_all() {
    NodePtr root = parse_expr();
    skip_ws();
    if (pos_ != text_.size())
      throw ParseError(pos_, std::string("unexpected '") + text_[pos_] + "'");
    return root;
  }

private:
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  bool peek(char c) {
    skip_ws();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  bool accept(char c) {
    if (!peek(c))
      return false;
    ++pos_;
    return true;
  }

  void expect(char c) {
    if (!accept(c)) {
      if (pos_ >= text_.size())
        throw ParseError(pos_, std::string("expected '") + c + "' but input ended");
      throw ParseError(pos_, std::string("expected '") + c + "'");
    }
  }

  static NodePtr make(std::size_t at, auto value) {
    auto node = std::make_unique<Node>();
    node->value = std::move(value);
    node->position = at;
    return node;
  }

  NodePtr parse_expr() {
    skip_ws();
    const std::size_t start = pos_;
    NodePtr lhs;
    if (accept('-')) {
      lhs = make(start, Negate{parse_term()});
    } else {
      accept('+');
      lhs = parse_term();
    }
    for (;;) {
      skip_ws();
      const std::size_t at = pos_;
      BinaryOp op;
      if (accept('+'))
        op = BinaryOp::Add;
      else if (accept('-'))
        op = BinaryOp::Sub;
      else
        return lhs;
      NodePtr rhs = parse_term();
      lhs = make(at, Binary{op, std::move(lhs), std::move(rhs)});
    }
  }

  NodePtr parse_term() {
    NodePtr lhs = parse_factor();
    for (;;) {
      skip_ws();
      const std::size_t at = pos_;
      if (!accept('*'))
        return lhs;
      NodePtr rhs = parse_factor();
      lhs = make(at, Binary{BinaryOp::Mul, std::move(lhs), std::move(rhs)});
    }
  }

  NodePtr parse_factor() {
    NodePtr base = parse_atom();
    skip_ws();
    const std::size_t at = pos_;
    if (!accept('^'))
      return base;
    skip_ws();
    const std::size_t digits_at = pos_;
    std::string digits = read_digits();
    if (digits.empty())
      throw ParseError(digits_at, "exponent must be a non-negative integer");
    if (digits.size() > 9)
      throw ParseError(digits_at, "exponent too large");
    return make(at, Power{std::move(base), static_cast<unsigned>(std::stoul(digits))});
  }

  std::string read_digits() {
    std::string out;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
      out.push_back(text_[pos_++]);
    return out;
  }

  NodePtr parse_atom() {
    skip_ws();
    const std::size_t at = pos_;
    if (pos_ >= text_.size())
      throw ParseError(pos_, "unexpected end of input");
    const char c = text_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c)))
      return parse_rational();
    if (c == '(') {
      ++pos_;
      NodePtr inner = parse_expr();
      expect(')');
      return inner;
    }
    if (c == '.')
      throw ParseError(pos_, "floating-point literals are not accepted");
    if (std::isalpha(static_cast<unsigned char>(c))) {
      if (c == 'e' && pos_ + 1 < text_.size() &&
          (std::isdigit(static_cast<unsigned char>(text_[pos_ + 1])) || text_[pos_ + 1] == '{'))
        return parse_blade();
      std::string name;
      while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_])))
        name.push_back(text_[pos_++]);
      Function fn;
      if (name == "rev") fn = Function::Reverse;
      else if (name == "gi") fn = Function::GradeInvolution;
      else if (name == "conj") fn = Function::Conjugate;
      else if (name == "even") fn = Function::Even;
      else if (name == "odd") fn = Function::Odd;
      else if (name == "N") fn = Function::Norm;
      else throw ParseError(at, "unknown identifier '" + name + "'");
      expect('(');
      NodePtr operand = parse_expr();
      expect(')');
      return make(at, Call{fn, std::move(operand)});
    }
    throw ParseError(pos_, std::string("unexpected '") + c + "'");
  }

  NodePtr parse_rational() {
    const std::size_t at = pos_;
    std::string num = read_digits();
    std::string den = "1";
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == '.')
      throw ParseError(pos_, "floating-point literals are not accepted");
    if (accept('/')) {
      skip_ws();
      const std::size_t den_at = pos_;
      den = read_digits();
      if (den.empty())
        throw ParseError(den_at, "expected denominator digits");
      if (den.find_first_not_of('0') == std::string::npos)
        throw ParseError(den_at, "zero denominator");
    }
    return make(at, Literal{Rational::parse(num + "/" + den)});
  }

  void check_index(long index, std::size_t at) const {
    if (index < 1 || index > sig_.n())
      throw ParseError(at, "generator index " + std::to_string(index) + " out of range 1.." + std::to_string(sig_.n()));
  }

  NodePtr parse_blade() {
    const std::size_t at = pos_;
    ++pos_; // 'e'
    Word word;
    if (text_[pos_] == '{') {
      ++pos_;
      do {
        skip_ws();
        const std::size_t idx_at = pos_;
        std::string digits = read_digits();
        if (digits.empty())
          throw ParseError(idx_at, "expected generator index");
        if (digits.size() > 4)
          throw ParseError(idx_at, "generator index too large");
        long index = std::stol(digits);
        check_index(index, idx_at);
        word.indices.push_back(static_cast<int>(index));
      } while (accept(','));
      expect('}');
    } else {
      if (sig_.n() > 9)
        throw ParseError(at, "digit blade notation needs n <= 9; use e{i,j,...}");
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        long index = text_[pos_] - '0';
        check_index(index, pos_);
        word.indices.push_back(static_cast<int>(index));
        ++pos_;
      }
    }
    return make(at, std::move(word));
  }

  std::string_view text_;
  Signature sig_;
  std::size_t pos_ = 0;
};

Multivector eval_node(const Node &node, const Signature &sig) {
  return std::visit(
      [&](const auto &v) -> Multivector {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, Literal>) {
          return Multivector::scalar(sig, v.value);
        } else if constexpr (std::is_same_v<T, Word>) {
          Multivector out = Multivector::scalar(sig, Rational(1));
          for (int index : v.indices)
            out = out * Multivector::generator(sig, index);
          return out;
        } else if constexpr (std::is_same_v<T, Negate>) {
          return -eval_node(*v.operand, sig);
        } else if constexpr (std::is_same_v<T, Call>) {
          Multivector x = eval_node(*v.operand, sig);
          switch (v.fn) {
          case Function::Reverse: return reverse(x);
          case Function::GradeInvolution: return grade_involution(x);
          case Function::Conjugate: return conjugate(x);
          case Function::Even: return even_part(x);
          case Function::Odd: return odd_part(x);
          case Function::Norm: return norm(x);
          }
          return x;
        } else if constexpr (std::is_same_v<T, Binary>) {
          Multivector lhs = eval_node(*v.lhs, sig);
          Multivector rhs = eval_node(*v.rhs, sig);
          switch (v.op) {
          case BinaryOp::Add: return lhs + rhs;
          case BinaryOp::Sub: return lhs - rhs;
          case BinaryOp::Mul: return lhs * rhs;
          }
          return lhs;
        } else {
          return power(eval_node(*v.base, sig), v.exponent);
        }
      },
      node.value);
}

} // namespace

ExprAst parse(std::string_view text, const Signature &sig) {
  Parser parser(text, sig);
  return {sig, parser.parse_all()};
}

Multivector evaluate(const ExprAst &ast) { return eval_node(*ast.root, ast.sig); }

Multivector evaluate(std::string_view text, const Signature &sig) { return evaluate(parse(text, sig)); }

std::string blade_name(Blade b, const Signature &sig) {
  if (b.is_scalar())
    return "1";
  std::ostringstream os;
  os << 'e';
  const auto indices = blade_indices(b);
  if (sig.n() <= 9) {
    for (int i : indices)
      os << i;
  } else {
    os << '{';
    for (std::size_t i = 0; i < indices.size(); ++i)
      os << (i ? "," : "") << indices[i];
    os << '}';
  }
  return os.str();
}

namespace {

template <class Coef>
std::string print_terms(const Multivector &x, Coef coefficient_text) {
  if (x.is_zero())
    return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto &[b, c] : x.terms()) {
    const bool negative = c.sign() < 0;
    if (first)
      os << (negative ? "-" : "");
    else
      os << (negative ? " - " : " + ");
    first = false;
    const Rational mag = c.abs();
    if (b.is_scalar())
      os << coefficient_text(mag);
    else if (mag.is_one())
      os << blade_name(b, x.signature());
    else
      os << coefficient_text(mag) << '*' << blade_name(b, x.signature());
  }
  return os.str();
}

} // namespace

std::string pretty_print(const Multivector &x) {
  return print_terms(x, [](const Rational &r) { return r.to_string(); });
}

std::string pretty_print_approx(const Multivector &x, int digits) {
  return print_terms(x, [digits](const Rational &r) {
    std::ostringstream os;
    os << std::setprecision(digits) << r.to_double();
    return os.str();
  });
}

} // namespace cliff::expr
