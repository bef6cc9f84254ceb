#pragma once

#include "cliff/algebra.hpp"

#include <memory>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace cliff::expr {

// Grammar (whitespace insignificant, no implicit multiplication):
//   expr   := ['+'|'-'] term (('+'|'-') term)*
//   term   := factor ('*' factor)*
//   factor := atom ('^' uint)?
//   atom   := rational | blade | '(' expr ')' | fn '(' expr ')'
//   rational := int ('/' uint)?
//   blade  := 'e' digit+            one generator per digit, needs n <= 9
//           | 'e{' int (',' int)* '}'
//   fn     := rev | gi | conj | even | odd | N
// A blade symbol is a generator word: indices in written order, repeats
// allowed, so e21 and e2*e1 evaluate identically.

enum class Function { Reverse, GradeInvolution, Conjugate, Even, Odd, Norm };
enum class BinaryOp { Add, Sub, Mul };

struct Node;
using NodePtr = std::unique_ptr<Node>;

struct Literal {
  Rational value;
};
struct Word {
  std::vector<int> indices;
};
struct Negate {
  NodePtr operand;
};
struct Call {
  Function fn;
  NodePtr operand;
};
struct Binary {
  BinaryOp op;
  NodePtr lhs;
  NodePtr rhs;
};
struct Power {
  NodePtr base;
  unsigned exponent;
};

struct Node {
  std::variant<Literal, Word, Negate, Call, Binary, Power> value;
  std::size_t position = 0;
};

// Parsed expression bound to the signature it was validated against.
struct ExprAst {
  Signature sig;
  NodePtr root;
};

// Throws ParseError with a byte position on malformed input or an index
// outside 1..n.
ExprAst parse(std::string_view text, const Signature &sig);

Multivector evaluate(const ExprAst &ast);
Multivector evaluate(std::string_view text, const Signature &sig);

// Canonical text: terms in ascending blade-mask order, "a/b" coefficients,
// "-" for negative terms, e<i...> digits when n <= 9 and e{i,...} otherwise,
// "0" for zero.
std::string pretty_print(const Multivector &x);
std::string blade_name(Blade b, const Signature &sig);

// Decimal rendering for display only.
std::string pretty_print_approx(const Multivector &x, int digits = 6);

} // namespace cliff::expr
