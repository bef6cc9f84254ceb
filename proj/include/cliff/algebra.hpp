#pragma once

#include "cliff/linalg.hpp"
#include "cliff/rational.hpp"

#include <bit>
#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace cliff {

// Generators are never indexed past this; masks fit in 32 bits with room.
inline constexpr int kMaxGenerators = 16;
inline constexpr int kDefaultDimensionCap = 10;

// Signature (p, q, s) of a real Clifford algebra. Generator i (1-based)
// squares to +1 for i <= p, to -1 for p < i <= p+q, and to 0 beyond.
struct Signature {
  int p = 0;
  int q = 0;
  int s = 0;

  Signature() = default;
  Signature(int p_, int q_, int s_ = 0);

  int n() const { return p + q + s; }
  std::uint32_t blade_count() const { return std::uint32_t{1} << n(); }
  bool regular() const { return s == 0; }

  // Square of generator `index`, 0-based.
  int metric(int index) const {
    if (index < p) return 1;
    if (index < p + q) return -1;
    return 0;
  }

  std::string to_string() const;

  friend bool operator==(const Signature &, const Signature &) = default;
};

// Standard basis element: bit i set means generator e_{i+1} is a factor.
// Factors are always taken in ascending index order.
struct Blade {
  std::uint32_t mask = 0;

  constexpr Blade() = default;
  constexpr explicit Blade(std::uint32_t m) : mask(m) {}

  static constexpr Blade scalar() { return Blade{}; }
  // 1-based generator index.
  static constexpr Blade generator(int index) { return Blade{std::uint32_t{1} << (index - 1)}; }

  constexpr int grade() const { return std::popcount(mask); }
  constexpr bool is_scalar() const { return mask == 0; }

  friend constexpr auto operator<=>(Blade, Blade) = default;
};

// 1-based generator indices of a blade in ascending order.
std::vector<int> blade_indices(Blade b);

struct BladeProduct {
  int coef = 0; // -1, 0 or +1
  Blade out;
};

// Product of two standard blades: the XOR blade with reordering sign times
// the metric factor of every shared generator.
BladeProduct blade_mul(Blade a, Blade b, const Signature &sig);

// Sign (+1/-1) gathered when moving the factors of `b` past those of `a`.
int reorder_sign(Blade a, Blade b);

enum class Involution { Grade, Reverse, Conjugate };

// Per-blade sign of an involution at grade k.
int involution_sign(Involution kind, int grade);

// Element of Cl(p,q,s): sparse map from blades to nonzero exact coefficients.
class Multivector {
public:
  using Terms = std::map<Blade, Rational>;

  explicit Multivector(Signature sig) : sig_(sig) {}
  Multivector(Signature sig, Terms terms);

  static Multivector scalar(Signature sig, const Rational &value);
  static Multivector blade(Signature sig, Blade b, const Rational &coef = Rational(1));
  // 1-based generator index.
  static Multivector generator(Signature sig, int index);

  const Signature &signature() const { return sig_; }
  const Terms &terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  Rational coefficient(Blade b) const;
  Rational scalar_part() const { return coefficient(Blade::scalar()); }
  bool is_scalar() const;
  bool is_even() const;
  bool is_odd() const;
  // Largest grade with a nonzero coefficient; -1 for zero.
  int max_grade() const;

  Multivector &operator+=(const Multivector &o);
  Multivector &operator-=(const Multivector &o);
  Multivector &operator*=(const Rational &c);

  friend Multivector operator+(Multivector a, const Multivector &b) { return a += b; }
  friend Multivector operator-(Multivector a, const Multivector &b) { return a -= b; }
  friend Multivector operator-(Multivector a) { return a *= Rational(-1); }
  friend Multivector operator*(const Rational &c, Multivector x) { return x *= c; }
  friend Multivector operator*(const Multivector &x, const Multivector &y);

  friend bool operator==(const Multivector &, const Multivector &) = default;

private:
  void add_term(Blade b, const Rational &c);

  Signature sig_;
  Terms terms_;
};

void require_same_signature(const Multivector &x, const Multivector &y);

Multivector geometric_product(const Multivector &x, const Multivector &y);
Multivector add(const Multivector &x, const Multivector &y);
Multivector scalar_mul(const Rational &c, const Multivector &x);

Multivector grade_projection(const Multivector &x, int k);
Multivector even_part(const Multivector &x);
Multivector odd_part(const Multivector &x);
Multivector involution(const Multivector &x, Involution kind);
inline Multivector grade_involution(const Multivector &x) { return involution(x, Involution::Grade); }
inline Multivector reverse(const Multivector &x) { return involution(x, Involution::Reverse); }
inline Multivector conjugate(const Multivector &x) { return involution(x, Involution::Conjugate); }

// N(x) = x * conjugate(x); a full multivector, scalar on the Clifford group.
Multivector norm(const Multivector &x);

// Natural power, x^0 = 1.
Multivector power(const Multivector &x, unsigned exponent);

Multivector embed_vector(const std::vector<Rational> &coords, const Signature &sig);
// Throws Error(NotAVector) unless x is purely grade 1.
std::vector<Rational> extract_vector(const Multivector &x);

// Two-sided inverse by exact solution of L_x y = 1; nullopt when x is a zero
// divisor.
std::optional<Multivector> inverse(const Multivector &x);

// Left multiplication matrix of x in the blade basis (column b holds x*e_b).
RationalMatrix left_multiplication_matrix(const Multivector &x);

struct MultiplicationTable {
  Signature sig;
  // entries[a][b] is the product of blade a by blade b.
  std::vector<std::vector<BladeProduct>> entries;
};

MultiplicationTable multiplication_table(const Signature &sig, int cap = kDefaultDimensionCap);

} // namespace cliff
