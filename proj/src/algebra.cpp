#include "cliff/algebra.hpp"

#include "cliff/error.hpp"
#include "cliff/linalg.hpp"

namespace cliff {

Signature::Signature(int p_, int q_, int s_) : p(p_), q(q_), s(s_) {
  if (p < 0 || q < 0 || s < 0)
    fail(ErrorCode::InvalidArgument, "signature counts must be non-negative");
  if (n() > kMaxGenerators)
    fail(ErrorCode::DimensionCap, "at most " + std::to_string(kMaxGenerators) + " generators supported");
}

std::string Signature::to_string() const {
  return std::to_string(p) + "," + std::to_string(q) + "," + std::to_string(s);
}

std::vector<int> blade_indices(Blade b) {
  std::vector<int> out;
  for (std::uint32_t m = b.mask; m != 0; m &= m - 1)
    out.push_back(std::countr_zero(m) + 1);
  return out;
}

int reorder_sign(Blade a, Blade b) {
  // Each factor of b must pass every factor of a with a higher index.
  int swaps = 0;
  for (std::uint32_t rest = a.mask >> 1; rest != 0; rest >>= 1)
    swaps += std::popcount(rest & b.mask);
  return (swaps & 1) ? -1 : 1;
}

BladeProduct blade_mul(Blade a, Blade b, const Signature &sig) {
  int coef = reorder_sign(a, b);
  for (std::uint32_t shared = a.mask & b.mask; shared != 0; shared &= shared - 1) {
    coef *= sig.metric(std::countr_zero(shared));
    if (coef == 0)
      break;
  }
  return {coef, Blade{a.mask ^ b.mask}};
}

int involution_sign(Involution kind, int grade) {
  const int k = grade;
  switch (kind) {
  case Involution::Grade:
    return (k & 1) ? -1 : 1;
  case Involution::Reverse:
    return ((k * (k - 1) / 2) & 1) ? -1 : 1;
  case Involution::Conjugate:
    return ((k * (k + 1) / 2) & 1) ? -1 : 1;
  }
  return 1;
}

// --- Multivector -----------------------------------------------------------

Multivector::Multivector(Signature sig, Terms terms) : sig_(sig) {
  for (auto &[b, c] : terms)
    add_term(b, c);
}

Multivector Multivector::scalar(Signature sig, const Rational &value) {
  Multivector x(sig);
  x.add_term(Blade::scalar(), value);
  return x;
}

Multivector Multivector::blade(Signature sig, Blade b, const Rational &coef) {
  Multivector x(sig);
  x.add_term(b, coef);
  return x;
}

Multivector Multivector::generator(Signature sig, int index) {
  if (index < 1 || index > sig.n())
    fail(ErrorCode::InvalidArgument, "generator index " + std::to_string(index) + " out of range");
  return blade(sig, Blade::generator(index));
}

void Multivector::add_term(Blade b, const Rational &c) {
  if (b.mask >= sig_.blade_count())
    fail(ErrorCode::InvalidArgument, "blade outside the algebra");
  if (c.is_zero())
    return;
  auto [it, inserted] = terms_.try_emplace(b, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero())
      terms_.erase(it);
  }
}

Rational Multivector::coefficient(Blade b) const {
  auto it = terms_.find(b);
  return it == terms_.end() ? Rational(0) : it->second;
}

bool Multivector::is_scalar() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_scalar());
}

bool Multivector::is_even() const {
  for (const auto &[b, c] : terms_)
    if (b.grade() & 1)
      return false;
  return true;
}

bool Multivector::is_odd() const {
  for (const auto &[b, c] : terms_)
    if (!(b.grade() & 1))
      return false;
  return true;
}

int Multivector::max_grade() const {
  int g = -1;
  for (const auto &[b, c] : terms_)
    g = std::max(g, b.grade());
  return g;
}

void require_same_signature(const Multivector &x, const Multivector &y) {
  if (!(x.signature() == y.signature()))
    fail(ErrorCode::SignatureMismatch,
         "signature mismatch: (" + x.signature().to_string() + ") vs (" + y.signature().to_string() + ")");
}

Multivector &Multivector::operator+=(const Multivector &o) {
  require_same_signature(*this, o);
  for (const auto &[b, c] : o.terms_)
    add_term(b, c);
  return *this;
}

Multivector &Multivector::operator-=(const Multivector &o) {
  require_same_signature(*this, o);
  for (const auto &[b, c] : o.terms_)
    add_term(b, -c);
  return *this;
}

Multivector &Multivector::operator*=(const Rational &c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto &[b, value] : terms_)
    value *= c;
  return *this;
}

Multivector operator*(const Multivector &x, const Multivector &y) {
  require_same_signature(x, y);
  const Signature &sig = x.signature();
  Multivector out(sig);
  for (const auto &[bx, cx] : x.terms_)
    for (const auto &[by, cy] : y.terms_) {
      BladeProduct prod = blade_mul(bx, by, sig);
      if (prod.coef == 0)
        continue;
      Rational c = cx * cy;
      if (prod.coef < 0)
        c = -c;
      out.add_term(prod.out, c);
    }
  return out;
}

Multivector geometric_product(const Multivector &x, const Multivector &y) { return x * y; }
Multivector add(const Multivector &x, const Multivector &y) { return x + y; }
Multivector scalar_mul(const Rational &c, const Multivector &x) { return c * x; }

namespace {

template <class Keep>
Multivector filter(const Multivector &x, Keep keep) {
  Multivector::Terms terms;
  for (const auto &[b, c] : x.terms())
    if (keep(b))
      terms.emplace(b, c);
  return Multivector(x.signature(), std::move(terms));
}

} // namespace

Multivector grade_projection(const Multivector &x, int k) {
  if (k < 0 || k > x.signature().n())
    fail(ErrorCode::InvalidArgument, "grade " + std::to_string(k) + " out of range");
  return filter(x, [k](Blade b) { return b.grade() == k; });
}

Multivector even_part(const Multivector &x) {
  return filter(x, [](Blade b) { return (b.grade() & 1) == 0; });
}

Multivector odd_part(const Multivector &x) {
  return filter(x, [](Blade b) { return (b.grade() & 1) == 1; });
}

Multivector involution(const Multivector &x, Involution kind) {
  Multivector::Terms terms;
  for (const auto &[b, c] : x.terms())
    terms.emplace(b, involution_sign(kind, b.grade()) < 0 ? -c : c);
  return Multivector(x.signature(), std::move(terms));
}

Multivector norm(const Multivector &x) { return x * conjugate(x); }

Multivector power(const Multivector &x, unsigned exponent) {
  Multivector result = Multivector::scalar(x.signature(), Rational(1));
  Multivector base = x;
  while (exponent) {
    if (exponent & 1u)
      result = result * base;
    exponent >>= 1u;
    if (exponent)
      base = base * base;
  }
  return result;
}

Multivector embed_vector(const std::vector<Rational> &coords, const Signature &sig) {
  if (static_cast<int>(coords.size()) != sig.n())
    fail(ErrorCode::DimensionMismatch, "expected " + std::to_string(sig.n()) + " coordinates, got " +
                                           std::to_string(coords.size()));
  Multivector::Terms terms;
  for (int i = 0; i < sig.n(); ++i)
    if (!coords[static_cast<std::size_t>(i)].is_zero())
      terms.emplace(Blade::generator(i + 1), coords[static_cast<std::size_t>(i)]);
  return Multivector(sig, std::move(terms));
}

std::vector<Rational> extract_vector(const Multivector &x) {
  std::vector<Rational> coords(static_cast<std::size_t>(x.signature().n()));
  for (const auto &[b, c] : x.terms()) {
    if (b.grade() != 1)
      fail(ErrorCode::NotAVector, "element has a component of grade " + std::to_string(b.grade()));
    coords[static_cast<std::size_t>(std::countr_zero(b.mask))] = c;
  }
  return coords;
}

RationalMatrix left_multiplication_matrix(const Multivector &x) {
  const Signature &sig = x.signature();
  const std::uint32_t dim = sig.blade_count();
  RationalMatrix m(dim, dim);
  for (std::uint32_t col = 0; col < dim; ++col)
    for (const auto &[b, c] : x.terms()) {
      BladeProduct prod = blade_mul(b, Blade{col}, sig);
      if (prod.coef == 0)
        continue;
      m(prod.out.mask, col) += prod.coef < 0 ? -c : c;
    }
  return m;
}

std::optional<Multivector> inverse(const Multivector &x) {
  const Signature &sig = x.signature();
  const Multivector one = Multivector::scalar(sig, Rational(1));
  if (x.is_zero())
    return std::nullopt;
  if (x.is_scalar())
    return Multivector::scalar(sig, Rational(1) / x.scalar_part());

  Vector rhs(sig.blade_count());
  rhs[0] = 1;
  auto solution = left_multiplication_matrix(x).solve(rhs);
  if (!solution)
    return std::nullopt;
  Multivector::Terms terms;
  for (std::uint32_t i = 0; i < sig.blade_count(); ++i)
    if (!(*solution)[i].is_zero())
      terms.emplace(Blade{i}, (*solution)[i]);
  Multivector y(sig, std::move(terms));
  // A one-sided inverse is two-sided in a finite-dimensional unital algebra.
  if (!(x * y == one) || !(y * x == one))
    fail(ErrorCode::Internal, "inverse failed two-sided verification");
  return y;
}

MultiplicationTable multiplication_table(const Signature &sig, int cap) {
  if (sig.n() > cap)
    fail(ErrorCode::DimensionCap, "dimension " + std::to_string(sig.n()) + " exceeds cap " + std::to_string(cap));
  MultiplicationTable table{sig, {}};
  const std::uint32_t dim = sig.blade_count();
  table.entries.resize(dim);
  for (std::uint32_t a = 0; a < dim; ++a) {
    table.entries[a].reserve(dim);
    for (std::uint32_t b = 0; b < dim; ++b)
      table.entries[a].push_back(blade_mul(Blade{a}, Blade{b}, sig));
  }
  return table;
}

} // namespace cliff
