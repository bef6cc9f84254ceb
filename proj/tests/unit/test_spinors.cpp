#include "cliff/error.hpp"
#include "cliff/expr.hpp"
#include "cliff/spinors.hpp"

#include "../oracles.hpp"

#include <doctest.h>

using namespace cliff;

namespace {

Multivector mv(const char *text, Signature sig) { return expr::evaluate(text, sig); }

int positive_mod(int a, int m) { return ((a % m) + m) % m; }

// Division ring of Cl(p,q) read from p - q mod 8 of the classification.
std::size_t expected_division_dim(const Signature &sig) {
  switch (positive_mod(sig.p - sig.q, 8)) {
  case 0: case 1: case 2: return 1;
  case 3: case 7: return 2;
  default: return 4;
  }
}

bool expected_double(const Signature &sig) { return sig.n() % 2 == 1 && positive_mod(sig.p - sig.q, 4) == 1; }

} // namespace

TEST_CASE("Radon-Hurwitz numbers") {
  const int table[8] = {0, 1, 2, 2, 3, 3, 3, 3};
  for (int j = 0; j < 8; ++j) {
    CHECK(radon_hurwitz(j) == table[j]);
    CHECK(radon_hurwitz(j + 8) == table[j] + 4);
    CHECK(radon_hurwitz(j - 8) == table[j] - 4);
  }
  CHECK(radon_hurwitz(3) == 2);
  CHECK(radon_hurwitz(8) == 4);
  CHECK(radon_hurwitz(-2) == -1);
}

TEST_CASE("idempotent count exponent") {
  CHECK(idempotent_count_exponent(Signature(0, 3)) == 1);
  CHECK(idempotent_count_exponent(Signature(0, 2)) == 0);
  CHECK(idempotent_count_exponent(Signature(1, 3)) == 1);
  CHECK(idempotent_count_exponent(Signature(2, 0)) == 1);
  CHECK_THROWS_AS(idempotent_count_exponent(Signature(1, 0, 1)), Error);
}

TEST_CASE("commuting blade search") {
  auto s = find_commuting_blades(Signature(0, 3));
  REQUIRE(s.blades.size() == 1);
  CHECK(s.blades[0] == Blade{0b111});
  CHECK(find_commuting_blades(Signature(0, 2)).blades.empty());
  auto r = find_commuting_blades(Signature(2, 0));
  REQUIRE(r.blades.size() == 1);
  CHECK(r.blades[0] == Blade::generator(1));

  Signature sig(2, 0);
  CHECK_FALSE(is_valid_commuting_set(sig, {Blade::generator(1), Blade::generator(2)}));
  CHECK_FALSE(is_valid_commuting_set(sig, {Blade::scalar()}));
  Signature big(4, 0);
  // e12 squares to -1 in (4,0)
  CHECK_FALSE(is_valid_commuting_set(big, {Blade{0b0011}}));
  // e1 and e234 commute? e1 e234 = e1234, e234 e1 = -e1234: no
  CHECK_FALSE(is_valid_commuting_set(big, {Blade{0b0001}, Blade{0b1110}}));
}

TEST_CASE("idempotent set examples") {
  Signature q3(0, 3);
  auto set = primitive_idempotents(q3);
  REQUIRE(set.idems.size() == 2);
  CHECK(set.idems[0] == mv("1/2 + 1/2*e123", q3));
  CHECK(set.idems[1] == mv("1/2 - 1/2*e123", q3));
  CHECK(verify_idempotent_set(set.idems, q3).all());

  auto trivial = primitive_idempotents(Signature(0, 2));
  REQUIRE(trivial.idems.size() == 1);
  CHECK(trivial.idems[0] == Multivector::scalar(Signature(0, 2), 1));

  Signature r2(2, 0);
  auto two = primitive_idempotents(r2);
  REQUIRE(two.idems.size() == 2);
  CHECK(two.idems[0] == mv("1/2 + 1/2*e1", r2));
  CHECK((two.idems[0] * two.idems[1]).is_zero());
  CHECK_FALSE(verify_idempotent_set({mv("1/2+1/2*e1", r2)}, r2).sums_to_one);
}

TEST_CASE("left ideals") {
  Signature r2(2, 0);
  auto whole = left_ideal_basis(Multivector::scalar(r2, 1));
  CHECK(whole.dim() == 4);
  CHECK(left_ideal_basis(mv("1/2 + 1/2*e123", Signature(0, 3))).dim() == 4);
  auto col = left_ideal_basis(mv("1/2 + 1/2*e1", r2));
  CHECK(col.dim() == 2);
  CHECK(col.contains(mv("e2 * (1/2 + 1/2*e1)", r2)));
  CHECK_FALSE(col.contains(Multivector::scalar(r2, 1)));
  CHECK_THROWS_AS(col.coordinates(Multivector::scalar(r2, 1)), Error);
  CHECK_THROWS_AS(left_ideal_basis(mv("e1", r2)), Error);
}

TEST_CASE("division rings") {
  auto h = division_ring_info(Multivector::scalar(Signature(0, 2), 1));
  CHECK(h.dim == 4);
  CHECK(h.kind == DivisionRingKind::Quaternion);
  CHECK(h.imaginary_units.size() == 3);

  auto r = division_ring_info(mv("1/2 + 1/2*e1", Signature(2, 0)));
  CHECK(r.dim == 1);
  CHECK(r.kind == DivisionRingKind::Real);

  auto c = division_ring_info(primitive_idempotents(Signature(3, 0)).idems[0]);
  CHECK(c.dim == 2);
  CHECK(c.kind == DivisionRingKind::Complex);

  CHECK_THROWS_AS(division_ring_info(Multivector::scalar(Signature(2, 0), 1)), Error);
  CHECK_THROWS_AS(division_ring_info(mv("e1", Signature(2, 0))), Error);
}

TEST_CASE("center") {
  CHECK(algebra_center(Signature(0, 2)).size() == 1);
  CHECK(is_simple(Signature(0, 2)));
  auto z = algebra_center(Signature(0, 3));
  CHECK(z.size() == 2);
  CHECK_FALSE(is_simple(Signature(0, 3)));
  CHECK(algebra_center(Signature(1, 0)).size() == 2);
  CHECK_THROWS_AS(algebra_center(Signature(1, 0, 1)), Error);

  auto [cp, cm] = central_idempotents(Signature(0, 3));
  CHECK(cp + cm == Multivector::scalar(Signature(0, 3), 1));
  CHECK((cp * cm).is_zero());
  CHECK_THROWS_AS(central_idempotents(Signature(0, 2)), Error);
}

TEST_CASE("structure agrees with classification for p+q <= 6") {
  for (const auto &sig : oracle::signatures_up_to(6, false)) {
    CAPTURE(sig.to_string());
    auto set = primitive_idempotents(sig);
    const int k = idempotent_count_exponent(sig);
    REQUIRE(set.idems.size() == (std::size_t{1} << k));
    REQUIRE(verify_idempotent_set(set.idems, sig).all());
    CHECK(algebra_center(sig).size() == (sig.n() % 2 == 1 ? 2u : 1u));
    CHECK(is_simple(sig) == !expected_double(sig));

    std::size_t ideal_sum = 0;
    for (const auto &f : set.idems) {
      auto ideal = left_ideal_basis(f);
      CHECK(ideal.dim() == (std::size_t{1} << (sig.n() - k)));
      ideal_sum += ideal.dim();
      CHECK(division_ring_info(f).dim == expected_division_dim(sig));
    }
    CHECK(ideal_sum == sig.blade_count());
  }
}

TEST_CASE("Peirce decomposition") {
  for (const auto &sig : {Signature(2, 0), Signature(3, 0), Signature(0, 3), Signature(1, 3), Signature(2, 1)}) {
    auto set = primitive_idempotents(sig);
    std::size_t total = 0;
    for (const auto &fi : set.idems)
      for (const auto &fj : set.idems) {
        SpanBuilder span;
        for (std::uint32_t m = 0; m < sig.blade_count(); ++m) {
          auto y = fi * Multivector::blade(sig, Blade{m}) * fj;
          SparseVector sv;
          for (const auto &[b, c] : y.terms())
            sv.emplace(b.mask, c);
          span.insert(sv);
        }
        total += span.dimension();
      }
    CHECK(total == sig.blade_count());
  }
}

TEST_CASE("minimal ideals of a double algebra sit in one component") {
  for (const auto &sig : {Signature(0, 3), Signature(1, 0), Signature(2, 1)}) {
    auto [cp, cm] = central_idempotents(sig);
    for (const auto &f : primitive_idempotents(sig).idems) {
      auto ideal = left_ideal_basis(f);
      bool in_plus = true, in_minus = true;
      for (const auto &psi : ideal.basis()) {
        in_plus = in_plus && cp * psi == psi && (cm * psi).is_zero();
        in_minus = in_minus && cm * psi == psi && (cp * psi).is_zero();
      }
      CHECK(in_plus != in_minus);
    }
  }
}

TEST_CASE("faithful ideals") {
  CHECK(faithful_ideal(Signature(0, 3)).dim() == 8);
  CHECK(faithful_ideal(Signature(0, 2)).dim() == 4);
  CHECK(faithful_ideal(Signature(1, 3)).dim() == 8);
  CHECK(is_faithful(faithful_ideal(Signature(0, 3))));
  CHECK_FALSE(is_faithful(minimal_ideal(Signature(0, 3))));
  CHECK(is_faithful(minimal_ideal(Signature(1, 3))));
}

TEST_CASE("regular representation") {
  oracle::Random rng(41);
  for (const auto &sig : {Signature(1, 3), Signature(0, 3), Signature(2, 0)}) {
    auto ideal = faithful_ideal(sig);
    CHECK(regular_rep_matrix(Multivector::scalar(sig, 1), ideal).is_identity());
    for (int i = 1; i <= sig.n(); ++i) {
      auto r = regular_rep_matrix(Multivector::generator(sig, i), ideal);
      CHECK(r * r == Rational(sig.metric(i - 1)) * RationalMatrix::identity(ideal.dim()));
    }
    for (int trial = 0; trial < 5; ++trial) {
      auto x = rng.multivector(sig), y = rng.multivector(sig);
      CHECK(regular_rep_matrix(x * y, ideal) == regular_rep_matrix(x, ideal) * regular_rep_matrix(y, ideal));
    }
  }
  CHECK_THROWS_AS(regular_rep_matrix(Multivector::scalar(Signature(1, 0), 1), faithful_ideal(Signature(0, 1))), Error);
}

TEST_CASE("interbasis elements") {
  Signature r2(2, 0);
  auto set = primitive_idempotents(r2);
  auto same = interbasis_element(set.idems[0], set.idems[0]);
  CHECK(same.e_ij == set.idems[0]);
  CHECK(same.e_ji == set.idems[0]);

  auto pair = interbasis_element(set.idems[0], set.idems[1]);
  CHECK(pair.e_ij * pair.e_ji == set.idems[0]);
  CHECK(pair.e_ji * pair.e_ij == set.idems[1]);
  CHECK((pair.e_ij * pair.e_ij).is_zero());

  auto q3 = primitive_idempotents(Signature(0, 3));
  CHECK_THROWS_AS(interbasis_element(q3.idems[0], q3.idems[1]), Error);
}

TEST_CASE("E-calculus on a matrix algebra") {
  Signature sig(2, 2);
  auto set = primitive_idempotents(sig);
  const std::size_t k = set.idems.size();
  REQUIRE(k == 4);
  // E[i][j] with E[i][i] = f_i, built from E_0j and E_j0
  std::vector<std::vector<Multivector>> e(k, std::vector<Multivector>(k, Multivector(sig)));
  for (std::size_t j = 0; j < k; ++j) {
    auto p = interbasis_element(set.idems[0], set.idems[j]);
    e[0][j] = p.e_ij;
    e[j][0] = p.e_ji;
  }
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      e[i][j] = e[i][0] * e[0][j];
  for (std::size_t i = 0; i < k; ++i)
    CHECK(e[i][i] == set.idems[i]);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      for (std::size_t l = 0; l < k; ++l)
        for (std::size_t m = 0; m < k; ++m) {
          Multivector expected = j == l ? e[i][m] : Multivector(sig);
          CHECK(e[i][j] * e[l][m] == expected);
        }
}

TEST_CASE("intertwiner") {
  oracle::Random rng(42);
  Signature r2(2, 0);
  auto set = primitive_idempotents(r2);
  auto same = representation_intertwiner(set.idems[0], set.idems[0]);
  CHECK(same.forward.is_identity());

  auto tw = representation_intertwiner(set.idems[0], set.idems[1]);
  CHECK(tw.forward.rows() == 2);
  CHECK((tw.forward * tw.backward).is_identity());
  for (int trial = 0; trial < 20; ++trial) {
    auto a = rng.multivector(r2);
    CHECK(regular_rep_matrix(a, tw.target) * tw.forward == tw.forward * regular_rep_matrix(a, tw.source));
  }
}
