#include <doctest.h>

#include <random>

#include "kleinforge/cohomology.hpp"
#include "kleinforge/combinatorics.hpp"
#include "kleinforge/errors.hpp"
#include "kleinforge/f2_matrix.hpp"
#include "oracles.hpp"

using namespace kleinforge;
using oracle::all_monomials;

namespace {

std::vector<std::string> names(const std::vector<Monomial>& ms) {
  std::vector<std::string> out;
  for (const auto& m : ms) out.push_back(m.to_string());
  return out;
}

}  // namespace

TEST_CASE("binomial") {
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(4, -1) == 0);
  CHECK(binomial(4, 5) == 0);
  CHECK(binomial(62, 31) == 465428353255261088ULL);
  CHECK_THROWS_AS(binomial(63, 1), CapacityError);
}

TEST_CASE("F2 matrix rank and solve") {
  F2Matrix m(3, 3);
  m.set(0, 0, true);
  m.set(0, 1, true);
  m.set(1, 1, true);
  m.set(2, 0, true);
  m.set(2, 1, true);
  CHECK(m.rank() == 2);
  CHECK_FALSE(m.is_nonsingular());
  CHECK(F2Matrix::identity(70).is_nonsingular());
  auto x = m.solve({true, true, true});
  REQUIRE(x);
  CHECK((*x)[0] != (*x)[1]);
  CHECK((*x)[1]);
  CHECK_FALSE(m.solve({true, false, false}));
}

TEST_CASE("basis by degree") {
  CHECK(names(basis(4, 2)) == std::vector<std::string>{"V1*V2", "V1*V3", "V2*V3", "R*V1", "R*V2", "R*V3"});
  CHECK(names(basis(5, 0)) == std::vector<std::string>{"1"});
  CHECK(names(basis(4, 4)) == std::vector<std::string>{"R*V1*V2*V3"});
  CHECK_THROWS_AS(basis(4, 5), DomainError);
  CHECK_THROWS_AS(basis(0, 0), DomainError);
  CHECK_THROWS_AS(basis(40, 20), FeasibilityError);
}

TEST_CASE("monomial text and order") {
  const auto m = Monomial::from_indices(5, true, {1, 3});
  CHECK(m.to_string() == "R*V1*V3");
  CHECK(m.to_compact() == "RV1V3");
  CHECK(Monomial::unit(3).to_string() == "1");
  CHECK_THROWS_AS(Monomial::from_indices(4, false, {1, 1}), DomainError);
  CHECK_THROWS_AS(Monomial::v(4, 4), DomainError);
  CHECK(Monomial::v(4, 3) < Monomial::r(4));
  CHECK(Monomial::from_indices(4, false, {1, 3}) < Monomial::from_indices(4, false, {2, 3}));
}

TEST_CASE("cup examples") {
  const int n = 4;
  const auto v1 = Monomial::v(n, 1), r = Monomial::r(n);
  CHECK(cup(v1, v1) == Monomial::from_indices(n, true, {1}));
  CHECK_FALSE(cup(r, r));
  CHECK_FALSE(cup(v1, Monomial::from_indices(n, true, {1})));
  CHECK_THROWS_AS(cup(Monomial::v(3, 1), Monomial::v(4, 1)), DomainError);
}

TEST_CASE("cup agrees with the free polynomial oracle on all basis pairs") {
  for (int n = 1; n <= 4; ++n) {
    const auto all = all_monomials(n);
    for (const auto& a : all)
      for (const auto& b : all) {
        const auto got = cup(CohomologyClass(a), CohomologyClass(b));
        CHECK(oracle::to_poly(got) == oracle::multiply(oracle::to_poly(a), oracle::to_poly(b)));
      }
  }
}

TEST_CASE("ring laws on random classes") {
  std::mt19937_64 rng(11);
  for (int n = 1; n <= 8; ++n) {
    const auto all = all_monomials(n);
    std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
    auto random_class = [&] {
      std::vector<Monomial> t;
      for (int i = 0; i < 4; ++i) t.push_back(all[pick(rng)]);
      return CohomologyClass(n, t);
    };
    for (int i = 0; i < 300; ++i) {
      const auto a = random_class(), b = random_class(), c = random_class();
      CHECK(cup(cup(a, b), c) == cup(a, cup(b, c)));
      CHECK(cup(a, b) == cup(b, a));
      CHECK(cup(a, b + c) == cup(a, b) + cup(a, c));
    }
    for (const auto& a : all)
      for (const auto& b : all)
        if (auto p = cup(a, b)) CHECK(p->degree() == a.degree() + b.degree());
  }
}

TEST_CASE("Steenrod squares") {
  const int n = 4;
  CHECK(sq(1, Monomial::from_indices(n, false, {1, 2, 3})) == Monomial::top(n));
  CHECK_FALSE(sq(1, Monomial::from_indices(n, true, {1})));
  CHECK_FALSE(sq(1, Monomial::from_indices(n, false, {1, 2})));
  for (const auto& m : all_monomials(n)) {
    CHECK(sq(0, m) == m);
    CHECK_FALSE(sq(2, m));
    CHECK_FALSE(sq(3, m));
  }
  // Cartan formula for Sq^1, a derivation, on all pairs for n <= 5.
  for (int k = 1; k <= 5; ++k) {
    const auto all = all_monomials(k);
    for (const auto& a : all)
      for (const auto& b : all) {
        const CohomologyClass ca(a), cb(b);
        CHECK(sq(1, cup(ca, cb)) == cup(sq(1, ca), cb) + cup(ca, sq(1, cb)));
        // Sq^j x = x^2 when j equals the degree, and 0 above it.
        CHECK(sq(a.degree(), ca) == cup(ca, ca));
        CHECK(sq(a.degree() + 1, ca).is_zero());
      }
  }
  CHECK_THROWS_AS(sq(1, CohomologyClass(Monomial::r(3)) + CohomologyClass(Monomial::from_indices(3, false, {1, 2}))),
                  DomainError);
}

TEST_CASE("Poincare polynomial") {
  CHECK(poincare_polynomial(4) == std::vector<std::uint64_t>{1, 4, 6, 4, 1});
  CHECK(poincare_polynomial(1) == std::vector<std::uint64_t>{1, 1});
  CHECK(poincare_polynomial(6) == std::vector<std::uint64_t>{1, 6, 15, 20, 15, 6, 1});
  for (int n = 1; n <= 12; ++n) {
    const auto p = poincare_polynomial(n);
    for (int d = 0; d <= n; ++d) CHECK(p[static_cast<std::size_t>(d)] == basis(n, d).size());
  }
}

TEST_CASE("cup length and duality") {
  const auto c2 = cup_length(2);
  CHECK(c2.length == 2);
  REQUIRE(c2.witness.size() == 2);
  CHECK(c2.witness[0] == CohomologyClass(Monomial::r(2)));
  CHECK(c2.witness[1] == CohomologyClass(Monomial::v(2, 1)));
  CHECK(cup_length(1).length == 1);
  CHECK(cup_length(4).length == 4);

  const auto p = duality_pairing(2, 1);
  // rows and columns in basis order V1, R
  CHECK(p.to_strings() == std::vector<std::string>{"11", "10"});
  CHECK(p.is_nonsingular());
  CHECK(duality_pairing(5, 0) == F2Matrix::identity(1));
  CHECK(duality_pairing(4, 2).rows() == 6);
  for (int n = 1; n <= 10; ++n) {
    CHECK(cup_length(n).length == n);
    for (int d = 0; d <= n; ++d) CHECK(duality_pairing(n, d).is_nonsingular());
  }
}
