#include <doctest.h>

#include "kleinforge/char_classes.hpp"
#include "kleinforge/cohomology.hpp"

using namespace kleinforge;

namespace {

bool pairs_to_top(const CohomologyClass& c, int n) { return c.contains(Monomial::top(n)); }

}  // namespace

TEST_CASE("Wu classes") {
  auto v2 = wu_classes(2);
  CHECK(v2[0] == CohomologyClass(Monomial::unit(2)));
  CHECK(v2[1] == CohomologyClass(Monomial::r(2)));
  for (int j = 1; j <= 3; ++j) CHECK(wu_classes(3)[static_cast<std::size_t>(j)].is_zero());
  const auto v4 = wu_classes(4);
  CHECK(v4[1] == CohomologyClass(Monomial::r(4)));
  for (int j = 2; j <= 4; ++j) CHECK(v4[static_cast<std::size_t>(j)].is_zero());
}

TEST_CASE("Wu defining property holds on every basis element") {
  for (int n = 1; n <= 10; ++n) {
    const auto v = wu_classes(n);
    for (int j = 0; j <= n; ++j) {
      for (const auto& x : basis(n, n - j)) {
        const CohomologyClass cx(x);
        CHECK(pairs_to_top(cup(v[static_cast<std::size_t>(j)], cx), n) == pairs_to_top(sq(j, cx), n));
      }
      if (2 * j > n) CHECK(v[static_cast<std::size_t>(j)].is_zero());
    }
  }
}

TEST_CASE("Stiefel-Whitney classes") {
  const auto w4 = stiefel_whitney(4);
  CHECK(w4[1] == CohomologyClass(Monomial::r(4)));
  for (int k = 2; k <= 4; ++k) CHECK(w4[static_cast<std::size_t>(k)].is_zero());
  for (int k = 1; k <= 5; ++k) CHECK(stiefel_whitney(5)[static_cast<std::size_t>(k)].is_zero());
  CHECK(stiefel_whitney(1)[1].is_zero());
  for (int n = 1; n <= 10; ++n) {
    const auto w = stiefel_whitney(n);
    CHECK(w[0] == CohomologyClass(Monomial::unit(n)));
    for (int k = 1; k <= n; ++k) {
      const bool expect_r = k == 1 && n % 2 == 0;
      CHECK(w[static_cast<std::size_t>(k)] ==
            (expect_r ? CohomologyClass(Monomial::r(n)) : CohomologyClass::zero(n)));
    }
  }
}

TEST_CASE("manifold report") {
  const auto k2 = manifold_report(2);
  CHECK_FALSE(k2.orientable.value);
  CHECK(k2.orientable.provenance == Provenance::computed);
  CHECK(k2.span.value == 1);
  CHECK(k2.immersion_dim.value == 3);
  CHECK(k2.embedding_dim.value == 4);
  CHECK_FALSE(k2.parallelizable.value);
  CHECK(k2.cat.value == 2);
  CHECK(k2.cat.provenance == Provenance::computed);

  const auto k3 = manifold_report(3);
  CHECK(k3.orientable.value);
  CHECK(k3.span.value == 3);
  CHECK(k3.immersion_dim.value == 4);
  CHECK(k3.embedding_dim.value == 4);
  CHECK(k3.parallelizable.value);
  CHECK(k3.cat.value == 3);
  CHECK(k3.span.provenance == Provenance::cited);

  const auto k1 = manifold_report(1);
  CHECK(k1.orientable.value);
  CHECK(k1.span.value == 1);
}
