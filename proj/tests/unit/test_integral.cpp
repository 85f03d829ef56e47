#include <doctest.h>

#include "kleinforge/abelian_group.hpp"
#include "kleinforge/cohomology.hpp"
#include "kleinforge/combinatorics.hpp"
#include "kleinforge/errors.hpp"
#include "kleinforge/integral.hpp"

using namespace kleinforge;

namespace {

AbelianGroup group(std::uint64_t free_rank, std::uint64_t z2 = 0) {
  auto g = AbelianGroup::free(free_rank);
  if (z2) g.add_torsion(2, z2);
  return g;
}

std::vector<std::string> texts(const std::vector<WedgeSummand>& s) {
  std::vector<std::string> out;
  for (const auto& w : s) out.push_back(w.to_string());
  return out;
}

}  // namespace

TEST_CASE("abelian groups") {
  CHECK(group(3, 3).to_string() == "Z^3 + Z2^3");
  CHECK(AbelianGroup::trivial().to_string() == "0");
  CHECK(group(1).to_string() == "Z");
  CHECK(group(0, 1).to_string() == "Z2");
  CHECK(smith_invariants({{2, 4}, {6, 8}}) == std::vector<std::int64_t>{2, 4});
  // invariant factors: Z2 + Z3 comes back as Z6
  CHECK(group_from_relations({{2, 0, 0}, {0, 3, 0}}, 3).to_string() == "Z + Z6");
  CHECK(group_from_relations({{2, 0}, {0, 4}}, 2).to_string() == "Z2 + Z4");
  CHECK(group_from_relations({{1, 1}}, 2) == AbelianGroup::free(1));
}

TEST_CASE("integral cohomology examples") {
  CHECK(integral_cohomology(2) == std::vector<AbelianGroup>{group(1), group(1), group(0, 1)});
  CHECK(integral_cohomology(4) ==
        std::vector<AbelianGroup>{group(1), group(1), group(3, 3), group(3), group(0, 1)});
  CHECK(integral_cohomology(3)[2] == group(1, 2));
}

TEST_CASE("splitting examples") {
  CHECK(texts(splitting(2)) == std::vector<std::string>{"S^2", "M^3(2)"});
  CHECK(texts(splitting(3)) == std::vector<std::string>{"S^2", "2xM^3(2)", "S^3", "S^4"});
  CHECK(texts(splitting(4)) == std::vector<std::string>{"S^2", "3xM^3(2)", "3xS^3", "3xS^4", "M^5(2)"});
  CHECK_THROWS_AS(splitting(1), DomainError);
}

TEST_CASE("homology from the splitting") {
  CHECK(homology_from_splitting(2) == std::vector<AbelianGroup>{group(1), group(1, 1), group(0)});
  CHECK(homology_from_splitting(3) == std::vector<AbelianGroup>{group(1), group(1, 2), group(1), group(1)});
  for (int n = 2; n <= 12; ++n) CHECK(homology_from_splitting(n).back() == (n % 2 ? group(1) : group(0)));
}

TEST_CASE("reduced mod 2 rank of the splitting is 2^n - 1") {
  for (int n = 2; n <= 12; ++n) {
    std::uint64_t rank = 0;
    for (const auto& s : splitting(n))
      rank += s.multiplicity * (s.kind == SummandKind::sphere ? 1 : 2);
    CHECK(rank == (std::uint64_t{1} << n) - 1);
  }
}

TEST_CASE("UCT identities against an independent count") {
  // t(d) from the binomial formula, compared with the mod 2 basis count.
  for (int n = 2; n <= 12; ++n) {
    const auto h = integral_cohomology(n);
    const auto p = poincare_polynomial(n);
    auto tors = [&](int d) { return d >= 0 && d <= n ? h[static_cast<std::size_t>(d)].torsion_count(2) : 0; };
    for (int d = 0; d <= n; ++d) {
      const auto& g = h[static_cast<std::size_t>(d)];
      CHECK(g.free_rank == (d % 2 == 0 ? binomial(n - 1, d) : binomial(n - 1, d - 1)));
      CHECK(p[static_cast<std::size_t>(d)] == g.free_rank + tors(d) + tors(d + 1));
    }
    CHECK(cohomology_from_homology(homology_from_splitting(n)) == h);
  }
  const auto h4 = integral_cohomology(4);
  CHECK(h4[2].free_rank == 3);
  CHECK(h4[2].torsion_count(2) == 3);
}

TEST_CASE("consistency checks pass") {
  for (int n = 2; n <= 12; ++n) {
    const auto r = consistency_check(n);
    CHECK(r.passed());
    CHECK(r.checks.size() == 5);
  }
}
