#include "kleinforge/integral.hpp"

#include <algorithm>

#include "kleinforge/char_classes.hpp"
#include "kleinforge/cohomology.hpp"
#include "kleinforge/combinatorics.hpp"
#include "kleinforge/errors.hpp"
#include "kleinforge/fundamental_group.hpp"

namespace kleinforge {

std::vector<AbelianGroup> integral_cohomology(int n) {
  require_dimension(n, "integral_cohomology");
  const int gens = n - 1;
  std::vector<AbelianGroup> groups(static_cast<std::size_t>(n + 1));
  for (int d = 0; d <= n; ++d) {
    auto& g = groups[static_cast<std::size_t>(d)];
    if (d % 2 == 0) {
      g.free_rank = binomial(gens, d);                    // Lambda^d, d even
      if (d >= 2) g.add_torsion(2, binomial(gens, d - 1));  // R.Lambda^{d-1}(Z_2), d-1 odd
    } else {
      g.free_rank = binomial(gens, d - 1);  // R.Lambda^{d-1}, d-1 even
    }
  }
  return groups;
}

std::string WedgeSummand::to_string() const {
  std::string base = kind == SummandKind::sphere ? "S^" + std::to_string(dim) : "M^" + std::to_string(dim) + "(2)";
  return multiplicity == 1 ? base : std::to_string(multiplicity) + "x" + base;
}

std::vector<WedgeSummand> splitting(int n) {
  require_dimension(n, "splitting");
  if (n < 2) throw DomainError("splitting: n must be >= 2 (K_1 is the circle)");
  std::vector<WedgeSummand> out{{SummandKind::sphere, 2, 1}};
  for (int i = 1; i <= n - 1; ++i) {
    const std::uint64_t mult = binomial(n - 1, i);
    if (i % 2 == 1) {
      out.push_back({SummandKind::moore, i + 2, mult});
    } else {
      out.push_back({SummandKind::sphere, i + 1, mult});
      out.push_back({SummandKind::sphere, i + 2, mult});
    }
  }
  return out;
}

std::vector<AbelianGroup> homology_from_splitting(int n) {
  const auto summands = splitting(n);
  std::vector<AbelianGroup> homology(static_cast<std::size_t>(n + 1));
  homology[0].free_rank = 1;
  for (const auto& s : summands) {
    // Reduced H_k(K_n) = reduced H_{k+1}(Sigma K_n).
    const int k = s.kind == SummandKind::sphere ? s.dim - 1 : s.dim - 2;
    if (k < 1 || k > n) throw InvariantError("homology_from_splitting: summand " + s.to_string() + " out of range");
    auto& g = homology[static_cast<std::size_t>(k)];
    if (s.kind == SummandKind::sphere)
      g.free_rank += s.multiplicity;
    else
      g.add_torsion(2, s.multiplicity);
  }
  return homology;
}

std::vector<AbelianGroup> cohomology_from_homology(const std::vector<AbelianGroup>& homology) {
  std::vector<AbelianGroup> out(homology.size());
  for (std::size_t d = 0; d < homology.size(); ++d) {
    out[d].free_rank = homology[d].free_rank;
    if (d > 0) out[d].torsion = homology[d - 1].torsion;
  }
  return out;
}

bool ConsistencyReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.passed; });
}

namespace {

std::string join(const std::vector<AbelianGroup>& groups) {
  std::string out = "[";
  for (std::size_t i = 0; i < groups.size(); ++i) out += (i ? ", " : "") + groups[i].to_string();
  return out + "]";
}

template <typename F>
long long alternating_sum(std::size_t count, F value) {
  long long sum = 0;
  for (std::size_t d = 0; d < count; ++d) sum += (d % 2 == 0 ? 1 : -1) * static_cast<long long>(value(d));
  return sum;
}

}  // namespace

ConsistencyReport consistency_check(int n) {
  if (n < 2) throw DomainError("consistency_check: n must be >= 2");
  ConsistencyReport report{n, {}};
  const auto poincare = poincare_polynomial(n);
  const auto cohomology = integral_cohomology(n);
  const auto homology = homology_from_splitting(n);

  {
    bool ok = true;
    std::string detail;
    for (int d = 0; d <= n; ++d) {
      const auto t = [&](int deg) -> std::uint64_t {
        return deg <= n ? cohomology[static_cast<std::size_t>(deg)].torsion_count(2) : 0;
      };
      const std::uint64_t predicted = cohomology[static_cast<std::size_t>(d)].free_rank + t(d) + t(d + 1);
      if (predicted != poincare[static_cast<std::size_t>(d)]) {
        ok = false;
        detail += "degree " + std::to_string(d) + ": UCT gives " + std::to_string(predicted) + ", mod-2 ring has " +
                  std::to_string(poincare[static_cast<std::size_t>(d)]) + "; ";
      }
    }
    report.checks.push_back({"uct_mod2_betti", ok, ok ? "dim H^d(;Z2) = free(d) + t(d) + t(d+1) for all d" : detail});
  }
  {
    const auto derived = cohomology_from_homology(homology);
    const bool ok = derived == cohomology;
    report.checks.push_back({"splitting_vs_integral", ok,
                             ok ? "UCT(splitting homology) = integral cohomology"
                                : "from splitting " + join(derived) + " vs integral " + join(cohomology)});
  }
  {
    const auto ab = pi1::abelianization(n);
    const bool ok = ab == homology[1];
    report.checks.push_back(
        {"h1_vs_abelianization", ok, "H_1 = " + homology[1].to_string() + ", pi_1^ab = " + ab.to_string()});
  }
  {
    const long long chi_mod2 = alternating_sum(poincare.size(), [&](std::size_t d) { return poincare[d]; });
    const long long chi_coh = alternating_sum(cohomology.size(), [&](std::size_t d) { return cohomology[d].free_rank; });
    const long long chi_hom = alternating_sum(homology.size(), [&](std::size_t d) { return homology[d].free_rank; });
    const bool ok = chi_mod2 == 0 && chi_coh == 0 && chi_hom == 0;
    report.checks.push_back({"euler_characteristic", ok,
                             "chi(mod 2) = " + std::to_string(chi_mod2) + ", chi(H^*) = " + std::to_string(chi_coh) +
                                 ", chi(H_*) = " + std::to_string(chi_hom)});
  }
  {
    const bool w1_zero = stiefel_whitney(n)[1].is_zero();
    const bool top_is_z = homology[static_cast<std::size_t>(n)] == AbelianGroup::free(1);
    const bool ok = w1_zero == top_is_z;
    report.checks.push_back({"orientability", ok,
                             std::string("w1 ") + (w1_zero ? "= 0" : "!= 0") + ", H_n = " +
                                 homology[static_cast<std::size_t>(n)].to_string()});
  }
  return report;
}

}  // namespace kleinforge
