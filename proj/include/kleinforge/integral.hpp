#pragma once

#include <string>
#include <vector>

#include "kleinforge/abelian_group.hpp"

namespace kleinforge {

/// H^d(K_n; Z) for d = 0..n, read off Lambda^ev + R.Lambda^ev + R.Lambda^od(Z_2).
std::vector<AbelianGroup> integral_cohomology(int n);

enum class SummandKind { sphere, moore };

/// `multiplicity` copies of S^dim, or of the mod-2 Moore space M^dim(2) = S^{dim-1} u_2 e^dim.
struct WedgeSummand {
  SummandKind kind;
  int dim;
  std::uint64_t multiplicity;

  std::string to_string() const;
  friend bool operator==(const WedgeSummand&, const WedgeSummand&) = default;
};

/// Wedge decomposition of the suspension of K_n, n >= 2.
std::vector<WedgeSummand> splitting(int n);

/// H_k(K_n; Z), k = 0..n, by desuspending the wedge decomposition.
std::vector<AbelianGroup> homology_from_splitting(int n);

/// Cohomology from homology by the universal coefficient theorem:
/// H^d = free(H_d) + torsion(H_{d-1}).
std::vector<AbelianGroup> cohomology_from_homology(const std::vector<AbelianGroup>& homology);

struct ConsistencyCheck {
  std::string name;
  bool passed;
  std::string detail;
};

struct ConsistencyReport {
  int n;
  std::vector<ConsistencyCheck> checks;
  bool passed() const;
};

/// Cross-checks the mod-2 ring, integral cohomology, the splitting and pi_1.
ConsistencyReport consistency_check(int n);

}  // namespace kleinforge
