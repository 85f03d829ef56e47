#include "kleinforge/char_classes.hpp"

#include "kleinforge/errors.hpp"

namespace kleinforge {

std::vector<CohomologyClass> wu_classes(int n) {
  require_dimension(n, "wu_classes");
  const Monomial top = Monomial::top(n);
  std::vector<CohomologyClass> wu;
  for (int j = 0; j <= n; ++j) {
    const auto unknowns = basis(n, j);
    const auto tests = basis(n, n - j);
    // Row b: sum_a c_a <u_a, x_b> = <Sq^j x_b>, i.e. pairing^T c = s.
    const F2Matrix system = duality_pairing(n, j).transposed();
    std::vector<bool> rhs(tests.size(), false);
    for (std::size_t b = 0; b < tests.size(); ++b) {
      const auto s = sq(j, tests[b]);
      rhs[b] = s.has_value() && *s == top;
    }
    if (!system.is_nonsingular())
      throw InvariantError("wu_classes: duality pairing singular in degree " + std::to_string(j));
    const auto solution = system.solve(rhs);
    if (!solution) throw InvariantError("wu_classes: inconsistent Wu system in degree " + std::to_string(j));
    std::vector<Monomial> terms;
    for (std::size_t a = 0; a < unknowns.size(); ++a)
      if ((*solution)[a]) terms.push_back(unknowns[a]);
    wu.emplace_back(n, std::move(terms));
  }
  return wu;
}

std::vector<CohomologyClass> stiefel_whitney(int n) { return wu_data(n).sw; }

WuData wu_data(int n) {
  auto wu = wu_classes(n);
  std::vector<CohomologyClass> sw;
  for (int k = 0; k <= n; ++k) {
    CohomologyClass w(n);
    for (int j = 0; j <= k; ++j) w = w + sq(k - j, wu[static_cast<std::size_t>(j)]);
    sw.push_back(std::move(w));
  }
  return {n, std::move(wu), std::move(sw)};
}

std::string to_string(Provenance p) { return p == Provenance::computed ? "computed" : "cited"; }

ManifoldReport manifold_report(int n) {
  const auto sw = stiefel_whitney(n);
  const bool orientable = sw[1].is_zero();
  // Span, parallelizability and the Euclidean dimensions come from explicit
  // bundle and embedding constructions that cohomology alone cannot certify;
  // they are keyed off the computed orientability.
  return ManifoldReport{
      .n = n,
      .orientable = {orientable, Provenance::computed},
      .span = {orientable ? n : n - 1, Provenance::cited},
      .immersion_dim = {n + 1, Provenance::cited},
      .embedding_dim = {orientable ? n + 1 : n + 2, Provenance::cited},
      .parallelizable = {orientable, Provenance::cited},
      .cat = {cup_length(n).length, Provenance::computed},
  };
}

}  // namespace kleinforge
