#pragma once

#include <string>
#include <vector>

#include "kleinforge/cohomology.hpp"

namespace kleinforge {

struct WuData {
  int n;
  std::vector<CohomologyClass> wu;  // v_0..v_n
  std::vector<CohomologyClass> sw;  // w_0..w_n
};

/// Wu classes v_0..v_n of K_n, each solved from v_j * x = Sq^j x over the
/// Poincare duality pairing.
std::vector<CohomologyClass> wu_classes(int n);

/// Stiefel-Whitney classes w_k = sum_j Sq^{k-j} v_j, k = 0..n.
std::vector<CohomologyClass> stiefel_whitney(int n);

WuData wu_data(int n);

enum class Provenance { computed, cited };
std::string to_string(Provenance p);

template <typename T>
struct ReportField {
  T value;
  Provenance provenance;
};

struct ManifoldReport {
  int n;
  ReportField<bool> orientable;
  ReportField<int> span;
  ReportField<int> immersion_dim;
  ReportField<int> embedding_dim;
  ReportField<bool> parallelizable;
  ReportField<int> cat;
};

ManifoldReport manifold_report(int n);

}  // namespace kleinforge
