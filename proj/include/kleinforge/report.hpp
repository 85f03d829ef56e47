#pragma once

// Command-level computations rendered both as JSON (schema "1") and as a
// plain-text table. Every ordering is canonical, so output is reproducible.

#include <optional>
#include <string>

#include <json.hpp>

#include "kleinforge/geometry.hpp"
#include "kleinforge/polygon.hpp"
#include "kleinforge/tensor.hpp"

namespace kleinforge {

struct Output {
  nlohmann::json data;
  std::string text;
  bool ok = true;  // false when a verification inside the command failed
};

/// Basis by degree, dimensions and the nonzero Sq^1 pairs of H*(K_n; F_2).
Output cohomology_output(int n);
Output manifold_output(int n);
Output integral_output(int n);
Output splitting_output(int n);
Output check_output(int from, int to);
Output pi1_output(int n, const std::string& word);
Output zcl_output(int n, bool exhaustive, std::optional<int> max_length, const ZclOptions& options);
Output tc_output(int m, const ZclOptions& options);
Output genes_output(const polygon::LengthVector& lengths, const ZclOptions& options);
Output mesh_summary(const geometry::Mesh& mesh, geometry::Target target, geometry::Resolution res);
Output scan_output(const geometry::Mesh& mesh, const geometry::ScanOptions& options);

}  // namespace kleinforge
