#pragma once

// The umbrella acceptance run behind `klein-forge verify-paper`.

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "kleinforge/cohomology.hpp"

namespace kleinforge {

struct VerifyCheck {
  int criterion;
  std::string id;
  std::string anchor;
  bool passed;
  std::string detail;
};

struct VerifyOptions {
  unsigned threads = 1;
  /// Replaces sq in the K_4 basis comparison; used for mutation testing.
  std::function<std::optional<Monomial>(int, const Monomial&)> sq_override;
};

struct VerifyReport {
  int max_n;
  std::vector<VerifyCheck> checks;

  bool passed() const;
  /// Whether every check of the criterion passed.
  bool criterion_passed(int criterion) const;
};

inline constexpr int kVerifyMinN = 4;
inline constexpr int kVerifyMaxN = 16;

/// Throws DomainError below kVerifyMinN and FeasibilityError above kVerifyMaxN.
VerifyReport verify_paper(int max_n, const VerifyOptions& options = {});

nlohmann::json to_json(const VerifyReport& report);
std::string to_text(const VerifyReport& report);

}  // namespace kleinforge
