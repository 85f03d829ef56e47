#pragma once

// Combinatorics of planar polygon spaces: short subsets of a length vector,
// genetic codes (maximal short subsets containing n) and the recognizable
// codes of projective spaces, tori and the generalized Klein bottles.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <boost/rational.hpp>

namespace kleinforge::polygon {

using Rational = boost::rational<std::int64_t>;

/// Subset of {1..n}; bit i-1 represents element i.
using Subset = std::uint32_t;

inline constexpr int kMaxSides = 24;

Subset make_subset(std::initializer_list<int> elements);
Subset make_subset(const std::vector<int>& elements);
/// Elements in decreasing order.
std::vector<int> elements(Subset s);
/// "{6,3,2,1}"; the empty set prints as "{}".
std::string to_string(Subset s);

/// "3", "-2", "1/24".
Rational parse_rational(const std::string& text);

class LengthVector {
 public:
  /// Sorts the lengths; zeros are replaced by `epsilon` or the default
  /// 1 / (4 n q (1 + ceil(sum))) where q is the common denominator.
  explicit LengthVector(std::vector<Rational> lengths, std::optional<Rational> epsilon = std::nullopt);

  /// Comma-separated integers or fractions, e.g. "0,0,1,1,1,2" or "1/2,3".
  static LengthVector parse(const std::string& text, std::optional<Rational> epsilon = std::nullopt);

  int n() const noexcept { return static_cast<int>(lengths_.size()); }
  const std::vector<Rational>& lengths() const noexcept { return lengths_; }
  /// The value substituted for zero entries, if any were present.
  std::optional<Rational> epsilon() const noexcept { return epsilon_; }

  /// Lengths scaled by the common denominator to exact integers.
  const std::vector<std::int64_t>& scaled() const noexcept { return scaled_; }
  __int128 scaled_total() const noexcept { return total_; }
  __int128 scaled_sum(Subset s) const;

 private:
  std::vector<Rational> lengths_;
  std::optional<Rational> epsilon_;
  std::vector<std::int64_t> scaled_;
  __int128 total_ = 0;
};

Rational default_epsilon(const std::vector<Rational>& lengths);

bool is_generic(const LengthVector& l);
bool is_short(Subset s, const LengthVector& l);

/// `upper` dominates `lower` when some injection phi: lower -> upper has phi(x) >= x.
bool dominates(Subset upper, Subset lower);

struct GeneticCode {
  int n;
  std::vector<Subset> genes;

  std::string to_string() const;
  friend bool operator==(const GeneticCode&, const GeneticCode&) = default;
};

/// Maximal short subsets containing n. Requires a generic length vector.
GeneticCode genetic_code(const LengthVector& l);

/// Genes with n removed.
std::vector<Subset> gees(const GeneticCode& code);

struct Classification {
  bool projective_space = false;  // RP^{n-3}
  bool torus = false;             // T^{n-3}
  std::optional<int> klein_m;     // K_{n-3}
};

Classification classify(const GeneticCode& code);

}  // namespace kleinforge::polygon
