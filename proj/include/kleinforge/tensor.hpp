#pragma once

// H*(K_n x K_n; F_2) = H*(K_n) (x) H*(K_n) via Kunneth, zero-divisor products,
// and the zero-divisor cup-length search behind topological complexity bounds.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "kleinforge/cohomology.hpp"

namespace kleinforge {

class TensorClass {
 public:
  using Term = std::pair<Monomial, Monomial>;

  explicit TensorClass(int n);
  /// F_2-sum of the given pure tensors; duplicates cancel in pairs.
  TensorClass(int n, std::vector<Term> terms);

  static TensorClass unit(int n);

  int n() const noexcept { return n_; }
  const std::vector<Term>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool contains(const Monomial& left, const Monomial& right) const;

  std::string to_string() const;

  friend TensorClass operator+(const TensorClass& a, const TensorClass& b);
  friend bool operator==(const TensorClass&, const TensorClass&) = default;

 private:
  int n_;
  std::vector<Term> terms_;
};

/// x (x) 1 + 1 (x) x.
TensorClass zero_divisor(const CohomologyClass& x);

/// (u (x) v)(u' (x) v') = (-1)^{|v||u'|} uu' (x) vv'; the sign is 1 in F_2.
TensorClass tensor_mul(const TensorClass& a, const TensorClass& b);

/// The multiplication map u (x) v -> u v back to H*(K_n).
CohomologyClass diagonal_product(const TensorClass& a);

/// Vbar_1^3 Vbar_2^2 Vbar_3 ... Vbar_{n-1}, n >= 3; throws InvariantError if
/// it vanishes or lacks the term R V_1..V_{n-2} (x) R V_1 V_{n-1}.
TensorClass zero_divisor_witness(int n);

/// Rbar^r * prod_i Vbar_i^{v[i-1]}.
struct FactorMultiset {
  int r_count = 0;
  std::vector<int> v_multiplicities;  // entry i-1 is the power of Vbar_i

  int size() const;
  std::string to_string() const;
  friend bool operator==(const FactorMultiset&, const FactorMultiset&) = default;
};

TensorClass evaluate(int n, const FactorMultiset& factors);

struct ZclOptions {
  bool symmetry_reduction = true;
  unsigned threads = 1;
  std::uint64_t max_candidates = 10'000'000;
  /// Bound on candidates * 2^length, the worst-case number of tensor terms touched.
  std::uint64_t max_work = 1'000'000'000;
};

struct ZclResult {
  int n;
  int length;
  bool all_zero;
  std::optional<FactorMultiset> witness;
  std::uint64_t candidates;
};

/// Number of factor multisets zcl_exhaustive(n, length) would evaluate, saturating at UINT64_MAX.
std::uint64_t zcl_candidate_count(int n, int length, bool symmetry_reduction);

/// Evaluates every product of `length` factors drawn from {Rbar, Vbar_1..Vbar_{n-1}}.
/// With symmetry reduction, V-multiplicities are taken nonincreasing in the index.
/// Lengths above 2n vanish for degree reasons and are answered without search.
ZclResult zcl_exhaustive(int n, int length, const ZclOptions& options = {});

struct TcBounds {
  int m;
  int zcl;
  int lower;
  int upper;
  std::string zcl_provenance;
  std::string upper_provenance;
};

/// Topological complexity bounds for K_m (unreduced): lower = zcl + 1, upper = 2m + 1.
/// zcl comes from exhaustive search when m <= exhaustive_limit.
TcBounds tc_bounds(int m, int exhaustive_limit = 8, const ZclOptions& options = {});

}  // namespace kleinforge
