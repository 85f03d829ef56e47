#pragma once

// The graded ring H*(K_n; F_2) = F_2[R, V_1..V_{n-1}] / (R^2, V_i^2 + R V_i).
//
// Every basis element has the form R^eps * V_S with eps in {0,1} and S a subset
// of {1..n-1}. The product of two basis elements is
//
//   (R^a V_S)(R^b V_T) = R^{a+b+|S∩T|} V_{S∪T}   if a + b + |S∩T| <= 1,
//                      = 0                       otherwise,
//
// since each repeated V_i contributes one factor of R and R^2 = 0.

#include <compare>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "kleinforge/f2_matrix.hpp"

namespace kleinforge {

inline constexpr int kMaxDimension = 63;

/// Basis monomial R^eps * V_S of H*(K_n; F_2). S is stored as a bitmask with
/// bit i set for V_i, so bit 0 is never used.
class Monomial {
 public:
  Monomial(int n, bool has_r, std::uint64_t vars);

  static Monomial unit(int n) { return Monomial(n, false, 0); }
  static Monomial r(int n) { return Monomial(n, true, 0); }
  static Monomial v(int n, int index);
  /// R * V_1 * ... * V_{n-1}, the generator of H^n.
  static Monomial top(int n);
  static Monomial from_indices(int n, bool has_r, std::initializer_list<int> indices);
  static Monomial from_indices(int n, bool has_r, const std::vector<int>& indices);

  int n() const noexcept { return n_; }
  bool has_r() const noexcept { return has_r_; }
  std::uint64_t vars() const noexcept { return vars_; }
  int degree() const noexcept;
  std::vector<int> indices() const;

  /// "1", "R", "V2", "R*V1*V3".
  std::string to_string() const;
  /// Compact table notation: "1", "R", "RV1V3".
  std::string to_compact() const;

  /// Canonical order: (n, degree, eps, ascending index list lexicographically).
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) noexcept;
  friend bool operator==(const Monomial& a, const Monomial& b) noexcept = default;

 private:
  int n_;
  bool has_r_;
  std::uint64_t vars_;
};

/// Product of two basis monomials; nullopt when it vanishes.
std::optional<Monomial> cup(const Monomial& a, const Monomial& b);

/// An element of H*(K_n; F_2): a finite set of monomials, kept sorted.
class CohomologyClass {
 public:
  explicit CohomologyClass(int n);
  /// Builds the F_2-sum of the given monomials; repeated monomials cancel in pairs.
  CohomologyClass(int n, std::vector<Monomial> terms);
  CohomologyClass(const Monomial& m);  // NOLINT(google-explicit-constructor)

  static CohomologyClass zero(int n) { return CohomologyClass(n); }

  int n() const noexcept { return n_; }
  const std::vector<Monomial>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool contains(const Monomial& m) const;
  bool is_homogeneous() const;
  /// Degree of a nonzero homogeneous class.
  std::optional<int> degree() const;

  std::string to_string() const;

  friend CohomologyClass operator+(const CohomologyClass& a, const CohomologyClass& b);
  friend bool operator==(const CohomologyClass&, const CohomologyClass&) = default;

 private:
  int n_;
  std::vector<Monomial> terms_;
};

CohomologyClass cup(const CohomologyClass& a, const CohomologyClass& b);

/// Steenrod square via the closed form: Sq^1(V_S) = R V_S for |S| odd,
/// Sq^0 = id, every other Sq^j vanishes on basis elements.
CohomologyClass sq(int j, const CohomologyClass& a);
std::optional<Monomial> sq(int j, const Monomial& m);

/// All degree-d monomials of H*(K_n) in canonical order.
std::vector<Monomial> basis(int n, int d);

/// dim H^d(K_n; F_2) for d = 0..n.
std::vector<std::uint64_t> poincare_polynomial(int n);

struct CupLength {
  int length;
  std::vector<CohomologyClass> witness;
};

/// Longest nonzero product of positive-degree classes, with a degree-1 witness.
CupLength cup_length(int n);

/// M[a][b] = coefficient of the top class in basis(n,d)[a] * basis(n,n-d)[b].
F2Matrix duality_pairing(int n, int d);

/// Validates 1 <= n <= 63; throws DomainError / CapacityError.
void require_dimension(int n, const char* where);

}  // namespace kleinforge

template <>
struct std::hash<kleinforge::Monomial> {
  std::size_t operator()(const kleinforge::Monomial& m) const noexcept {
    return std::hash<std::uint64_t>{}((m.vars() | (m.has_r() ? 1u : 0u)) ^ (std::uint64_t(m.n()) << 58));
  }
};
