#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace kleinforge {

/// Finitely generated abelian group Z^free_rank + sum of Z/order^count.
struct AbelianGroup {
  std::uint64_t free_rank = 0;
  std::map<std::uint64_t, std::uint64_t> torsion;  // order (>= 2) -> multiplicity

  static AbelianGroup trivial() { return {}; }
  static AbelianGroup free(std::uint64_t rank) { return {rank, {}}; }

  std::uint64_t torsion_count(std::uint64_t order) const;
  void add_torsion(std::uint64_t order, std::uint64_t count = 1);
  bool is_trivial() const { return free_rank == 0 && torsion.empty(); }

  /// "0", "Z", "Z^3 + Z2^3".
  std::string to_string() const;

  friend AbelianGroup operator+(const AbelianGroup& a, const AbelianGroup& b);
  friend bool operator==(const AbelianGroup&, const AbelianGroup&) = default;
};

/// Diagonal of the Smith normal form of an integer matrix (nonzero entries only).
std::vector<std::int64_t> smith_invariants(std::vector<std::vector<std::int64_t>> matrix);

/// Cokernel of the relation matrix in invariant-factor form: generators are columns, relations rows.
AbelianGroup group_from_relations(const std::vector<std::vector<std::int64_t>>& relations, std::size_t generators);

}  // namespace kleinforge
