#include "kleinforge/abelian_group.hpp"

#include <cstdlib>
#include <numeric>
#include <stdexcept>
#include <utility>

namespace kleinforge {

std::uint64_t AbelianGroup::torsion_count(std::uint64_t order) const {
  auto it = torsion.find(order);
  return it == torsion.end() ? 0 : it->second;
}

void AbelianGroup::add_torsion(std::uint64_t order, std::uint64_t count) {
  if (order < 2) throw std::invalid_argument("AbelianGroup: torsion order must be >= 2");
  if (count > 0) torsion[order] += count;
}

std::string AbelianGroup::to_string() const {
  if (is_trivial()) return "0";
  std::string out;
  auto append = [&](const std::string& base, std::uint64_t power) {
    if (!out.empty()) out += " + ";
    out += base;
    if (power != 1) out += "^" + std::to_string(power);
  };
  if (free_rank > 0) append("Z", free_rank);
  for (const auto& [order, count] : torsion) append("Z" + std::to_string(order), count);
  return out;
}

AbelianGroup operator+(const AbelianGroup& a, const AbelianGroup& b) {
  AbelianGroup sum = a;
  sum.free_rank += b.free_rank;
  for (const auto& [order, count] : b.torsion) sum.add_torsion(order, count);
  return sum;
}

std::vector<std::int64_t> smith_invariants(std::vector<std::vector<std::int64_t>> m) {
  const std::size_t rows = m.size();
  const std::size_t cols = rows ? m[0].size() : 0;
  std::vector<std::int64_t> diagonal;
  std::size_t t = 0;
  while (t < rows && t < cols) {
    // Pivot: nonzero entry of least absolute value in the remaining block.
    std::size_t pr = rows, pc = cols;
    for (std::size_t r = t; r < rows; ++r)
      for (std::size_t c = t; c < cols; ++c)
        if (m[r][c] != 0 && (pr == rows || std::llabs(m[r][c]) < std::llabs(m[pr][pc]))) pr = r, pc = c;
    if (pr == rows) break;
    std::swap(m[t], m[pr]);
    for (auto& row : m) std::swap(row[t], row[pc]);

    bool clean = true;
    for (std::size_t r = t + 1; r < rows; ++r) {
      const std::int64_t q = m[r][t] / m[t][t];
      for (std::size_t c = t; c < cols; ++c) m[r][c] -= q * m[t][c];
      if (m[r][t] != 0) clean = false;
    }
    for (std::size_t c = t + 1; c < cols; ++c) {
      const std::int64_t q = m[t][c] / m[t][t];
      for (std::size_t r = t; r < rows; ++r) m[r][c] -= q * m[r][t];
      if (m[t][c] != 0) clean = false;
    }
    if (!clean) continue;  // smaller remainder appeared; re-pivot

    // Divisibility: fold any entry not divisible by the pivot into row t.
    bool divisible = true;
    for (std::size_t r = t + 1; r < rows && divisible; ++r)
      for (std::size_t c = t + 1; c < cols; ++c)
        if (m[r][c] % m[t][t] != 0) {
          for (std::size_t k = t; k < cols; ++k) m[t][k] += m[r][k];
          divisible = false;
          break;
        }
    if (!divisible) continue;

    diagonal.push_back(std::llabs(m[t][t]));
    ++t;
  }
  return diagonal;
}

AbelianGroup group_from_relations(const std::vector<std::vector<std::int64_t>>& relations, std::size_t generators) {
  for (const auto& row : relations)
    if (row.size() != generators) throw std::invalid_argument("group_from_relations: ragged relation matrix");
  const auto invariants = relations.empty() ? std::vector<std::int64_t>{} : smith_invariants(relations);
  AbelianGroup g;
  g.free_rank = generators - invariants.size();
  for (std::int64_t d : invariants)
    if (d > 1) g.add_torsion(static_cast<std::uint64_t>(d));
  return g;
}

}  // namespace kleinforge
