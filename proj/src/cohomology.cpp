#include "kleinforge/cohomology.hpp"

#include <algorithm>
#include <bit>
#include <sstream>
#include <utility>

#include "kleinforge/combinatorics.hpp"
#include "kleinforge/errors.hpp"

namespace kleinforge {

namespace {

constexpr std::uint64_t kMaxBasisSize = 10'000'000;

std::uint64_t valid_var_mask(int n) {
  // bits 1..n-1
  if (n <= 1) return 0;
  return ((std::uint64_t{1} << n) - 1) & ~std::uint64_t{1};
}

}  // namespace

void require_dimension(int n, const char* where) {
  if (n < 1) throw DomainError(std::string(where) + ": n must be >= 1, got " + std::to_string(n));
  if (n > kMaxDimension)
    throw CapacityError(std::string(where) + ": n must be <= 63 (bitmask capacity), got " + std::to_string(n));
}

Monomial::Monomial(int n, bool has_r, std::uint64_t vars) : n_(n), has_r_(has_r), vars_(vars) {
  require_dimension(n, "Monomial");
  if (vars & ~valid_var_mask(n)) throw DomainError("Monomial: V index outside 1..n-1");
}

Monomial Monomial::v(int n, int index) {
  if (index < 1 || index >= n) throw DomainError("Monomial::v: index outside 1..n-1");
  return Monomial(n, false, std::uint64_t{1} << index);
}

Monomial Monomial::top(int n) {
  require_dimension(n, "Monomial::top");
  return Monomial(n, true, valid_var_mask(n));
}

Monomial Monomial::from_indices(int n, bool has_r, std::initializer_list<int> indices) {
  return from_indices(n, has_r, std::vector<int>(indices));
}

Monomial Monomial::from_indices(int n, bool has_r, const std::vector<int>& indices) {
  require_dimension(n, "Monomial::from_indices");
  std::uint64_t vars = 0;
  for (int i : indices) {
    if (i < 1 || i >= n) throw DomainError("Monomial: V index outside 1..n-1");
    const std::uint64_t bit = std::uint64_t{1} << i;
    if (vars & bit) throw DomainError("Monomial: repeated V index");
    vars |= bit;
  }
  return Monomial(n, has_r, vars);
}

int Monomial::degree() const noexcept { return (has_r_ ? 1 : 0) + std::popcount(vars_); }

std::vector<int> Monomial::indices() const {
  std::vector<int> out;
  for (std::uint64_t bits = vars_; bits; bits &= bits - 1) out.push_back(std::countr_zero(bits));
  return out;
}

std::string Monomial::to_string() const {
  if (degree() == 0) return "1";
  std::string out = has_r_ ? "R" : "";
  for (int i : indices()) {
    if (!out.empty()) out += '*';
    out += "V" + std::to_string(i);
  }
  return out;
}

std::string Monomial::to_compact() const {
  if (degree() == 0) return "1";
  std::string out = has_r_ ? "R" : "";
  for (int i : indices()) out += "V" + std::to_string(i);
  return out;
}

std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) noexcept {
  if (auto c = a.n_ <=> b.n_; c != 0) return c;
  if (auto c = a.degree() <=> b.degree(); c != 0) return c;
  if (auto c = a.has_r_ <=> b.has_r_; c != 0) return c;
  if (a.vars_ == b.vars_) return std::strong_ordering::equal;
  // Same size index sets: the one owning the lowest differing index sorts first.
  const std::uint64_t lowest = (a.vars_ ^ b.vars_) & (~(a.vars_ ^ b.vars_) + 1);
  return (a.vars_ & lowest) ? std::strong_ordering::less : std::strong_ordering::greater;
}

std::optional<Monomial> cup(const Monomial& a, const Monomial& b) {
  if (a.n() != b.n()) throw DomainError("cup: mismatched n");
  const int r_power = (a.has_r() ? 1 : 0) + (b.has_r() ? 1 : 0) + std::popcount(a.vars() & b.vars());
  if (r_power >= 2) return std::nullopt;
  return Monomial(a.n(), r_power == 1, a.vars() | b.vars());
}

CohomologyClass::CohomologyClass(int n) : n_(n) { require_dimension(n, "CohomologyClass"); }

CohomologyClass::CohomologyClass(int n, std::vector<Monomial> terms) : n_(n), terms_(std::move(terms)) {
  require_dimension(n, "CohomologyClass");
  for (const auto& m : terms_)
    if (m.n() != n) throw DomainError("CohomologyClass: monomial with mismatched n");
  std::sort(terms_.begin(), terms_.end());
  // x + x = 0: keep monomials that occur an odd number of times.
  std::vector<Monomial> reduced;
  reduced.reserve(terms_.size());
  for (std::size_t i = 0; i < terms_.size();) {
    std::size_t j = i;
    while (j < terms_.size() && terms_[j] == terms_[i]) ++j;
    if ((j - i) % 2 == 1) reduced.push_back(terms_[i]);
    i = j;
  }
  terms_ = std::move(reduced);
}

CohomologyClass::CohomologyClass(const Monomial& m) : n_(m.n()), terms_{m} {}

bool CohomologyClass::contains(const Monomial& m) const {
  return std::binary_search(terms_.begin(), terms_.end(), m);
}

bool CohomologyClass::is_homogeneous() const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [&](const Monomial& m) { return m.degree() == terms_.front().degree(); });
}

std::optional<int> CohomologyClass::degree() const {
  if (terms_.empty() || !is_homogeneous()) return std::nullopt;
  return terms_.front().degree();
}

std::string CohomologyClass::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& m : terms_) {
    if (!out.empty()) out += " + ";
    out += m.to_string();
  }
  return out;
}

CohomologyClass operator+(const CohomologyClass& a, const CohomologyClass& b) {
  if (a.n_ != b.n_) throw DomainError("class addition: mismatched n");
  std::vector<Monomial> out;
  std::set_symmetric_difference(a.terms_.begin(), a.terms_.end(), b.terms_.begin(), b.terms_.end(),
                                std::back_inserter(out));
  CohomologyClass result(a.n_);
  result.terms_ = std::move(out);
  return result;
}

CohomologyClass cup(const CohomologyClass& a, const CohomologyClass& b) {
  if (a.n() != b.n()) throw DomainError("cup: mismatched n");
  std::vector<Monomial> products;
  products.reserve(a.terms().size() * b.terms().size());
  for (const auto& x : a.terms())
    for (const auto& y : b.terms())
      if (auto p = cup(x, y)) products.push_back(*p);
  return CohomologyClass(a.n(), std::move(products));
}

std::optional<Monomial> sq(int j, const Monomial& m) {
  if (j < 0) throw DomainError("sq: negative index");
  if (j == 0) return m;
  if (j == 1 && !m.has_r() && std::popcount(m.vars()) % 2 == 1) return Monomial(m.n(), true, m.vars());
  return std::nullopt;
}

CohomologyClass sq(int j, const CohomologyClass& a) {
  if (!a.is_homogeneous()) throw DomainError("sq: class is not homogeneous");
  std::vector<Monomial> out;
  for (const auto& m : a.terms())
    if (auto s = sq(j, m)) out.push_back(*s);
  return CohomologyClass(a.n(), std::move(out));
}

namespace {

// Appends every k-subset of {1..n-1} (as bitmask) in lexicographic order of
// ascending index lists.
void append_subsets(int n, int k, bool has_r, std::vector<Monomial>& out) {
  const int m = n - 1;
  if (k < 0 || k > m) return;
  std::vector<int> idx(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) idx[static_cast<std::size_t>(i)] = i + 1;
  while (true) {
    std::uint64_t vars = 0;
    for (int i : idx) vars |= std::uint64_t{1} << i;
    out.emplace_back(n, has_r, vars);
    int pos = k - 1;
    while (pos >= 0 && idx[static_cast<std::size_t>(pos)] == m - (k - 1 - pos)) --pos;
    if (pos < 0) break;
    ++idx[static_cast<std::size_t>(pos)];
    for (int i = pos + 1; i < k; ++i) idx[static_cast<std::size_t>(i)] = idx[static_cast<std::size_t>(i - 1)] + 1;
  }
}

}  // namespace

std::vector<Monomial> basis(int n, int d) {
  require_dimension(n, "basis");
  if (d < 0 || d > n)
    throw DomainError("basis: degree " + std::to_string(d) + " outside 0.." + std::to_string(n));
  const std::uint64_t size = binomial(n - 1, d) + binomial(n - 1, d - 1);
  if (size > kMaxBasisSize)
    throw FeasibilityError("basis: " + std::to_string(size) + " monomials exceeds the enumeration bound", size,
                           kMaxBasisSize);
  std::vector<Monomial> out;
  out.reserve(size);
  append_subsets(n, d, false, out);
  append_subsets(n, d - 1, true, out);
  return out;
}

std::vector<std::uint64_t> poincare_polynomial(int n) {
  require_dimension(n, "poincare_polynomial");
  std::vector<std::uint64_t> dims;
  for (int d = 0; d <= n; ++d) dims.push_back(binomial(n - 1, d) + binomial(n - 1, d - 1));
  return dims;
}

CupLength cup_length(int n) {
  require_dimension(n, "cup_length");
  // H^d = 0 for d > n and the ring is generated in degree 1, so no product of
  // more than n positive-degree classes survives. R V_1 ... V_{n-1} attains n.
  std::vector<CohomologyClass> witness{CohomologyClass(Monomial::r(n))};
  for (int i = 1; i < n; ++i) witness.emplace_back(Monomial::v(n, i));
  CohomologyClass product(Monomial::unit(n));
  for (const auto& factor : witness) product = cup(product, factor);
  if (product != CohomologyClass(Monomial::top(n)))
    throw InvariantError("cup_length: R*V1*...*V(n-1) is not the top class");
  return {static_cast<int>(witness.size()), std::move(witness)};
}

F2Matrix duality_pairing(int n, int d) {
  const auto rows = basis(n, d);
  const auto cols = basis(n, n - d);
  const Monomial top = Monomial::top(n);
  F2Matrix m(rows.size(), cols.size());
  for (std::size_t a = 0; a < rows.size(); ++a)
    for (std::size_t b = 0; b < cols.size(); ++b)
      if (auto p = cup(rows[a], cols[b]); p && *p == top) m.set(a, b, true);
  return m;
}

}  // namespace kleinforge
