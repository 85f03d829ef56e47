#include "kleinforge/tensor.hpp"

#include <algorithm>
#include <functional>
#include <thread>

#include "kleinforge/combinatorics.hpp"
#include "kleinforge/errors.hpp"

namespace kleinforge {

namespace {

// Coefficients live in F_2, where the Koszul sign -1 is 1.
constexpr int to_f2(int c) { return ((c % 2) + 2) % 2; }
static_assert(to_f2(-1) == to_f2(1), "graded sign must be trivial in characteristic 2");

std::vector<TensorClass::Term> cancel_pairs(std::vector<TensorClass::Term> terms) {
  std::sort(terms.begin(), terms.end());
  std::vector<TensorClass::Term> out;
  out.reserve(terms.size());
  for (std::size_t i = 0; i < terms.size();) {
    std::size_t j = i;
    while (j < terms.size() && terms[j] == terms[i]) ++j;
    if ((j - i) % 2 == 1) out.push_back(terms[i]);
    i = j;
  }
  return out;
}

}  // namespace

TensorClass::TensorClass(int n) : n_(n) { require_dimension(n, "TensorClass"); }

TensorClass::TensorClass(int n, std::vector<Term> terms) : n_(n) {
  require_dimension(n, "TensorClass");
  for (const auto& [l, r] : terms)
    if (l.n() != n || r.n() != n) throw DomainError("TensorClass: term with mismatched n");
  terms_ = cancel_pairs(std::move(terms));
}

TensorClass TensorClass::unit(int n) { return TensorClass(n, {{Monomial::unit(n), Monomial::unit(n)}}); }

bool TensorClass::contains(const Monomial& left, const Monomial& right) const {
  return std::binary_search(terms_.begin(), terms_.end(), Term{left, right});
}

std::string TensorClass::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [l, r] : terms_) {
    if (!out.empty()) out += " + ";
    out += l.to_string() + " (x) " + r.to_string();
  }
  return out;
}

TensorClass operator+(const TensorClass& a, const TensorClass& b) {
  if (a.n_ != b.n_) throw DomainError("TensorClass addition: mismatched n");
  std::vector<TensorClass::Term> out;
  std::set_symmetric_difference(a.terms_.begin(), a.terms_.end(), b.terms_.begin(), b.terms_.end(),
                                std::back_inserter(out));
  TensorClass sum(a.n_);
  sum.terms_ = std::move(out);
  return sum;
}

TensorClass zero_divisor(const CohomologyClass& x) {
  if (!x.is_homogeneous()) throw DomainError("zero_divisor: class is not homogeneous");
  const Monomial one = Monomial::unit(x.n());
  std::vector<TensorClass::Term> terms;
  for (const auto& m : x.terms()) {
    terms.emplace_back(m, one);
    terms.emplace_back(one, m);
  }
  return TensorClass(x.n(), std::move(terms));
}

TensorClass tensor_mul(const TensorClass& a, const TensorClass& b) {
  if (a.n() != b.n()) throw DomainError("tensor_mul: mismatched n");
  std::vector<TensorClass::Term> out;
  out.reserve(a.terms().size() * b.terms().size());
  for (const auto& [u, v] : a.terms()) {
    for (const auto& [u2, v2] : b.terms()) {
      auto left = cup(u, u2);
      if (!left) continue;
      auto right = cup(v, v2);
      if (!right) continue;
      out.emplace_back(*left, *right);
    }
  }
  return TensorClass(a.n(), std::move(out));
}

CohomologyClass diagonal_product(const TensorClass& a) {
  std::vector<Monomial> out;
  for (const auto& [u, v] : a.terms())
    if (auto p = cup(u, v)) out.push_back(*p);
  return CohomologyClass(a.n(), std::move(out));
}

TensorClass zero_divisor_witness(int n) {
  require_dimension(n, "zero_divisor_witness");
  if (n < 3) throw DomainError("zero_divisor_witness: n must be >= 3");
  FactorMultiset factors{0, std::vector<int>(static_cast<std::size_t>(n - 1), 1)};
  factors.v_multiplicities[0] = 3;
  factors.v_multiplicities[1] = 2;
  TensorClass product = evaluate(n, factors);
  if (product.is_zero()) throw InvariantError("zero_divisor_witness: product vanishes for n = " + std::to_string(n));

  std::vector<int> left_indices;
  for (int i = 1; i <= n - 2; ++i) left_indices.push_back(i);
  const Monomial left = Monomial::from_indices(n, true, left_indices);
  const Monomial right = Monomial::from_indices(n, true, {1, n - 1});
  if (!product.contains(left, right))
    throw InvariantError("zero_divisor_witness: expansion lacks " + left.to_string() + " (x) " + right.to_string());
  return product;
}

int FactorMultiset::size() const {
  int total = r_count;
  for (int m : v_multiplicities) total += m;
  return total;
}

std::string FactorMultiset::to_string() const {
  std::string out;
  auto emit = [&](const std::string& name, int power) {
    if (power == 0) return;
    if (!out.empty()) out += ' ';
    out += name;
    if (power != 1) out += "^" + std::to_string(power);
  };
  emit("Rbar", r_count);
  for (std::size_t i = 0; i < v_multiplicities.size(); ++i) emit("Vbar" + std::to_string(i + 1), v_multiplicities[i]);
  return out.empty() ? "1" : out;
}

TensorClass evaluate(int n, const FactorMultiset& factors) {
  if (factors.v_multiplicities.size() != static_cast<std::size_t>(n - 1))
    throw DomainError("evaluate: multiplicity vector must have n-1 entries");
  TensorClass product = TensorClass::unit(n);
  const TensorClass r_bar = zero_divisor(CohomologyClass(Monomial::r(n)));
  for (int k = 0; k < factors.r_count && !product.is_zero(); ++k) product = tensor_mul(product, r_bar);
  for (int i = 1; i < n && !product.is_zero(); ++i) {
    const TensorClass v_bar = zero_divisor(CohomologyClass(Monomial::v(n, i)));
    for (int k = 0; k < factors.v_multiplicities[static_cast<std::size_t>(i - 1)] && !product.is_zero(); ++k)
      product = tensor_mul(product, v_bar);
  }
  return product;
}

namespace {

// Partitions of `total` into at most `parts` parts: p(total, parts) with memo.
std::uint64_t partitions_at_most(int total, int parts) {
  std::vector<std::vector<std::uint64_t>> p(static_cast<std::size_t>(total + 1),
                                            std::vector<std::uint64_t>(static_cast<std::size_t>(parts + 1), 0));
  for (int k = 0; k <= parts; ++k) p[0][static_cast<std::size_t>(k)] = 1;
  for (int t = 1; t <= total; ++t)
    for (int k = 1; k <= parts; ++k) {
      // Either fewer than k parts, or subtract one from each of k parts.
      p[static_cast<std::size_t>(t)][static_cast<std::size_t>(k)] =
          p[static_cast<std::size_t>(t)][static_cast<std::size_t>(k - 1)] +
          (t >= k ? p[static_cast<std::size_t>(t - k)][static_cast<std::size_t>(k)] : 0);
    }
  return p[static_cast<std::size_t>(total)][static_cast<std::size_t>(parts)];
}

// Multiplicity vectors of length `slots` summing to `total`; nonincreasing when `sorted`.
// Emitted in descending lexicographic order.
void enumerate_multiplicities(int total, int slots, bool sorted, std::vector<int>& current,
                              const std::function<void(const std::vector<int>&)>& emit) {
  const std::size_t pos = current.size();
  if (pos == static_cast<std::size_t>(slots)) {
    if (total == 0) emit(current);
    return;
  }
  const int cap = sorted && pos > 0 ? std::min(total, current.back()) : total;
  const int remaining_slots = slots - static_cast<int>(pos) - 1;
  for (int v = cap; v >= 0; --v) {
    if (sorted && remaining_slots > 0 && static_cast<long>(v) * remaining_slots < total - v) break;
    if (remaining_slots == 0 && v != total) continue;
    current.push_back(v);
    enumerate_multiplicities(total - v, slots, sorted, current, emit);
    current.pop_back();
  }
}

}  // namespace

std::uint64_t zcl_candidate_count(int n, int length, bool symmetry_reduction) {
  if (n < 2) throw DomainError("zcl: n must be >= 2");
  if (length < 1) throw DomainError("zcl: length must be >= 1");
  std::uint64_t count = 0;
  for (int r = 0; r <= length; ++r) {
    const int rest = length - r;
    if (!symmetry_reduction && rest + n - 2 > 62) return UINT64_MAX;
    const std::uint64_t c = symmetry_reduction ? partitions_at_most(rest, n - 1) : binomial(rest + n - 2, n - 2);
    if (c > UINT64_MAX - count) return UINT64_MAX;
    count += c;
  }
  return count;
}

ZclResult zcl_exhaustive(int n, int length, const ZclOptions& options) {
  require_dimension(n, "zcl_exhaustive");
  if (n < 2) throw DomainError("zcl: n must be >= 2");
  if (length > 2 * n) return {n, length, true, std::nullopt, 0};
  const std::uint64_t count = zcl_candidate_count(n, length, options.symmetry_reduction);
  if (count > options.max_candidates)
    throw FeasibilityError("zcl_exhaustive: " + std::to_string(count) + " factor multisets exceeds the bound " +
                               std::to_string(options.max_candidates),
                           count, options.max_candidates);
  const unsigned __int128 exact = length >= 64 ? ~static_cast<unsigned __int128>(0)
                                               : static_cast<unsigned __int128>(count) << length;
  const std::uint64_t work = exact > UINT64_MAX ? UINT64_MAX : static_cast<std::uint64_t>(exact);
  if (work > options.max_work)
    throw FeasibilityError("zcl_exhaustive: estimated work exceeds the bound " + std::to_string(options.max_work),
                           work, options.max_work);

  std::vector<FactorMultiset> candidates;
  candidates.reserve(count);
  std::vector<int> scratch;
  for (int r = 0; r <= length; ++r) {
    enumerate_multiplicities(length - r, n - 1, options.symmetry_reduction, scratch,
                             [&](const std::vector<int>& v) { candidates.push_back({r, v}); });
  }
  if (candidates.size() != count) throw InvariantError("zcl_exhaustive: candidate count mismatch");

  // Each worker scans a strided slice and records its first nonzero index.
  const unsigned workers = std::max(1u, std::min<unsigned>(options.threads, static_cast<unsigned>(candidates.size())));
  std::vector<std::size_t> first_hit(workers, candidates.size());
  auto scan = [&](unsigned w) {
    for (std::size_t i = w; i < candidates.size() && i < first_hit[w]; i += workers)
      if (!evaluate(n, candidates[i]).is_zero()) {
        first_hit[w] = i;
        return;
      }
  };
  if (workers == 1) {
    scan(0);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(scan, w);
  }
  const std::size_t hit = *std::min_element(first_hit.begin(), first_hit.end());

  ZclResult result{n, length, hit == candidates.size(), std::nullopt, count};
  if (!result.all_zero) result.witness = candidates[hit];
  return result;
}

TcBounds tc_bounds(int m, int exhaustive_limit, const ZclOptions& options) {
  require_dimension(m, "tc_bounds");
  if (m < 2) throw DomainError("tc_bounds: m must be >= 2");
  TcBounds bounds{m, 0, 0, 2 * m + 1, "", "cited: closed m-manifold, TC <= 2m + 1"};
  if (m <= exhaustive_limit) {
    int length = 1;
    while (!zcl_exhaustive(m, length, options).all_zero) ++length;
    if (!zcl_exhaustive(m, length + 1, options).all_zero)
      throw InvariantError("tc_bounds: nonzero product above a vanishing length");
    bounds.zcl = length - 1;
    bounds.zcl_provenance = "computed: exhaustive search over degree-1 zero divisors";
  } else {
    zero_divisor_witness(m);
    bounds.zcl = m + 2;
    bounds.zcl_provenance = "computed witness of length m+2; vanishing at m+3 cited";
  }
  bounds.lower = bounds.zcl + 1;
  return bounds;
}

}  // namespace kleinforge
