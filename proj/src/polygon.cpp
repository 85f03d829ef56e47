#include "kleinforge/polygon.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <numeric>
#include <sstream>

#include "kleinforge/errors.hpp"

namespace kleinforge::polygon {

Subset make_subset(std::initializer_list<int> elems) { return make_subset(std::vector<int>(elems)); }

Subset make_subset(const std::vector<int>& elems) {
  Subset s = 0;
  for (int e : elems) {
    if (e < 1 || e > kMaxSides) throw DomainError("subset element outside 1..24");
    s |= Subset{1} << (e - 1);
  }
  return s;
}

std::vector<int> elements(Subset s) {
  std::vector<int> out;
  for (int e = kMaxSides; e >= 1; --e)
    if (s & (Subset{1} << (e - 1))) out.push_back(e);
  return out;
}

std::string to_string(Subset s) {
  std::string out = "{";
  bool first = true;
  for (int e : elements(s)) {
    if (!first) out += ',';
    out += std::to_string(e);
    first = false;
  }
  return out + "}";
}

Rational default_epsilon(const std::vector<Rational>& lengths) {
  std::int64_t q = 1;
  Rational sum = 0;
  for (const auto& x : lengths)
    if (x.numerator() > 0) {
      q = std::lcm(q, x.denominator());
      sum += x;
    }
  const std::int64_t ceil_sum = (sum.numerator() + sum.denominator() - 1) / sum.denominator();
  return Rational(1, 4 * static_cast<std::int64_t>(lengths.size()) * q * (1 + ceil_sum));
}

LengthVector::LengthVector(std::vector<Rational> lengths, std::optional<Rational> epsilon) : lengths_(std::move(lengths)) {
  if (lengths_.size() < 3) throw DomainError("LengthVector: need at least 3 sides");
  if (lengths_.size() > static_cast<std::size_t>(kMaxSides))
    throw FeasibilityError("LengthVector: more than 24 sides exceeds the subset enumeration bound", lengths_.size(),
                           kMaxSides);
  for (const auto& x : lengths_)
    if (x.numerator() < 0) throw DomainError("LengthVector: lengths must be nonnegative");
  if (std::any_of(lengths_.begin(), lengths_.end(), [](const Rational& x) { return x.numerator() == 0; })) {
    if (std::all_of(lengths_.begin(), lengths_.end(), [](const Rational& x) { return x.numerator() == 0; }))
      throw DomainError("LengthVector: all lengths are zero");
    epsilon_ = epsilon.value_or(default_epsilon(lengths_));
    if (epsilon_->numerator() <= 0) throw DomainError("LengthVector: epsilon must be positive");
    for (auto& x : lengths_)
      if (x.numerator() == 0) x = *epsilon_;
  }
  std::sort(lengths_.begin(), lengths_.end());

  std::int64_t common = 1;
  for (const auto& x : lengths_) common = std::lcm(common, x.denominator());
  for (const auto& x : lengths_) {
    const __int128 v = static_cast<__int128>(x.numerator()) * (common / x.denominator());
    if (v > std::numeric_limits<std::int64_t>::max()) throw CapacityError("LengthVector: scaled length overflows");
    scaled_.push_back(static_cast<std::int64_t>(v));
    total_ += v;
  }
}

Rational parse_rational(const std::string& text) {
  std::string item = text;
  item.erase(std::remove_if(item.begin(), item.end(), [](unsigned char c) { return std::isspace(c); }), item.end());
  try {
    const auto slash = item.find('/');
    std::size_t used = 0;
    const std::int64_t num = std::stoll(item.substr(0, slash), &used);
    if (used != (slash == std::string::npos ? item.size() : slash)) throw DomainError("");
    std::int64_t den = 1;
    if (slash != std::string::npos) {
      const std::string d = item.substr(slash + 1);
      den = std::stoll(d, &used);
      if (used != d.size() || den <= 0) throw DomainError("");
    }
    return Rational(num, den);
  } catch (const std::exception&) {
    throw DomainError("cannot parse '" + text + "' as a rational number");
  }
}

LengthVector LengthVector::parse(const std::string& text, std::optional<Rational> epsilon) {
  std::vector<Rational> values;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) values.push_back(parse_rational(item));
  if (!text.empty() && text.back() == ',') throw DomainError("LengthVector: empty entry in '" + text + "'");
  return LengthVector(std::move(values), epsilon);
}

__int128 LengthVector::scaled_sum(Subset s) const {
  __int128 sum = 0;
  for (Subset bits = s; bits; bits &= bits - 1) {
    const int idx = std::countr_zero(bits);
    if (idx >= n()) throw DomainError("subset element exceeds n");
    sum += scaled_[static_cast<std::size_t>(idx)];
  }
  return sum;
}

bool is_generic(const LengthVector& l) {
  // S and its complement give the same comparison; fix element n inside S.
  const int n = l.n();
  const Subset free_bits = (Subset{1} << (n - 1)) - 1;
  __int128 sum = l.scaled()[static_cast<std::size_t>(n - 1)];
  Subset gray = 0;
  for (std::uint64_t i = 0;; ++i) {
    if (2 * sum == l.scaled_total()) return false;
    if (i + 1 > free_bits) break;
    // Gray code step flips the bit at the position of the lowest set bit of i+1.
    const int flip = std::countr_zero(static_cast<std::uint64_t>(i + 1));
    const Subset bit = Subset{1} << flip;
    gray ^= bit;
    sum += (gray & bit) ? l.scaled()[static_cast<std::size_t>(flip)] : -l.scaled()[static_cast<std::size_t>(flip)];
  }
  return true;
}

bool is_short(Subset s, const LengthVector& l) {
  if (l.n() < kMaxSides && (s >> l.n()) != 0) throw DomainError("is_short: subset element exceeds n");
  return 2 * l.scaled_sum(s) < l.scaled_total();
}

bool dominates(Subset upper, Subset lower) {
  const auto u = elements(upper), w = elements(lower);
  if (w.size() > u.size()) return false;
  for (std::size_t i = 0; i < w.size(); ++i)
    if (w[i] > u[i]) return false;
  return true;
}

std::string GeneticCode::to_string() const {
  std::string out = "<";
  for (std::size_t i = 0; i < genes.size(); ++i) out += (i ? ", " : "") + polygon::to_string(genes[i]);
  return out + ">";
}

namespace {

bool gene_order(Subset a, Subset b) {
  const auto x = elements(a), y = elements(b);
  return std::lexicographical_compare(y.begin(), y.end(), x.begin(), x.end());
}

}  // namespace

GeneticCode genetic_code(const LengthVector& l) {
  if (!is_generic(l)) throw DomainError("genetic_code: length vector is not generic");
  const int n = l.n();
  const auto& len = l.scaled();
  const Subset top = Subset{1} << (n - 1);
  const __int128 total = l.scaled_total();
  auto shorter = [&](__int128 sum) { return 2 * sum < total; };

  GeneticCode code{n, {}};
  const Subset free_bits = top - 1;
  Subset gray = 0;
  __int128 sum = len[static_cast<std::size_t>(n - 1)];
  for (std::uint64_t i = 0;; ++i) {
    const Subset s = gray | top;
    if (shorter(sum)) {
      // Short subsets are closed downward under domination, so S is maximal
      // iff every covering move (adjoin 1, or shift some s to s+1) leaves the
      // short region.
      bool maximal = !(s & 1u) ? !shorter(sum + len[0]) : true;
      for (int e = 1; e < n && maximal; ++e) {
        const Subset here = Subset{1} << (e - 1), next = Subset{1} << e;
        if ((s & here) && !(s & next))
          maximal = !shorter(sum - len[static_cast<std::size_t>(e - 1)] + len[static_cast<std::size_t>(e)]);
      }
      if (maximal) code.genes.push_back(s);
    }
    if (i + 1 > free_bits) break;
    const int flip = std::countr_zero(static_cast<std::uint64_t>(i + 1));
    const Subset bit = Subset{1} << flip;
    gray ^= bit;
    sum += (gray & bit) ? len[static_cast<std::size_t>(flip)] : -len[static_cast<std::size_t>(flip)];
  }
  std::sort(code.genes.begin(), code.genes.end(), gene_order);
  return code;
}

std::vector<Subset> gees(const GeneticCode& code) {
  const Subset top = Subset{1} << (code.n - 1);
  std::vector<Subset> out;
  for (Subset g : code.genes) out.push_back(g & ~top);
  std::sort(out.begin(), out.end(), gene_order);
  return out;
}

Classification classify(const GeneticCode& code) {
  Classification c;
  const int n = code.n;
  if (n < 4 || code.genes.size() != 1) return c;
  const Subset gene = code.genes.front();
  const Subset top = Subset{1} << (n - 1);
  auto prefix = [](int count) { return count <= 0 ? Subset{0} : (Subset{1} << count) - 1; };  // {1..count}
  c.projective_space = gene == top;
  c.torus = gene == (top | prefix(n - 3));
  if (gene == (top | prefix(n - 4))) c.klein_m = n - 3;
  return c;
}

}  // namespace kleinforge::polygon
