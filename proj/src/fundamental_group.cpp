#include "kleinforge/fundamental_group.hpp"

#include <sstream>

#include "kleinforge/errors.hpp"

namespace kleinforge::pi1 {

namespace {

void require_rank(int n) {
  if (n < 1) throw DomainError("pi1: n must be >= 1");
}

}  // namespace

GroupWord::GroupWord(int n, std::vector<Letter> letters) : n_(n), letters_(std::move(letters)) {
  require_rank(n);
  for (const auto& l : letters_) {
    if (l.generator < 1 || l.generator > n) throw DomainError("GroupWord: generator index outside 1..n");
    if (l.exponent != 1 && l.exponent != -1) throw DomainError("GroupWord: letter exponent must be +1 or -1");
  }
}

GroupWord GroupWord::parse(int n, const std::string& text) {
  require_rank(n);
  std::istringstream in(text);
  std::vector<Letter> letters;
  std::string token;
  while (in >> token) {
    if (token == "1" || token == "e") continue;
    if (token.size() < 2 || token[0] != 'a') throw DomainError("GroupWord: bad token '" + token + "'");
    const auto caret = token.find('^');
    const std::string index = token.substr(1, caret == std::string::npos ? std::string::npos : caret - 1);
    int generator = 0;
    try {
      std::size_t used = 0;
      generator = index == "n" ? n : std::stoi(index, &used);
      if (index != "n" && used != index.size()) throw DomainError("");
    } catch (const std::exception&) {
      throw DomainError("GroupWord: bad generator in '" + token + "'");
    }
    long power = 1;
    if (caret != std::string::npos) {
      try {
        std::size_t used = 0;
        const std::string exp = token.substr(caret + 1);
        power = std::stol(exp, &used);
        if (used != exp.size()) throw DomainError("");
      } catch (const std::exception&) {
        throw DomainError("GroupWord: bad exponent in '" + token + "'");
      }
    }
    if (generator < 1 || generator > n) throw DomainError("GroupWord: generator outside 1..n in '" + token + "'");
    const int sign = power < 0 ? -1 : 1;
    for (long i = 0; i < (power < 0 ? -power : power); ++i) letters.push_back({generator, sign});
  }
  return GroupWord(n, std::move(letters));
}

GroupWord GroupWord::inverse() const {
  std::vector<Letter> inv(letters_.rbegin(), letters_.rend());
  for (auto& l : inv) l.exponent = -l.exponent;
  return GroupWord(n_, std::move(inv));
}

std::string GroupWord::to_string() const {
  if (letters_.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < letters_.size();) {
    // runs of one letter print as a power
    std::size_t j = i;
    while (j < letters_.size() && letters_[j] == letters_[i]) ++j;
    const long power = static_cast<long>(j - i) * letters_[i].exponent;
    if (!out.empty()) out += ' ';
    out += letters_[i].generator == n_ ? std::string("an") : "a" + std::to_string(letters_[i].generator);
    if (power != 1) out += "^" + std::to_string(power);
    i = j;
  }
  return out;
}

GroupWord operator*(const GroupWord& a, const GroupWord& b) {
  if (a.n_ != b.n_) throw DomainError("GroupWord: mismatched n");
  std::vector<Letter> letters = a.letters_;
  letters.insert(letters.end(), b.letters_.begin(), b.letters_.end());
  return GroupWord(a.n_, std::move(letters));
}

NormalForm NormalForm::identity(int n) {
  require_rank(n);
  return {n, std::vector<Integer>(static_cast<std::size_t>(n - 1), 0), 0};
}

GroupWord NormalForm::spell() const {
  std::vector<Letter> letters;
  auto emit = [&](int generator, const Integer& power) {
    const int sign = power < 0 ? -1 : 1;
    for (Integer i = 0; i < abs(power); ++i) letters.push_back({generator, sign});
  };
  for (int j = 1; j < n; ++j) emit(j, k[static_cast<std::size_t>(j - 1)]);
  emit(n, m);
  return GroupWord(n, std::move(letters));
}

std::string NormalForm::to_string() const {
  std::string out;
  auto emit = [&](const std::string& name, const Integer& power) {
    if (power == 0) return;
    if (!out.empty()) out += ' ';
    out += name;
    if (power != 1) out += "^" + power.str();
  };
  for (int j = 1; j < n; ++j) emit("a" + std::to_string(j), k[static_cast<std::size_t>(j - 1)]);
  emit("an", m);
  return out.empty() ? "1" : out;
}

NormalForm reduce(const GroupWord& w) {
  // Moving a_n^{±1} rightward past a_j^e turns it into a_j^{-e}; so a letter
  // a_j^e ends up as a_j^{(-1)^p e} where p counts a_n-letters to its left.
  NormalForm nf = NormalForm::identity(w.n());
  bool flipped = false;
  for (const auto& l : w.letters()) {
    if (l.generator == w.n()) {
      nf.m += l.exponent;
      flipped = !flipped;
    } else {
      nf.k[static_cast<std::size_t>(l.generator - 1)] += flipped ? -l.exponent : l.exponent;
    }
  }
  return nf;
}

NormalForm multiply(const NormalForm& x, const NormalForm& y) {
  if (x.n != y.n) throw DomainError("multiply: mismatched n");
  NormalForm out = x;
  const bool odd = (x.m % 2) != 0;
  for (std::size_t i = 0; i < out.k.size(); ++i) out.k[i] += odd ? -y.k[i] : y.k[i];
  out.m += y.m;
  return out;
}

NormalForm inverse(const NormalForm& x) {
  // (k a_n^m)^{-1} = a_n^{-m} k^{-1} = ((-1)^{m+1} k) a_n^{-m}
  NormalForm out = x;
  const bool odd = (x.m % 2) != 0;
  for (auto& e : out.k) e = odd ? e : Integer(-e);
  out.m = -x.m;
  return out;
}

std::vector<GroupWord> relators(int n) {
  require_rank(n);
  std::vector<GroupWord> out;
  // a_j a_n (a_n a_j^{-1})^{-1} = a_j a_n a_j a_n^{-1}
  for (int j = 1; j < n; ++j) out.emplace_back(n, std::vector<Letter>{{j, 1}, {n, 1}, {j, 1}, {n, -1}});
  for (int i = 1; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      out.emplace_back(n, std::vector<Letter>{{i, 1}, {j, 1}, {i, -1}, {j, -1}});
  return out;
}

AbelianGroup abelianization(int n) {
  require_rank(n);
  const auto rels = relators(n);
  std::vector<std::vector<std::int64_t>> matrix;
  for (const auto& r : rels) {
    std::vector<std::int64_t> row(static_cast<std::size_t>(n), 0);
    for (const auto& l : r.letters()) row[static_cast<std::size_t>(l.generator - 1)] += l.exponent;
    matrix.push_back(std::move(row));
  }
  return group_from_relations(matrix, static_cast<std::size_t>(n));
}

bool in_double_cover_image(const NormalForm& x) { return x.m % 2 == 0; }

}  // namespace kleinforge::pi1
