#pragma once

// pi_1(K_n) = < a_1..a_n | a_j a_n = a_n a_j^{-1} (j < n), a_i a_j = a_j a_i (i < j < n) >.
//
// a_1..a_{n-1} span a normal free abelian subgroup on which a_n acts by
// inversion, so each element is uniquely a_1^{k_1} ... a_{n-1}^{k_{n-1}} a_n^m.

#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "kleinforge/abelian_group.hpp"

namespace kleinforge::pi1 {

using Integer = boost::multiprecision::cpp_int;

struct Letter {
  int generator;  // 1..n
  int exponent;   // +1 or -1
  friend bool operator==(const Letter&, const Letter&) = default;
};

class GroupWord {
 public:
  GroupWord(int n, std::vector<Letter> letters);

  /// Parses whitespace-separated tokens "a1", "an", "a2^-1", "an^3", "1".
  static GroupWord parse(int n, const std::string& text);

  int n() const noexcept { return n_; }
  const std::vector<Letter>& letters() const noexcept { return letters_; }
  GroupWord inverse() const;
  std::string to_string() const;

  friend GroupWord operator*(const GroupWord& a, const GroupWord& b);

 private:
  int n_;
  std::vector<Letter> letters_;
};

struct NormalForm {
  int n;
  std::vector<Integer> k;  // exponents of a_1..a_{n-1}
  Integer m;               // exponent of a_n

  static NormalForm identity(int n);

  /// The word a_1^{k_1} ... a_{n-1}^{k_{n-1}} a_n^m spelled out letter by letter.
  GroupWord spell() const;
  /// "1", "an", "a1^-1 a3^2 an^2".
  std::string to_string() const;

  friend bool operator==(const NormalForm&, const NormalForm&) = default;
};

NormalForm reduce(const GroupWord& w);
NormalForm multiply(const NormalForm& x, const NormalForm& y);
NormalForm inverse(const NormalForm& x);

/// The defining relators r with r = 1, one per relation.
std::vector<GroupWord> relators(int n);

AbelianGroup abelianization(int n);

/// Whether x lies in the image of the double cover T^n -> K_n.
bool in_double_cover_image(const NormalForm& x);

}  // namespace kleinforge::pi1
