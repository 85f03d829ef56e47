#pragma once

// Independent reference implementations used by the tests.

#include <algorithm>
#include <map>
#include <optional>
#include <vector>

#include "kleinforge/cohomology.hpp"
#include "kleinforge/fundamental_group.hpp"
#include "kleinforge/polygon.hpp"
#include "kleinforge/tensor.hpp"

namespace oracle {

using kleinforge::CohomologyClass;
using kleinforge::Monomial;

// Polynomials in F_2[R, V_1..V_{n-1}] as exponent vectors (index 0 is R),
// multiplied freely and reduced with R^2 -> 0, V_i^2 -> R V_i.
using Poly = std::map<std::vector<int>, int>;

inline Poly reduce_poly(const Poly& p) {
  Poly out;
  for (const auto& [exps, c] : p) {
    if (c % 2 == 0) continue;
    auto e = exps;
    for (std::size_t i = 1; i < e.size(); ++i)
      while (e[i] >= 2) {
        e[i] -= 1;
        e[0] += 1;
      }
    if (e[0] < 2) out[e] ^= 1;
  }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

inline Poly multiply(const Poly& a, const Poly& b) {
  Poly out;
  for (const auto& [x, cx] : a)
    for (const auto& [y, cy] : b) {
      auto e = x;
      for (std::size_t i = 0; i < e.size(); ++i) e[i] += y[i];
      out[e] += cx * cy;
    }
  return reduce_poly(out);
}

inline Poly to_poly(const CohomologyClass& c) {
  Poly p;
  for (const auto& m : c.terms()) {
    std::vector<int> e(static_cast<std::size_t>(c.n()), 0);
    e[0] = m.has_r();
    for (int i : m.indices()) e[static_cast<std::size_t>(i)] = 1;
    p[e] = 1;
  }
  return p;
}

inline std::vector<Monomial> all_monomials(int n) {
  std::vector<Monomial> out;
  for (int d = 0; d <= n; ++d)
    for (const auto& m : kleinforge::basis(n, d)) out.push_back(m);
  return out;
}

// pi_1 words: string rewriting with free cancellation, a_n^e a_j^f -> a_j^{-f} a_n^e
// and a_i^f a_j^g -> a_j^g a_i^f for j < i < n, until nothing changes.
inline std::vector<kleinforge::pi1::Letter> rewrite(int n, std::vector<kleinforge::pi1::Letter> w) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i + 1 < w.size(); ++i) {
      auto& x = w[i];
      auto& y = w[i + 1];
      if (x.generator == y.generator && x.exponent == -y.exponent) {
        w.erase(w.begin() + static_cast<long>(i), w.begin() + static_cast<long>(i) + 2);
        changed = true;
        break;
      }
      if (x.generator == n && y.generator < n) {
        const kleinforge::pi1::Letter moved{y.generator, -y.exponent};
        y = x;
        x = moved;
        changed = true;
      } else if (x.generator < n && y.generator < n && y.generator < x.generator) {
        std::swap(x, y);
        changed = true;
      }
    }
  }
  return w;
}

inline kleinforge::pi1::NormalForm collect(int n, const std::vector<kleinforge::pi1::Letter>& w) {
  auto nf = kleinforge::pi1::NormalForm::identity(n);
  for (const auto& l : w) {
    if (l.generator == n)
      nf.m += l.exponent;
    else
      nf.k[static_cast<std::size_t>(l.generator - 1)] += l.exponent;
  }
  return nf;
}

inline std::vector<kleinforge::pi1::Letter> alphabet(int n) {
  std::vector<kleinforge::pi1::Letter> a;
  for (int g = 1; g <= n; ++g) {
    a.push_back({g, 1});
    a.push_back({g, -1});
  }
  return a;
}

/// Calls f on every word of length <= max_len.
template <class F>
void for_words(int n, std::size_t max_len, F&& f) {
  const auto letters = alphabet(n);
  std::vector<kleinforge::pi1::Letter> w;
  auto go = [&](auto& self) -> void {
    f(w);
    if (w.size() == max_len) return;
    for (const auto& l : letters) {
      w.push_back(l);
      self(self);
      w.pop_back();
    }
  };
  go(go);
}

// x1bar...xLbar = sum over A of (prod_{i in A} x_i) (x) (prod_{i not in A} x_i).
inline std::map<std::pair<Monomial, Monomial>, int> expand(int n, const std::vector<Monomial>& factors) {
  std::map<std::pair<Monomial, Monomial>, int> out;
  const std::size_t len = factors.size();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << len); ++mask) {
    std::optional<Monomial> left = Monomial::unit(n), right = Monomial::unit(n);
    for (std::size_t i = 0; i < len && left && right; ++i) {
      if (mask >> i & 1)
        left = kleinforge::cup(*left, factors[i]);
      else
        right = kleinforge::cup(*right, factors[i]);
    }
    if (left && right) out[{*left, *right}] ^= 1;
  }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

inline std::map<std::pair<Monomial, Monomial>, int> as_map(const kleinforge::TensorClass& t) {
  std::map<std::pair<Monomial, Monomial>, int> out;
  for (const auto& term : t.terms()) out[term] = 1;
  return out;
}

// Search for an injection phi: lower -> upper with phi(s) >= s.
inline bool dominates(kleinforge::polygon::Subset upper, kleinforge::polygon::Subset lower) {
  const auto lo = kleinforge::polygon::elements(lower);
  const auto up = kleinforge::polygon::elements(upper);
  if (lo.size() > up.size()) return false;
  std::vector<bool> used(up.size(), false);
  auto assign = [&](auto& self, std::size_t i) -> bool {
    if (i == lo.size()) return true;
    for (std::size_t j = 0; j < up.size(); ++j)
      if (!used[j] && up[j] >= lo[i]) {
        used[j] = true;
        if (self(self, i + 1)) return true;
        used[j] = false;
      }
    return false;
  };
  return assign(assign, 0);
}

// Maximal short subsets containing n by pairwise comparison.
inline std::vector<kleinforge::polygon::Subset> genes(const kleinforge::polygon::LengthVector& l) {
  using kleinforge::polygon::Subset;
  const int n = l.n();
  const Subset top = Subset{1} << (n - 1);
  std::vector<Subset> shorts;
  for (Subset s = 0; s < top; ++s)
    if (kleinforge::polygon::is_short(s | top, l)) shorts.push_back(s | top);
  std::vector<Subset> out;
  for (auto s : shorts) {
    bool maximal = true;
    for (auto t : shorts)
      if (t != s && dominates(t, s)) maximal = false;
    if (maximal) out.push_back(s);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace oracle
