// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "kleinforge/char_classes.hpp"
#include "kleinforge/errors.hpp"
#include "kleinforge/fundamental_group.hpp"
#include "kleinforge/geometry.hpp"
#include "kleinforge/integral.hpp"
#include "kleinforge/polygon.hpp"
#include "kleinforge/report.hpp"
#include "kleinforge/tensor.hpp"
#include "kleinforge/verify.hpp"
#include "oracles.hpp"

using namespace kleinforge;

namespace {

constexpr double pi = std::numbers::pi;

struct Outcome {
  bool passed = true;
  std::string note;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      passed = false;
      note += (note.empty() ? "" : "; ") + what;
    }
  }
};

int failures = 0;

void criterion(int id, const std::string& title, double limit_seconds, const std::function<Outcome()>& body) {
  const auto start = std::chrono::steady_clock::now();
  Outcome out;
  try {
    out = body();
  } catch (const std::exception& e) {
    out.passed = false;
    out.note = std::string("exception: ") + e.what();
  }
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  out.require(seconds < limit_seconds, "took " + std::to_string(seconds) + " s, limit " +
                                           std::to_string(static_cast<int>(limit_seconds)) + " s");
  if (!out.passed) ++failures;
  std::printf("%s criterion %d: %s (%.2f s)%s%s\n", out.passed ? "PASS" : "FAIL", id, title.c_str(), seconds,
              out.note.empty() ? "" : " -- ", out.note.c_str());
  std::fflush(stdout);
}

std::set<std::string> as_set(std::initializer_list<const char*> items) { return {items.begin(), items.end()}; }

Outcome table() {
  Outcome o;
  const auto out = cohomology_output(4);
  const auto& j = out.data;
  o.require(j["dims"] == nlohmann::json::array({1, 4, 6, 4, 1}), "dimensions");
  const std::vector<std::set<std::string>> expected{
      as_set({"1"}),
      as_set({"R", "V1", "V2", "V3"}),
      as_set({"V1*V2", "V1*V3", "V2*V3", "R*V1", "R*V2", "R*V3"}),
      as_set({"V1*V2*V3", "R*V1*V2", "R*V1*V3", "R*V2*V3"}),
      as_set({"R*V1*V2*V3"})};
  std::size_t total = 0;
  for (std::size_t d = 0; d < 5; ++d) {
    std::set<std::string> got;
    for (const auto& m : j["basis"][d]) got.insert(m["text"].get<std::string>());
    total += j["basis"][d].size();
    o.require(got == expected[d] && got.size() == j["basis"][d].size(), "basis in degree " + std::to_string(d));
  }
  o.require(total == 16, "basis size");
  std::set<std::string> pairs;
  for (const auto& p : j["sq1"]) pairs.insert(p["from"]["text"].get<std::string>() + "->" + p["to"]["text"].get<std::string>());
  o.require(pairs == as_set({"V1->R*V1", "V2->R*V2", "V3->R*V3", "V1*V2*V3->R*V1*V2*V3"}), "Sq1 pairs");
  return o;
}

Outcome ring_laws() {
  Outcome o;
  for (int n = 1; n <= 4; ++n) {
    const auto all = oracle::all_monomials(n);
    for (const auto& a : all)
      for (const auto& b : all)
        o.require(oracle::to_poly(cup(CohomologyClass(a), CohomologyClass(b))) ==
                      oracle::multiply(oracle::to_poly(a), oracle::to_poly(b)),
                  "oracle mismatch " + a.to_string() + " * " + b.to_string());
  }
  std::mt19937_64 rng(2024);
  for (int i = 0; i < 10000; ++i) {
    const int n = 1 + i % 8;
    std::uniform_int_distribution<std::uint64_t> bits(0, (std::uint64_t{1} << n) - 1);
    auto random_class = [&] {
      std::vector<Monomial> t;
      for (int k = 0; k < 5; ++k) {
        const auto b = bits(rng);
        t.emplace_back(n, (b & 1) != 0, b & ~std::uint64_t{1});
      }
      return CohomologyClass(n, t);
    };
    const auto a = random_class(), b = random_class(), c = random_class();
    if (cup(cup(a, b), c) != cup(a, cup(b, c)) || cup(a, b) != cup(b, a)) {
      o.require(false, "ring law failed at n=" + std::to_string(n));
      break;
    }
  }
  return o;
}

Outcome duality() {
  Outcome o;
  for (int n = 1; n <= 10; ++n) {
    o.require(cup_length(n).length == n, "cup_length(" + std::to_string(n) + ")");
    for (int d = 0; d <= n; ++d)
      o.require(duality_pairing(n, d).is_nonsingular(), "pairing n=" + std::to_string(n) + " d=" + std::to_string(d));
  }
  return o;
}

Outcome stiefel_whitney_classes() {
  Outcome o;
  for (int n = 1; n <= 10; ++n) {
    const auto data = wu_data(n);
    // Wu classes come from the linear solve; confirm the defining property.
    for (int j = 0; j <= n; ++j)
      for (const auto& x : basis(n, n - j)) {
        const CohomologyClass cx(x);
        o.require(cup(data.wu[static_cast<std::size_t>(j)], cx).contains(Monomial::top(n)) ==
                      sq(j, cx).contains(Monomial::top(n)),
                  "Wu property n=" + std::to_string(n));
      }
    for (int k = 1; k <= n; ++k) {
      const bool r = k == 1 && n % 2 == 0;
      o.require(data.sw[static_cast<std::size_t>(k)] == (r ? CohomologyClass(Monomial::r(n)) : CohomologyClass::zero(n)),
                "w" + std::to_string(k) + " for n=" + std::to_string(n));
    }
  }
  return o;
}

Outcome integral_triangle() {
  Outcome o;
  for (int n = 2; n <= 12; ++n) {
    const auto r = consistency_check(n);
    for (const auto& c : r.checks) o.require(c.passed, "n=" + std::to_string(n) + " " + c.name);
  }
  auto z2 = AbelianGroup::trivial();
  z2.add_torsion(2);
  o.require(integral_cohomology(2) == std::vector<AbelianGroup>{AbelianGroup::free(1), AbelianGroup::free(1), z2},
            "H^*(K_2)");
  o.require(homology_from_splitting(2)[1] == AbelianGroup::free(1) + z2, "H_1(K_2)");
  return o;
}

Outcome zcl() {
  Outcome o;
  for (int n = 3; n <= 8; ++n) {
    const auto p = zero_divisor_witness(n);
    std::vector<int> left;
    for (int i = 1; i <= n - 2; ++i) left.push_back(i);
    o.require(!p.is_zero() && p.contains(Monomial::from_indices(n, true, left), Monomial::from_indices(n, true, {1, n - 1})),
              "witness n=" + std::to_string(n));
  }
  for (int n = 3; n <= 6; ++n) o.require(zcl_exhaustive(n, n + 3).all_zero, "zcl_exhaustive(" + std::to_string(n) + ")");
  // the witness product itself, re-expanded by the brute-force oracle
  const auto n4 = zero_divisor_witness(4);
  const int n = 4;
  std::vector<Monomial> factors;
  for (int k = 0; k < 3; ++k) factors.push_back(Monomial::v(n, 1));
  for (int k = 0; k < 2; ++k) factors.push_back(Monomial::v(n, 2));
  factors.push_back(Monomial::v(n, 3));
  o.require(oracle::as_map(n4) == oracle::expand(n, factors), "witness expansion n=4");
  const auto b = tc_bounds(4);
  o.require(b.lower == 7 && b.upper == 9, "tc_bounds(4)");
  return o;
}

Outcome fundamental_group() {
  Outcome o;
  for (int n = 1; n <= 10; ++n)
    for (const auto& r : pi1::relators(n)) o.require(pi1::reduce(r) == pi1::NormalForm::identity(n), "relator");
  for (int n = 1; n <= 4; ++n) {
    bool ok = true;
    oracle::for_words(n, 6, [&](const std::vector<pi1::Letter>& w) {
      ok = ok && pi1::reduce(pi1::GroupWord(n, w)) == oracle::collect(n, oracle::rewrite(n, w));
    });
    o.require(ok, "rewriting oracle n=" + std::to_string(n));
  }
  for (int n = 2; n <= 10; ++n)
    o.require(pi1::abelianization(n) == homology_from_splitting(n)[1], "H_1 n=" + std::to_string(n));
  o.require(pi1::abelianization(1) == AbelianGroup::free(1), "H_1 n=1");
  return o;
}

Outcome geometry_checks() {
  using namespace geometry;
  Outcome o;
  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> angle(0.0, 2 * pi);
  for (int n = 2; n <= 4; ++n) {
    double worst = 0;
    for (int i = 0; i < 10000; ++i) {
      std::vector<double> th(static_cast<std::size_t>(n - 1)), neg(th.size());
      for (std::size_t j = 0; j < th.size(); ++j) neg[j] = -(th[j] = angle(rng));
      const auto a = immersion_point(n, th, 0.0), b = immersion_point(n, neg, pi);
      double s = 0;
      for (std::size_t j = 0; j < a.size(); ++j) s += (a[j] + b[j]) * (a[j] + b[j]);
      worst = std::max(worst, std::sqrt(s));
    }
    o.require(worst < 1e-9, "weld n=" + std::to_string(n));

    const auto ip = ImmersionParams::for_dimension(n);
    for (int i = 0; i <= 10000; ++i) {
      const double r = radius(n, pi * i / 10000);
      if (std::abs(r - 0.5) > pi * pi * ip.amplitude / 4 + 1e-12) {
        o.require(false, "radius band n=" + std::to_string(n));
        break;
      }
    }
    double sym = 0;
    for (int i = 0; i < 1000; ++i) {
      const auto params = ip.torus_for_radius(0.5);
      std::vector<double> th(static_cast<std::size_t>(n - 1)), neg(th.size());
      for (std::size_t j = 0; j < th.size(); ++j) neg[j] = -(th[j] = angle(rng));
      const auto p = torus_point(params, th), q = torus_point(params, neg);
      sym = std::max(sym, std::abs(p[0] - q[0]));
      for (std::size_t j = 1; j < p.size(); ++j) sym = std::max(sym, std::abs(p[j] + q[j]));
    }
    o.require(sym < 1e-9, "torus symmetry n=" + std::to_string(n));
  }
  for (int n = 2; n <= 10; ++n) {
    const double unit = ImmersionParams::for_dimension(n).unit;
    for (int i = 0; i <= 50; ++i) {
      const double x = TorusParams::nested(n, unit, unit * (1 + i / 50.0)).max_x();
      o.require(x >= (std::ldexp(1.0, n) - 3) * unit - 1e-9 && x <= (std::ldexp(1.0, n) - 2) * unit + 1e-9,
                "max-x range n=" + std::to_string(n));
    }
  }
  ScanOptions scan;
  scan.radius = 1e-2;
  const auto emb = build_mesh(2, Target::embedding, {200, 400});
  const auto emb_hits = self_intersection_scan(emb, scan);
  o.require(emb_hits.empty(), std::to_string(emb_hits.size()) + " embedding collisions");
  const auto imm = build_mesh(2, Target::immersion, {200, 400});
  const auto hits = self_intersection_scan(imm, scan);
  o.require(!hits.empty(), "immersion scan empty");
  double farthest = 0;
  for (const auto& c : hits)
    for (auto v : {c.a, c.b}) {
      const double t = imm.params[v].back();
      farthest = std::max(farthest, std::min(t, pi - t));
    }
  std::ostringstream msg;
  msg << "immersion collisions reach min(t, pi-t) = " << farthest << ", bound 0.4";
  o.require(farthest < 0.4, msg.str());
  return o;
}

Outcome genetic_codes() {
  using namespace polygon;
  Outcome o;
  const Rational eps(1, 24);
  const std::pair<const char*, const char*> cases[] = {
      {"1,1,1,1,1,4", "<{6}>"}, {"0,0,0,1,1,1", "<{6,3,2,1}>"}, {"0,0,1,1,1,2", "<{6,2,1}>"}};
  for (const auto& [lengths, code] : cases) {
    const auto l = LengthVector::parse(lengths, eps);
    const auto g = genetic_code(l);
    o.require(g.to_string() == code, std::string(lengths) + " gave " + g.to_string());
    o.require(g.genes == oracle::genes(l), std::string(lengths) + " disagrees with brute force");
  }
  const auto k = classify(genetic_code(LengthVector::parse("0,0,1,1,1,2", eps)));
  o.require(k.klein_m == 3, "classification of <{6,2,1}>");
  const auto report = genes_output(LengthVector::parse("0,0,1,1,1,2", eps), {});
  o.require(report.data.contains("tc") && report.data["tc"]["m"] == 3, "link to tc_bounds(3)");
  return o;
}

Outcome umbrella() {
  Outcome o;
  const auto first = verify_paper(8);
  const auto second = verify_paper(8);
  o.require(to_json(first).dump() == to_json(second).dump(), "output differs between runs");
  for (const auto& c : first.checks)
    o.require(c.passed, "check " + c.id + " failed");
  bool rejected = false;
  try {
    verify_paper(3);
  } catch (const DomainError&) {
    rejected = true;
  }
  o.require(rejected, "max_n = 3 accepted");
  VerifyOptions tampered;
  tampered.sq_override = [](int j, const Monomial& m) -> std::optional<Monomial> {
    if (j == 1 && !m.has_r() && m.indices().size() == 3) return std::nullopt;
    return sq(j, m);
  };
  const auto mutated = verify_paper(4, tampered);
  bool caught = false;
  for (const auto& c : mutated.checks)
    if (!c.passed && c.anchor == "Table 2.1") caught = true;
  o.require(caught, "tampered sq not detected");
  return o;
}

}  // namespace

int main() {
  criterion(1, "basis, dimensions and Sq1 pairs for K_4", 1, table);
  criterion(2, "cup agrees with the polynomial oracle; ring laws on 10^4 triples", 30, ring_laws);
  criterion(3, "cup length n and nonsingular duality pairing, n <= 10", 30, duality);
  criterion(4, "Stiefel-Whitney classes from solved Wu classes, n <= 10", 10, stiefel_whitney_classes);
  criterion(5, "integral cohomology, splitting and mod 2 data agree, n <= 12", 10, integral_triangle);
  criterion(6, "zero-divisor witness, vanishing at n+3 and TC(K_4) bounds", 180, zcl);
  criterion(7, "pi_1 normal forms, rewriting oracle and abelianization", 60, fundamental_group);
  criterion(8, "immersion and embedding geometry, meshes and scans", 120, geometry_checks);
  criterion(9, "genetic codes and the K_3 link", 1, genetic_codes);
  criterion(10, "verify-paper --max-n 8 end to end, deterministic", 300, umbrella);
  std::printf("%d of 10 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
