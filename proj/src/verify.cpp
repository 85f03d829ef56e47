#include "kleinforge/verify.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <random>
#include <sstream>

#include "kleinforge/char_classes.hpp"
#include "kleinforge/errors.hpp"
#include "kleinforge/fundamental_group.hpp"
#include "kleinforge/geometry.hpp"
#include "kleinforge/integral.hpp"
#include "kleinforge/polygon.hpp"
#include "kleinforge/tensor.hpp"

namespace kleinforge {

namespace {

class Recorder {
 public:
  explicit Recorder(std::vector<VerifyCheck>& out) : out_(out) {}
  void operator()(int criterion, std::string id, std::string anchor, bool passed, std::string detail) {
    out_.push_back({criterion, std::move(id), std::move(anchor), passed, std::move(detail)});
  }

 private:
  std::vector<VerifyCheck>& out_;
};

std::string join(const std::vector<std::string>& parts, const char* sep) {
  std::string s;
  for (std::size_t i = 0; i < parts.size(); ++i) s += (i ? sep : "") + parts[i];
  return s;
}

// Reference basis of H*(K_4) by degree and the Sq^1 pairs. No order is
// fixed within a degree.
void check_table(Recorder& record, const VerifyOptions& options) {
  const std::vector<std::vector<std::string>> expected_basis = {
      {"1"},
      {"R", "V1", "V2", "V3"},
      {"V1*V2", "V1*V3", "V2*V3", "R*V1", "R*V2", "R*V3"},
      {"V1*V2*V3", "R*V1*V2", "R*V1*V3", "R*V2*V3"},
      {"R*V1*V2*V3"}};
  const std::vector<std::string> expected_sq = {"V1 -> R*V1", "V2 -> R*V2", "V3 -> R*V3",
                                                "V1*V2*V3 -> R*V1*V2*V3"};
  auto square = [&](const Monomial& m) { return options.sq_override ? options.sq_override(1, m) : sq(1, m); };

  bool basis_ok = true;
  std::vector<std::string> dims;
  std::vector<std::string> pairs;
  for (int d = 0; d <= 4; ++d) {
    std::vector<std::string> got;
    for (const auto& m : basis(4, d)) {
      got.push_back(m.to_string());
      if (d > 0)
        if (auto s = square(m)) pairs.push_back(m.to_string() + " -> " + s->to_string());
    }
    dims.push_back(std::to_string(got.size()));
    auto want = expected_basis[static_cast<std::size_t>(d)];
    std::sort(got.begin(), got.end());
    std::sort(want.begin(), want.end());
    basis_ok = basis_ok && got == want;
  }
  record(1, "table_basis", "Table 2.1", basis_ok, "dims " + join(dims, " "));
  auto sorted_pairs = pairs, sorted_expected = expected_sq;
  std::sort(sorted_pairs.begin(), sorted_pairs.end());
  std::sort(sorted_expected.begin(), sorted_expected.end());
  record(1, "table_sq1", "Table 2.1", sorted_pairs == sorted_expected, "Sq1: " + join(pairs, ", "));
}

// Reduction in the free polynomial ring F_2[R, V_1..V_{n-1}] modulo R^2 and
// V_i^2 + R V_i, on exponent vectors (index 0 is R).
std::optional<std::vector<int>> reduce_free(std::vector<int> e) {
  for (std::size_t i = 1; i < e.size(); ++i)
    while (e[i] >= 2) {
      e[i] -= 1;
      e[0] += 1;
    }
  if (e[0] >= 2) return std::nullopt;
  return e;
}

std::vector<int> exponents(const Monomial& m) {
  std::vector<int> e(static_cast<std::size_t>(m.n()), 0);
  e[0] = m.has_r() ? 1 : 0;
  for (int i : m.indices()) e[static_cast<std::size_t>(i)] = 1;
  return e;
}

CohomologyClass random_class(int n, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> count(0, 6);
  std::uniform_int_distribution<std::uint64_t> bits(0, (std::uint64_t{1} << n) - 1);
  std::vector<Monomial> terms;
  for (int i = count(rng); i > 0; --i) {
    const auto b = bits(rng);
    terms.emplace_back(n, (b & 1) != 0, b & ~std::uint64_t{1});
  }
  return CohomologyClass(n, std::move(terms));
}

void check_ring(Recorder& record, int max_n) {
  bool oracle_ok = true;
  std::size_t pairs = 0;
  for (int n = 1; n <= 4; ++n) {
    std::vector<Monomial> all;
    for (int d = 0; d <= n; ++d)
      for (const auto& m : basis(n, d)) all.push_back(m);
    for (const auto& a : all)
      for (const auto& b : all) {
        auto e = exponents(a);
        const auto f = exponents(b);
        for (std::size_t i = 0; i < e.size(); ++i) e[i] += f[i];
        const auto expected = reduce_free(e);
        const auto got = cup(a, b);
        oracle_ok = oracle_ok && expected.has_value() == got.has_value() && (!got || exponents(*got) == *expected);
        ++pairs;
      }
  }
  record(2, "cup_oracle", "ring presentation", oracle_ok,
         std::to_string(pairs) + " basis pairs against free-polynomial reduction, n <= 4");

  std::mt19937_64 rng(20240617);
  bool laws_ok = true;
  const int top = std::min(max_n, 8);
  const int triples = 10000;
  for (int i = 0; i < triples; ++i) {
    const int n = 1 + i % top;
    const auto a = random_class(n, rng), b = random_class(n, rng), c = random_class(n, rng);
    laws_ok = laws_ok && cup(cup(a, b), c) == cup(a, cup(b, c)) && cup(a, b) == cup(b, a);
  }
  record(2, "ring_laws", "ring presentation", laws_ok,
         std::to_string(triples) + " random triples, n <= " + std::to_string(top));
}

void check_duality(Recorder& record, int max_n) {
  const int top = std::max(10, max_n);
  bool cat_ok = true, duality_ok = true;
  for (int n = 1; n <= top; ++n) {
    cat_ok = cat_ok && cup_length(n).length == n;
    for (int d = 0; d <= n; ++d) duality_ok = duality_ok && duality_pairing(n, d).is_nonsingular();
  }
  const auto range = "n <= " + std::to_string(top);
  record(3, "cup_length", "cup length", cat_ok, "cup_length(n) = n for " + range);
  record(3, "duality", "Poincare duality", duality_ok, "pairing nonsingular in every degree for " + range);
}

void check_sw(Recorder& record, int max_n) {
  const int top = std::max(10, max_n);
  bool ok = true;
  for (int n = 1; n <= top; ++n) {
    const auto w = stiefel_whitney(n);
    for (int k = 0; k <= n; ++k) {
      CohomologyClass expected(n);
      if (k == 0) expected = Monomial::unit(n);
      if (k == 1 && n % 2 == 0) expected = Monomial::r(n);
      ok = ok && w[static_cast<std::size_t>(k)] == expected;
    }
  }
  record(4, "stiefel_whitney", "Prop 3.1", ok, "w = 1 + R for even n, w = 1 for odd n, n <= " + std::to_string(top));
}

void check_integral(Recorder& record, int max_n) {
  const int top = std::max(12, max_n);
  bool ok = true;
  std::string failed;
  for (int n = 2; n <= top; ++n) {
    const auto report = consistency_check(n);
    if (!report.passed()) {
      ok = false;
      failed += " " + std::to_string(n);
    }
  }
  record(5, "consistency", "Thm 2.5, Thm 4.1", ok,
         ok ? "all identities hold for 2 <= n <= " + std::to_string(top) : "failed for n =" + failed);

  const auto h = integral_cohomology(2);
  auto z2 = AbelianGroup::trivial();
  z2.add_torsion(2);
  const std::vector<AbelianGroup> expected{AbelianGroup::free(1), AbelianGroup::free(1), z2};
  const auto h1 = homology_from_splitting(2).at(1);
  const auto h1_expected = AbelianGroup::free(1) + z2;
  std::vector<std::string> text;
  for (const auto& g : h) text.push_back(g.to_string());
  record(5, "klein_bottle", "Thm 2.5", h == expected && h1 == h1_expected,
         "H^*(K_2) = " + join(text, ", ") + "; H_1 = " + h1.to_string());
}

void check_zcl(Recorder& record, int max_n, unsigned threads) {
  bool witness_ok = true;
  const int top = std::min(max_n, 8);
  for (int n = 3; n <= top; ++n) {
    const auto p = zero_divisor_witness(n);
    std::vector<int> left(static_cast<std::size_t>(n - 2));
    for (int i = 1; i <= n - 2; ++i) left[static_cast<std::size_t>(i - 1)] = i;
    witness_ok = witness_ok && !p.is_zero() &&
                 p.contains(Monomial::from_indices(n, true, left), Monomial::from_indices(n, true, {1, n - 1}));
  }
  record(6, "zero_divisor_witness", "Prop 5.2", witness_ok,
         "witness nonzero with the proof's term for 3 <= n <= " + std::to_string(top));

  ZclOptions options;
  options.threads = threads;
  bool vanish_ok = true;
  std::uint64_t candidates = 0;
  for (int n = 3; n <= 6; ++n) {
    const auto r = zcl_exhaustive(n, n + 3, options);
    vanish_ok = vanish_ok && r.all_zero;
    candidates += r.candidates;
  }
  record(6, "zcl_vanishing", "Prop 5.2", vanish_ok,
         "all products of n+3 zero divisors vanish for 3 <= n <= 6 (" + std::to_string(candidates) + " candidates)");

  const auto b = tc_bounds(4, 8, options);
  record(6, "tc_bounds", "Prop 5.2", b.lower == 7 && b.upper == 9,
         std::to_string(b.lower) + " <= TC(K_4) <= " + std::to_string(b.upper));
}

// pi_1 acts faithfully on R^n: a_j (j < n) translates by e_j and a_n sends
// (x', x_n) to (-x', x_n + 1). Composition of these maps is the oracle.
struct Affine {
  int sign = 1;
  std::vector<long long> shift;  // first n-1 coordinates
  long long last = 0;
};

Affine compose(const Affine& f, const Affine& g) {  // f after g
  Affine h{f.sign * g.sign, f.shift, f.last + g.last};
  for (std::size_t i = 0; i < h.shift.size(); ++i) h.shift[i] += f.sign * g.shift[i];
  return h;
}

Affine letter_map(int n, pi1::Letter l) {
  Affine a{1, std::vector<long long>(static_cast<std::size_t>(n - 1), 0), 0};
  if (l.generator < n) {
    a.shift[static_cast<std::size_t>(l.generator - 1)] = l.exponent;
  } else {
    a.sign = -1;
    a.last = l.exponent;
    // the inverse of x -> (-x', x_n+1) is x -> (-x', x_n-1)
  }
  return a;
}

bool matches(const Affine& a, const pi1::NormalForm& nf) {
  if (nf.m != a.last) return false;
  if ((a.sign == 1) != (nf.m % 2 == 0)) return false;
  for (std::size_t i = 0; i < a.shift.size(); ++i)
    if (nf.k[i] != a.shift[i]) return false;
  return true;
}

void check_pi1(Recorder& record, int max_n) {
  bool relators_ok = true;
  for (int n = 2; n <= max_n; ++n)
    for (const auto& r : pi1::relators(n)) relators_ok = relators_ok && pi1::reduce(r) == pi1::NormalForm::identity(n);
  record(7, "relators", "fundamental group presentation", relators_ok,
         "every defining relator reduces to 1 for n <= " + std::to_string(max_n));

  bool oracle_ok = true;
  std::size_t words = 0;
  for (int n = 2; n <= 4; ++n) {
    std::vector<pi1::Letter> alphabet;
    for (int g = 1; g <= n; ++g) {
      alphabet.push_back({g, 1});
      alphabet.push_back({g, -1});
    }
    const Affine id{1, std::vector<long long>(static_cast<std::size_t>(n - 1), 0), 0};
    // depth-first over words of length <= 6
    std::vector<pi1::Letter> word;
    std::vector<Affine> prefix{id};
    auto visit = [&](auto& self) -> void {
      ++words;
      oracle_ok = oracle_ok && matches(prefix.back(), pi1::reduce(pi1::GroupWord(n, word)));
      if (word.size() == 6) return;
      for (const auto& l : alphabet) {
        word.push_back(l);
        prefix.push_back(compose(prefix.back(), letter_map(n, l)));
        self(self);
        word.pop_back();
        prefix.pop_back();
      }
    };
    visit(visit);
  }
  record(7, "normal_form", "fundamental group presentation", oracle_ok,
         std::to_string(words) + " words of length <= 6 against an affine representation, n <= 4");

  const int top = std::max(10, max_n);
  bool h1_ok = true;
  for (int n = 2; n <= top; ++n) h1_ok = h1_ok && pi1::abelianization(n) == homology_from_splitting(n).at(1);
  record(7, "abelianization", "Thm 2.5", h1_ok, "abelianization = H_1 for 2 <= n <= " + std::to_string(top));
}

void check_geometry(Recorder& record, int max_n) {
  using namespace geometry;
  constexpr double tol = 1e-9;
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> angle(0.0, 2 * std::numbers::pi);

  double worst = 0.0;
  for (int n = 2; n <= 4; ++n)
    for (int i = 0; i < 10000; ++i) {
      std::vector<double> th(static_cast<std::size_t>(n - 1)), neg(th.size());
      for (std::size_t j = 0; j < th.size(); ++j) {
        th[j] = angle(rng);
        neg[j] = -th[j];
      }
      const auto a = immersion_point(n, th, 0.0);
      const auto b = immersion_point(n, neg, std::numbers::pi);
      double s = 0.0;
      for (std::size_t j = 0; j < a.size(); ++j) s += (a[j] + b[j]) * (a[j] + b[j]);
      worst = std::max(worst, std::sqrt(s));
    }
  std::ostringstream detail;
  detail << "max |k(theta,0) + k(-theta,pi)| = " << worst << " over 10000 samples, n = 2,3,4";
  record(8, "boundary_weld", "immersion parametrization", worst < tol, detail.str());

  bool band_ok = true;
  for (int n = 2; n <= max_n; ++n) {
    const auto band = ImmersionParams::for_dimension(n).radius_band();
    for (int i = 0; i <= 10000; ++i) {
      const double r = radius(n, std::numbers::pi * i / 10000);
      band_ok = band_ok && r >= band[0] - tol && r <= band[1] + tol;
    }
  }
  record(8, "radius_band", "immersion parametrization", band_ok,
         "1/2 - pi^2 d/4 <= r(t) <= 1/2 + pi^2 d/4 for n <= " + std::to_string(max_n));

  double sym = 0.0;
  bool range_ok = true;
  for (int n = 2; n <= max_n; ++n) {
    const double unit = ImmersionParams::for_dimension(n).unit;
    const double lo = (std::ldexp(1.0, n) - 3) * unit, hi = (std::ldexp(1.0, n) - 2) * unit;
    for (int i = 0; i <= 100; ++i) {
      const auto params = TorusParams::nested(n, unit, unit * (1 + i / 100.0));
      const double x = params.max_x();
      range_ok = range_ok && x >= lo - tol && x <= hi + tol;
      std::vector<double> th(static_cast<std::size_t>(n - 1)), neg(th.size());
      for (std::size_t j = 0; j < th.size(); ++j) {
        th[j] = angle(rng);
        neg[j] = -th[j];
      }
      const auto p = torus_point(params, th), q = torus_point(params, neg);
      sym = std::max(sym, std::abs(p[0] - q[0]));
      for (std::size_t j = 1; j < p.size(); ++j) sym = std::max(sym, std::abs(p[j] + q[j]));
    }
  }
  std::ostringstream sym_detail;
  sym_detail << "x_1 even and x_i odd in theta, max deviation " << sym << ", n <= " << max_n;
  record(8, "torus_symmetry", "torus embedding lemma", sym < tol, sym_detail.str());
  record(8, "max_x_range", "nested tori remark", range_ok,
         "max x in [(2^n-3)D, (2^n-2)D] for D <= r_{n-1} <= 2D, n <= " + std::to_string(max_n));

  double weld = 0.0;
  std::string weld_error;
  for (int n = 2; n <= 3; ++n)
    for (auto target : {Target::immersion, Target::embedding}) try {
        const auto mesh = build_mesh(n, target, n == 2 ? Resolution{200, 400} : Resolution{40, 80});
        for (const auto& w : mesh.welds) weld = std::max(weld, w.residual);
      } catch (const InvariantError& e) {
        weld_error = e.what();
      }
  std::ostringstream weld_detail;
  weld_detail << "mesh weld residual " << weld << " for n = 2,3" << (weld_error.empty() ? "" : "; " + weld_error);
  record(8, "mesh_weld", "immersion parametrization", weld_error.empty() && weld < kWeldTolerance, weld_detail.str());

  ScanOptions scan;
  scan.radius = 1e-2;
  const auto embedding = build_mesh(2, Target::embedding, {200, 400});
  const auto emb_hits = self_intersection_scan(embedding, scan);
  record(8, "embedding_scan", "embedding in R^{n+2}", emb_hits.empty(),
         std::to_string(emb_hits.size()) + " collisions at 200x400, radius 0.01, n = 2");

  const auto immersion = build_mesh(2, Target::immersion, {200, 400});
  const auto imm_hits = self_intersection_scan(immersion, scan);
  record(8, "immersion_scan", "immersion in R^{n+1}", !imm_hits.empty(),
         std::to_string(imm_hits.size()) + " collisions at 200x400, radius 0.01, n = 2");

  double farthest = 0.0;
  for (const auto& c : imm_hits)
    for (auto v : {c.a, c.b}) {
      const double t = immersion.params[v].back();
      farthest = std::max(farthest, std::min(t, std::numbers::pi - t));
    }
  std::ostringstream conf;
  conf << "largest min(t, pi - t) among collisions is " << farthest << " (bound 0.4)";
  record(8, "immersion_confined", "immersion in R^{n+1}", !imm_hits.empty() && farthest < 0.4, conf.str());
}

void check_genes(Recorder& record) {
  using namespace polygon;
  struct Example {
    const char* lengths;
    const char* code;
  };
  const Example examples[] = {{"1,1,1,1,1,4", "<{6}>"}, {"0,0,0,1,1,1", "<{6,3,2,1}>"}, {"0,0,1,1,1,2", "<{6,2,1}>"}};
  const Rational eps(1, 24);
  std::vector<std::string> seen;
  bool codes_ok = true;
  std::optional<Classification> last;
  for (const auto& e : examples) {
    const auto code = genetic_code(LengthVector::parse(e.lengths, eps));
    codes_ok = codes_ok && code.to_string() == e.code;
    seen.push_back(code.to_string());
    last = classify(code);
  }
  record(9, "genetic_codes", "genetic code examples", codes_ok, join(seen, " "));
  const bool links = last && last->klein_m == 3 && !last->projective_space && !last->torus;
  const auto rp = classify(genetic_code(LengthVector::parse("1,1,1,1,1,4", eps)));
  const auto torus = classify(genetic_code(LengthVector::parse("0,0,0,1,1,1", eps)));
  record(9, "classify", "genetic code examples", links && rp.projective_space && torus.torus,
         "<{6}> -> RP^3, <{6,3,2,1}> -> T^3, <{6,2,1}> -> K_3");
}

}  // namespace

bool VerifyReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const VerifyCheck& c) { return c.passed; });
}

bool VerifyReport::criterion_passed(int criterion) const {
  bool any = false;
  for (const auto& c : checks)
    if (c.criterion == criterion) {
      if (!c.passed) return false;
      any = true;
    }
  return any;
}

VerifyReport verify_paper(int max_n, const VerifyOptions& options) {
  if (max_n < kVerifyMinN) throw DomainError("verify-paper: --max-n must be at least " + std::to_string(kVerifyMinN));
  if (max_n > kVerifyMaxN)
    throw FeasibilityError("verify-paper: --max-n exceeds the supported range", static_cast<std::uint64_t>(max_n),
                           kVerifyMaxN);
  VerifyReport report{max_n, {}};
  Recorder record(report.checks);
  check_table(record, options);
  check_ring(record, max_n);
  check_duality(record, max_n);
  check_sw(record, max_n);
  check_integral(record, max_n);
  check_zcl(record, max_n, options.threads);
  check_pi1(record, max_n);
  check_geometry(record, max_n);
  check_genes(record);
  return report;
}

nlohmann::json to_json(const VerifyReport& report) {
  nlohmann::json checks = nlohmann::json::array();
  for (const auto& c : report.checks)
    checks.push_back({{"criterion", c.criterion},
                      {"id", c.id},
                      {"anchor", c.anchor},
                      {"passed", c.passed},
                      {"detail", c.detail}});
  return {{"schema", "1"},
          {"command", "verify-paper"},
          {"max_n", report.max_n},
          {"passed", report.passed()},
          {"checks", checks}};
}

std::string to_text(const VerifyReport& report) {
  std::ostringstream out;
  for (const auto& c : report.checks)
    out << (c.passed ? "PASS " : "FAIL ") << c.criterion << ' ' << c.id << " [" << c.anchor << "] " << c.detail
        << '\n';
  out << (report.passed() ? "all checks passed" : "verification failed") << '\n';
  return out.str();
}

}  // namespace kleinforge
