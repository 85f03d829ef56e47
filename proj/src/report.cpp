#include "kleinforge/report.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "kleinforge/char_classes.hpp"
#include "kleinforge/errors.hpp"
#include "kleinforge/fundamental_group.hpp"
#include "kleinforge/integral.hpp"
#include "kleinforge/serialize.hpp"

namespace kleinforge {

using nlohmann::json;

namespace {

json header(const char* command) { return {{"schema", kSchemaVersion}, {"command", command}}; }

json monomial_entry(const Monomial& m) {
  json j = to_json(m);
  j["text"] = m.to_string();
  return j;
}

std::string rational_text(const polygon::Rational& r) {
  return r.denominator() == 1 ? std::to_string(r.numerator())
                              : std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

}  // namespace

Output cohomology_output(int n) {
  Output out{header("cohomology"), {}};
  const auto dims = poincare_polynomial(n);
  std::ostringstream text;
  text << "H*(K_" << n << "; Z2) = Z2[R";
  if (n >= 2) text << ",V1" << (n > 2 ? ",...,V" + std::to_string(n - 1) : "");
  text << "]/(R^2" << (n >= 2 ? ", Vi^2 + R*Vi" : "") << ")\n";
  text << "dims:";
  for (auto d : dims) text << ' ' << d;
  text << '\n';

  json basis_json = json::array();
  json sq_json = json::array();
  std::vector<std::pair<Monomial, Monomial>> pairs;
  for (int d = 0; d <= n; ++d) {
    json degree = json::array();
    text << "H^" << d << ":";
    for (const auto& m : basis(n, d)) {
      degree.push_back(monomial_entry(m));
      text << ' ' << m.to_string();
      if (auto s = sq(1, m); s && d > 0) pairs.emplace_back(m, *s);
    }
    text << '\n';
    basis_json.push_back(degree);
  }
  text << "Sq1:\n";
  for (const auto& [from, to] : pairs) {
    text << "  " << from.to_string() << " -> " << to.to_string() << '\n';
    sq_json.push_back({{"from", monomial_entry(from)}, {"to", monomial_entry(to)}});
  }
  out.data["n"] = n;
  out.data["dims"] = dims;
  out.data["basis"] = basis_json;
  out.data["sq1"] = sq_json;
  out.text = text.str();
  return out;
}

Output manifold_output(int n) {
  Output out{header("manifold"), {}};
  const auto wu = wu_data(n);
  const auto report = manifold_report(n);
  auto field = [](const auto& f) { return json{{"value", f.value}, {"provenance", to_string(f.provenance)}}; };
  json wu_json = json::array(), sw_json = json::array();
  for (const auto& v : wu.wu) wu_json.push_back(to_json(v));
  for (const auto& w : wu.sw) sw_json.push_back(to_json(w));
  out.data["n"] = n;
  out.data["orientable"] = field(report.orientable);
  out.data["span"] = field(report.span);
  out.data["immersion_dim"] = field(report.immersion_dim);
  out.data["embedding_dim"] = field(report.embedding_dim);
  out.data["parallelizable"] = field(report.parallelizable);
  out.data["cat"] = field(report.cat);
  out.data["wu"] = wu_json;
  out.data["stiefel_whitney"] = sw_json;

  std::ostringstream text;
  text << "K_" << n << '\n';
  auto line = [&](const char* name, const std::string& value, Provenance p) {
    text << "  " << name << std::string(16 - std::string(name).size(), ' ') << value << "  [" << to_string(p) << "]\n";
  };
  auto yes_no = [](bool b) { return std::string(b ? "yes" : "no"); };
  line("orientable", yes_no(report.orientable.value), report.orientable.provenance);
  line("span", std::to_string(report.span.value), report.span.provenance);
  line("immersion dim", "R^" + std::to_string(report.immersion_dim.value), report.immersion_dim.provenance);
  line("embedding dim", "R^" + std::to_string(report.embedding_dim.value), report.embedding_dim.provenance);
  line("parallelizable", yes_no(report.parallelizable.value), report.parallelizable.provenance);
  line("cat", std::to_string(report.cat.value), report.cat.provenance);
  for (int j = 0; j <= n; ++j)
    text << "  v" << j << " = " << wu.wu[static_cast<std::size_t>(j)].to_string() << "    w" << j << " = "
         << wu.sw[static_cast<std::size_t>(j)].to_string() << '\n';
  out.text = text.str();
  return out;
}

Output integral_output(int n) {
  Output out{header("integral"), {}};
  const auto groups = integral_cohomology(n);
  json list = json::array();
  std::ostringstream text;
  text << "H^*(K_" << n << "; Z)\n";
  for (std::size_t d = 0; d < groups.size(); ++d) {
    list.push_back(to_json(groups[d]));
    text << "  H^" << d << " = " << groups[d].to_string() << '\n';
  }
  out.data["n"] = n;
  out.data["cohomology"] = list;
  if (n >= 2) {
    json hom = json::array();
    text << "H_*(K_" << n << "; Z) from the suspension splitting\n";
    const auto homology = homology_from_splitting(n);
    for (std::size_t d = 0; d < homology.size(); ++d) {
      hom.push_back(to_json(homology[d]));
      text << "  H_" << d << " = " << homology[d].to_string() << '\n';
    }
    out.data["homology"] = hom;
  }
  out.text = text.str();
  return out;
}

Output splitting_output(int n) {
  Output out{header("splitting"), {}};
  json list = json::array();
  std::ostringstream text;
  text << "Sigma K_" << n << " ~";
  bool first = true;
  for (const auto& s : splitting(n)) {
    list.push_back(to_json(s));
    text << (first ? " " : " v ") << s.to_string();
    first = false;
  }
  text << '\n';
  out.data["n"] = n;
  out.data["summands"] = list;
  out.text = text.str();
  return out;
}

Output check_output(int from, int to) {
  Output out{header("check"), {}};
  json reports = json::array();
  std::ostringstream text;
  for (int n = from; n <= to; ++n) {
    const auto report = consistency_check(n);
    json checks = json::array();
    for (const auto& c : report.checks) {
      checks.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
      text << "n=" << n << ' ' << (c.passed ? "PASS " : "FAIL ") << c.name << ": " << c.detail << '\n';
    }
    reports.push_back({{"n", n}, {"passed", report.passed()}, {"checks", checks}});
    out.ok = out.ok && report.passed();
  }
  out.data["reports"] = reports;
  out.data["passed"] = out.ok;
  out.text = text.str();
  return out;
}

Output pi1_output(int n, const std::string& word) {
  Output out{header("pi1"), {}};
  const auto w = pi1::GroupWord::parse(n, word);
  const auto nf = pi1::reduce(w);
  json k = json::array();
  for (const auto& e : nf.k) k.push_back(e.str());
  const auto ab = pi1::abelianization(n);
  out.data["n"] = n;
  out.data["word"] = w.to_string();
  out.data["normal_form"] = {{"k", k}, {"m", nf.m.str()}, {"text", nf.to_string()}};
  out.data["in_double_cover_image"] = pi1::in_double_cover_image(nf);
  out.data["abelianization"] = to_json(ab);
  out.text = nf.to_string() + "\n";
  return out;
}

Output zcl_output(int n, bool exhaustive, std::optional<int> max_length, const ZclOptions& options) {
  Output out{header("zcl"), {}};
  out.data["n"] = n;
  std::ostringstream text;
  if (exhaustive) {
    const int limit = max_length.value_or(n + 3);
    json runs = json::array();
    int zcl = 0;
    bool vanished = false;
    for (int length = 1; length <= limit; ++length) {
      const auto r = zcl_exhaustive(n, length, options);
      json run{{"length", length}, {"all_zero", r.all_zero}, {"candidates", r.candidates}};
      text << "length " << length << ": ";
      if (r.all_zero && length > 2 * n) {
        text << "vanishes for degree reasons\n";
        vanished = true;
      } else if (r.all_zero) {
        text << "all " << r.candidates << " products vanish\n";
        vanished = true;
      } else {
        run["witness"] = to_json(*r.witness);
        text << "nonzero " << r.witness->to_string() << '\n';
        if (vanished) out.ok = false;  // monotonicity violated
        zcl = length;
      }
      runs.push_back(run);
    }
    out.data["mode"] = "exhaustive";
    out.data["runs"] = runs;
    out.data["zcl"] = zcl;
    out.data["zcl_is_exact"] = vanished;
    text << "zcl(K_" << n << ") " << (vanished ? "= " : ">= ") << zcl << '\n';
  } else {
    if (n < 3) throw DomainError("zcl: witness mode needs n >= 3; use --exhaustive");
    const auto product = zero_divisor_witness(n);
    out.data["mode"] = "witness";
    out.data["witness_length"] = n + 2;
    out.data["witness_terms"] = product.terms().size();
    out.data["vanishing_length"] = n + 3;
    out.data["vanishing_provenance"] = "cited";
    text << "Vbar1^3 Vbar2^2";
    for (int i = 3; i < n; ++i) text << " Vbar" << i;
    text << " != 0 (" << product.terms().size() << " terms), length " << n + 2 << '\n';
    text << "products of length " << n + 3 << " vanish [cited; run --exhaustive to verify]\n";
  }
  out.text = text.str();
  return out;
}

namespace {

json tc_json(const TcBounds& b) {
  return {{"m", b.m},
          {"zcl", b.zcl},
          {"lower", b.lower},
          {"upper", b.upper},
          {"zcl_provenance", b.zcl_provenance},
          {"upper_provenance", b.upper_provenance}};
}

}  // namespace

Output tc_output(int m, const ZclOptions& options) {
  Output out{header("tc"), {}};
  const auto b = tc_bounds(m, 8, options);
  out.data.update(tc_json(b));
  std::ostringstream text;
  text << b.lower << " <= TC(K_" << m << ") <= " << b.upper << "\n  zcl = " << b.zcl << " (" << b.zcl_provenance
       << ")\n  upper: " << b.upper_provenance << '\n';
  out.text = text.str();
  return out;
}

Output genes_output(const polygon::LengthVector& lengths, const ZclOptions& options) {
  using namespace polygon;
  Output out{header("genes"), {}};
  json lens = json::array();
  for (const auto& x : lengths.lengths()) lens.push_back(rational_text(x));
  out.data["lengths"] = lens;
  out.data["epsilon"] = lengths.epsilon() ? json(rational_text(*lengths.epsilon())) : json(nullptr);
  const bool generic = is_generic(lengths);
  out.data["generic"] = generic;
  std::ostringstream text;
  text << "lengths:";
  for (const auto& x : lengths.lengths()) text << ' ' << rational_text(x);
  text << '\n';
  if (lengths.epsilon()) text << "zero lengths replaced by epsilon = " << rational_text(*lengths.epsilon()) << '\n';
  if (!generic) {
    text << "not generic: some subset has exactly half the total length\n";
    out.text = text.str();
    out.ok = false;
    return out;
  }
  const auto code = genetic_code(lengths);
  json genes = json::array(), gee_list = json::array();
  for (auto g : code.genes) genes.push_back(elements(g));
  for (auto g : gees(code)) gee_list.push_back(elements(g));
  const auto cls = classify(code);
  out.data["genes"] = genes;
  out.data["gees"] = gee_list;
  out.data["classification"] = {{"projective_space", cls.projective_space},
                                {"torus", cls.torus},
                                {"klein_m", cls.klein_m ? json(*cls.klein_m) : json(nullptr)}};
  text << "genetic code: " << code.to_string() << '\n';
  text << "gees: {";
  const auto gs = gees(code);
  for (std::size_t i = 0; i < gs.size(); ++i) text << (i ? ", " : "") << polygon::to_string(gs[i]);
  text << "}\n";
  const int dim = code.n - 3;
  if (cls.projective_space) text << "homeomorphic to RP^" << dim << '\n';
  if (cls.torus) text << "homeomorphic to T^" << dim << '\n';
  if (cls.klein_m) {
    text << "homeomorphic to K_" << *cls.klein_m << '\n';
    if (*cls.klein_m >= 2) {
      const auto b = tc_bounds(*cls.klein_m, 8, options);
      out.data["tc"] = tc_json(b);
      text << "  " << b.lower << " <= TC <= " << b.upper << '\n';
    }
  }
  out.text = text.str();
  return out;
}

Output mesh_summary(const geometry::Mesh& mesh, geometry::Target target, geometry::Resolution res) {
  Output out{header("mesh"), {}};
  double worst = 0.0;
  for (const auto& w : mesh.welds) worst = std::max(worst, w.residual);
  out.data["n"] = mesh.n;
  out.data["target"] = geometry::to_string(target);
  out.data["dim"] = mesh.dim;
  out.data["resolution"] = {res.theta, res.t};
  out.data["vertices"] = mesh.vertices.size();
  out.data["faces"] = mesh.faces.size();
  out.data["welds"] = mesh.welds.size();
  out.data["max_weld_residual"] = worst;
  std::ostringstream text;
  text << geometry::to_string(target) << " of K_" << mesh.n << " in R^" << mesh.dim << ": " << mesh.vertices.size()
       << " vertices, " << mesh.faces.size() << " quads, " << mesh.welds.size() << " welds (max residual " << worst
       << ")\n";
  if (mesh.n == 2) {
    out.data["euler_characteristic"] = mesh.euler_characteristic();
    text << "Euler characteristic " << mesh.euler_characteristic() << '\n';
  }
  out.text = text.str();
  return out;
}

Output scan_output(const geometry::Mesh& mesh, const geometry::ScanOptions& options) {
  Output out{header("scan"), {}};
  const auto collisions = geometry::self_intersection_scan(mesh, options);
  const bool has_params = mesh.params.size() == mesh.vertices.size() && !mesh.params.empty();
  auto edge_distance = [&](std::size_t v) {
    const double t = mesh.params[v].back();
    return std::min(t, std::numbers::pi - t);
  };
  json list = json::array();
  double farthest = 0.0;
  for (const auto& c : collisions) {
    json entry{{"a", c.a}, {"b", c.b}, {"distance", c.distance}};
    if (has_params) {
      entry["t_a"] = mesh.params[c.a].back();
      entry["t_b"] = mesh.params[c.b].back();
      farthest = std::max({farthest, edge_distance(c.a), edge_distance(c.b)});
    }
    list.push_back(entry);
  }
  out.data["radius"] = options.radius;
  out.data["vertices"] = mesh.vertices.size();
  out.data["count"] = collisions.size();
  out.data["collisions"] = list;
  std::ostringstream text;
  text << collisions.size() << " colliding vertex pairs within radius " << options.radius << '\n';
  if (has_params && !collisions.empty()) {
    out.data["max_min_t_distance"] = farthest;
    text << "all collisions have min(t, pi - t) <= " << farthest << '\n';
  }
  for (std::size_t i = 0; i < collisions.size() && i < 20; ++i)
    text << "  " << collisions[i].a << " " << collisions[i].b << " " << collisions[i].distance << '\n';
  if (collisions.size() > 20) text << "  ...\n";
  out.text = text.str();
  return out;
}

}  // namespace kleinforge
