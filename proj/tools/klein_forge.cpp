// klein-forge: command-line front end.
//
// Exit codes: 0 ok, 1 verification failure, 2 usage or domain error,
// 3 feasibility guard.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "kleinforge/errors.hpp"
#include "kleinforge/report.hpp"
#include "kleinforge/verify.hpp"

namespace kf = kleinforge;
namespace geo = kleinforge::geometry;

namespace {

enum Exit { kOk = 0, kVerifyFailed = 1, kUsage = 2, kInfeasible = 3 };

geo::Resolution parse_resolution(const std::string& text) {
  const auto x = text.find('x');
  try {
    if (x == std::string::npos) throw kf::DomainError("");
    std::size_t a = 0, b = 0;
    const int theta = std::stoi(text.substr(0, x), &a);
    const int t = std::stoi(text.substr(x + 1), &b);
    if (a != x || b != text.size() - x - 1) throw kf::DomainError("");
    return {theta, t};
  } catch (const std::exception&) {
    throw kf::DomainError("--res expects THETAxT, for example 200x400");
  }
}

std::array<int, 3> parse_projection(const std::string& text) {
  std::array<int, 3> axes{};
  char c1 = 0, c2 = 0;
  std::istringstream in(text);
  if (!(in >> axes[0] >> c1 >> axes[1] >> c2 >> axes[2]) || c1 != ',' || c2 != ',')
    throw kf::DomainError("--project expects three 1-based axes, for example 1,2,4");
  for (auto& a : axes) --a;
  return axes;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"klein-forge: exact computations on the n-dimensional Klein bottles K_n"};
  app.fallthrough();
  app.require_subcommand(1);

  bool json = false, table = false;
  unsigned threads = 1;
  app.add_flag("--json", json, "Emit JSON (schema 1)");
  app.add_flag("--table", table, "Emit a plain-text table (default)")->excludes("--json");
  app.add_option("--threads", threads, "Upper bound on worker threads")->check(CLI::Range(1u, 256u));

  int n = 0;
  auto add_n = [&](CLI::App* sub, int min) { sub->add_option("--n", n, "Dimension of K_n")->required()->check(CLI::Range(min, 63)); };

  auto* cohomology = app.add_subcommand("cohomology", "Basis of H*(K_n; Z2) by degree with the Sq^1 action");
  add_n(cohomology, 1);
  auto* manifold = app.add_subcommand("manifold", "Wu and Stiefel-Whitney classes, orientability, span, cat");
  add_n(manifold, 1);
  auto* integral = app.add_subcommand("integral", "Integral cohomology and homology");
  add_n(integral, 1);
  auto* split = app.add_subcommand("splitting", "Wedge decomposition of the suspension of K_n");
  add_n(split, 2);

  int from = 2;
  auto* check = app.add_subcommand("check", "Cross-check integral, mod 2 and splitting data for n in [from, n]");
  add_n(check, 2);
  check->add_option("--from", from, "First dimension checked")->check(CLI::Range(2, 63));

  std::string word;
  auto* pi1 = app.add_subcommand("pi1", "Normal form of a word in pi_1(K_n)");
  add_n(pi1, 1);
  pi1->add_option("--word", word, "Letters such as \"a1 an^-1 a2^3\"")->required();

  bool exhaustive = false, no_symmetry = false;
  std::optional<int> max_len;
  std::uint64_t max_candidates = 10'000'000;
  auto* zcl = app.add_subcommand("zcl", "Zero-divisor cup length of H*(K_n x K_n)");
  add_n(zcl, 2);
  zcl->add_flag("--exhaustive", exhaustive, "Search every product of degree-1 zero divisors");
  zcl->add_option("--max-len", max_len, "Longest product searched (default n+3)")->check(CLI::Range(1, 64));
  zcl->add_flag("--no-symmetry", no_symmetry, "Disable the index-permutation reduction");
  zcl->add_option("--max-candidates", max_candidates, "Feasibility guard on the number of products");

  int m = 0;
  auto* tc = app.add_subcommand("tc", "Topological complexity bounds for K_m");
  tc->add_option("--m", m, "Dimension")->required()->check(CLI::Range(2, 63));

  std::string lengths, epsilon;
  auto* genes = app.add_subcommand("genes", "Genetic code of a planar polygon space");
  genes->add_option("--lengths", lengths, "Comma-separated side lengths, integers or p/q")->required();
  genes->add_option("--epsilon", epsilon, "Value substituted for zero lengths, p/q");

  std::string target = "immersion", res_text = "200x400", out_path, format, projection;
  auto* mesh = app.add_subcommand("mesh", "Sample the immersion or embedding of K_n");
  add_n(mesh, 2);
  mesh->add_option("--target", target, "immersion or embedding");
  mesh->add_option("--res", res_text, "Samples per angle x samples along t");
  mesh->add_option("--out", out_path, "Output file (.obj or .kfmesh)");
  mesh->add_option("--format", format, "obj or kfmesh (default from the file extension)");
  mesh->add_option("--project", projection, "Three 1-based coordinates for OBJ output of higher-dimensional meshes");

  std::string in_path;
  geo::ScanOptions scan_options;
  auto* scan = app.add_subcommand("scan", "Report vertex pairs closer than a radius that are not mesh neighbours");
  scan->add_option("--in", in_path, "Mesh file (.obj or kfmesh)");
  scan->add_option("--n", n, "Build the mesh in memory instead of reading it")->check(CLI::Range(2, 30))->excludes("--in");
  scan->add_option("--target", target, "immersion or embedding (with --n)");
  scan->add_option("--res", res_text, "Resolution (with --n)");
  scan->add_option("--radius", scan_options.radius, "Collision radius")->check(CLI::PositiveNumber);
  scan->add_option("--exclude-hops", scan_options.exclude_hops, "Neighbour distance in edges (0 = automatic)")
      ->check(CLI::Range(0, 64));

  int max_n = 8;
  auto* verify = app.add_subcommand("verify-paper", "Run the full acceptance suite");
  verify->add_option("--max-n", max_n, "Largest dimension in the range-based checks");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  kf::ZclOptions zcl_options;
  zcl_options.threads = threads;
  zcl_options.symmetry_reduction = !no_symmetry;
  zcl_options.max_candidates = max_candidates;

  try {
    kf::Output out;
    if (*cohomology) {
      out = kf::cohomology_output(n);
    } else if (*manifold) {
      out = kf::manifold_output(n);
    } else if (*integral) {
      out = kf::integral_output(n);
    } else if (*split) {
      out = kf::splitting_output(n);
    } else if (*check) {
      if (from > n) throw kf::DomainError("check: --from exceeds --n");
      out = kf::check_output(from, n);
    } else if (*pi1) {
      out = kf::pi1_output(n, word);
    } else if (*zcl) {
      out = kf::zcl_output(n, exhaustive, max_len, zcl_options);
    } else if (*tc) {
      out = kf::tc_output(m, zcl_options);
    } else if (*genes) {
      std::optional<kf::polygon::Rational> eps;
      if (!epsilon.empty()) eps = kf::polygon::parse_rational(epsilon);
      out = kf::genes_output(kf::polygon::LengthVector::parse(lengths, eps), zcl_options);
    } else if (*mesh) {
      const auto t = geo::parse_target(target);
      const auto res = parse_resolution(res_text);
      const auto built = geo::build_mesh(n, t, res);
      out = kf::mesh_summary(built, t, res);
      if (!out_path.empty()) {
        if (format.empty())
          format = out_path.size() >= 4 && out_path.compare(out_path.size() - 4, 4, ".obj") == 0 ? "obj" : "kfmesh";
        std::ofstream file(out_path);
        if (!file) throw kf::DomainError("cannot write '" + out_path + "'");
        if (format == "obj") {
          geo::write_obj(file, built, projection.empty() ? std::nullopt : std::optional(parse_projection(projection)));
        } else if (format == "kfmesh") {
          geo::write_kfmesh(file, built);
        } else {
          throw kf::DomainError("--format must be obj or kfmesh");
        }
        out.data["out"] = out_path;
        out.text += "wrote " + out_path + " (" + format + ")\n";
      }
    } else if (*scan) {
      scan_options.threads = threads;
      geo::Mesh loaded;
      if (!in_path.empty()) {
        loaded = geo::read_mesh_file(in_path);
      } else if (n >= 2) {
        loaded = geo::build_mesh(n, geo::parse_target(target), parse_resolution(res_text));
      } else {
        throw kf::DomainError("scan: give --in FILE or --n N");
      }
      out = kf::scan_output(loaded, scan_options);
    } else if (*verify) {
      kf::VerifyOptions options;
      options.threads = threads;
      const auto report = kf::verify_paper(max_n, options);
      out.data = kf::to_json(report);
      out.text = kf::to_text(report);
      out.ok = report.passed();
    }
    if (json)
      std::cout << out.data.dump(2) << '\n';
    else
      std::cout << out.text;
    return out.ok ? kOk : kVerifyFailed;
  } catch (const kf::FeasibilityError& e) {
    std::cerr << "klein-forge: " << e.what() << " (required " << e.required() << ", bound " << e.bound() << ")\n";
    return kInfeasible;
  } catch (const kf::CapacityError& e) {
    std::cerr << "klein-forge: " << e.what() << '\n';
    return kInfeasible;
  } catch (const kf::InvariantError& e) {
    std::cerr << "klein-forge: internal check failed: " << e.what() << '\n';
    return kVerifyFailed;
  } catch (const std::invalid_argument& e) {
    std::cerr << "klein-forge: " << e.what() << '\n';
    return kUsage;
  } catch (const std::out_of_range& e) {
    std::cerr << "klein-forge: " << e.what() << '\n';
    return kUsage;
  }
}
