#pragma once

// Explicit parametrizations: nested tori T^{n-1} in R^n, the immersion of K_n
// in R^{n+1} swept along a planar directrix, and its lift to an embedding in
// R^{n+2}. Plus sampled meshes and a proximity scan for self-intersections.

#include <array>
#include <cstddef>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace kleinforge::geometry {

using Point = std::vector<double>;

double distance(std::span<const double> a, std::span<const double> b);

/// Radii r_1..r_{n-1} of a torus T^{n-1} in R^n; requires r_i > sum_{j>i} r_j.
class TorusParams {
 public:
  TorusParams(int n, std::vector<double> radii);

  /// r_i = 2^{n-1-i}.
  static TorusParams standard(int n);
  /// r_i = 2^{n-i} D for i <= n-2 and r_{n-1} = last, with D <= last <= 2D.
  static TorusParams nested(int n, double unit, double last);

  int n() const noexcept { return n_; }
  const std::vector<double>& radii() const noexcept { return radii_; }
  /// Largest first coordinate, attained at all angles zero.
  double max_x() const;

 private:
  int n_;
  std::vector<double> radii_;
};

/// Point of the torus at angles theta_1..theta_{n-1}.
Point torus_point(const TorusParams& params, std::span<const double> angles);

/// Constants of the K_n immersion: amplitude d = 2/(pi^2 (2^{n+1}-5)) and unit D = 1/(2^{n+1}-5).
struct ImmersionParams {
  int n;
  double amplitude;
  double unit;

  static ImmersionParams for_dimension(int n);
  /// [1/2 - pi^2 d/4, 1/2 + pi^2 d/4].
  std::array<double, 2> radius_band() const;
  /// Torus radii whose outermost extent equals the tube radius s.
  TorusParams torus_for_radius(double s) const;
};

struct DirectrixFrame {
  std::array<double, 2> point;
  std::array<double, 2> velocity;  // alpha'(t)
  std::array<double, 2> tangent;   // unit alpha'
  std::array<double, 2> normal;    // J(t), tangent rotated by +90 degrees
};

/// alpha(t) = (5 sin t, 2 sin^2 t cos t) on [0, pi] with its Frenet-style frame.
DirectrixFrame directrix(double t);

/// Tube radius r(t) = 1/2 - d (2t - pi) sqrt(t (pi - t)).
double radius(int n, double t);

Point immersion_point(int n, std::span<const double> angles, double t);
Point embedding_point(int n, std::span<const double> angles, double t);

enum class Target { immersion, embedding };
std::string to_string(Target t);
Target parse_target(const std::string& s);

struct Resolution {
  int theta;  // samples per angle
  int t;      // samples along [0, pi], endpoints included
};

struct Mesh {
  struct Weld {
    std::size_t grid_index;  // theta multi-index flattened, sampled at t = pi
    std::size_t vertex;      // row-0 vertex it is identified with
    double residual;         // distance between the two samples
  };

  int n = 0;
  int dim = 0;
  std::vector<Point> vertices;
  std::vector<Point> params;  // (theta_1..theta_{n-1}, t) per vertex; may be empty
  std::vector<std::array<std::size_t, 4>> faces;
  std::vector<Weld> welds;

  std::size_t edge_count() const;
  /// V - E + F of the quad complex.
  long long euler_characteristic() const;
};

inline constexpr double kWeldTolerance = 1e-9;

/// Samples the closed parameter grid and identifies the t = pi row with the
/// t = 0 row through the map where the sampled images coincide:
/// theta_1 -> pi - theta_1, other angles fixed. theta_1 is sampled from pi/2 so
/// this map carries grid points to grid points.
Mesh build_mesh(int n, Target target, Resolution res);

struct Collision {
  std::size_t a;
  std::size_t b;
  double distance;
};

struct ScanOptions {
  double radius = 0.01;
  /// Pairs joined by a mesh path of at most this many edges are neighbours,
  /// not collisions; 0 selects ceil(2 radius / shortest edge), at least 2.
  int exclude_hops = 0;
  unsigned threads = 1;
};

/// Vertex pairs closer than the radius that are not mesh neighbours, sorted.
std::vector<Collision> self_intersection_scan(const Mesh& mesh, const ScanOptions& options);

// Export / import. OBJ carries 3D vertices, optional `vp` parameter lines and
// quad faces. The kfmesh text format carries any dimension; see docs/mesh-format.md.
void write_obj(std::ostream& out, const Mesh& mesh, std::optional<std::array<int, 3>> projection = std::nullopt);
void write_kfmesh(std::ostream& out, const Mesh& mesh);
Mesh read_obj(std::istream& in);
Mesh read_kfmesh(std::istream& in);
/// Dispatches on the ".obj" extension, else kfmesh.
Mesh read_mesh_file(const std::string& path);

}  // namespace kleinforge::geometry
