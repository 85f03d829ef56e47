#include "kleinforge/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

#include "kleinforge/errors.hpp"

namespace kleinforge::geometry {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kMinSpeed = 1e-6;

void require_parameter(double t, const char* where) {
  if (!(t >= 0.0 && t <= kPi)) throw DomainError(std::string(where) + ": t must lie in [0, pi]");
}

void require_immersion_dim(int n, const char* where) {
  if (n < 2) throw DomainError(std::string(where) + ": n must be >= 2");
  if (n > 30) throw CapacityError(std::string(where) + ": n must be <= 30");
}

}  // namespace

double distance(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size()) throw DomainError("distance: dimension mismatch");
  double sum = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) sum += (a[i] - b[i]) * (a[i] - b[i]);
  return std::sqrt(sum);
}

TorusParams::TorusParams(int n, std::vector<double> radii) : n_(n), radii_(std::move(radii)) {
  if (n < 2) throw DomainError("TorusParams: n must be >= 2");
  if (radii_.size() != static_cast<std::size_t>(n - 1)) throw DomainError("TorusParams: need n-1 radii");
  double tail = 0.0;
  for (std::size_t i = radii_.size(); i-- > 0;) {
    if (!(radii_[i] > 0.0) || !std::isfinite(radii_[i])) throw DomainError("TorusParams: radii must be positive");
    if (!(radii_[i] > tail)) throw DomainError("TorusParams: r_i must exceed the sum of later radii");
    tail += radii_[i];
  }
}

TorusParams TorusParams::standard(int n) {
  std::vector<double> radii;
  for (int i = 1; i <= n - 1; ++i) radii.push_back(std::ldexp(1.0, n - 1 - i));
  return TorusParams(n, std::move(radii));
}

TorusParams TorusParams::nested(int n, double unit, double last) {
  if (!(unit > 0.0)) throw DomainError("TorusParams::nested: unit must be positive");
  if (last < unit || last > 2.0 * unit) throw DomainError("TorusParams::nested: last radius outside [D, 2D]");
  std::vector<double> radii;
  for (int i = 1; i <= n - 2; ++i) radii.push_back(std::ldexp(unit, n - i));
  radii.push_back(last);
  return TorusParams(n, std::move(radii));
}

double TorusParams::max_x() const { return std::accumulate(radii_.begin(), radii_.end(), 0.0); }

Point torus_point(const TorusParams& params, std::span<const double> angles) {
  const int n = params.n();
  if (angles.size() != static_cast<std::size_t>(n - 1)) throw DomainError("torus_point: need n-1 angles");
  const auto& r = params.radii();
  // 1-based: w_n = r_{n-1}; w_i = r_{i-1} + w_{i+1} cos(theta_i) for 1 < i <= n-1.
  std::vector<double> w(static_cast<std::size_t>(n + 1), 0.0);
  w[static_cast<std::size_t>(n)] = r[static_cast<std::size_t>(n - 2)];
  for (int i = n - 1; i >= 2; --i)
    w[static_cast<std::size_t>(i)] =
        r[static_cast<std::size_t>(i - 2)] + w[static_cast<std::size_t>(i + 1)] * std::cos(angles[static_cast<std::size_t>(i - 1)]);
  Point x(static_cast<std::size_t>(n));
  x[0] = w[2] * std::cos(angles[0]);
  for (int i = 2; i <= n; ++i)
    x[static_cast<std::size_t>(i - 1)] = w[static_cast<std::size_t>(i)] * std::sin(angles[static_cast<std::size_t>(i - 2)]);
  return x;
}

ImmersionParams ImmersionParams::for_dimension(int n) {
  require_immersion_dim(n, "ImmersionParams");
  const double denom = std::ldexp(1.0, n + 1) - 5.0;
  return {n, 2.0 / (kPi * kPi * denom), 1.0 / denom};
}

std::array<double, 2> ImmersionParams::radius_band() const {
  const double half_width = kPi * kPi * amplitude / 4.0;
  return {0.5 - half_width, 0.5 + half_width};
}

TorusParams ImmersionParams::torus_for_radius(double s) const {
  std::vector<double> radii;
  for (int i = 1; i <= n - 2; ++i) radii.push_back(std::ldexp(unit, n - i));
  radii.push_back(s - 0.5 + 1.5 * unit);
  return TorusParams(n, std::move(radii));
}

DirectrixFrame directrix(double t) {
  require_parameter(t, "directrix");
  const double s = std::sin(t), c = std::cos(t);
  DirectrixFrame f{};
  f.point = {5.0 * s, 2.0 * s * s * c};
  // d/dt (2 sin^2 cos) = 4 sin cos^2 - 2 sin^3
  f.velocity = {5.0 * c, 4.0 * s * c * c - 2.0 * s * s * s};
  const double speed = std::hypot(f.velocity[0], f.velocity[1]);
  if (speed < kMinSpeed) throw DomainError("directrix: degenerate tangent");
  f.tangent = {f.velocity[0] / speed, f.velocity[1] / speed};
  f.normal = {-f.tangent[1], f.tangent[0]};
  return f;
}

double radius(int n, double t) {
  require_parameter(t, "radius");
  const auto p = ImmersionParams::for_dimension(n);
  return 0.5 - p.amplitude * (2.0 * t - kPi) * std::sqrt(t * (kPi - t));
}

Point immersion_point(int n, std::span<const double> angles, double t) {
  const auto params = ImmersionParams::for_dimension(n);
  const auto frame = directrix(t);
  const Point x = torus_point(params.torus_for_radius(radius(n, t)), angles);
  Point k(static_cast<std::size_t>(n + 1), 0.0);
  k[0] = frame.point[0] + x[0] * frame.normal[0];
  k[1] = frame.point[1] + x[0] * frame.normal[1];
  for (int i = 1; i < n; ++i) k[static_cast<std::size_t>(i + 1)] = x[static_cast<std::size_t>(i)];
  return k;
}

Point embedding_point(int n, std::span<const double> angles, double t) {
  Point p = immersion_point(n, angles, t);
  p.push_back(std::sin(2.0 * t));
  return p;
}

std::string to_string(Target t) { return t == Target::immersion ? "immersion" : "embedding"; }

Target parse_target(const std::string& s) {
  if (s == "immersion") return Target::immersion;
  if (s == "embedding") return Target::embedding;
  throw DomainError("unknown mesh target '" + s + "' (expected immersion or embedding)");
}

std::size_t Mesh::edge_count() const {
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  edges.reserve(faces.size() * 4);
  for (const auto& f : faces)
    for (std::size_t i = 0; i < 4; ++i) {
      auto a = f[i], b = f[(i + 1) % 4];
      if (a == b) continue;
      edges.emplace_back(std::min(a, b), std::max(a, b));
    }
  std::sort(edges.begin(), edges.end());
  return static_cast<std::size_t>(std::unique(edges.begin(), edges.end()) - edges.begin());
}

long long Mesh::euler_characteristic() const {
  return static_cast<long long>(vertices.size()) - static_cast<long long>(edge_count()) +
         static_cast<long long>(faces.size());
}

Mesh build_mesh(int n, Target target, Resolution res) {
  require_immersion_dim(n, "build_mesh");
  if (res.theta < 3 || res.t < 3) throw DomainError("build_mesh: resolution must be at least 3 per axis");
  const int angles = n - 1;
  std::size_t layer = 1;
  for (int i = 0; i < angles; ++i) {
    layer *= static_cast<std::size_t>(res.theta);
    if (layer > 50'000'000) throw DomainError("build_mesh: grid too large");
  }
  const std::size_t rows = static_cast<std::size_t>(res.t - 1);

  auto theta_value = [&](int axis, std::size_t i) {
    const double step = 2.0 * kPi * static_cast<double>(i) / res.theta;
    return axis == 0 ? kPi / 2.0 + step : step;
  };
  auto t_value = [&](std::size_t k) { return kPi * static_cast<double>(k) / (res.t - 1); };
  auto unflatten = [&](std::size_t flat) {
    std::vector<std::size_t> idx(static_cast<std::size_t>(angles));
    for (int a = 0; a < angles; ++a) {
      idx[static_cast<std::size_t>(a)] = flat % static_cast<std::size_t>(res.theta);
      flat /= static_cast<std::size_t>(res.theta);
    }
    return idx;
  };
  auto flatten = [&](const std::vector<std::size_t>& idx) {
    std::size_t flat = 0;
    for (int a = angles; a-- > 0;) flat = flat * static_cast<std::size_t>(res.theta) + idx[static_cast<std::size_t>(a)];
    return flat;
  };
  auto sample = [&](const std::vector<std::size_t>& idx, double t, Point* param) {
    std::vector<double> theta(static_cast<std::size_t>(angles));
    for (int a = 0; a < angles; ++a) theta[static_cast<std::size_t>(a)] = theta_value(a, idx[static_cast<std::size_t>(a)]);
    if (param) {
      *param = theta;
      param->push_back(t);
    }
    return target == Target::immersion ? immersion_point(n, theta, t) : embedding_point(n, theta, t);
  };
  // Row res.t-1 (t = pi) is identified with row 0 via theta_1 -> pi - theta_1.
  auto welded_flat = [&](std::size_t flat) {
    auto idx = unflatten(flat);
    idx[0] = (static_cast<std::size_t>(res.theta) - idx[0]) % static_cast<std::size_t>(res.theta);
    return flatten(idx);
  };
  auto vertex_id = [&](std::size_t row, std::size_t flat) { return row == rows ? welded_flat(flat) : row * layer + flat; };

  Mesh mesh;
  mesh.n = n;
  mesh.dim = target == Target::immersion ? n + 1 : n + 2;
  mesh.vertices.reserve(rows * layer);
  mesh.params.reserve(rows * layer);
  for (std::size_t row = 0; row < rows; ++row)
    for (std::size_t flat = 0; flat < layer; ++flat) {
      Point param;
      mesh.vertices.push_back(sample(unflatten(flat), t_value(row), &param));
      mesh.params.push_back(std::move(param));
    }

  for (std::size_t flat = 0; flat < layer; ++flat) {
    const Point end = sample(unflatten(flat), kPi, nullptr);
    const std::size_t target_vertex = welded_flat(flat);
    const double residual = distance(end, mesh.vertices[target_vertex]);
    if (residual > kWeldTolerance)
      throw InvariantError("build_mesh: weld residual " + std::to_string(residual) + " exceeds tolerance");
    mesh.welds.push_back({flat, target_vertex, residual});
  }

  // Quads of the cubical grid in every pair of axes; axis `angles` is t.
  auto step = [&](std::size_t row, std::vector<std::size_t> idx, int axis) {
    if (axis == angles) return std::pair{row + 1, idx};
    auto& i = idx[static_cast<std::size_t>(axis)];
    i = (i + 1) % static_cast<std::size_t>(res.theta);
    return std::pair{row, idx};
  };
  for (std::size_t row = 0; row < rows; ++row)
    for (std::size_t flat = 0; flat < layer; ++flat) {
      const auto idx = unflatten(flat);
      for (int a = 0; a <= angles; ++a)
        for (int b = a + 1; b <= angles; ++b) {
          const auto [r1, i1] = step(row, idx, a);
          const auto [r2, i2] = step(r1, i1, b);
          const auto [r3, i3] = step(row, idx, b);
          mesh.faces.push_back({vertex_id(row, flat), vertex_id(r1, flatten(i1)), vertex_id(r2, flatten(i2)),
                                vertex_id(r3, flatten(i3))});
        }
    }
  return mesh;
}

}  // namespace kleinforge::geometry
