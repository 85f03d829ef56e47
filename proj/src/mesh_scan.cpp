#include <algorithm>
#include <cmath>
#include <cstdint>
#include <thread>
#include <unordered_map>
#include <unordered_set>

#include "kleinforge/errors.hpp"
#include "kleinforge/geometry.hpp"

namespace kleinforge::geometry {

namespace {

struct CellKey {
  std::int64_t x, y, z;
  friend bool operator==(const CellKey&, const CellKey&) = default;
};

struct CellHash {
  std::size_t operator()(const CellKey& k) const noexcept {
    std::uint64_t h = static_cast<std::uint64_t>(k.x) * 0x9E3779B97F4A7C15ull;
    h ^= static_cast<std::uint64_t>(k.y) * 0xC2B2AE3D27D4EB4Full + (h << 6) + (h >> 2);
    h ^= static_cast<std::uint64_t>(k.z) * 0x165667B19E3779F9ull + (h << 6) + (h >> 2);
    return static_cast<std::size_t>(h);
  }
};

std::vector<std::vector<std::size_t>> adjacency(const Mesh& mesh) {
  std::vector<std::vector<std::size_t>> adj(mesh.vertices.size());
  for (const auto& f : mesh.faces)
    for (std::size_t i = 0; i < 4; ++i) {
      const auto a = f[i], b = f[(i + 1) % 4];
      if (a == b) continue;
      adj[a].push_back(b);
      adj[b].push_back(a);
    }
  for (auto& list : adj) {
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
  }
  return adj;
}

}  // namespace

std::vector<Collision> self_intersection_scan(const Mesh& mesh, const ScanOptions& options) {
  if (!(options.radius > 0.0)) throw DomainError("self_intersection_scan: radius must be positive");
  const std::size_t count = mesh.vertices.size();
  if (count == 0) return {};
  for (const auto& f : mesh.faces)
    for (auto v : f)
      if (v >= count) throw DomainError("self_intersection_scan: face index out of range");

  const auto adj = adjacency(mesh);
  int hops = options.exclude_hops;
  if (hops <= 0) {
    double shortest = INFINITY;
    for (std::size_t a = 0; a < count; ++a)
      for (auto b : adj[a]) shortest = std::min(shortest, distance(mesh.vertices[a], mesh.vertices[b]));
    hops = 2;
    if (std::isfinite(shortest) && shortest > 0.0)
      hops = std::max(2, static_cast<int>(std::ceil(2.0 * options.radius / shortest)));
    hops = std::min(hops, 64);
  }

  const std::size_t hashed = std::min<std::size_t>(3, static_cast<std::size_t>(mesh.dim));
  auto cell_of = [&](const Point& p) {
    std::int64_t c[3] = {0, 0, 0};
    for (std::size_t i = 0; i < hashed; ++i) c[i] = static_cast<std::int64_t>(std::floor(p[i] / options.radius));
    return CellKey{c[0], c[1], c[2]};
  };
  std::unordered_map<CellKey, std::vector<std::size_t>, CellHash> grid;
  for (std::size_t i = 0; i < count; ++i) grid[cell_of(mesh.vertices[i])].push_back(i);

  auto scan_range = [&](std::size_t begin, std::size_t end, std::vector<Collision>& found) {
    std::vector<std::size_t> candidates;
    std::unordered_set<std::size_t> near;
    std::vector<std::size_t> frontier, next;
    for (std::size_t i = begin; i < end; ++i) {
      const CellKey home = cell_of(mesh.vertices[i]);
      candidates.clear();
      const std::int64_t span_y = hashed > 1 ? 1 : 0, span_z = hashed > 2 ? 1 : 0;
      for (std::int64_t dx = -1; dx <= 1; ++dx)
        for (std::int64_t dy = -span_y; dy <= span_y; ++dy)
          for (std::int64_t dz = -span_z; dz <= span_z; ++dz) {
            auto it = grid.find({home.x + dx, home.y + dy, home.z + dz});
            if (it == grid.end()) continue;
            for (auto j : it->second)
              if (j > i && distance(mesh.vertices[i], mesh.vertices[j]) < options.radius) candidates.push_back(j);
          }
      if (candidates.empty()) continue;

      near.clear();
      near.insert(i);
      frontier.assign(1, i);
      for (int h = 0; h < hops && !frontier.empty(); ++h) {
        next.clear();
        for (auto v : frontier)
          for (auto w : adj[v])
            if (near.insert(w).second) next.push_back(w);
        frontier.swap(next);
      }
      for (auto j : candidates)
        if (!near.count(j)) found.push_back({i, j, distance(mesh.vertices[i], mesh.vertices[j])});
    }
  };

  const unsigned workers = std::max(1u, options.threads);
  std::vector<std::vector<Collision>> partial(workers);
  if (workers == 1) {
    scan_range(0, count, partial[0]);
  } else {
    std::vector<std::jthread> pool;
    const std::size_t chunk = (count + workers - 1) / workers;
    for (unsigned w = 0; w < workers; ++w) {
      const std::size_t begin = std::min(count, w * chunk), end = std::min(count, begin + chunk);
      pool.emplace_back([&, begin, end, w] { scan_range(begin, end, partial[w]); });
    }
  }
  std::vector<Collision> out;
  for (auto& p : partial) out.insert(out.end(), p.begin(), p.end());
  std::sort(out.begin(), out.end(), [](const Collision& x, const Collision& y) {
    return std::pair{x.a, x.b} < std::pair{y.a, y.b};
  });
  return out;
}

}  // namespace kleinforge::geometry
