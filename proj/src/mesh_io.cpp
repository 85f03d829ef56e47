#include <cstdio>
#include <fstream>
#include <iomanip>
#include <istream>
#include <ostream>
#include <sstream>

#include "kleinforge/errors.hpp"
#include "kleinforge/geometry.hpp"

namespace kleinforge::geometry {

namespace {

void write_number(std::ostream& out, double x) { out << std::setprecision(17) << x; }

void validate_faces(const Mesh& mesh) {
  for (const auto& f : mesh.faces)
    for (auto v : f)
      if (v >= mesh.vertices.size()) throw DomainError("mesh: face index out of range");
}

}  // namespace

void write_obj(std::ostream& out, const Mesh& mesh, std::optional<std::array<int, 3>> projection) {
  std::array<int, 3> axes{0, 1, 2};
  if (projection) {
    axes = *projection;
    for (int a : axes)
      if (a < 0 || a >= mesh.dim) throw DomainError("write_obj: projection axis out of range");
  } else if (mesh.dim != 3) {
    throw DomainError("write_obj: mesh has dimension " + std::to_string(mesh.dim) +
                      "; choose a projection or use the kfmesh format");
  }
  out << "# klein-forge mesh n=" << mesh.n << " dim=" << mesh.dim << '\n';
  if (mesh.dim != 3)
    out << "# lossy projection onto coordinates " << axes[0] + 1 << ' ' << axes[1] + 1 << ' ' << axes[2] + 1 << '\n';
  for (const auto& v : mesh.vertices) {
    out << 'v';
    for (int a : axes) {
      out << ' ';
      write_number(out, v[static_cast<std::size_t>(a)]);
    }
    out << '\n';
  }
  if (mesh.params.size() == mesh.vertices.size() && mesh.n == 2) {
    for (const auto& p : mesh.params) {
      out << "vp";
      for (double x : p) {
        out << ' ';
        write_number(out, x);
      }
      out << '\n';
    }
  }
  for (const auto& f : mesh.faces) out << "f " << f[0] + 1 << ' ' << f[1] + 1 << ' ' << f[2] + 1 << ' ' << f[3] + 1 << '\n';
}

void write_kfmesh(std::ostream& out, const Mesh& mesh) {
  validate_faces(mesh);
  const bool with_params = mesh.params.size() == mesh.vertices.size();
  out << "kfmesh 1\n";
  out << "n " << mesh.n << '\n';
  out << "dim " << mesh.dim << '\n';
  out << "params " << (with_params ? mesh.n : 0) << '\n';
  out << "vertices " << mesh.vertices.size() << '\n';
  for (std::size_t i = 0; i < mesh.vertices.size(); ++i) {
    bool first = true;
    for (double x : mesh.vertices[i]) {
      if (!first) out << ' ';
      write_number(out, x);
      first = false;
    }
    if (with_params)
      for (double x : mesh.params[i]) {
        out << ' ';
        write_number(out, x);
      }
    out << '\n';
  }
  out << "faces " << mesh.faces.size() << '\n';
  for (const auto& f : mesh.faces) out << f[0] << ' ' << f[1] << ' ' << f[2] << ' ' << f[3] << '\n';
}

Mesh read_obj(std::istream& in) {
  Mesh mesh;
  mesh.dim = 3;
  mesh.n = 2;
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::string tag;
    if (!(ls >> tag)) continue;
    if (tag[0] == '#') {
      int n = 0, dim = 0;
      if (std::sscanf(line.c_str(), "# klein-forge mesh n=%d dim=%d", &n, &dim) == 2 && n >= 2) mesh.n = n;
      continue;
    }
    if (tag == "v") {
      Point p(3);
      if (!(ls >> p[0] >> p[1] >> p[2])) throw DomainError("read_obj: malformed vertex line");
      mesh.vertices.push_back(std::move(p));
    } else if (tag == "vp") {
      Point p;
      double x;
      while (ls >> x) p.push_back(x);
      mesh.params.push_back(std::move(p));
    } else if (tag == "f") {
      std::vector<std::size_t> idx;
      std::string token;
      while (ls >> token) {
        const long v = std::stol(token.substr(0, token.find('/')));
        if (v < 1) throw DomainError("read_obj: only positive face indices are supported");
        idx.push_back(static_cast<std::size_t>(v - 1));
      }
      if (idx.size() == 3) idx.push_back(idx[2]);
      if (idx.size() != 4) throw DomainError("read_obj: faces must be triangles or quads");
      mesh.faces.push_back({idx[0], idx[1], idx[2], idx[3]});
    }
  }
  if (!mesh.params.empty() && mesh.params.size() != mesh.vertices.size())
    throw DomainError("read_obj: vp count does not match vertex count");
  validate_faces(mesh);
  return mesh;
}

Mesh read_kfmesh(std::istream& in) {
  auto expect = [&](const std::string& key) {
    std::string word;
    long long value = 0;
    if (!(in >> word >> value) || word != key) throw DomainError("read_kfmesh: expected '" + key + "'");
    if (value < 0) throw DomainError("read_kfmesh: negative '" + key + "'");
    return static_cast<std::size_t>(value);
  };
  if (expect("kfmesh") != 1) throw DomainError("read_kfmesh: unsupported version");
  Mesh mesh;
  mesh.n = static_cast<int>(expect("n"));
  mesh.dim = static_cast<int>(expect("dim"));
  const std::size_t params = expect("params");
  const std::size_t vertices = expect("vertices");
  for (std::size_t i = 0; i < vertices; ++i) {
    Point p(static_cast<std::size_t>(mesh.dim)), q(params);
    for (auto& x : p)
      if (!(in >> x)) throw DomainError("read_kfmesh: truncated vertex data");
    for (auto& x : q)
      if (!(in >> x)) throw DomainError("read_kfmesh: truncated parameter data");
    mesh.vertices.push_back(std::move(p));
    if (params) mesh.params.push_back(std::move(q));
  }
  const std::size_t faces = expect("faces");
  for (std::size_t i = 0; i < faces; ++i) {
    std::array<std::size_t, 4> f{};
    for (auto& v : f)
      if (!(in >> v)) throw DomainError("read_kfmesh: truncated face data");
    mesh.faces.push_back(f);
  }
  validate_faces(mesh);
  return mesh;
}

Mesh read_mesh_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open mesh file '" + path + "'");
  const bool obj = path.size() >= 4 && path.compare(path.size() - 4, 4, ".obj") == 0;
  return obj ? read_obj(in) : read_kfmesh(in);
}

}  // namespace kleinforge::geometry
