#include "suval_cli/io.hpp"

#include <cmath>
#include <fstream>

#include "suval/error.hpp"

namespace suval::cli {

Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::InvalidArgument, "cannot open '" + path.string() + "'");
  try {
    return Json::parse(in);
  } catch (const Json::exception& e) {
    fail(ErrorCode::InvalidArgument, "invalid JSON in '" + path.string() + "': " + e.what());
  }
}

namespace {

RVector real_vector(const Json& j, const char* what) {
  if (!j.is_array()) fail(ErrorCode::InvalidArgument, std::string(what) + ": expected an array of numbers");
  RVector v(static_cast<Eigen::Index>(j.size()));
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_number()) fail(ErrorCode::InvalidArgument, std::string(what) + ": expected numbers");
    v(static_cast<Eigen::Index>(i)) = j[i].get<double>();
  }
  return v;
}

std::vector<RVector> real_vectors(const Json& j, const char* what) {
  if (!j.is_array()) fail(ErrorCode::InvalidArgument, std::string(what) + ": expected an array of vectors");
  std::vector<RVector> out;
  for (const auto& e : j) out.push_back(real_vector(e, what));
  return out;
}

Complex complex_entry(const Json& j) {
  if (j.is_number()) return j.get<double>();
  if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number()) {
    return {j[0].get<double>(), j[1].get<double>()};
  }
  fail(ErrorCode::InvalidArgument, "subspace: complex coordinates must be [re, im]");
}

}  // namespace

Subspace subspace_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("basis")) {
    fail(ErrorCode::InvalidArgument, "subspace: expected {\"n\": int, \"basis\": [...]}");
  }
  const int n = j.at("n").get<int>();
  std::vector<CVector> vectors;
  for (const auto& col : j.at("basis")) {
    if (!col.is_array() || static_cast<int>(col.size()) != n) {
      fail(ErrorCode::ShapeMismatch, "subspace: every basis vector needs n complex coordinates");
    }
    CVector v(n);
    for (int i = 0; i < n; ++i) v(i) = complex_entry(col[static_cast<std::size_t>(i)]);
    vectors.push_back(v);
  }
  return Subspace::from_complex(n, vectors);
}

Json subspace_to_json(const Subspace& w) {
  Json basis = Json::array();
  const CMatrix b = w.complex_basis();
  for (Eigen::Index c = 0; c < b.cols(); ++c) {
    Json col = Json::array();
    for (Eigen::Index r = 0; r < b.rows(); ++r) col.push_back(complex_pair(b(r, c)));
    basis.push_back(col);
  }
  return {{"n", w.n()}, {"basis", basis}};
}

Polytope polytope_from_json(const Json& j) {
  if (!j.is_object()) fail(ErrorCode::InvalidArgument, "polytope: expected a JSON object");
  if (j.contains("vertices")) {
    const auto pts = real_vectors(j.at("vertices"), "vertices");
    return Polytope::from_vertices(pts);
  }
  if (j.contains("halfspaces")) {
    std::vector<Halfspace> hs;
    for (const auto& h : j.at("halfspaces")) {
      if (!h.contains("normal") || !h.contains("offset")) fail(ErrorCode::InvalidArgument, "halfspace needs normal and offset");
      hs.push_back({real_vector(h.at("normal"), "normal"), h.at("offset").get<double>()});
    }
    return Polytope::from_halfspaces(hs);
  }
  if (j.contains("parallelotope") || j.contains("zonotope") || j.contains("box")) {
    return zonotope_from_json(j).to_polytope();
  }
  fail(ErrorCode::InvalidArgument, "polytope: expected vertices, halfspaces, parallelotope, zonotope or box");
}

Zonotope zonotope_from_json(const Json& j) {
  if (j.contains("box")) {
    const auto sides = j.at("box").get<std::vector<double>>();
    return Zonotope::box(sides);
  }
  const char* key = j.contains("parallelotope") ? "parallelotope" : (j.contains("zonotope") ? "zonotope" : nullptr);
  if (key == nullptr) fail(ErrorCode::UnsupportedBody, "kinematic bodies must be given as parallelotope, zonotope or box");
  const auto& z = j.at(key);
  Zonotope out{real_vector(z.at("base"), "base"), real_vectors(z.at("generators"), "generators")};
  for (const auto& g : out.generators) {
    if (g.size() != out.base.size()) fail(ErrorCode::DimensionMismatch, "generator and base dimensions differ");
  }
  return out;
}

Json polytope_to_json(const Polytope& p) {
  Json verts = Json::array();
  for (const auto& v : p.vertices()) {
    Json row = Json::array();
    for (Eigen::Index i = 0; i < v.size(); ++i) row.push_back(number(v(i)));
    verts.push_back(row);
  }
  return {{"vertices", verts}};
}

Json number(double v) {
  if (v == 0.0) return 0;
  if (std::isfinite(v) && std::abs(v) < 1e15 && v == std::trunc(v)) return static_cast<long long>(v);
  if (!std::isfinite(v)) return nullptr;
  return v;
}

Json complex_pair(Complex z) { return Json::array({number(z.real()), number(z.imag())}); }

}  // namespace suval::cli
