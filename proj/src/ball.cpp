#include "polyft/ball.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "polyft/linalg.hpp"

namespace polyft {

bool Subspace::contains(const Vector& v, double tol) const {
  if (basis.cols() == 0) return v.norm() <= tol;
  const Vector proj = basis * (basis.transpose() * v);
  return (v - proj).norm() <= tol * std::max(1.0, v.norm());
}

std::vector<Vector> PolytopeBall::dual_vertices() const {
  std::vector<Vector> out;
  out.reserve(facets_.size());
  for (const Functional& f : facets_) out.push_back(f.coeffs);
  return out;
}

int PolytopeBall::find_face(const std::vector<int>& vertex_ids) const {
  auto it = face_index_.find(vertex_ids);
  return it == face_index_.end() ? -1 : it->second;
}

int PolytopeBall::antipodal_face(int face_id) const {
  std::vector<int> ids;
  for (int v : faces_[face_id].vertex_ids) ids.push_back(antipode_[v]);
  std::sort(ids.begin(), ids.end());
  return find_face(ids);
}

std::vector<Vector> PolytopeBall::face_points(int face_id) const {
  std::vector<Vector> pts;
  for (int v : faces_[face_id].vertex_ids) pts.push_back(vertices_[v]);
  return pts;
}

Vector PolytopeBall::barycenter(int face_id) const {
  Vector c = Vector::Zero(dim_);
  for (int v : faces_[face_id].vertex_ids) c += vertices_[v];
  return c / static_cast<double>(faces_[face_id].vertex_ids.size());
}

namespace {

std::vector<linalg::HullFacet> facets_of(const std::vector<Vector>& pts, double tol) {
  return linalg::hull_facets(pts, tol);
}

}  // namespace

PolytopeBall build_ball(const std::vector<Vector>& input, double tolerance) {
  if (input.empty()) throw Error(ErrorCode::InvalidInput, "no vertices given");
  const int d = static_cast<int>(input[0].size());
  if (d < 1) throw Error(ErrorCode::InvalidInput, "vertices must have at least one coordinate");
  for (const Vector& v : input) {
    if (v.size() != d) throw Error(ErrorCode::InvalidInput, "vertices have mixed dimensions");
    if (!all_finite(v)) throw Error(ErrorCode::InvalidInput, "non-finite vertex coordinate");
  }
  if (static_cast<int>(input.size()) < 2 * d) {
    throw Error(ErrorCode::InvalidInput, "need at least 2d vertices");
  }

  PolytopeBall ball;
  ball.dim_ = d;
  ball.eps_ = tolerance;

  double radius = 0.0;
  for (const Vector& v : input) radius = std::max(radius, v.norm());
  const double tol = scaled_tol(tolerance, radius);

  std::vector<Vector> pts = linalg::dedupe(input, tol);
  if (pts.size() != input.size()) {
    ball.warnings_.push_back("dropped " + std::to_string(input.size() - pts.size()) + " repeated vertices");
  }
  if (linalg::affine_dim(pts, tol) < d) {
    throw Error(ErrorCode::DegenerateDimension, "affine hull of the vertices has dimension < " + std::to_string(d));
  }

  auto hull = facets_of(pts, tol);
  for (const auto& f : hull) {
    if (f.offset <= tol) throw Error(ErrorCode::OriginNotInterior, "a facet hyperplane passes through or behind the origin");
  }

  // Keep only extreme points: the facets through a vertex have normals of full rank.
  std::vector<std::vector<Vector>> normals_at(pts.size());
  for (const auto& f : hull) {
    for (int id : f.ids) normals_at[id].push_back(f.normal);
  }
  std::vector<Vector> extreme;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (linalg::rank(normals_at[i], d, 1e-7) == d) extreme.push_back(pts[i]);
  }
  if (extreme.size() != pts.size()) {
    ball.warnings_.push_back("dropped " + std::to_string(pts.size() - extreme.size()) + " non-extreme points");
    pts = std::move(extreme);
    hull = facets_of(pts, tol);
  }

  ball.antipode_.assign(pts.size(), -1);
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j = 0; j < pts.size(); ++j) {
      if ((pts[i] + pts[j]).norm() <= tol) {
        ball.antipode_[i] = static_cast<int>(j);
        break;
      }
    }
    if (ball.antipode_[i] < 0) throw Error(ErrorCode::NotCentrallySymmetric, "vertex without antipode");
  }

  ball.vertices_ = pts;
  ball.circumradius_ = 0.0;
  for (const Vector& v : pts) ball.circumradius_ = std::max(ball.circumradius_, v.norm());

  // Canonical facet order: lexicographic in the vertex sets.
  std::sort(hull.begin(), hull.end(), [](const auto& a, const auto& b) { return a.ids < b.ids; });
  std::vector<std::vector<int>> facet_sets;
  for (const auto& f : hull) {
    ball.facets_.push_back(Functional{f.normal / f.offset});
    facet_sets.push_back(f.ids);
  }

  // Face lattice: closure of the facet vertex sets under intersection.
  std::set<std::vector<int>> found(facet_sets.begin(), facet_sets.end());
  std::vector<std::vector<int>> queue(facet_sets.begin(), facet_sets.end());
  for (std::size_t q = 0; q < queue.size(); ++q) {
    for (const auto& fs : facet_sets) {
      std::vector<int> meet;
      std::set_intersection(queue[q].begin(), queue[q].end(), fs.begin(), fs.end(), std::back_inserter(meet));
      if (meet.empty() || found.count(meet)) continue;
      found.insert(meet);
      queue.push_back(meet);
    }
  }

  for (const auto& ids : found) {
    Face face;
    face.vertex_ids = ids;
    std::vector<Vector> fp;
    for (int v : ids) fp.push_back(pts[v]);
    face.dim = linalg::affine_dim(fp, tol);
    for (std::size_t f = 0; f < facet_sets.size(); ++f) {
      if (std::includes(facet_sets[f].begin(), facet_sets[f].end(), ids.begin(), ids.end())) {
        face.exposing_facets.push_back(static_cast<int>(f));
      }
    }
    ball.faces_.push_back(std::move(face));
  }
  std::sort(ball.faces_.begin(), ball.faces_.end(), [](const Face& a, const Face& b) {
    if (a.dim != b.dim) return a.dim < b.dim;
    return a.vertex_ids < b.vertex_ids;
  });
  for (std::size_t i = 0; i < ball.faces_.size(); ++i) {
    ball.face_index_[ball.faces_[i].vertex_ids] = static_cast<int>(i);
  }
  for (std::size_t v = 0; v < pts.size(); ++v) {
    if (ball.find_face({static_cast<int>(v)}) < 0) {
      throw Error(ErrorCode::DegenerateDimension, "vertex is not a 0-dimensional face");
    }
  }
  for (const auto& fs : facet_sets) ball.facet_face_.push_back(ball.find_face(fs));
  return ball;
}

double norm(const PolytopeBall& ball, const Vector& x) {
  double best = 0.0;
  for (const Functional& f : ball.facets()) best = std::max(best, f(x));
  return best;
}

double dual_norm(const PolytopeBall& ball, const Functional& phi) {
  double best = 0.0;
  for (const Vector& v : ball.vertices()) best = std::max(best, phi(v));
  return best;
}

DualFace norming_functionals(const PolytopeBall& ball, const Vector& x) {
  const double nx = norm(ball, x);
  if (!(nx > 0.0)) {
    throw Error(ErrorCode::ZeroVector, "norming functionals of the zero vector");
  }
  const double tol = scaled_tol(ball.eps(), nx);
  DualFace out;
  std::vector<Vector> gens;
  for (std::size_t f = 0; f < ball.facets().size(); ++f) {
    if (ball.facets()[f](x) >= nx - tol) {
      out.generators.push_back(static_cast<int>(f));
      gens.push_back(ball.facets()[f].coeffs);
    }
  }
  out.dim = linalg::affine_dim(gens, ball.eps());
  return out;
}

int minimal_face(const PolytopeBall& ball, const Vector& x) {
  const DualFace df = norming_functionals(ball, x);
  std::vector<int> meet = ball.face(ball.facet_face(df.generators[0])).vertex_ids;
  for (int g : df.generators) {
    const auto& ids = ball.face(ball.facet_face(g)).vertex_ids;
    std::vector<int> next;
    std::set_intersection(meet.begin(), meet.end(), ids.begin(), ids.end(), std::back_inserter(next));
    meet = std::move(next);
  }
  return ball.find_face(meet);
}

std::vector<int> exposed_vertices(const PolytopeBall& ball, const Functional& phi) {
  const double top = dual_norm(ball, phi);
  const double tol = scaled_tol(ball.eps(), std::abs(top));
  std::vector<int> ids;
  for (std::size_t v = 0; v < ball.vertices().size(); ++v) {
    if (phi(ball.vertices()[v]) >= top - tol) ids.push_back(static_cast<int>(v));
  }
  return ids;
}

Subspace face_span(const PolytopeBall& ball, int face_id) {
  return Subspace{linalg::orthonormal_basis(ball.face_points(face_id), ball.dim(), 1e-9)};
}

Subspace span(const std::vector<int>& face_ids, const PolytopeBall& ball) {
  std::vector<Matrix> bases;
  for (int id : face_ids) bases.push_back(face_span(ball, id).basis);
  return Subspace{linalg::intersect_subspaces(bases, ball.dim(), 1e-9)};
}

bool faces_disjoint(const Face& a, const Face& b) {
  std::vector<int> meet;
  std::set_intersection(a.vertex_ids.begin(), a.vertex_ids.end(), b.vertex_ids.begin(), b.vertex_ids.end(),
                        std::back_inserter(meet));
  return meet.empty();
}

}  // namespace polyft
