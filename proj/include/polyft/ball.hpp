#pragma once

#include <map>
#include <string>
#include <vector>

#include "polyft/core.hpp"

namespace polyft {

// A linear functional on the primal space, x -> coeffs . x.
struct Functional {
  Vector coeffs;

  double operator()(const Vector& x) const { return coeffs.dot(x); }
  Functional operator-() const { return Functional{-coeffs}; }
};

// A face of the unit sphere. `dim` is the affine dimension of the face: 0 for
// a vertex, 1 for an edge (a "flattening" in the plane), d-1 for a facet.
struct Face {
  std::vector<int> vertex_ids;  // sorted
  int dim = 0;
  std::vector<int> exposing_facets;  // facet functionals whose level-1 set contains the face

  bool operator==(const Face& other) const { return vertex_ids == other.vertex_ids; }
};

struct Subspace {
  Matrix basis;  // orthonormal columns

  int dim() const { return static_cast<int>(basis.cols()); }
  bool contains(const Vector& v, double tol) const;
};

// A face of the dual ball, given by its generating dual vertices (facet ids).
struct DualFace {
  std::vector<int> generators;
  int dim = 0;
};

// Unit ball whose boundary S is a centrally symmetric polytope, together with
// its H-representation (facet functionals normalized to level 1), complete face
// lattice, and dual ball (vertices = facet functionals).
class PolytopeBall {
 public:
  int dim() const { return dim_; }
  double eps() const { return eps_; }

  const std::vector<Vector>& vertices() const { return vertices_; }
  const std::vector<Functional>& facets() const { return facets_; }
  const std::vector<Face>& faces() const { return faces_; }
  const std::vector<std::string>& warnings() const { return warnings_; }

  // Dual-ball vertices are the facet functionals.
  std::vector<Vector> dual_vertices() const;

  const Face& face(int id) const { return faces_[id]; }
  int facet_face(int facet_id) const { return facet_face_[facet_id]; }
  // Face index for a sorted vertex set, or -1.
  int find_face(const std::vector<int>& vertex_ids) const;
  int antipode(int vertex_id) const { return antipode_[vertex_id]; }
  int antipodal_face(int face_id) const;

  std::vector<Vector> face_points(int face_id) const;
  Vector barycenter(int face_id) const;
  // Largest Euclidean vertex norm.
  double circumradius() const { return circumradius_; }

 private:
  friend PolytopeBall build_ball(const std::vector<Vector>&, double);

  int dim_ = 0;
  double eps_ = 1e-9;
  double circumradius_ = 0.0;
  std::vector<Vector> vertices_;
  std::vector<Functional> facets_;
  std::vector<Face> faces_;
  std::vector<int> facet_face_;
  std::vector<int> antipode_;
  std::map<std::vector<int>, int> face_index_;
  std::vector<std::string> warnings_;
};

// Builds and validates a ball from a vertex cloud. Repeated points and points
// that are not extreme are dropped and recorded in warnings().
PolytopeBall build_ball(const std::vector<Vector>& vertices, double tolerance = 1e-9);

// Minkowski gauge: max over facet functionals.
double norm(const PolytopeBall& ball, const Vector& x);

// max over ball vertices of phi(v).
double dual_norm(const PolytopeBall& ball, const Functional& phi);

// Dual face of all norming functionals of x (x != 0).
DualFace norming_functionals(const PolytopeBall& ball, const Vector& x);

// Smallest face of S containing x / ||x|| (x != 0).
int minimal_face(const PolytopeBall& ball, const Vector& x);

// Vertex ids of the face of S exposed by phi (vertices where phi attains its max).
std::vector<int> exposed_vertices(const PolytopeBall& ball, const Functional& phi);

// Intersection of the linear spans of the given faces.
Subspace span(const std::vector<int>& face_ids, const PolytopeBall& ball);

// Linear span of a single face.
Subspace face_span(const PolytopeBall& ball, int face_id);

bool faces_disjoint(const Face& a, const Face& b);

}  // namespace polyft
