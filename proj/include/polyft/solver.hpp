#pragma once

#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "polyft/ball.hpp"

namespace polyft {

struct Instance {
  PolytopeBall ball;
  std::vector<Vector> sites;
};

// Throws InvalidInput on empty or mis-dimensioned site lists.
void validate(const Instance& instance);

// Index pairs (i, j), i < j, of sites that coincide within tolerance.
std::vector<std::pair<int, int>> duplicate_sites(const Instance& instance);

// Sum of norm(x - x_i).
double objective(const Instance& instance, const Vector& x);

struct FTPoint {
  Vector point;
  double value = 0.0;
};

// One global minimizer via the LP  min sum t_i  s.t.  t_i >= phi_f(x - x_i).
FTPoint find_ft_point(const Instance& instance);

// Witness that base_point minimizes the objective: one norming functional per
// site with zero sum. In extension mode the base point coincides with the
// sites listed in coincident_sites; their functionals come from the dual unit
// ball instead (subdifferential condition).
struct FTCertificate {
  Vector base_point;
  std::vector<Functional> functionals;
  double slack = 0.0;     // eps minus the worst violation of the norming equalities
  double residual = 0.0;  // dual norm of the functional sum
  bool extension_mode = false;
  std::vector<int> coincident_sites;
};

struct Refutation {
  Vector base_point;
  double margin = 0.0;  // optimal value of the feasibility LP (> eps)
};

struct Verification {
  std::optional<FTCertificate> certificate;
  std::optional<Refutation> refutation;

  bool certified() const { return certificate.has_value(); }
};

struct VerifyOptions {
  bool allow_extension = true;
};

Verification verify_ft_point(const Instance& instance, const Vector& x0, const VerifyOptions& options = {});

// apex + cone(generators).
struct Cone {
  Vector apex;
  std::vector<Vector> generators;

  int dim() const;
};

// x minus the cone over the face of S exposed by phi.
Cone cone(const PolytopeBall& ball, const Vector& x, const Functional& phi);

enum class FTSetTag { Point, Segment, Polygon, Solid };

std::string_view to_string(FTSetTag tag);

struct FTSet {
  std::vector<Vector> vertices;  // polygon vertices are in cyclic order
  int affine_dim = 0;
  FTSetTag tag = FTSetTag::Point;
  double objective_value = 0.0;
  std::optional<FTCertificate> certificate;
};

// Builds an FTSet from a point cloud whose convex hull is the set.
FTSet make_ft_set(const std::vector<Vector>& points, double tol);

FTSet intersect_cones(const std::vector<Cone>& cones, double eps = 1e-9);

// Complete solution set: base point from the LP (moved off the sites when
// possible), certificate functionals, cone intersection.
FTSet ft_locus(const Instance& instance);

// Same, from a caller-chosen base point that must be a minimizer and not a site.
FTSet ft_locus_from(const Instance& instance, const Vector& base_point);

// Closed form for sites on one line: odd n gives the middle site; even n gives
// the set between the two middle sites, which is the segment when the line
// direction is a vertex direction of S and a larger polytope otherwise.
FTSet collinear_ft(const Instance& instance);

// Point of the optimal set maximizing c . x (LP with the objective pinned at f*).
Vector optimal_support_point(const Instance& instance, double optimum, const Vector& c);

// The optimal set computed only from LP support queries (no cones), used as
// an independent cross-check of ft_locus.
FTSet lp_optimal_face(const Instance& instance);

}  // namespace polyft
