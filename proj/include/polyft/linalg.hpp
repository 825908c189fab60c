#pragma once

#include <vector>

#include "polyft/core.hpp"

namespace polyft::linalg {

// Columns of the returned matrix form an orthonormal basis of the column
// space of `cols`. Singular values below tol * max(1, sigma_max) are dropped.
Matrix orthonormal_basis(const Matrix& cols, double tol);

Matrix orthonormal_basis(const std::vector<Vector>& vectors, int dim, double tol);

int rank(const std::vector<Vector>& vectors, int dim, double tol);

// Orthonormal basis of the orthogonal complement of span(basis) in R^dim.
Matrix orthogonal_complement(const Matrix& basis, int dim, double tol);

// Intersection of linear subspaces, each given by a basis (columns).
Matrix intersect_subspaces(const std::vector<Matrix>& bases, int dim, double tol);

// Dimension of the affine hull of a point set (-1 for the empty set).
int affine_dim(const std::vector<Vector>& points, double tol);

struct HullFacet {
  Vector normal;  // unit, outward
  double offset;  // normal . x <= offset on the hull
  std::vector<int> ids;
};

// Facets of conv(points) for a point set that is full-dimensional in R^m.
// m = 1: two endpoint "facets"; m = 2: monotone chain; m >= 3: brute force over
// m-subsets, intended for the small point counts used here.
std::vector<HullFacet> hull_facets(const std::vector<Vector>& points, double tol);

// Euclidean distance from p to conv(points). Exact: the nearest point lies in
// the relative interior of a simplex on an affinely independent subset.
double distance_to_hull(const Vector& p, const std::vector<Vector>& points, double tol);

// Symmetric Hausdorff distance between conv(a) and conv(b).
double hausdorff(const std::vector<Vector>& a, const std::vector<Vector>& b, double tol);

// Removes points closer than tol to an earlier point; preserves order.
std::vector<Vector> dedupe(const std::vector<Vector>& points, double tol);

}  // namespace polyft::linalg
