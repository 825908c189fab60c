#include "polyft/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numeric>

namespace polyft::linalg {

Matrix orthonormal_basis(const Matrix& cols, double tol) {
  if (cols.cols() == 0) return Matrix(cols.rows(), 0);
  Eigen::JacobiSVD<Matrix> svd(cols, Eigen::ComputeFullU);
  const auto& sv = svd.singularValues();
  const double cutoff = tol * std::max(1.0, sv.size() > 0 ? sv(0) : 0.0);
  int r = 0;
  while (r < sv.size() && sv(r) > cutoff) ++r;
  return svd.matrixU().leftCols(r);
}

Matrix orthonormal_basis(const std::vector<Vector>& vectors, int dim, double tol) {
  Matrix m(dim, static_cast<Eigen::Index>(vectors.size()));
  for (std::size_t j = 0; j < vectors.size(); ++j) m.col(static_cast<Eigen::Index>(j)) = vectors[j];
  return orthonormal_basis(m, tol);
}

int rank(const std::vector<Vector>& vectors, int dim, double tol) {
  return static_cast<int>(orthonormal_basis(vectors, dim, tol).cols());
}

Matrix orthogonal_complement(const Matrix& basis, int dim, double tol) {
  if (basis.cols() == 0) return Matrix::Identity(dim, dim);
  Eigen::JacobiSVD<Matrix> svd(basis, Eigen::ComputeFullU);
  const auto& sv = svd.singularValues();
  const double cutoff = tol * std::max(1.0, sv(0));
  int r = 0;
  while (r < sv.size() && sv(r) > cutoff) ++r;
  return svd.matrixU().rightCols(dim - r);
}

Matrix intersect_subspaces(const std::vector<Matrix>& bases, int dim, double tol) {
  // x lies in every subspace iff it is orthogonal to every complement.
  std::vector<Vector> normals;
  for (const Matrix& b : bases) {
    const Matrix comp = orthogonal_complement(b, dim, tol);
    for (Eigen::Index j = 0; j < comp.cols(); ++j) normals.push_back(comp.col(j));
  }
  if (normals.empty()) return Matrix::Identity(dim, dim);
  const Matrix normal_span = orthonormal_basis(normals, dim, tol);
  return orthogonal_complement(normal_span, dim, tol);
}

int affine_dim(const std::vector<Vector>& points, double tol) {
  if (points.empty()) return -1;
  std::vector<Vector> diffs;
  diffs.reserve(points.size());
  for (std::size_t i = 1; i < points.size(); ++i) diffs.push_back(points[i] - points[0]);
  return rank(diffs, static_cast<int>(points[0].size()), tol);
}

namespace {

double cross2(const Vector& o, const Vector& a, const Vector& b) {
  return (a(0) - o(0)) * (b(1) - o(1)) - (a(1) - o(1)) * (b(0) - o(0));
}

void collect_ids(const std::vector<Vector>& points, HullFacet& f, double tol) {
  f.ids.clear();
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (f.normal.dot(points[i]) >= f.offset - tol) f.ids.push_back(static_cast<int>(i));
  }
}

std::vector<HullFacet> hull_facets_1d(const std::vector<Vector>& points, double tol) {
  double lo = std::numeric_limits<double>::infinity();
  double hi = -lo;
  for (const Vector& p : points) {
    lo = std::min(lo, p(0));
    hi = std::max(hi, p(0));
  }
  HullFacet upper{Vector::Constant(1, 1.0), hi, {}};
  HullFacet lower{Vector::Constant(1, -1.0), -lo, {}};
  collect_ids(points, upper, tol);
  collect_ids(points, lower, tol);
  return {upper, lower};
}

std::vector<HullFacet> hull_facets_2d(const std::vector<Vector>& points, double tol) {
  std::vector<int> order(points.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    if (points[a](0) != points[b](0)) return points[a](0) < points[b](0);
    return points[a](1) < points[b](1);
  });
  // Andrew's monotone chain; collinear points are popped.
  std::vector<int> hull(2 * order.size());
  std::size_t k = 0;
  for (int idx : order) {
    while (k >= 2 && cross2(points[hull[k - 2]], points[hull[k - 1]], points[idx]) <= tol) --k;
    hull[k++] = idx;
  }
  for (std::size_t i = order.size() - 1, t = k + 1; i-- > 0;) {
    const int idx = order[i];
    while (k >= t && cross2(points[hull[k - 2]], points[hull[k - 1]], points[idx]) <= tol) --k;
    hull[k++] = idx;
  }
  hull.resize(k - 1);

  std::vector<HullFacet> out;
  for (std::size_t i = 0; i < hull.size(); ++i) {
    const Vector& a = points[hull[i]];
    const Vector& b = points[hull[(i + 1) % hull.size()]];
    Vector n(2);
    n << (b(1) - a(1)), -(b(0) - a(0));  // counter-clockwise hull: outward is right of a->b
    const double len = n.norm();
    if (len <= tol) continue;
    n /= len;
    HullFacet f{n, n.dot(a), {}};
    collect_ids(points, f, tol);
    out.push_back(std::move(f));
  }
  return out;
}

std::vector<HullFacet> hull_facets_brute(const std::vector<Vector>& points, double tol) {
  const int m = static_cast<int>(points[0].size());
  const int count = static_cast<int>(points.size());
  std::vector<HullFacet> out;
  std::vector<int> subset(m);

  std::function<void(int, int)> rec = [&](int start, int depth) {
    if (depth == m) {
      Matrix diffs(m - 1, m);
      for (int r = 1; r < m; ++r) diffs.row(r - 1) = (points[subset[r]] - points[subset[0]]).transpose();
      Eigen::FullPivLU<Matrix> lu(diffs);
      lu.setThreshold(1e-10);
      const Matrix ker = lu.kernel();
      if (ker.cols() != 1) return;
      Vector n = ker.col(0);
      const double len = n.norm();
      if (len <= 0.0) return;
      n /= len;
      const double offset = n.dot(points[subset[0]]);
      double above = 0.0, below = 0.0;
      for (const Vector& p : points) {
        const double s = n.dot(p) - offset;
        above = std::max(above, s);
        below = std::min(below, s);
      }
      HullFacet f;
      if (above <= tol) {
        f = HullFacet{n, offset, {}};
      } else if (below >= -tol) {
        f = HullFacet{-n, -offset, {}};
      } else {
        return;
      }
      for (const HullFacet& g : out) {
        if ((g.normal - f.normal).norm() <= 1e3 * tol && std::abs(g.offset - f.offset) <= 1e3 * tol) return;
      }
      collect_ids(points, f, tol);
      out.push_back(std::move(f));
      return;
    }
    for (int i = start; i <= count - (m - depth); ++i) {
      subset[depth] = i;
      rec(i + 1, depth + 1);
    }
  };
  rec(0, 0);
  return out;
}

}  // namespace

std::vector<HullFacet> hull_facets(const std::vector<Vector>& points, double tol) {
  if (points.empty()) return {};
  switch (points[0].size()) {
    case 1: return hull_facets_1d(points, tol);
    case 2: return hull_facets_2d(points, tol);
    default: return hull_facets_brute(points, tol);
  }
}

double distance_to_hull(const Vector& p, const std::vector<Vector>& points, double tol) {
  if (points.empty()) return std::numeric_limits<double>::infinity();
  const int dim = static_cast<int>(p.size());
  const int count = static_cast<int>(points.size());
  const int max_size = std::min(count, dim + 1);
  double best = std::numeric_limits<double>::infinity();
  std::vector<int> subset;

  auto evaluate = [&]() {
    const Vector& s0 = points[subset[0]];
    const int k = static_cast<int>(subset.size()) - 1;
    if (k == 0) {
      best = std::min(best, (p - s0).norm());
      return;
    }
    Matrix a(dim, k);
    for (int j = 0; j < k; ++j) a.col(j) = points[subset[j + 1]] - s0;
    Eigen::ColPivHouseholderQR<Matrix> qr(a);
    qr.setThreshold(1e-12);
    if (qr.rank() < k) return;
    const Vector lambda = qr.solve(p - s0);
    if (lambda.minCoeff() < -tol || lambda.sum() > 1.0 + tol) return;
    best = std::min(best, (p - s0 - a * lambda).norm());
  };

  std::function<void(int)> rec = [&](int start) {
    if (!subset.empty()) evaluate();
    if (static_cast<int>(subset.size()) == max_size) return;
    for (int i = start; i < count; ++i) {
      subset.push_back(i);
      rec(i + 1);
      subset.pop_back();
    }
  };
  rec(0);
  return best;
}

double hausdorff(const std::vector<Vector>& a, const std::vector<Vector>& b, double tol) {
  // The distance to a convex set is convex, so the supremum over conv(a) is
  // attained at a point of a.
  double h = 0.0;
  for (const Vector& p : a) h = std::max(h, distance_to_hull(p, b, tol));
  for (const Vector& q : b) h = std::max(h, distance_to_hull(q, a, tol));
  return h;
}

std::vector<Vector> dedupe(const std::vector<Vector>& points, double tol) {
  std::vector<Vector> out;
  for (const Vector& p : points) {
    const bool seen = std::any_of(out.begin(), out.end(), [&](const Vector& q) { return (p - q).norm() <= tol; });
    if (!seen) out.push_back(p);
  }
  return out;
}

}  // namespace polyft::linalg
