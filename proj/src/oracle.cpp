#include "polyft/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <random>

#include "polyft/linalg.hpp"

namespace polyft {

namespace {

// Objective with the facet matrix packed once.
class Objective {
 public:
  explicit Objective(const Instance& instance) : sites_(instance.sites) {
    const auto& facets = instance.ball.facets();
    f_.resize(static_cast<Eigen::Index>(facets.size()), instance.ball.dim());
    for (std::size_t i = 0; i < facets.size(); ++i) f_.row(static_cast<Eigen::Index>(i)) = facets[i].coeffs.transpose();
    for (const Vector& s : sites_) offsets_.push_back(f_ * s);
  }

  double operator()(const Vector& x) const {
    const Vector fx = f_ * x;
    double total = 0.0;
    for (const Vector& o : offsets_) total += (fx - o).maxCoeff();
    return total;
  }

 private:
  std::vector<Vector> sites_;
  Matrix f_;
  std::vector<Vector> offsets_;
};

constexpr double kGolden = 0.6180339887498949;

// Distance to a candidate set; full-dimensional sets test their facets first.
class HullDistance {
 public:
  HullDistance(const std::vector<Vector>& points, int affine_dim, double tol) : points_(points), tol_(tol) {
    if (!points.empty() && affine_dim == points[0].size()) facets_ = linalg::hull_facets(points, tol);
  }

  double operator()(const Vector& p) const {
    if (!facets_.empty()) {
      double worst = -std::numeric_limits<double>::infinity();
      for (const auto& f : facets_) worst = std::max(worst, f.normal.dot(p) - f.offset);
      if (worst <= tol_) return 0.0;
    }
    return linalg::distance_to_hull(p, points_, tol_);
  }

 private:
  std::vector<Vector> points_;
  double tol_;
  std::vector<linalg::HullFacet> facets_;
};

}  // namespace

double lipschitz_constant(const Instance& instance) {
  double m = 0.0;
  for (const Functional& f : instance.ball.facets()) m = std::max(m, f.coeffs.norm());
  return static_cast<double>(instance.sites.size()) * m;
}

GridSpec default_grid(const Instance& instance, double h, int levels) {
  validate(instance);
  const int d = instance.ball.dim();
  Vector lo = instance.sites[0], hi = instance.sites[0];
  for (const Vector& s : instance.sites) {
    lo = lo.cwiseMin(s);
    hi = hi.cwiseMax(s);
  }
  const double spread = (hi - lo).maxCoeff();
  const double margin = std::max(2.0 * instance.ball.circumradius(), spread);
  return GridSpec{lo - Vector::Constant(d, margin), hi + Vector::Constant(d, margin), h, levels};
}

GridResult grid_minimize(const Instance& instance, const GridSpec& spec, double eps_oracle) {
  validate(instance);
  const int d = instance.ball.dim();
  if (spec.lo.size() != d || spec.hi.size() != d || !(spec.h > 0.0) || spec.levels < 1) {
    throw Error(ErrorCode::InvalidInput, "bad grid specification");
  }
  const Objective f(instance);
  const double lip = lipschitz_constant(instance);

  double spacing = spec.h * std::pow(10.0, spec.levels - 1);
  std::vector<long long> keys;  // d entries per point
  std::vector<int> counts(d);
  for (int k = 0; k < d; ++k) counts[k] = static_cast<int>(std::ceil((spec.hi(k) - spec.lo(k)) / spacing)) + 1;
  {
    std::vector<long long> key(d, 0);
    std::function<void(int)> fill = [&](int k) {
      if (k == d) {
        keys.insert(keys.end(), key.begin(), key.end());
        return;
      }
      for (int i = 0; i < counts[k]; ++i) {
        key[k] = i;
        fill(k + 1);
      }
    };
    fill(0);
  }

  GridResult out;
  std::vector<double> values;
  Vector x(d);
  for (int level = 0; level < spec.levels; ++level) {
    const std::size_t npts = keys.size() / d;
    values.assign(npts, 0.0);
    std::size_t best = 0;
    for (std::size_t p = 0; p < npts; ++p) {
      for (int k = 0; k < d; ++k) x(k) = spec.lo(k) + static_cast<double>(keys[p * d + k]) * spacing;
      values[p] = f(x);
      if (values[p] < values[best] ||
          (values[p] == values[best] &&
           std::lexicographical_compare(keys.begin() + p * d, keys.begin() + (p + 1) * d, keys.begin() + best * d,
                                        keys.begin() + (best + 1) * d))) {
        best = p;
      }
    }
    out.evaluations += static_cast<long>(npts);
    out.min_value = values[best];
    out.argmin = Vector(d);
    for (int k = 0; k < d; ++k) out.argmin(k) = spec.lo(k) + static_cast<double>(keys[best * d + k]) * spacing;

    if (level == spec.levels - 1) {
      for (std::size_t p = 0; p < npts; ++p) {
        if (values[p] > out.min_value + eps_oracle) continue;
        for (int k = 0; k < d; ++k) x(k) = spec.lo(k) + static_cast<double>(keys[p * d + k]) * spacing;
        out.argmin_cells.push_back(x);
      }
      break;
    }

    const double tube = lip * spacing * std::sqrt(static_cast<double>(d)) / 2.0;
    std::vector<long long> next;
    std::vector<long long> child(d);
    for (std::size_t p = 0; p < npts; ++p) {
      if (values[p] > out.min_value + tube) continue;
      std::function<void(int)> fill = [&](int k) {
        if (k == d) {
          next.insert(next.end(), child.begin(), child.end());
          return;
        }
        for (int j = -5; j < 5; ++j) {
          child[k] = 10 * keys[p * d + k] + j;
          fill(k + 1);
        }
      };
      fill(0);
    }
    keys = std::move(next);
    spacing /= 10.0;
  }
  return out;
}

SectionResult section_minimize(const Instance& instance, const Vector& lo, const Vector& hi,
                               const std::optional<std::pair<Vector, double>>& halfspace) {
  validate(instance);
  const int d = instance.ball.dim();
  const Objective f(instance);
  const Vector centre = (lo + hi) / 2.0;
  const double radius = (hi - lo).norm() / 2.0;

  // x = centre + axes * t, t_k in [tlo_k, thi_k].
  Matrix axes = Matrix::Identity(d, d);
  Vector tlo = lo - centre, thi = hi - centre;
  if (halfspace) {
    const Vector u = halfspace->first.normalized();
    const double start = halfspace->second / halfspace->first.norm() - u.dot(centre);
    const Matrix comp = linalg::orthogonal_complement(u, d, 1e-12);
    axes.col(0) = u;
    axes.rightCols(d - 1) = comp;
    tlo = Vector::Constant(d, -radius);
    thi = Vector::Constant(d, radius);
    tlo(0) = start;
    thi(0) = std::max(start, radius);
  }

  SectionResult best{std::numeric_limits<double>::infinity(), centre};
  Vector t = Vector::Zero(d);
  std::function<double(int)> inner = [&](int k) -> double {
    if (k == d) {
      const Vector x = centre + axes * t;
      const double v = f(x);
      if (v < best.value) best = {v, x};
      return v;
    }
    double a = tlo(k), b = thi(k);
    double c = b - kGolden * (b - a), e = a + kGolden * (b - a);
    t(k) = c;
    double fc = inner(k + 1);
    t(k) = e;
    double fe = inner(k + 1);
    const double stop = 1e-11 * std::max(1.0, radius);
    while (b - a > stop) {
      if (fc <= fe) {
        b = e;
        e = c;
        fe = fc;
        c = b - kGolden * (b - a);
        t(k) = c;
        fc = inner(k + 1);
      } else {
        a = c;
        c = e;
        fc = fe;
        e = a + kGolden * (b - a);
        t(k) = e;
        fe = inner(k + 1);
      }
    }
    return std::min(fc, fe);
  };
  inner(0);
  return best;
}

ConfirmationReport confirm_ft_set(const Instance& instance, const FTSet& set, const GridSpec& spec, int ring_samples,
                                  double eps_oracle) {
  validate(instance);
  if (set.vertices.empty()) throw Error(ErrorCode::InvalidInput, "empty solution set");
  const int d = instance.ball.dim();
  const Objective f(instance);
  ConfirmationReport rep;
  rep.ft_value = f(set.vertices[0]);
  const double tol_a = 10.0 * scaled_tol(instance.ball.eps(), rep.ft_value);
  std::vector<std::string> failures;

  // (a) constant on the set.
  std::vector<Vector> samples = set.vertices;
  Vector centroid = Vector::Zero(d);
  for (const Vector& v : set.vertices) centroid += v;
  centroid /= static_cast<double>(set.vertices.size());
  samples.push_back(centroid);
  for (std::size_t i = 0; i < set.vertices.size(); ++i) {
    for (std::size_t j = i + 1; j < set.vertices.size(); ++j) samples.push_back((set.vertices[i] + set.vertices[j]) / 2);
  }
  double lo = rep.ft_value, hi = rep.ft_value;
  for (const Vector& s : samples) {
    const double v = f(s);
    lo = std::min(lo, v);
    hi = std::max(hi, v);
    if (std::abs(v - rep.ft_value) > tol_a) rep.offending.push_back(s);
  }
  rep.value_spread = hi - lo;
  if (rep.value_spread > tol_a) failures.push_back("objective varies over the set");

  // Nothing beats the set.
  const GridResult grid = grid_minimize(instance, spec, eps_oracle);
  rep.grid_min = grid.min_value;
  if (grid.min_value < lo - tol_a) {
    failures.push_back("grid point below the claimed minimum");
    rep.offending.push_back(grid.argmin);
  }
  const SectionResult sec = section_minimize(instance, spec.lo, spec.hi);
  rep.section_min = sec.value;
  if (sec.value < lo - tol_a) {
    failures.push_back("section search below the claimed minimum");
    rep.offending.push_back(sec.point);
  }

  // (b) argmin cells near the set.
  const double hull_tol = 1e-9 * std::max(1.0, centroid.norm());
  const HullDistance distance(set.vertices, set.affine_dim, hull_tol);
  rep.argmin_cells = static_cast<int>(grid.argmin_cells.size());
  for (const Vector& c : grid.argmin_cells) {
    const double dist = distance(c);
    rep.max_argmin_distance = std::max(rep.max_argmin_distance, dist);
    if (dist > 2.0 * spec.h) rep.offending.push_back(c);
  }
  if (rep.max_argmin_distance > 2.0 * spec.h) failures.push_back("argmin cell far from the set");

  // (c) strictly larger on a ring outside.
  std::mt19937 rng(20240601);
  std::normal_distribution<double> gauss;
  rep.min_ring_margin = std::numeric_limits<double>::infinity();
  const double ring = 10.0 * spec.h;
  for (int k = 0; k < ring_samples; ++k) {
    Vector u(d);
    for (int j = 0; j < d; ++j) u(j) = gauss(rng);
    u.normalize();
    double r = ring;
    Vector x = centroid + r * u;
    while (distance(x) < ring) {
      r *= 1.5;
      x = centroid + r * u;
    }
    const double margin = f(x) - rep.ft_value;
    rep.min_ring_margin = std::min(rep.min_ring_margin, margin);
    ++rep.ring_samples;
    if (margin <= eps_oracle) rep.offending.push_back(x);
  }
  if (rep.ring_samples > 0 && rep.min_ring_margin <= eps_oracle) failures.push_back("ring sample not above the minimum");

  if (!failures.empty()) {
    std::string msg;
    for (const auto& s : failures) msg += (msg.empty() ? "" : "; ") + s;
    throw Error(ErrorCode::ConfirmationFailed, msg);
  }
  return rep;
}

std::optional<NonUniqueEvidence> confirm_non_unique(const Instance& instance, const GridSpec& spec,
                                                    double eps_oracle) {
  validate(instance);
  const int d = instance.ball.dim();
  const Objective f(instance);
  const SectionResult base = section_minimize(instance, spec.lo, spec.hi);
  const GridResult grid = grid_minimize(instance, spec, eps_oracle);
  const double m = std::min(base.value, grid.min_value);

  // Candidate directions: principal axes of the low-value cloud, then the axes.
  std::vector<Vector> dirs;
  const GridSpec loose{spec.lo, spec.hi, spec.h, spec.levels};
  const GridResult cloud = grid_minimize(instance, loose, lipschitz_constant(instance) * spec.h);
  if (cloud.argmin_cells.size() > 1) {
    Vector mean = Vector::Zero(d);
    for (const Vector& c : cloud.argmin_cells) mean += c;
    mean /= static_cast<double>(cloud.argmin_cells.size());
    Matrix centred(d, static_cast<Eigen::Index>(cloud.argmin_cells.size()));
    for (std::size_t i = 0; i < cloud.argmin_cells.size(); ++i) centred.col(static_cast<Eigen::Index>(i)) = cloud.argmin_cells[i] - mean;
    Eigen::JacobiSVD<Matrix> svd(centred, Eigen::ComputeThinU);
    for (int k = 0; k < d; ++k) dirs.push_back(svd.matrixU().col(k));
  }
  for (int k = 0; k < d; ++k) dirs.push_back(Vector::Unit(d, k));

  const double cut = 10.0 * spec.h;
  for (const Vector& dir : dirs) {
    for (double sgn : {1.0, -1.0}) {
      const Vector u = sgn * dir;
      const SectionResult q = section_minimize(instance, spec.lo, spec.hi, std::make_pair(u, u.dot(base.point) + cut));
      if (q.value <= m + eps_oracle) {
        return NonUniqueEvidence{base.point, q.point, (q.point - base.point).norm(), std::abs(q.value - base.value)};
      }
    }
  }
  (void)f;
  return std::nullopt;
}

}  // namespace polyft
