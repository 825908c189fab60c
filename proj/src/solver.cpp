#include "polyft/solver.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>

#include "polyft/linalg.hpp"
#include "polyft/lp.hpp"

namespace polyft {

namespace {

double instance_scale(const Instance& instance) {
  double s = 1.0;
  for (const Vector& x : instance.sites) s = std::max(s, x.lpNorm<Eigen::Infinity>());
  return s;
}

double site_tol(const Instance& instance) { return 10.0 * scaled_tol(instance.ball.eps(), instance_scale(instance)); }

// Calls fn on every k-subset of {0..n-1} in lexicographic order.
void for_each_subset(int n, int k, const std::function<void(const std::vector<int>&)>& fn) {
  if (k > n || k < 0) return;
  std::vector<int> idx(k);
  std::iota(idx.begin(), idx.end(), 0);
  while (true) {
    fn(idx);
    int i = k - 1;
    while (i >= 0 && idx[i] == n - k + i) --i;
    if (i < 0) return;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

bool lex_less(const Vector& a, const Vector& b) {
  for (Eigen::Index i = 0; i < a.size(); ++i) {
    if (a(i) != b(i)) return a(i) < b(i);
  }
  return false;
}

}  // namespace

void validate(const Instance& instance) {
  if (instance.sites.empty()) throw Error(ErrorCode::InvalidInput, "no sites given");
  for (const Vector& x : instance.sites) {
    if (x.size() != instance.ball.dim()) throw Error(ErrorCode::InvalidInput, "site dimension differs from the ball");
    if (!all_finite(x)) throw Error(ErrorCode::InvalidInput, "non-finite site coordinate");
  }
}

std::vector<std::pair<int, int>> duplicate_sites(const Instance& instance) {
  const double tol = site_tol(instance);
  std::vector<std::pair<int, int>> out;
  const int n = static_cast<int>(instance.sites.size());
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if ((instance.sites[i] - instance.sites[j]).norm() <= tol) out.emplace_back(i, j);
    }
  }
  return out;
}

double objective(const Instance& instance, const Vector& x) {
  double total = 0.0;
  for (const Vector& s : instance.sites) total += norm(instance.ball, x - s);
  return total;
}

namespace {

// Rows of  min sum t  s.t.  phi_f . x - t_i <= phi_f . x_i ; variables (x, t).
lp::Problem ft_program(const Instance& instance) {
  const int d = instance.ball.dim();
  const int n = static_cast<int>(instance.sites.size());
  lp::Problem p(d + n);
  for (int k = 0; k < d; ++k) p.set_free(k);
  Vector c = Vector::Zero(d + n);
  c.tail(n).setOnes();
  p.set_objective(c);
  for (int i = 0; i < n; ++i) {
    for (const Functional& f : instance.ball.facets()) {
      Vector row = Vector::Zero(d + n);
      row.head(d) = f.coeffs;
      row(d + i) = -1.0;
      p.add_row(row, lp::Sense::LessEqual, f(instance.sites[i]));
    }
  }
  return p;
}

}  // namespace

FTPoint find_ft_point(const Instance& instance) {
  validate(instance);
  const int d = instance.ball.dim();
  const lp::Result r = lp::solve(ft_program(instance));
  if (r.status != lp::Status::Optimal) throw Error(ErrorCode::LPFailure, "Fermat-Torricelli program did not solve");
  FTPoint out;
  out.point = r.x.head(d);
  out.value = objective(instance, out.point);
  return out;
}

Vector optimal_support_point(const Instance& instance, double optimum, const Vector& c) {
  const int d = instance.ball.dim();
  const int n = static_cast<int>(instance.sites.size());
  double slack = 1e-12 * std::max(1.0, optimum);
  for (int attempt = 0; attempt < 3; ++attempt, slack *= 100.0) {
    lp::Problem p = ft_program(instance);
    Vector obj = Vector::Zero(d + n);
    obj.head(d) = -c;
    p.set_objective(obj);
    Vector pin = Vector::Zero(d + n);
    pin.tail(n).setOnes();
    p.add_row(pin, lp::Sense::LessEqual, optimum + slack);
    const lp::Result r = lp::solve(p);
    if (r.status == lp::Status::Optimal) return r.x.head(d);
    if (r.status == lp::Status::Unbounded) throw Error(ErrorCode::LPFailure, "optimal set reported unbounded");
  }
  throw Error(ErrorCode::LPFailure, "support query on the optimal set failed");
}

Verification verify_ft_point(const Instance& instance, const Vector& x0, const VerifyOptions& options) {
  validate(instance);
  const PolytopeBall& ball = instance.ball;
  const int d = ball.dim();
  const int n = static_cast<int>(instance.sites.size());
  if (x0.size() != d || !all_finite(x0)) throw Error(ErrorCode::InvalidInput, "bad candidate point");
  const double eps = ball.eps();
  const double tol = site_tol(instance);

  std::vector<int> far, near;
  for (int i = 0; i < n; ++i) {
    ((instance.sites[i] - x0).norm() <= tol ? near : far).push_back(i);
  }
  if (!near.empty() && !options.allow_extension) {
    throw Error(ErrorCode::CoincidentSite, "candidate coincides with site " + std::to_string(near[0]));
  }

  // Generators of the norming dual face for each far site.
  std::vector<std::vector<Vector>> gens(n);
  int total = 0;
  for (int i : far) {
    for (int g : norming_functionals(ball, instance.sites[i] - x0).generators) {
      gens[i].push_back(ball.facets()[g].coeffs);
    }
    total += static_cast<int>(gens[i].size());
  }

  const int k = static_cast<int>(near.size());
  const bool extension = k > 0;
  const int extra = extension ? 1 : d;
  lp::Problem p(total + extra);
  Vector c = Vector::Zero(total + extra);
  c.tail(extra).setOnes();
  p.set_objective(c);

  int col = 0;
  Matrix gen_matrix = Matrix::Zero(d, total);
  for (int i : far) {
    Vector row = Vector::Zero(total + extra);
    for (const Vector& g : gens[i]) {
      gen_matrix.col(col) = g;
      row(col++) = 1.0;
    }
    p.add_row(row, lp::Sense::Equal, 1.0);
  }
  if (extension) {
    // dual norm of the far sum at most k
    for (const Vector& v : ball.vertices()) {
      Vector row = Vector::Zero(total + 1);
      row.head(total) = gen_matrix.transpose() * v;
      row(total) = -1.0;
      p.add_row(row, lp::Sense::LessEqual, static_cast<double>(k));
    }
  } else {
    for (int a = 0; a < d; ++a) {
      Vector row = Vector::Zero(total + d);
      row.head(total) = gen_matrix.row(a).transpose();
      row(total + a) = -1.0;
      p.add_row(row, lp::Sense::LessEqual, 0.0);
      row.head(total) = -gen_matrix.row(a).transpose();
      p.add_row(row, lp::Sense::LessEqual, 0.0);
    }
  }

  const lp::Result r = lp::solve(p);
  if (r.status != lp::Status::Optimal) throw Error(ErrorCode::LPFailure, "certificate program did not solve");

  Verification out;
  if (r.objective > eps) {
    out.refutation = Refutation{x0, r.objective};
    return out;
  }

  FTCertificate cert;
  cert.base_point = x0;
  cert.extension_mode = extension;
  cert.coincident_sites = near;
  cert.functionals.assign(n, Functional{Vector::Zero(d)});
  Vector sum = Vector::Zero(d);
  col = 0;
  double defect = 0.0;
  for (int i : far) {
    Vector phi = Vector::Zero(d);
    for (std::size_t j = 0; j < gens[i].size(); ++j) phi += r.x(col++) * gens[i][j];
    cert.functionals[i] = Functional{phi};
    sum += phi;
    const Vector u = instance.sites[i] - x0;
    const double nu = norm(ball, u);
    defect = std::max(defect, std::abs(dual_norm(ball, cert.functionals[i]) - 1.0));
    defect = std::max(defect, std::abs(cert.functionals[i](u) - nu) / std::max(1.0, nu));
  }
  for (int j : near) {
    cert.functionals[j] = Functional{-sum / static_cast<double>(k)};
    defect = std::max(defect, dual_norm(ball, cert.functionals[j]) - 1.0);
  }
  Vector all = Vector::Zero(d);
  for (const Functional& f : cert.functionals) all += f.coeffs;
  cert.residual = std::max(dual_norm(ball, Functional{all}), dual_norm(ball, Functional{-all}));
  cert.slack = eps - defect;
  out.certificate = std::move(cert);
  return out;
}

int Cone::dim() const { return linalg::rank(generators, static_cast<int>(apex.size()), 1e-9); }

Cone cone(const PolytopeBall& ball, const Vector& x, const Functional& phi) {
  const double dn = dual_norm(ball, phi);
  if (std::abs(dn - 1.0) > scaled_tol(ball.eps(), 1.0) * 10.0) {
    throw Error(ErrorCode::NotNorming, "functional does not have dual norm 1");
  }
  Cone c;
  c.apex = x;
  for (int v : exposed_vertices(ball, phi)) c.generators.push_back(-ball.vertices()[v]);
  return c;
}

std::string_view to_string(FTSetTag tag) {
  switch (tag) {
    case FTSetTag::Point: return "point";
    case FTSetTag::Segment: return "segment";
    case FTSetTag::Polygon: return "polygon";
    case FTSetTag::Solid: return "solid";
  }
  return "point";
}

FTSet make_ft_set(const std::vector<Vector>& points, double tol) {
  if (points.empty()) throw Error(ErrorCode::EmptyIntersection, "no points");
  std::vector<Vector> pts = linalg::dedupe(points, tol);
  std::sort(pts.begin(), pts.end(), lex_less);
  const int d = static_cast<int>(pts[0].size());
  std::vector<Vector> diffs;
  for (const Vector& p : pts) diffs.push_back(p - pts[0]);
  const Matrix basis = linalg::orthonormal_basis(diffs, d, tol);
  const int m = static_cast<int>(basis.cols());

  FTSet out;
  out.affine_dim = m;
  if (m == 0) {
    out.tag = FTSetTag::Point;
    out.vertices = {pts[0]};
    return out;
  }
  std::vector<Vector> coords;
  for (const Vector& p : pts) coords.push_back(basis.transpose() * (p - pts[0]));
  if (m == 1) {
    auto [lo, hi] = std::minmax_element(coords.begin(), coords.end(),
                                        [](const Vector& a, const Vector& b) { return a(0) < b(0); });
    out.tag = FTSetTag::Segment;
    out.vertices = {pts[lo - coords.begin()], pts[hi - coords.begin()]};
    std::sort(out.vertices.begin(), out.vertices.end(), lex_less);
    return out;
  }

  const auto hull = linalg::hull_facets(coords, tol);
  std::vector<std::vector<Vector>> normals_at(pts.size());
  for (const auto& f : hull) {
    for (int id : f.ids) normals_at[id].push_back(f.normal);
  }
  std::vector<int> keep;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (linalg::rank(normals_at[i], m, 1e-7) == m) keep.push_back(static_cast<int>(i));
  }
  if (m == 2) {
    out.tag = FTSetTag::Polygon;
    Vector centre = Vector::Zero(2);
    for (int i : keep) centre += coords[i];
    centre /= static_cast<double>(keep.size());
    auto angle = [&](int i) {
      const Vector r = coords[i] - centre;
      return std::atan2(r(1), r(0));
    };
    // keep[0] is the lexicographically smallest vertex; walk counterclockwise from it.
    const double a0 = angle(keep[0]);
    auto rel = [&](int i) {
      double a = angle(i) - a0;
      while (a < 0) a += 2.0 * M_PI;
      return a;
    };
    std::sort(keep.begin() + 1, keep.end(), [&](int a, int b) { return rel(a) < rel(b); });
  } else {
    out.tag = FTSetTag::Solid;
  }
  for (int i : keep) out.vertices.push_back(pts[i]);
  return out;
}

namespace {

struct Constraints {
  std::vector<Vector> ineq_a;
  std::vector<double> ineq_b;
  std::vector<Vector> eq_a;
  std::vector<double> eq_b;
};

void add_cone(const Cone& c, Constraints& cs) {
  const int d = static_cast<int>(c.apex.size());
  std::vector<Vector> gens;
  for (const Vector& g : c.generators) {
    if (g.norm() > 0.0) gens.push_back(g / g.norm());
  }
  const Matrix basis = linalg::orthonormal_basis(gens, d, 1e-9);
  const int r = static_cast<int>(basis.cols());
  const Matrix comp = linalg::orthogonal_complement(basis, d, 1e-9);
  for (Eigen::Index j = 0; j < comp.cols(); ++j) {
    cs.eq_a.push_back(comp.col(j));
    cs.eq_b.push_back(comp.col(j).dot(c.apex));
  }
  if (r == 0) return;
  if (r == 1) {
    Vector b = basis.col(0);
    if (b.dot(gens[0]) < 0) b = -b;
    cs.ineq_a.push_back(-b);
    cs.ineq_b.push_back(-b.dot(c.apex));
    return;
  }
  std::vector<Vector> local;
  for (const Vector& g : gens) local.push_back(basis.transpose() * g);
  const int k = static_cast<int>(local.size());
  std::vector<Vector> normals;
  for_each_subset(k, r - 1, [&](const std::vector<int>& idx) {
    Matrix m(r - 1, r);
    for (int i = 0; i < r - 1; ++i) m.row(i) = local[idx[i]].transpose();
    Eigen::FullPivLU<Matrix> lu(m);
    lu.setThreshold(1e-10);
    const Matrix ker = lu.kernel();
    if (ker.cols() != 1) return;
    Vector nrm = ker.col(0).normalized();
    double lo = 0.0, hi = 0.0;
    for (const Vector& g : local) {
      lo = std::min(lo, nrm.dot(g));
      hi = std::max(hi, nrm.dot(g));
    }
    if (hi > 1e-9 && lo < -1e-9) return;
    if (hi > 1e-9) nrm = -nrm;
    for (const Vector& o : normals) {
      if ((o - nrm).norm() < 1e-9) return;
    }
    normals.push_back(nrm);
  });
  for (const Vector& nl : normals) {
    const Vector nrm = basis * nl;
    cs.ineq_a.push_back(nrm);
    cs.ineq_b.push_back(nrm.dot(c.apex));
  }
}

}  // namespace

FTSet intersect_cones(const std::vector<Cone>& cones, double eps) {
  if (cones.empty()) throw Error(ErrorCode::InvalidInput, "no cones");
  const int d = static_cast<int>(cones[0].apex.size());
  double scale = 1.0;
  for (const Cone& c : cones) {
    if (c.apex.size() != d) throw Error(ErrorCode::InvalidInput, "cones of mixed dimension");
    scale = std::max(scale, c.apex.lpNorm<Eigen::Infinity>());
  }
  const double tol = 10.0 * scaled_tol(eps, scale);

  Constraints cs;
  for (const Cone& c : cones) add_cone(c, cs);

  // Affine subspace cut out by the equalities: y = y0 + N z.
  Vector y0 = Vector::Zero(d);
  Matrix null = Matrix::Identity(d, d);
  if (!cs.eq_a.empty()) {
    Matrix a(static_cast<Eigen::Index>(cs.eq_a.size()), d);
    Vector b(a.rows());
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
      a.row(i) = cs.eq_a[i].transpose();
      b(i) = cs.eq_b[i];
    }
    Eigen::JacobiSVD<Matrix> svd(a, Eigen::ComputeFullV | Eigen::ComputeThinU);
    y0 = svd.solve(b);
    if ((a * y0 - b).lpNorm<Eigen::Infinity>() > tol) {
      throw Error(ErrorCode::EmptyIntersection, "cone spans have no common point");
    }
    const Vector sv = svd.singularValues();
    const double cut = 1e-9 * std::max(1.0, sv.size() ? sv(0) : 0.0);
    int r = 0;
    for (Eigen::Index i = 0; i < sv.size(); ++i) r += sv(i) > cut ? 1 : 0;
    null = svd.matrixV().rightCols(d - r);
  }
  const int m = static_cast<int>(null.cols());

  std::vector<Vector> az;
  std::vector<double> bz;
  for (std::size_t i = 0; i < cs.ineq_a.size(); ++i) {
    const Vector a = null.transpose() * cs.ineq_a[i];
    const double b = cs.ineq_b[i] - cs.ineq_a[i].dot(y0);
    if (a.norm() <= 1e-9) {
      if (b < -tol) throw Error(ErrorCode::EmptyIntersection, "cones do not meet");
      continue;
    }
    az.push_back(a);
    bz.push_back(b);
  }

  if (m == 0) return make_ft_set({y0}, tol);

  // Feasibility and boundedness.
  lp::Problem prob(m);
  for (int k = 0; k < m; ++k) prob.set_free(k);
  for (std::size_t i = 0; i < az.size(); ++i) prob.add_row(az[i], lp::Sense::LessEqual, bz[i]);
  {
    const lp::Result r = lp::solve(prob);
    if (r.status == lp::Status::Infeasible) throw Error(ErrorCode::EmptyIntersection, "cones do not meet");
    if (r.status != lp::Status::Optimal) throw Error(ErrorCode::LPFailure, "feasibility program failed");
  }
  for (int k = 0; k < m; ++k) {
    for (double sgn : {1.0, -1.0}) {
      Vector c = Vector::Zero(m);
      c(k) = -sgn;
      prob.set_objective(c);
      const lp::Result r = lp::solve(prob);
      if (r.status == lp::Status::Unbounded) throw Error(ErrorCode::UnboundedIntersection, "cone intersection is unbounded");
      if (r.status != lp::Status::Optimal) throw Error(ErrorCode::LPFailure, "boundedness program failed");
    }
  }

  // Vertices: feasible basic solutions.
  std::vector<Vector> verts;
  for_each_subset(static_cast<int>(az.size()), m, [&](const std::vector<int>& idx) {
    Matrix a(m, m);
    Vector b(m);
    for (int i = 0; i < m; ++i) {
      a.row(i) = az[idx[i]].transpose();
      b(i) = bz[idx[i]];
    }
    Eigen::FullPivLU<Matrix> lu(a);
    lu.setThreshold(1e-10);
    if (lu.rank() < m) return;
    const Vector z = lu.solve(b);
    for (std::size_t i = 0; i < az.size(); ++i) {
      if (az[i].dot(z) > bz[i] + tol) return;
    }
    verts.push_back(y0 + null * z);
  });
  if (verts.empty()) throw Error(ErrorCode::LPFailure, "no vertex found in a bounded nonempty intersection");
  return make_ft_set(verts, tol);
}

FTSet ft_locus_from(const Instance& instance, const Vector& base_point) {
  const Verification v = verify_ft_point(instance, base_point, VerifyOptions{false});
  if (!v.certified()) throw Error(ErrorCode::InvalidInput, "base point is not a Fermat-Torricelli point");
  const FTCertificate& cert = *v.certificate;
  std::vector<Cone> cones;
  for (std::size_t i = 0; i < instance.sites.size(); ++i) {
    cones.push_back(cone(instance.ball, instance.sites[i], cert.functionals[i]));
  }
  FTSet out = intersect_cones(cones, instance.ball.eps());
  out.objective_value = objective(instance, base_point);
  out.certificate = cert;
  return out;
}

FTSet ft_locus(const Instance& instance) {
  validate(instance);
  const FTPoint p = find_ft_point(instance);
  const double tol = site_tol(instance);
  auto on_site = [&](const Vector& x) {
    for (const Vector& s : instance.sites) {
      if ((s - x).norm() <= 1e3 * tol) return true;
    }
    return false;
  };
  if (!on_site(p.point)) return ft_locus_from(instance, p.point);

  // The LP landed on a site: look for other minimizers.
  const int d = instance.ball.dim();
  std::vector<Vector> found{p.point};
  for (int k = 0; k < d; ++k) {
    for (double sgn : {1.0, -1.0}) {
      Vector c = Vector::Zero(d);
      c(k) = sgn;
      found.push_back(optimal_support_point(instance, p.value, c));
    }
  }
  found = linalg::dedupe(found, 1e3 * tol);
  if (found.size() > 1) {
    Vector mean = Vector::Zero(d);
    for (const Vector& q : found) mean += q;
    mean /= static_cast<double>(found.size());
    std::vector<Vector> candidates{mean};
    for (const Vector& q : found) {
      for (double t : {0.5, 0.3, 0.7}) candidates.push_back(p.point + t * (q - p.point));
    }
    for (const Vector& q : candidates) {
      if (!on_site(q)) return ft_locus_from(instance, q);
    }
  }

  const Verification v = verify_ft_point(instance, p.point);
  if (!v.certified()) throw Error(ErrorCode::LPFailure, "LP minimizer failed verification");
  FTSet out = make_ft_set({p.point}, tol);
  out.objective_value = p.value;
  out.certificate = v.certificate;
  return out;
}

FTSet collinear_ft(const Instance& instance) {
  validate(instance);
  const int n = static_cast<int>(instance.sites.size());
  const double tol = site_tol(instance);
  const auto& s = instance.sites;

  int ia = 0, ib = 0;
  double best = 0.0;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const double dist = (s[i] - s[j]).norm();
      if (dist > best) best = dist, ia = i, ib = j;
    }
  }
  auto finish = [&](FTSet set) {
    set.objective_value = objective(instance, set.vertices[0]);
    return set;
  };
  if (best <= tol) return finish(make_ft_set({s[0]}, tol));

  const Vector w = (s[ib] - s[ia]) / best;
  std::vector<std::pair<double, int>> order;
  for (int i = 0; i < n; ++i) {
    const Vector r = s[i] - s[ia];
    const double t = w.dot(r);
    if ((r - t * w).norm() > tol) throw Error(ErrorCode::NotCollinear, "site " + std::to_string(i) + " is off the line");
    order.emplace_back(t, i);
  }
  std::stable_sort(order.begin(), order.end(),
                   [](const auto& a, const auto& b) { return a.first < b.first; });

  if (n % 2 == 1) return finish(make_ft_set({s[order[n / 2].second]}, tol));

  const Vector& a = s[order[n / 2 - 1].second];
  const Vector& b = s[order[n / 2].second];
  if ((b - a).norm() <= tol) return finish(make_ft_set({a}, tol));

  const int face = minimal_face(instance.ball, b - a);
  const auto& pts = instance.ball.face_points(face);
  if (instance.ball.face(face).dim == 0) return finish(make_ft_set({a, b}, tol));
  // (a + cone F) meets (b - cone F) in a polytope of the dimension of F.
  Cone from_a{a, pts};
  Cone from_b{b, {}};
  for (const Vector& v : pts) from_b.generators.push_back(-v);
  return finish(intersect_cones({from_a, from_b}, instance.ball.eps()));
}

FTSet lp_optimal_face(const Instance& instance) {
  validate(instance);
  const int d = instance.ball.dim();
  const FTPoint p = find_ft_point(instance);
  const double tol = 1e-8 * instance_scale(instance);
  auto support = [&](const Vector& c) { return optimal_support_point(instance, p.value, c); };

  // Affine hull of the optimal set.
  std::vector<Vector> pts{p.point};
  Matrix basis(d, 0);
  for (bool grew = true; grew;) {
    grew = false;
    const Matrix comp = linalg::orthogonal_complement(basis, d, 1e-9);
    for (Eigen::Index j = 0; j < comp.cols(); ++j) {
      for (double sgn : {1.0, -1.0}) {
        const Vector c = sgn * comp.col(j);
        const Vector q = support(c);
        if (c.dot(q - p.point) > tol) {
          pts.push_back(q);
          grew = true;
        }
      }
    }
    if (grew) {
      std::vector<Vector> diffs;
      for (const Vector& q : pts) diffs.push_back(q - p.point);
      basis = linalg::orthonormal_basis(diffs, d, tol);
    }
  }
  const int m = static_cast<int>(basis.cols());

  if (m == 1) {
    pts = {support(basis.col(0)), support(-basis.col(0))};
  } else if (m >= 2) {
    for (bool grew = true; grew;) {
      grew = false;
      std::vector<Vector> coords;
      for (const Vector& q : pts) coords.push_back(basis.transpose() * (q - p.point));
      for (const auto& f : linalg::hull_facets(coords, tol)) {
        const Vector q = support(basis * f.normal);
        if (f.normal.dot(basis.transpose() * (q - p.point)) > f.offset + tol) {
          bool fresh = true;
          for (const Vector& o : pts) fresh = fresh && (o - q).norm() > tol;
          if (fresh) {
            pts.push_back(q);
            grew = true;
          }
        }
      }
    }
  }
  FTSet out = make_ft_set(pts, tol);
  out.objective_value = p.value;
  return out;
}

}  // namespace polyft
