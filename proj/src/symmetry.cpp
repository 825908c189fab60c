#include "polyft/symmetry.hpp"

#include <algorithm>
#include <functional>

namespace polyft {

SymmetryGroup::SymmetryGroup(const PolytopeBall& ball) {
  const int d = ball.dim();
  const auto& vs = ball.vertices();
  const int nv = static_cast<int>(vs.size());
  const double tol = 1e-7 * std::max(1.0, ball.circumradius() * ball.circumradius());

  // Greedy basis of vertices.
  std::vector<int> basis;
  Matrix b(d, 0);
  for (int i = 0; i < nv && static_cast<int>(basis.size()) < d; ++i) {
    Matrix trial(d, b.cols() + 1);
    trial << b, vs[i];
    Eigen::FullPivLU<Matrix> lu(trial);
    lu.setThreshold(1e-9);
    if (lu.rank() == trial.cols()) {
      basis.push_back(i);
      b = trial;
    }
  }
  const Matrix b_inv = b.inverse();

  std::vector<int> chosen;
  std::function<void()> extend = [&]() {
    const int k = static_cast<int>(chosen.size());
    if (k == d) {
      Matrix c(d, d);
      for (int j = 0; j < d; ++j) c.col(j) = vs[chosen[j]];
      const Matrix t = c * b_inv;
      std::vector<int> perm(nv, -1);
      for (int i = 0; i < nv; ++i) {
        const Vector image = t * vs[i];
        for (int j = 0; j < nv; ++j) {
          if ((image - vs[j]).norm() <= tol) {
            perm[i] = j;
            break;
          }
        }
        if (perm[i] < 0) return;
      }
      vertex_perms_.push_back(perm);
      matrices_.push_back(t);
      return;
    }
    const Vector& bk = vs[basis[k]];
    for (int j = 0; j < nv; ++j) {
      if (std::abs(vs[j].squaredNorm() - bk.squaredNorm()) > tol) continue;
      bool ok = true;
      for (int i = 0; i < k && ok; ++i) ok = std::abs(vs[j].dot(vs[chosen[i]]) - bk.dot(vs[basis[i]])) <= tol;
      if (!ok) continue;
      chosen.push_back(j);
      extend();
      chosen.pop_back();
    }
  };
  extend();

  const int nf = static_cast<int>(ball.faces().size());
  for (const auto& perm : vertex_perms_) {
    std::vector<int> fp(nf);
    for (int f = 0; f < nf; ++f) {
      std::vector<int> ids;
      for (int v : ball.face(f).vertex_ids) ids.push_back(perm[v]);
      std::sort(ids.begin(), ids.end());
      fp[f] = ball.find_face(ids);
    }
    face_perms_.push_back(std::move(fp));
  }
  orbit_min_.resize(nf);
  for (int f = 0; f < nf; ++f) {
    int m = f;
    for (const auto& fp : face_perms_) m = std::min(m, fp[f]);
    orbit_min_[f] = m;
  }
}

std::vector<int> SymmetryGroup::apply(int g, const std::vector<int>& faces) const {
  std::vector<int> out;
  out.reserve(faces.size());
  for (int f : faces) out.push_back(face_perms_[g][f]);
  std::sort(out.begin(), out.end());
  return out;
}

bool SymmetryGroup::is_canonical(const std::vector<int>& sorted_faces) const {
  std::vector<int> image(sorted_faces.size());
  for (const auto& fp : face_perms_) {
    for (std::size_t i = 0; i < sorted_faces.size(); ++i) image[i] = fp[sorted_faces[i]];
    std::sort(image.begin(), image.end());
    if (image < sorted_faces) return false;
  }
  return true;
}

std::vector<int> SymmetryGroup::canonical(const std::vector<int>& faces) const {
  std::vector<int> best = faces;
  std::sort(best.begin(), best.end());
  for (int g = 0; g < order(); ++g) best = std::min(best, apply(g, faces));
  return best;
}

}  // namespace polyft
