#pragma once

#include <vector>

#include "polyft/ball.hpp"

namespace polyft {

// Linear Euclidean isometries mapping the vertex set of S onto itself, stored
// as permutations of vertex ids and of face ids. Found by matching the Gram
// matrix of a fixed vertex basis against every ordered vertex tuple.
class SymmetryGroup {
 public:
  explicit SymmetryGroup(const PolytopeBall& ball);

  int order() const { return static_cast<int>(vertex_perms_.size()); }
  const std::vector<std::vector<int>>& vertex_perms() const { return vertex_perms_; }
  const std::vector<std::vector<int>>& face_perms() const { return face_perms_; }
  const std::vector<Matrix>& matrices() const { return matrices_; }

  // Smallest face id in the orbit of each face.
  const std::vector<int>& orbit_min() const { return orbit_min_; }

  // Sorted image of a face tuple under group element g.
  std::vector<int> apply(int g, const std::vector<int>& faces) const;

  // True iff the sorted tuple is lexicographically minimal in its orbit.
  bool is_canonical(const std::vector<int>& sorted_faces) const;

  // Lexicographically smallest image of a face tuple.
  std::vector<int> canonical(const std::vector<int>& faces) const;

 private:
  std::vector<std::vector<int>> vertex_perms_;
  std::vector<std::vector<int>> face_perms_;
  std::vector<Matrix> matrices_;
  std::vector<int> orbit_min_;
};

}  // namespace polyft
