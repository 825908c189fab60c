#pragma once

#include <optional>
#include <vector>

#include "polyft/solver.hpp"

namespace polyft {

struct GridSpec {
  Vector lo;
  Vector hi;
  double h = 0.01;  // finest spacing
  int levels = 3;   // the coarsest grid has spacing h * 10^(levels-1)
};

// Box around the sites with a margin of max(ball diameter, site spread).
GridSpec default_grid(const Instance& instance, double h = 0.01, int levels = 3);

struct GridResult {
  double min_value = 0.0;
  Vector argmin;                   // best grid point (lexicographic tie-break)
  std::vector<Vector> argmin_cells;  // finest-level points within eps_oracle of min_value
  long evaluations = 0;
};

// Grid search with refinement: at each level the cells whose value lies within
// the Lipschitz tube min + L h sqrt(d) / 2 are subdivided 10x per axis.
GridResult grid_minimize(const Instance& instance, const GridSpec& spec, double eps_oracle = 1e-4);

// Euclidean Lipschitz constant of the objective: n * max_f |phi_f|.
double lipschitz_constant(const Instance& instance);

struct SectionResult {
  double value = 0.0;
  Vector point;
};

// Nested golden-section minimization of the (convex) objective over the box,
// optionally restricted to the half-space normal . x >= offset.
SectionResult section_minimize(const Instance& instance, const Vector& lo, const Vector& hi,
                               const std::optional<std::pair<Vector, double>>& halfspace = std::nullopt);

struct ConfirmationReport {
  double ft_value = 0.0;           // objective on the candidate set
  double grid_min = 0.0;
  double section_min = 0.0;
  double value_spread = 0.0;       // (a) max - min of f over samples of the set
  double max_argmin_distance = 0.0;  // (b) farthest argmin cell from the set
  int argmin_cells = 0;
  double min_ring_margin = 0.0;    // (c) smallest f - ft_value over ring samples
  int ring_samples = 0;
  std::vector<Vector> offending;
};

// Checks a claimed solution set against the grid: f constant on the set,
// argmin cells within 2h of it, and f > min + eps_oracle at ring samples at
// distance >= 10h. Throws ConfirmationFailed with the offending points.
ConfirmationReport confirm_ft_set(const Instance& instance, const FTSet& set, const GridSpec& spec,
                                  int ring_samples = 50, double eps_oracle = 1e-4);

struct NonUniqueEvidence {
  Vector first;
  Vector second;
  double separation = 0.0;
  double gap = 0.0;  // |f(first) - f(second)|
};

// Two near-minimizers at least 10h apart, found without the solver: the grid
// argmin, and a section minimum over a half-space cut 10h away from it in a
// principal direction of the low-value grid cloud. Empty if none exists.
std::optional<NonUniqueEvidence> confirm_non_unique(const Instance& instance, const GridSpec& spec,
                                                    double eps_oracle = 1e-4);

}  // namespace polyft
