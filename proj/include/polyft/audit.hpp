#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "polyft/solver.hpp"

namespace polyft {

// Faces of S (ids into ball.faces()) with functionals that expose exactly
// their face and sum to zero.
struct ConsistentFaceSet {
  std::vector<int> faces;
  std::vector<Functional> witnesses;
  double min_interior_slack = 0.0;
};

// Max-slack LP over the dual faces. Empty when the best slack is <= eps.
std::optional<ConsistentFaceSet> is_consistent(const PolytopeBall& ball, const std::vector<int>& faces);

// Span conditions of the odd-n criteria.
//   General: the spans of all faces share a line.
//   Space3d: vertex spans share a line; every vertex lies in the plane of every
//            edge; edge spans share a line (d = 3).
//   Plane:   at least one flattening, and all vertex faces on one line (d = 2).
enum class SpanFilter { None, General, Space3d, Plane };

std::string_view to_string(SpanFilter filter);

bool passes_filter(const PolytopeBall& ball, const std::vector<int>& faces, SpanFilter filter);

struct EnumerateOptions {
  SpanFilter filter = SpanFilter::None;
  bool use_symmetry = true;
  bool first_only = false;
  long budget = 2'000'000;  // consistency LPs
};

// Consistent sets of n distinct faces, one per symmetry orbit, in
// lexicographic order of their face ids.
std::vector<ConsistentFaceSet> enumerate_consistent_sets(const PolytopeBall& ball, int n,
                                                         const EnumerateOptions& options = {});

// Sites at the face barycenters (relative interior points).
Instance witness_instance(const PolytopeBall& ball, const ConsistentFaceSet& set);

enum class Verdict { UniqueForAll, NonUniqueExists };

std::string_view to_string(Verdict verdict);

struct Witness {
  ConsistentFaceSet faces;
  Instance instance;
  FTSet ft_set;
};

struct UniquenessReport {
  std::string ball;
  int n = 0;
  Verdict verdict = Verdict::UniqueForAll;
  std::optional<Witness> witness;
  std::vector<std::string> trace;
};

bool is_strictly_convex(const PolytopeBall& ball, std::vector<std::string>* trace = nullptr);

UniquenessReport uniqueness_audit(const PolytopeBall& ball, int n, const std::string& name = "");
UniquenessReport plane_criterion_check(const PolytopeBall& ball, int n, const std::string& name = "");
UniquenessReport space3d_criterion_check(const PolytopeBall& ball, int n, const std::string& name = "");

// Running tally over every set returned by is_consistent in this process.
// A violation is a three-face consistent set with two faces sharing a vertex.
struct DisjointnessStats {
  long sets = 0;
  long triples = 0;
  long violations = 0;
};

DisjointnessStats disjointness_stats();

}  // namespace polyft
