#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "polyft/audit.hpp"
#include "polyft/oracle.hpp"

namespace polyft {

// Section of the dodecahedron through an edge and the midpoints of two
// opposite edges. alpha is half the dihedral angle, beta the angle between
// the zero level of the first functional and the unit level of the second.
struct DodecahedronSection {
  double alpha = 0.0;
  double beta = 0.0;
  double a = 0.0;  // edge
  double b = 0.0;  // pentagon height
  double c = 0.0;  // b cos(alpha)
  double d = 0.0;  // b sin(alpha)
  double tan_beta = 0.0;
};

// Throws CaseFailed unless tan(beta) = 2 within 1e-12 and beta > alpha.
DodecahedronSection dodecahedron_constants();

// Facets f1..f12 of the dodecahedron: f1 has the highest normal, f2..f6 go
// counterclockwise around it (seen from above), f7..f11 are the lower ring
// with f7 touching f2 and f6, f8 touching f2 and f3, and so on; f12 = -f1.
struct DodecahedronLabels {
  std::vector<int> facets;  // facets[i] is the face id of f_{i+1}

  int facet(int i) const { return facets.at(i - 1); }
  // Face ids of e_{i,j} and v_{i,j,k}; -1 if the facets do not meet there.
  int edge(const PolytopeBall& ball, int i, int j) const;
  int vertex(const PolytopeBall& ball, int i, int j, int k) const;
};

DodecahedronLabels dodecahedron_labels(const PolytopeBall& ball);

struct CaseReport {
  std::string name;
  std::string ball;
  bool passed = false;
  std::string expected;
  std::string observed;
  Instance instance;
  std::optional<FTSet> ft_set;
  std::optional<Verdict> verdict;
  std::optional<ConfirmationReport> oracle;
  std::optional<NonUniqueEvidence> evidence;
  std::optional<DodecahedronSection> constants;
  std::vector<std::pair<std::string, std::string>> labels;
  std::vector<std::string> notes;
};

class CaseFailure : public Error {
 public:
  explicit CaseFailure(CaseReport report)
      : Error(ErrorCode::CaseFailed, report.name + ": expected " + report.expected + ", got " + report.observed),
        report_(std::move(report)) {}

  const CaseReport& report() const { return report_; }

 private:
  CaseReport report_;
};

std::vector<std::string> case_names();

// Runs one worked case end to end (audit, locus, oracle). Throws CaseFailure
// carrying the full report when the outcome differs from the expected one.
// `n` only applies to prism_nonunique(m) (default 3).
CaseReport reproduce_case(const std::string& name, int n = 3);

}  // namespace polyft
