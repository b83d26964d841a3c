#pragma once

#include "specstar/bezout_model.hpp"

#include <string>
#include <vector>

namespace specstar {

struct PointVerdicts {
  bool oracle = false;
  bool topological = false;
  bool min_criterion = false;

  bool all_agree() const { return oracle == topological && oracle == min_criterion; }
};

struct Counterexample {
  int point = -1;
  std::string detail;
};

/// Per-point verdicts of the three Spec* characterizations plus the derived
/// flags. `agreed` is the set of points all three columns admit.
struct CriteriaReport {
  std::vector<PointVerdicts> verdicts;
  bool agreement = false;
  bool cic = false;
  int max_spec_ast_height = 0;
  std::vector<Counterexample> counterexamples;

  PointSet agreed() const;
};

/// Topological characterization: P is admitted iff the rim closure of every
/// enumerated closed cocompact pattern containing P is dense. The root meets
/// only the whole-space pattern and is always admitted.
PointSet spec_ast_topological(const BezoutSpectrum& spec);

/// Minimal-prime characterization: a non-root P is admitted iff every nested
/// realizable ideal pair inside P has intersecting sets of minimal primes;
/// the root is always admitted.
PointSet spec_ast_min_criterion(const BezoutSpectrum& spec);

/// Runs all three characterizations and assembles the report; any
/// disagreement is recorded with a counterexample payload rather than thrown.
CriteriaReport cross_validate(const BezoutSpectrum& spec);

/// Rebuilds the derived report fields from a (possibly altered) verdict
/// table; used by the fault-injection path of the CLI.
CriteriaReport assemble_report(const BezoutSpectrum& spec,
                               std::vector<PointVerdicts> verdicts);

/// True iff every point of the agreed Spec* has height at most 1. For the
/// shipped finite families a false return indicates a bug.
bool check_height_bound(const CriteriaReport& report, const BezoutSpectrum& spec);

/// True iff the order isomorphism carries the agreed Spec* of one model onto
/// the agreed Spec* of the other. Throws InputError when iso is not an order
/// isomorphism between the two posets.
bool check_phi_invariance(const BezoutSpectrum& a, const BezoutSpectrum& b,
                          const std::vector<int>& iso);

}  // namespace specstar
