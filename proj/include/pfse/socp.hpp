#pragma once

#include <vector>

#include "pfse/types.hpp"

namespace pfse {

/// Cone structure of a stacked slack vector: the first `nonneg` entries lie
/// in the nonnegative orthant, followed by one second-order cone per entry
/// of `soc` (entry value = cone dimension, first coordinate is the radius).
struct ConeDims {
  int nonneg = 0;
  std::vector<int> soc;

  int total() const {
    int m = nonneg;
    for (int d : soc) m += d;
    return m;
  }
  /// Barrier degree (orthant entries count 1 each, each cone counts 1).
  int degree() const { return nonneg + static_cast<int>(soc.size()); }
};

/// Convex cone quadratic program
///
///   minimize    (1/2) x^T diag(p) x + c^T x
///   subject to  h - G x in K
///
/// with K described by `dims`. `p_diag` may be empty (pure LP/SOCP).
struct ConeProgram {
  SpMatR g;
  VecR h;
  VecR p_diag;
  VecR c;
  ConeDims dims;
};

enum class ConeStatus { Optimal, MaxIter, NumericalFailure };

struct ConeSolution {
  ConeStatus status = ConeStatus::NumericalFailure;
  VecR x, s, z;
  double primal_obj = 0.0;
  double dual_obj = 0.0;
  double gap = 0.0;
  double relgap = 0.0;
  double pres = 0.0;
  double dres = 0.0;
  int iterations = 0;
};

struct ConeSettings {
  int max_iter = 50;
  double feas_tol = 1e-8;
  double rel_gap_tol = 1e-8;
  double abs_gap_tol = 1e-9;
};

/// Primal-dual interior-point solver (Mehrotra predictor-corrector with
/// Nesterov-Todd scaling) for the cone program above. Dense normal-equation
/// KKT solves; intended for the small, well-scaled programs produced by the
/// successive convexification loop.
ConeSolution solve_cone_program(const ConeProgram& prog, const ConeSettings& settings = {});

}  // namespace pfse
