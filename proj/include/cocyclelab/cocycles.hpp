#pragma once

// Alternation and homogeneous coboundary operators on pointwise cochain
// evaluators, the two explicit log-cross-ratio cocycles on a product of two
// hyperbolic boundaries, and the seeded Monte-Carlo verification harness.

#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "cocyclelab/boundary.hpp"

namespace cocyclelab {

/// A degree-p cochain as a pointwise evaluator on generic (p+1)-tuples.
struct CochainEvaluator {
  int degree = 0;
  std::function<double(const std::vector<ProductBoundaryPoint>&)> eval;

  double operator()(const std::vector<ProductBoundaryPoint>& tuple) const { return eval(tuple); }
};

/// Signed average over all (p+1)! permutations of the arguments. Degrees
/// above 7 (8! evaluations) are rejected with DegreeTooLarge.
CochainEvaluator alternation(const CochainEvaluator& f);

/// Homogeneous coboundary: alternating sum of the p+2 face evaluations.
CochainEvaluator coboundary(const CochainEvaluator& f);

/// Degree-3 cocycle on 4-tuples over two factors:
/// det( log b(x0,x1,x2,x3)  log b(x1,x2,x3,x0) ; same in y ).
double c3(const std::vector<ProductBoundaryPoint>& tuple);

/// Degree-4 cocycle on 5-tuples over two factors:
/// det( log b(x0,x1,x2,x3)  log b(x1,x2,x3,x4) ; same in y ).
double c4(const std::vector<ProductBoundaryPoint>& tuple);

CochainEvaluator c3_evaluator();
CochainEvaluator c4_evaluator();

enum class Check {
  cocycle_c3,
  cocycle_c4,
  alt_c3_fixed,
  alt_c4_zero,
  invariance_c3,
  invariance_c4,
  crossratio_invariance,
  reversal_c4,
};

Check parse_check(const std::string& name);
std::string check_name(Check c);
std::vector<std::string> all_check_names();

struct VerificationReport {
  std::string check_name;
  long long trials = 0;
  long long rejected = 0;
  double max_abs_residual = 0.0;
  double max_rel_residual = 0.0;
  double tolerance = 0.0;
  bool pass = false;
  std::uint64_t seed = 0;
};

/// Trial-conditioning thresholds; the defaults are what the CLI uses.
struct VerifyOptions {
  double separation = 0.1;          // sampler separation within each factor
  double crossratio_min = 1e-6;     // reject trials with a cross-ratio outside
  double crossratio_max = 1e6;      //   [crossratio_min, crossratio_max]
  double transformed_min_dist = 1e-6;  // reject transformed tuples closer than this
};

/// Run `trials` accepted seeded trials of the named check for the product of
/// the boundaries of H^n x H^m (dims = (n, m), boundary dimensions n-1, m-1).
/// Residuals are normalized: cocycle checks by the face-magnitude sum + 1,
/// invariance checks by the reference magnitude + 1, alternation checks by
/// the permutation-magnitude scale + 1. pass = max normalized residual <= tol.
VerificationReport verify(Check check, std::pair<int, int> dims, long long trials, double tol,
                          std::uint64_t seed, const VerifyOptions& opts = {});

inline VerificationReport verify(const std::string& check, std::pair<int, int> dims,
                                 long long trials, double tol, std::uint64_t seed,
                                 const VerifyOptions& opts = {}) {
  return verify(parse_check(check), dims, trials, tol, seed, opts);
}

}  // namespace cocyclelab
