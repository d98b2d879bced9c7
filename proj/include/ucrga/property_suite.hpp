#pragma once

#include <cstdint>

#include "ucrga/generalized_inverse.hpp"
#include "ucrga/random.hpp"
#include "ucrga/rga.hpp"

namespace ucrga {

struct SuiteOptions {
  RgaOptions rga{};
  std::uint64_t seed = 42;
  // Random unit changes are log-uniform over [1/scale_span, scale_span]. Kept
  // moderate so that the strict method's nonsingularity test still passes on
  // scaled well-conditioned inputs.
  double scale_span = 1e2;
};

inline constexpr double kPermutationThreshold = 1e-9;
inline constexpr double kScalingThreshold = 1e-7;
inline constexpr double kGiThreshold = 1e-8;
inline constexpr double kUnitaryThreshold = 1e-8;
inline constexpr double kDiagonalThreshold = 1e-7;

// Inverse the given method plugs into the RGA.
inline DenseMatrix method_inverse(const DenseMatrix& g, RgaMethod method, const RgaOptions& opts) {
  switch (method) {
    case RgaMethod::strict: return gauss_inverse(g);
    case RgaMethod::mp: return pinv(g, opts.rank_tol);
    case RgaMethod::uc: return uc_inverse(g, opts.uc());
  }
  throw InvalidValueError("unknown RGA method");
}

//
// Runs every property check for one matrix and method. Throws what
// compute_rga throws (e.g. SingularMatrixError for strict on singular input).
//
inline PropertyReport run_property_suite(const DenseMatrix& g, RgaMethod method, const SuiteOptions& opts = {}) {
  random::Engine rng(opts.seed);
  const RgaResult base = compute_rga(g, method, opts.rga);
  PropertyReport report = rga_summary(base);

  const Permutation p = random::permutation(rng, g.rows());
  const Permutation q = random::permutation(rng, g.cols());
  report.add("permutation_equivariance", permutation_equivariance_residual(g, p, q, method, opts.rga),
             kPermutationThreshold);

  const double lo = 1.0 / opts.scale_span;
  const DiagScaling d = random::log_uniform_scaling(rng, g.rows(), lo, opts.scale_span);
  const DiagScaling e = random::log_uniform_scaling(rng, g.cols(), lo, opts.scale_span);
  report.add("scaling_invariance", scaling_invariance_residual(g, d, e, method, opts.rga), kScalingThreshold);

  const GiResiduals gi = check_gi_identities(g, method_inverse(g, method, opts.rga));
  report.add("gi_identity_axa", gi.residual_axa, kGiThreshold);
  report.add("gi_identity_xax", gi.residual_xax, kGiThreshold);

  if (method == RgaMethod::uc) {
    report.add("uc_diagonal_consistency", uc_consistency_residual(g, d, e, opts.rga.uc()), kDiagonalThreshold);
  } else if (method == RgaMethod::mp) {
    const DenseMatrix u = random::orthogonal(rng, g.rows());
    const DenseMatrix v = random::orthogonal(rng, g.cols());
    report.add("mp_unitary_consistency", unitary_consistency_residual(g, u, v, opts.rga.rank_tol),
               kUnitaryThreshold);
  }
  return report;
}

}  // namespace ucrga
