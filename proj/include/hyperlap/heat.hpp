#pragma once

#include <optional>
#include <vector>

#include "hyperlap/eig.hpp"
#include "hyperlap/matrix.hpp"

namespace hyperlap {

// exp(-tA) synthesized from a spectral decomposition; exactly symmetric
// (upper triangle mirrored). Throws InputError on t < 0 unless allow_backward
// is set (the backward flow exp(+tA) is meaningful for some generators and is
// requested explicitly).
Matrix heat_operator(const SpectralDecomposition& s, double t, bool allow_backward = false);

// exp(-t(A - lambda_1)), the flow rescaled by its bottom eigenvalue; converges
// to the lambda_1 eigenprojector as t grows.
Matrix rescaled_heat_operator(const SpectralDecomposition& s, double t);

// Rows: exp(-t_k A) u0 for each requested time.
Matrix heat_trajectory(const SpectralDecomposition& s, const std::vector<double>& u0,
                       const std::vector<double>& times);

double op_norm_inf(const Matrix& m);  // max absolute row sum
double min_entry(const Matrix& m);

// clamp(10 / gap, 1, 200) where gap separates the two lowest eigenvalue
// clusters; 1 when the spectrum is a single cluster.
double default_horizon(const SpectralDecomposition& s);

enum class SemigroupProperty { positivity, inf_contractivity, domination };

// Result of a threshold scan over [0, horizon]:
//   t0 = 0          : the property holds on the whole grid;
//   t0 = t          : the property fails somewhere and holds from t on
//                     (upper end of a bisected bracket of width <= 1e-6 around
//                     the last grid violation);
//   t0 = nullopt    : still violated at the horizon (certified_tail = false).
// certified_tail reports whether an asymptotic certificate guarantees the
// property beyond the horizon:
//   positivity        : min entry of the lambda_1 projector > entry_tol;
//   inf_contractivity : lambda_1 > zero_tol, or ||P_1||_inf < 1 - 1e-9;
//   domination        : see eventual_domination_threshold.
struct ThresholdReport {
  SemigroupProperty property = SemigroupProperty::positivity;
  std::optional<double> t0;
  double horizon = 0.0;
  double entry_tol = kEntryTol;
  bool certified_tail = false;
};

// Scans a 1024-point grid on [0, horizon] (endpoints included) for the last
// violation of the property, then bisects. Deterministic; the OpenMP variant
// evaluates grid points in parallel and reduces by index, so results are
// independent of thread count. Throws InputError on horizon <= 0 and on
// property == domination (use eventual_domination_threshold).
ThresholdReport threshold_search(const SpectralDecomposition& s, SemigroupProperty prop,
                                 std::optional<double> horizon = {}, double tol = kEntryTol);
ThresholdReport threshold_search_serial(const SpectralDecomposition& s, SemigroupProperty prop,
                                        std::optional<double> horizon = {},
                                        double tol = kEntryTol);

// exp(-tA) dominates exp(-tB) at time t: every entry of
// exp(-tA) - |exp(-tB)| is >= -tol (modulus comparison).
bool domination(const SpectralDecomposition& sa, const SpectralDecomposition& sb, double t,
                double tol = kEntryTol);

// Threshold scan for domination of exp(-tB) by exp(-tA); same grid semantics
// as threshold_search. Tail certificate: either lambda_1(B) > lambda_1(A)
// with the lambda_1(A) projector strictly positive, or the two bottom
// eigenvalues agree (within kClusterTol) and P_A - |P_B| clears -tol.
ThresholdReport eventual_domination_threshold(const SpectralDecomposition& sa,
                                              const SpectralDecomposition& sb,
                                              std::optional<double> horizon = {},
                                              double tol = kEntryTol);

}  // namespace hyperlap
