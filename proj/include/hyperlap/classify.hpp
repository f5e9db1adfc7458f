#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hyperlap/eig.hpp"
#include "hyperlap/heat.hpp"
#include "hyperlap/hypergraph.hpp"

namespace hyperlap {

// A decided property with human-readable evidence. `witness` is set for both
// outcomes (the certifying inequality, or the violating pair/row); `number`
// carries the decisive quantity when one exists (a norm, a product, ...).
struct Flag {
  bool value = false;
  std::string witness;
  std::optional<double> number;
};

// Exact structural tests on the Laplacian / degree data.
Flag is_positive_generator(const DirectedHypergraph& h);   // co(v,w) <= anti(v,w) for all v != w
Flag is_inf_contractive(const DirectedHypergraph& h);      // sum_w |co-anti| <= deg(v) for all v
Flag is_equipotent_flag(const DirectedHypergraph& h);      // #sources == #targets per hyperedge
Flag is_stochastic(const DirectedHypergraph& h);           // equipotent AND positive
Flag is_irreducible_generator(const DirectedHypergraph& h);

// For every ordered pair v < w with co(v,w) > anti(v,w), append co-anti
// copies of the hyperedge ({v},{w}); the result always has a positive flow.
DirectedHypergraph positivity_repair(const DirectedHypergraph& h);

// Long-time behaviour decided from the spectral decomposition:
//   eventually_irreducible         : lambda_1 simple and phi_1 strictly positive
//   asymptotically_positive        : lambda_1 projector entrywise >= -entry_tol
//   asymptotically_inf_contractive : ||P_1||_inf <= 1 + entry_tol
//   exponentially_stable           : lambda_1 > zero_tol
struct AsymptoticFlags {
  Flag eventually_irreducible;
  Flag asymptotically_positive;
  Flag asymptotically_inf_contractive;
  Flag exponentially_stable;
  double lambda1 = 0.0;
  int lambda1_multiplicity = 0;      // size of the lowest cluster
  std::vector<double> phi1;          // lowest eigenvector, sign-normalized
};
AsymptoticFlags asymptotic_and_eventual_flags(const SpectralDecomposition& s);

// The full order-theoretic profile of the flow exp(-tL).
struct ClassificationReport {
  Flag positive;
  Flag irreducible_generator;
  Flag inf_contractive;
  Flag sub_markovian;   // positive AND inf_contractive
  Flag stochastic;
  Flag markovian;       // == stochastic for these self-adjoint generators
  Flag equipotent;
  Flag exponentially_stable;
  Flag eventually_irreducible;
  Flag asymptotically_positive;
  Flag asymptotically_inf_contractive;
  double lambda1 = 0.0;
  int lambda1_multiplicity = 0;
  std::vector<double> phi1;
  std::optional<ThresholdReport> positivity_threshold;
  std::optional<ThresholdReport> contractivity_threshold;
};
ClassificationReport classify(const DirectedHypergraph& h, bool with_thresholds = false,
                              std::optional<double> horizon = {});

}  // namespace hyperlap
