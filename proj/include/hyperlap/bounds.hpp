#pragma once

#include <utility>
#include <vector>

#include "hyperlap/hypergraph.hpp"
#include "hyperlap/matrix.hpp"

namespace hyperlap {

// Spectral enclosures from degree data alone (exact integers).
//
//   vertex_lo / vertex_hi : 2*deg_min(V) - max_v sum_{e: v in e} deg(e)
//                           and max_v sum_{e: v in e} deg(e)
//   edge_upper            : max_e sum_{v in e} deg(v)
//   pair_lo / pair_hi     : deg_min(V) -/+ max_v sum_{w != v} |co(v,w)-anti(v,w)|
//                           (pair_hi uses deg_max(V))
//   pair_edge_upper       : deg_max(E) + max_e sum_{f != e} |overlap(e,f)| with
//                           overlap = #(e_t∩f_t)+#(e_s∩f_s)-#(e_t∩f_s)-#(e_s∩f_t)
//   stable_vertex         : 2*deg(v) >  sum_{e: v in e} deg(e) for every v
//   stable_pairwise       : deg(v)   >  sum_{w != v} |co-anti|  for every v
//
// Every upper bound is >= 0, so the enclosure always contains lambda = 0.
// An empty hypergraph yields the degenerate enclosure [0, 0].
struct SpectralBounds {
  long long vertex_lo = 0, vertex_hi = 0;
  long long edge_upper = 0;
  long long pair_lo = 0, pair_hi = 0;
  long long pair_edge_upper = 0;
  bool stable_vertex = false;
  bool stable_pairwise = false;
};
SpectralBounds gershgorin_bounds(const DirectedHypergraph& h);

struct RealInterval {
  double lo = 0.0, hi = 0.0;
};

// Eigenvalue inclusion region for a symmetric 3x3 matrix: the three diagonal
// entries plus the two rational ovals
//   (a13^2 + |a13 a23 + a12 (lambda - a33)|) / (|lambda - a11| |lambda - a33|) >= 1
//   (a23^2 + |a13 a23 + a12 (lambda - a33)|) / (|lambda - a22| |lambda - a33|) >= 1
// resolved exactly into a finite union of closed intervals (piecewise
// quadratic case split), merged and sorted. Throws InputError unless m is
// symmetric 3x3.
std::vector<RealInterval> dms_inclusion_3x3(const Matrix& m);

bool region_contains(const std::vector<RealInterval>& region, double x, double tol);

// For an equipotent hypergraph: lambda_2 (second-lowest eigenvalue) against
// the bound #V/(#V-1) * deg_min(V). Throws InputError when not equipotent.
struct Lambda2Report {
  double lambda2 = 0.0;
  double bound = 0.0;
  bool holds = false;
};
Lambda2Report lambda2_bound_check(const DirectedHypergraph& h);

// Deleting hyperedges can only lower the bottom eigenvalue: reports
// lambda_1 before/after removing the listed hyperedge indices.
struct MonotonicityReport {
  double lambda1_before = 0.0;
  double lambda1_after = 0.0;
  bool holds = false;
};
MonotonicityReport surgery_monotonicity_oracle(const DirectedHypergraph& h,
                                               const std::vector<int>& edges_to_delete);

// pairing[e] lists (source, target) pairs forming a bijection between the
// endsets of hyperedge e. Requires every hyperedge to have endsets of one
// common size m (so the hypergraph is equipotent with deg(e) = 2m). The
// derived graph G replaces each hyperedge by its paired edges; then the
// bottom eigenvalues satisfy lambda_1(L_H) <= m * lambda_1(L_G). Throws
// InputError on a malformed pairing (not a bijection, or mixed endset sizes).
struct PairingReport {
  double lhs = 0.0;  // lambda_1 of the hypergraph Laplacian
  double rhs = 0.0;  // m * lambda_1 of the paired-graph Laplacian
  long long m = 0;
  bool holds = false;
};
PairingReport pairing_bound_check(
    const DirectedHypergraph& h,
    const std::vector<std::vector<std::pair<int, int>>>& pairing);

}  // namespace hyperlap
