#pragma once

#include <string>
#include <vector>

#include "hyperlap/hypergraph.hpp"
#include "hyperlap/matrix.hpp"

namespace hyperlap {

// A sorted subset of the vertices of an n-vertex hypergraph.
struct VertexSubset {
  int parent_n = 0;
  std::vector<int> members;  // sorted, distinct
};
VertexSubset make_subset(int parent_n, std::vector<int> members);
std::vector<int> subset_complement(const VertexSubset& s);

// P L P where P zeroes coordinates outside the kept set: the generator of the
// flow with absorption on the removed vertices. Returned at full size n x n
// (rows/columns of removed vertices are zero).
IntMatrix dirichlet_laplacian(const DirectedHypergraph& h, const VertexSubset& keep);

// Sub-hypergraph on the kept vertices retaining only hyperedges with both
// endsets entirely inside the kept set.
DirectedHypergraph induced_subhypergraph(const DirectedHypergraph& h, const VertexSubset& keep);

// Sub-hypergraph on the kept vertices where every hyperedge survives with its
// endsets intersected with the kept set (possibly empty on either side).
// laplacian(d_subhypergraph(h, keep)) equals the principal submatrix of
// laplacian(h) on the kept rows/columns, exactly.
DirectedHypergraph d_subhypergraph(const DirectedHypergraph& h, const VertexSubset& keep);

// The three union constructions whose spectra are known in closed form.
enum class UnionMode {
  co_oriented_full,   // G plus one all-target hyperedge on V: spectrum
                      // {0^(c-1)} u {#V} u nonzero(L_G); projector positive iff G complete
  bipartite_signless, // all-target copies of G's edges plus one hyperedge splitting
                      // the bipartition: spectrum {0^(c-1)} u {#V} u nonzero(Q_G)
  equipotent_half     // G plus one hyperedge (first half -> second half):
                      // lambda_1 = 0 simple with kernel spanned by the ones vector
};

struct UnionSpectrumReport {
  DirectedHypergraph h;           // the constructed union
  int components = 0;
  std::vector<double> predicted;  // modes co_oriented_full / bipartite_signless
  std::vector<double> computed;
  bool spectrum_matches = false;
  bool lambda1_simple = false;         // mode equipotent_half
  bool kernel_vector_positive = false; // mode equipotent_half: kernel = span(ones)
  double projector_min_entry = 0.0;    // mode co_oriented_full: lowest-cluster projector
  bool projector_positive = false;
};

// Builds the union for the requested mode and checks the predicted spectrum
// (1e-7). Preconditions (InputError): G must be a graph; bipartite_signless
// needs G bipartite; equipotent_half needs #V even and G connected.
UnionSpectrumReport union_spectrum_verifier(const DirectedHypergraph& g, UnionMode mode);

// Compares the absorbing flows of two kept sets V' and V'' at t in
// {0.1, 1, 5}: the V'-flow dominates the V''-flow iff V'' is contained in V'.
// Both restricted sub-hypergraphs must generate positive flows; otherwise the
// check refuses (InputError naming a violating vertex pair).
struct DominationCheck {
  bool nested = false;      // V'' subset of V'
  bool dominated = false;   // sampled domination of the part flows
  bool consistent = false;  // dominated == nested
  std::string detail;
};
DominationCheck dirichlet_domination_check(const DirectedHypergraph& h, const VertexSubset& keep1,
                                           const VertexSubset& keep2);

}  // namespace hyperlap
