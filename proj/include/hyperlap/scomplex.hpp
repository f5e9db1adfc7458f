#pragma once

#include <vector>

#include "hyperlap/hypergraph.hpp"
#include "hyperlap/matrix.hpp"

namespace hyperlap {

// Abstract simplicial complex on vertices 0..n-1. faces[i] holds the i-faces
// as strictly increasing tuples in lexicographic order. faces[0] always
// contains all n singletons (isolated vertices are part of the complex).
struct SimplicialComplex {
  int n = 0;
  std::vector<std::vector<std::vector<int>>> faces;
  int dimension() const { return static_cast<int>(faces.size()) - 1; }
};

// Downward closure of the given maximal faces. Throws InputError on a face
// with out-of-range or repeated vertices.
SimplicialComplex closure(int n, const std::vector<std::vector<int>>& maximal_faces);

// Coboundary delta_i: #S_{i+1} x #S_i. Row sigma, column tau = sigma \ {v_j}
// carries (-1)^j. Requires 0 <= i < dimension.
IntMatrix coboundary(const SimplicialComplex& k, int i);

// Hodge Laplacian in degree i: delta_{i-1} delta_{i-1}^T + delta_i^T delta_i
// (the missing boundary terms at i = 0 and i = dimension are zero).
IntMatrix hodge_laplacian(const SimplicialComplex& k, int i);

// Directed hypergraph whose dual Laplacian is exactly hodge_laplacian(k, i):
// vertices are the (i-1)- and (i+1)-faces, one hyperedge per i-face, with the
// incidence matrix the stack of delta_{i-1}^T over delta_i.
DirectedHypergraph hypergraph_embedding(const SimplicialComplex& k, int i);

// Structure of the dual flow of an oriented graph.
struct GraphDualReport {
  int components = 0;
  int cyclomatic = 0;       // #E - #V + components
  int dual_kernel_dim = 0;  // numeric kernel of L*
  bool kernel_matches_cyclomatic = false;
  bool forest = false;
  bool exponentially_stable = false;  // iff forest
  long long deg_max = 0;
  bool positive_orientation_exists = false;  // iff deg_max <= 2 (verified constructively)
  bool given_orientation_positive = false;
  bool stochastic = false;     // of the given orientation's dual
  bool sub_markovian = false;  // of the given orientation's dual
};
// Throws InputError unless g is a graph (one source, one target per edge).
GraphDualReport graph_dual_report(const DirectedHypergraph& g);

// A reorientation of the graph that makes the dual flow positive (every
// vertex degree <= 2 required: components are paths/cycles; edges are
// oriented head-to-tail along a traversal). Throws InputError if deg_max > 2.
DirectedHypergraph coherent_orientation(const DirectedHypergraph& g);

}  // namespace hyperlap
