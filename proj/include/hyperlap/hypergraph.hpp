#pragma once

#include <string>
#include <vector>

#include "hyperlap/matrix.hpp"

namespace hyperlap {

// One directed hyperedge: disjoint source and target vertex index sets, each
// kept sorted and duplicate-free. Either side may be empty.
struct Hyperedge {
  std::vector<int> sources;
  std::vector<int> targets;
  bool operator==(const Hyperedge&) const = default;
};

// Directed hypergraph over a fixed ordered vertex list. Hyperedges form an
// ordered multiset: duplicates and reversed copies of a hyperedge are
// permitted and contribute separately to all counts.
struct DirectedHypergraph {
  std::vector<std::string> vertices;   // labels; index order is the matrix order
  std::vector<Hyperedge> hyperedges;

  int num_vertices() const { return static_cast<int>(vertices.size()); }
  int num_hyperedges() const { return static_cast<int>(hyperedges.size()); }
};

// Convenience constructor for a hyperedge; sorts both endsets.
Hyperedge he(std::vector<int> sources, std::vector<int> targets);

// Hypergraph with canonical labels v1..vn. Validates.
DirectedHypergraph make_hypergraph(int n, std::vector<Hyperedge> edges);

// Checks vertex indices in range, endsets sorted/duplicate-free and disjoint,
// labels distinct. Throws InputError naming the offending hyperedge.
void validate(const DirectedHypergraph& h);

// Incidence matrix, #V x #E: +1 if the vertex is a target of the hyperedge,
// -1 if a source, 0 otherwise.
IntMatrix incidence(const DirectedHypergraph& h);

// L = I I^T where I is the incidence matrix. Symmetric positive semidefinite.
IntMatrix laplacian(const DirectedHypergraph& h);

// Dual hypergraph: one vertex per hyperedge (labels e1..em); one dual
// hyperedge per original vertex v, with sources {e : v a source of e} and
// targets {e : v a target of e}. incidence(dual(h)) == transpose(incidence(h)).
DirectedHypergraph dual(const DirectedHypergraph& h);

// L* = I^T I, the Laplacian of the dual, computed directly.
IntMatrix dual_laplacian(const DirectedHypergraph& h);

// Multiset union / intersection of the hyperedge lists. Both operands must
// share the identical vertex list.
DirectedHypergraph hypergraph_union(const DirectedHypergraph& x, const DirectedHypergraph& y);
DirectedHypergraph hypergraph_intersection(const DirectedHypergraph& x, const DirectedHypergraph& y);

// Swap the two endsets of hyperedge e.
DirectedHypergraph swap_hyperedge_orientation(const DirectedHypergraph& h, int e);

// Move vertex v to the opposite endset within hyperedge e (v must belong to e).
DirectedHypergraph swap_vertex_role(const DirectedHypergraph& h, int v, int e);

// Replace every hyperedge by all directed pairwise edges source -> target
// (sources outer loop, targets inner loop, index order).
DirectedHypergraph two_section(const DirectedHypergraph& h);

// Every hyperedge has exactly one source and one target.
bool is_graph(const DirectedHypergraph& h);

// Every hyperedge has #sources == #targets.
bool is_equipotent(const DirectedHypergraph& h);

struct DegreeProfile {
  std::vector<long long> deg;       // per vertex: number of incident hyperedges
  std::vector<long long> deg_in;    // per vertex: hyperedges having it as target
  std::vector<long long> deg_out;   // per vertex: hyperedges having it as source
  std::vector<long long> edge_deg;  // per hyperedge: #sources + #targets
  IntMatrix co;    // co[v][w]   = hyperedges containing v,w on the same side
  IntMatrix anti;  // anti[v][w] = hyperedges containing v,w on opposite sides
  long long deg_min_v = 0, deg_max_v = 0, deg_max_e = 0;
};
DegreeProfile degree_profile(const DirectedHypergraph& h);

// Number of connected components of the underlying undirected structure
// (vertices joined when they share a hyperedge); isolated vertices count.
int component_count(const DirectedHypergraph& h);

}  // namespace hyperlap
