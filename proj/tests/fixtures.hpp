// Shared fixtures for the test suite: small hypergraphs with known spectra,
// heat flows, and order properties, plus deterministic random generators.
#pragma once

#include <algorithm>
#include <cmath>
#include <initializer_list>
#include <numeric>
#include <random>
#include <vector>

#include "hyperlap/hypergraph.hpp"
#include "hyperlap/matrix.hpp"
#include "hyperlap/scomplex.hpp"

namespace fx {

using hyperlap::DirectedHypergraph;
using hyperlap::Hyperedge;
using hyperlap::IntMatrix;
using hyperlap::Matrix;
using hyperlap::SimplicialComplex;
using hyperlap::he;
using hyperlap::make_hypergraph;

// Integer matrix literal: im({{1,-1},{-1,1}}).
inline IntMatrix im(std::initializer_list<std::initializer_list<long long>> rows) {
  IntMatrix m(static_cast<int>(rows.size()),
              rows.size() ? static_cast<int>(rows.begin()->size()) : 0);
  int i = 0;
  for (const auto& r : rows) {
    int j = 0;
    for (long long x : r) m.at(i, j++) = x;
    ++i;
  }
  return m;
}

inline Matrix dm(std::initializer_list<std::initializer_list<double>> rows) {
  Matrix m(static_cast<int>(rows.size()),
           rows.size() ? static_cast<int>(rows.begin()->size()) : 0);
  int i = 0;
  for (const auto& r : rows) {
    int j = 0;
    for (double x : r) m.at(i, j++) = x;
    ++i;
  }
  return m;
}

inline std::vector<int> iota_range(int lo, int hi) {  // [lo, hi)
  std::vector<int> v(static_cast<size_t>(hi - lo));
  std::iota(v.begin(), v.end(), lo);
  return v;
}

inline double vec_max_diff(const std::vector<double>& a, const std::vector<double>& b) {
  double d = a.size() == b.size() ? 0.0 : 1e300;
  for (size_t i = 0; i < a.size() && i < b.size(); ++i) d = std::max(d, std::fabs(a[i] - b[i]));
  return d;
}

// --- closed-spectrum families -----------------------------------------------

// One hyperedge containing every vertex: sources v1..v_k, targets the rest.
// Spectrum {0^(n-1), n}.
inline DirectedHypergraph single_mixed(int n, int k) {
  return make_hypergraph(n, {he(iota_range(0, k), iota_range(k, n))});
}

// n copies of the all-target hyperedge ({}, V). Laplacian n*J, spectrum
// {0^(n-1), n^2}.
inline DirectedHypergraph signless_family(int n) {
  std::vector<Hyperedge> es(static_cast<size_t>(n), he({}, iota_range(0, n)));
  return make_hypergraph(n, std::move(es));
}

// e_i = ({v_i}, V \ {v_i}). Laplacian (n-4)*J + 4*Id, spectrum
// {4^(n-1), (n-2)^2}.
inline DirectedHypergraph rotational_family(int n) {
  std::vector<Hyperedge> es;
  for (int i = 0; i < n; ++i) {
    std::vector<int> rest;
    for (int v = 0; v < n; ++v)
      if (v != i) rest.push_back(v);
    es.push_back(he({i}, rest));
  }
  return make_hypergraph(n, std::move(es));
}

// --- ordinary graphs ---------------------------------------------------------

inline DirectedHypergraph directed_path(int n) {
  std::vector<Hyperedge> es;
  for (int i = 0; i + 1 < n; ++i) es.push_back(he({i}, {i + 1}));
  return make_hypergraph(n, std::move(es));
}

inline DirectedHypergraph directed_cycle(int n) {
  std::vector<Hyperedge> es;
  for (int i = 0; i < n; ++i) es.push_back(he({i}, {(i + 1) % n}));
  return make_hypergraph(n, std::move(es));
}

inline DirectedHypergraph complete_graph_oriented(int n) {
  std::vector<Hyperedge> es;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) es.push_back(he({i}, {j}));
  return make_hypergraph(n, std::move(es));
}

// Central vertex v1 as the source of every edge; `leaves` leaves.
inline DirectedHypergraph star_out(int leaves) {
  std::vector<Hyperedge> es;
  for (int i = 1; i <= leaves; ++i) es.push_back(he({0}, {i}));
  return make_hypergraph(leaves + 1, std::move(es));
}

// --- pinned examples with known flows ---------------------------------------

// ({v1},{v2,v3}): L = [[1,-1,-1],[-1,1,1],[-1,1,1]] with a closed-form flow.
inline DirectedHypergraph h1_triangle() { return make_hypergraph(3, {he({0}, {1, 2})}); }

// Closed form of exp(-t L) for h1_triangle.
inline Matrix h1_heat_closed_form(double t) {
  const double e = std::exp(-3.0 * t);
  return dm({{(2 + e) / 3, (1 - e) / 3, (1 - e) / 3},
             {(1 - e) / 3, (2 + e) / 3, (e - 1) / 3},
             {(1 - e) / 3, (e - 1) / 3, (2 + e) / 3}});
}

// Directed path v1->v2->v3 plus the all-target hyperedge ({},{v1,v2,v3}):
// L = [[2,0,1],[0,3,0],[1,0,2]], spectrum {1,3,3}.
inline DirectedHypergraph union_444() {
  return make_hypergraph(3, {he({0}, {1}), he({1}, {2}), he({}, {0, 1, 2})});
}

// The path v1->v2->v3 alone (the comparison generator for union_444).
inline DirectedHypergraph path3() { return directed_path(3); }

// ({v1},{v2,v3}), ({v2},{v4}), ({v4},{v3}):
// L = [[1,-1,-1,0],[-1,2,1,-1],[-1,1,2,-1],[0,-1,-1,2]], kernel (2,1,1,1)/sqrt(7),
// positivity threshold ~1.2151, ||P_1||_inf = 10/7.
inline DirectedHypergraph l1_445() {
  return make_hypergraph(4, {he({0}, {1, 2}), he({1}, {3}), he({3}, {2})});
}

// ({v3,v4},{v1,v2}), ({v2},{v1}), ({v3},{v1}), ({v4},{v1}): equipotent,
// L = [[4,0,-2,-2],[0,2,-1,-1],[-2,-1,2,1],[-2,-1,1,2]], kernel ones/2,
// positivity threshold ~0.6545, ||P_1||_inf = 1.
inline DirectedHypergraph l2_445() {
  return make_hypergraph(4, {he({2, 3}, {0, 1}), he({1}, {0}), he({2}, {0}), he({3}, {0})});
}

// ({v1,v2},{v3,v4}) + ({v1},{v2}) + ({v3},{v4}): the positivity repair of the
// single 2-2 hyperedge; stochastic.
inline DirectedHypergraph hprime_446() {
  return make_hypergraph(4, {he({0, 1}, {2, 3}), he({0}, {1}), he({2}, {3})});
}

// ({v1,v2},{v3,v4}) + ({v1,v3},{v2,v4}): stochastic, L has two 2x2 blocks.
inline DirectedHypergraph hdprime_446() {
  return make_hypergraph(4, {he({0, 1}, {2, 3}), he({0, 2}, {1, 3})});
}

// ({v1},{v2,v3}) + ({v2},{v3}): L = [[1,-1,-1],[-1,2,0],[-1,0,2]],
// spectrum {0,2,3}, kernel (2,1,1)/sqrt(6), ||P_1||_inf = 4/3.
inline DirectedHypergraph eq46() { return make_hypergraph(3, {he({0}, {1, 2}), he({1}, {2})}); }

// Single hyperedge ({v1,v2},{v3,v4}) on 4 vertices (absorption example A).
inline DirectedHypergraph fig_one_edge() { return make_hypergraph(4, {he({0, 1}, {2, 3})}); }

// ({v1,v2},{v3,v4}) + ({v3},{v5}) on 5 vertices (absorption example B).
inline DirectedHypergraph fig_two_edges() {
  return make_hypergraph(5, {he({0, 1}, {2, 3}), he({2}, {4})});
}

// --- simplicial complexes ----------------------------------------------------

inline SimplicialComplex full_triangle() { return hyperlap::closure(3, {{0, 1, 2}}); }

// Three triangles glued along edges; 7 edges, Hodge Laplacian in degree 2
// equal to [[3,1,0],[1,3,-1],[0,-1,3]].
inline SimplicialComplex three_triangles() {
  return hyperlap::closure(5, {{0, 1, 2}, {1, 2, 3}, {1, 3, 4}});
}

// --- random generators (deterministic given the engine state) ----------------

inline DirectedHypergraph random_hypergraph(std::mt19937& rng, int max_n = 7, int max_m = 8) {
  std::uniform_int_distribution<int> nd(2, max_n);
  const int n = nd(rng);
  std::uniform_int_distribution<int> md(1, max_m);
  const int m = md(rng);
  std::uniform_int_distribution<int> sz(0, 3);
  std::vector<Hyperedge> es;
  std::vector<int> perm = iota_range(0, n);
  for (int e = 0; e < m; ++e) {
    std::shuffle(perm.begin(), perm.end(), rng);
    int s = std::min(sz(rng), n);
    int t = std::min(sz(rng), n - s);
    if (s + t == 0) t = 1;
    es.push_back(he(std::vector<int>(perm.begin(), perm.begin() + s),
                    std::vector<int>(perm.begin() + s, perm.begin() + s + t)));
  }
  return make_hypergraph(n, std::move(es));
}

// Random 1-1 hypergraph (an oriented multigraph); always equipotent.
inline DirectedHypergraph random_graph(std::mt19937& rng, int max_n = 7, int max_m = 8) {
  std::uniform_int_distribution<int> nd(2, max_n);
  const int n = nd(rng);
  std::uniform_int_distribution<int> md(1, max_m);
  const int m = md(rng);
  std::uniform_int_distribution<int> vd(0, n - 1);
  std::vector<Hyperedge> es;
  for (int e = 0; e < m; ++e) {
    int a = vd(rng), b = vd(rng);
    while (b == a) b = vd(rng);
    es.push_back(he({a}, {b}));
  }
  return make_hypergraph(n, std::move(es));
}

// Random equipotent hypergraph (endset sizes matched per hyperedge).
inline DirectedHypergraph random_equipotent(std::mt19937& rng, int max_n = 7, int max_m = 6) {
  std::uniform_int_distribution<int> nd(2, max_n);
  const int n = nd(rng);
  std::uniform_int_distribution<int> md(1, max_m);
  const int m = md(rng);
  std::vector<Hyperedge> es;
  std::vector<int> perm = iota_range(0, n);
  std::uniform_int_distribution<int> kd(1, std::max(1, n / 2));
  for (int e = 0; e < m; ++e) {
    std::shuffle(perm.begin(), perm.end(), rng);
    const int k = kd(rng);
    es.push_back(he(std::vector<int>(perm.begin(), perm.begin() + k),
                    std::vector<int>(perm.begin() + k, perm.begin() + 2 * k)));
  }
  return make_hypergraph(n, std::move(es));
}

// Random simplicial complex: a few maximal faces on up to 6 vertices.
inline SimplicialComplex random_complex(std::mt19937& rng) {
  std::uniform_int_distribution<int> nd(3, 6);
  const int n = nd(rng);
  std::uniform_int_distribution<int> fd(1, 4);
  const int f = fd(rng);
  std::uniform_int_distribution<int> szd(1, std::min(4, n));
  std::vector<int> perm = iota_range(0, n);
  std::vector<std::vector<int>> faces;
  for (int i = 0; i < f; ++i) {
    std::shuffle(perm.begin(), perm.end(), rng);
    faces.emplace_back(perm.begin(), perm.begin() + szd(rng));
  }
  return hyperlap::closure(n, faces);
}

}  // namespace fx
