#include "hyperlap/surgery.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <string>

#include "hyperlap/classify.hpp"
#include "hyperlap/eig.hpp"
#include "hyperlap/heat.hpp"

namespace hyperlap {

VertexSubset make_subset(int parent_n, std::vector<int> members) {
  std::sort(members.begin(), members.end());
  for (size_t i = 0; i < members.size(); ++i) {
    if (members[i] < 0 || members[i] >= parent_n)
      throw InputError("vertex subset: index " + std::to_string(members[i]) + " out of range");
    if (i > 0 && members[i] == members[i - 1])
      throw InputError("vertex subset: repeated index " + std::to_string(members[i]));
  }
  return VertexSubset{parent_n, std::move(members)};
}

std::vector<int> subset_complement(const VertexSubset& s) {
  std::vector<int> out;
  size_t at = 0;
  for (int v = 0; v < s.parent_n; ++v) {
    if (at < s.members.size() && s.members[at] == v)
      ++at;
    else
      out.push_back(v);
  }
  return out;
}

IntMatrix dirichlet_laplacian(const DirectedHypergraph& h, const VertexSubset& keep) {
  if (keep.parent_n != h.num_vertices())
    throw InputError("dirichlet_laplacian: subset belongs to a different vertex count");
  IntMatrix lap = laplacian(h);
  std::vector<char> in(h.num_vertices(), 0);
  for (int v : keep.members) in[v] = 1;
  for (int i = 0; i < lap.rows; ++i)
    for (int j = 0; j < lap.cols; ++j)
      if (!in[i] || !in[j]) lap.at(i, j) = 0;
  return lap;
}

namespace {

// surviving vertices of an endset, renumbered; newindex is monotone on the
// kept vertices so sortedness is preserved
std::vector<int> relabel(const std::vector<int>& endset, const std::vector<int>& newindex) {
  std::vector<int> out;
  for (int v : endset)
    if (newindex[v] >= 0) out.push_back(newindex[v]);
  return out;
}

}  // namespace

DirectedHypergraph induced_subhypergraph(const DirectedHypergraph& h, const VertexSubset& keep) {
  if (keep.parent_n != h.num_vertices())
    throw InputError("induced_subhypergraph: subset belongs to a different vertex count");
  std::vector<int> newindex(h.num_vertices(), -1);
  DirectedHypergraph r;
  for (size_t i = 0; i < keep.members.size(); ++i) {
    newindex[keep.members[i]] = static_cast<int>(i);
    r.vertices.push_back(h.vertices[keep.members[i]]);
  }
  for (const Hyperedge& e : h.hyperedges) {
    bool inside = true;
    for (int v : e.sources)
      if (newindex[v] < 0) inside = false;
    for (int v : e.targets)
      if (newindex[v] < 0) inside = false;
    if (!inside) continue;
    r.hyperedges.push_back(
        Hyperedge{relabel(e.sources, newindex), relabel(e.targets, newindex)});
  }
  return r;
}

DirectedHypergraph d_subhypergraph(const DirectedHypergraph& h, const VertexSubset& keep) {
  if (keep.parent_n != h.num_vertices())
    throw InputError("d_subhypergraph: subset belongs to a different vertex count");
  std::vector<int> newindex(h.num_vertices(), -1);
  DirectedHypergraph r;
  for (size_t i = 0; i < keep.members.size(); ++i) {
    newindex[keep.members[i]] = static_cast<int>(i);
    r.vertices.push_back(h.vertices[keep.members[i]]);
  }
  for (const Hyperedge& e : h.hyperedges)
    r.hyperedges.push_back(
        Hyperedge{relabel(e.sources, newindex), relabel(e.targets, newindex)});
  return r;
}

namespace {

// 2-coloring of a graph's underlying undirected structure; empty on failure
std::vector<int> bipartition(const DirectedHypergraph& g) {
  const int n = g.num_vertices();
  std::vector<int> color(n, -1);
  std::vector<std::vector<int>> adj(n);
  for (const Hyperedge& e : g.hyperedges) {
    int u = e.sources[0], v = e.targets[0];
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  for (int root = 0; root < n; ++root) {
    if (color[root] >= 0) continue;
    color[root] = 0;
    std::vector<int> stack{root};
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int w : adj[v]) {
        if (color[w] < 0) {
          color[w] = 1 - color[v];
          stack.push_back(w);
        } else if (color[w] == color[v]) {
          return {};
        }
      }
    }
  }
  return color;
}

}  // namespace

UnionSpectrumReport union_spectrum_verifier(const DirectedHypergraph& g, UnionMode mode) {
  if (!is_graph(g)) throw InputError("union_spectrum_verifier: input must be a graph");
  const int n = g.num_vertices();
  if (n == 0) throw InputError("union_spectrum_verifier: empty graph");
  UnionSpectrumReport rep;
  rep.components = component_count(g);

  std::vector<int> all(n);
  for (int i = 0; i < n; ++i) all[i] = i;

  DirectedHypergraph base;  // the graph part entering the union
  base.vertices = g.vertices;
  std::vector<double> base_nonzero;

  if (mode == UnionMode::co_oriented_full) {
    base.hyperedges = g.hyperedges;
    rep.h = base;
    rep.h.hyperedges.push_back(Hyperedge{{}, all});
  } else if (mode == UnionMode::bipartite_signless) {
    std::vector<int> color = bipartition(g);
    if (color.empty())
      throw InputError("union_spectrum_verifier: graph not bipartite");
    for (const Hyperedge& e : g.hyperedges)
      base.hyperedges.push_back(he({}, {e.sources[0], e.targets[0]}));  // signless copy
    rep.h = base;
    std::vector<int> minus, plus;
    for (int v = 0; v < n; ++v) (color[v] ? minus : plus).push_back(v);
    rep.h.hyperedges.push_back(Hyperedge{minus, plus});
  } else {  // equipotent_half
    if (n % 2 != 0)
      throw InputError("union_spectrum_verifier: equipotent mode needs an even vertex count");
    if (component_count(g) != 1)
      throw InputError("union_spectrum_verifier: equipotent mode needs a connected graph");
    base.hyperedges = g.hyperedges;
    rep.h = base;
    std::vector<int> first_half(all.begin(), all.begin() + n / 2);
    std::vector<int> second_half(all.begin() + n / 2, all.end());
    rep.h.hyperedges.push_back(Hyperedge{first_half, second_half});
  }

  SpectralDecomposition s = eigh(laplacian(rep.h));
  rep.computed = s.eigenvalues;

  if (mode == UnionMode::equipotent_half) {
    auto clusters = eigenvalue_clusters(s);
    rep.lambda1_simple =
        clusters.front().count == 1 && std::fabs(s.eigenvalues.front()) <= zero_tol(s);
    double lo = s.vectors.at(0, 0);
    double target = 1.0 / std::sqrt(static_cast<double>(n));
    bool is_ones = true;
    for (int i = 0; i < n; ++i) {
      double v = s.vectors.at(i, 0);
      lo = std::min(lo, v);
      if (std::fabs(v - target) > 1e-8) is_ones = false;
    }
    rep.kernel_vector_positive = rep.lambda1_simple && lo > kEntryTol && is_ones;
    rep.spectrum_matches = true;  // no closed-form prediction in this mode
    return rep;
  }

  // predicted spectrum: {0 x (components-1)} u {n} u nonzero spectrum of the base part
  SpectralDecomposition sb = eigh(laplacian(base));
  double base_tol = zero_tol(sb);
  for (double lam : sb.eigenvalues)
    if (lam > base_tol) base_nonzero.push_back(lam);
  rep.predicted.assign(rep.components - 1, 0.0);
  rep.predicted.push_back(static_cast<double>(n));
  rep.predicted.insert(rep.predicted.end(), base_nonzero.begin(), base_nonzero.end());
  std::sort(rep.predicted.begin(), rep.predicted.end());
  rep.spectrum_matches = rep.predicted.size() == rep.computed.size();
  if (rep.spectrum_matches)
    for (size_t i = 0; i < rep.predicted.size(); ++i)
      if (std::fabs(rep.predicted[i] - rep.computed[i]) > 1e-7) rep.spectrum_matches = false;

  if (mode == UnionMode::co_oriented_full) {
    Matrix p = lowest_projector(s);
    rep.projector_min_entry = min_entry(p);
    rep.projector_positive = rep.projector_min_entry >= -kEntryTol;
  }
  return rep;
}

DominationCheck dirichlet_domination_check(const DirectedHypergraph& h, const VertexSubset& keep1,
                                           const VertexSubset& keep2) {
  const int n = h.num_vertices();
  if (keep1.parent_n != n || keep2.parent_n != n)
    throw InputError("dirichlet_domination_check: subset size mismatch");

  // both restricted flows must be positive, else the comparison is refused
  for (const VertexSubset* ks : {&keep1, &keep2}) {
    DirectedHypergraph part = d_subhypergraph(h, *ks);
    Flag pos = is_positive_generator(part);
    if (!pos.value)
      throw InputError("dirichlet_domination_check: restricted flow not positive: " +
                       pos.witness);
  }

  DominationCheck out;
  std::set<int> k1(keep1.members.begin(), keep1.members.end());
  out.nested = std::all_of(keep2.members.begin(), keep2.members.end(),
                           [&](int v) { return k1.count(v) > 0; });

  // part flows: exponentials of the principal submatrices, zero-extended to n x n
  auto part_flow = [&](const VertexSubset& ks, double t) {
    DirectedHypergraph part = d_subhypergraph(h, ks);
    SpectralDecomposition s = eigh(laplacian(part));
    Matrix e = heat_operator(s, t);
    Matrix full(n, n);
    for (size_t i = 0; i < ks.members.size(); ++i)
      for (size_t j = 0; j < ks.members.size(); ++j)
        full.at(ks.members[i], ks.members[j]) =
            e.at(static_cast<int>(i), static_cast<int>(j));
    return full;
  };

  out.dominated = true;
  out.detail = "dominates at t in {0.1, 1, 5}";
  for (double t : {0.1, 1.0, 5.0}) {
    Matrix e1 = part_flow(keep1, t);
    Matrix e2 = part_flow(keep2, t);
    for (int i = 0; i < n && out.dominated; ++i)
      for (int j = 0; j < n; ++j)
        if (e1.at(i, j) - std::fabs(e2.at(i, j)) < -kEntryTol) {
          out.dominated = false;
          out.detail = "violated at t=" + std::to_string(t) + ", entry (" + h.vertices[i] +
                       "," + h.vertices[j] + ")";
          break;
        }
    if (!out.dominated) break;
  }
  out.consistent = out.dominated == out.nested;
  return out;
}

}  // namespace hyperlap
