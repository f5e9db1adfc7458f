#include "hyperlap/scomplex.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>

#include "hyperlap/classify.hpp"
#include "hyperlap/eig.hpp"

namespace hyperlap {

SimplicialComplex closure(int n, const std::vector<std::vector<int>>& maximal_faces) {
  if (n < 0) throw InputError("closure: negative vertex count");
  std::vector<std::set<std::vector<int>>> level(1);
  for (const std::vector<int>& f : maximal_faces) {
    std::vector<int> face = f;
    std::sort(face.begin(), face.end());
    for (size_t i = 0; i < face.size(); ++i) {
      if (face[i] < 0 || face[i] >= n)
        throw InputError("closure: vertex " + std::to_string(face[i]) + " out of range");
      if (i > 0 && face[i] == face[i - 1])
        throw InputError("closure: repeated vertex " + std::to_string(face[i]) + " in a face");
    }
    if (face.empty()) continue;
    size_t dim = face.size() - 1;
    if (level.size() <= dim) level.resize(dim + 1);
    // downward closure: every subset of the face is a face
    size_t subsets = size_t(1) << face.size();
    for (size_t bits = 1; bits < subsets; ++bits) {
      std::vector<int> sub;
      for (size_t b = 0; b < face.size(); ++b)
        if (bits & (size_t(1) << b)) sub.push_back(face[b]);
      level[sub.size() - 1].insert(sub);
    }
  }
  for (int v = 0; v < n; ++v) level[0].insert({v});

  SimplicialComplex k;
  k.n = n;
  // drop empty top levels (can only arise from resize on malformed input paths)
  while (level.size() > 1 && level.back().empty()) level.pop_back();
  for (const auto& faces : level)
    k.faces.emplace_back(faces.begin(), faces.end());  // std::set order = lex order
  return k;
}

namespace {

int face_count(const SimplicialComplex& k, int i) {
  if (i < 0 || i > k.dimension()) return 0;
  return static_cast<int>(k.faces[i].size());
}

}  // namespace

IntMatrix coboundary(const SimplicialComplex& k, int i) {
  if (i < 0 || i >= k.dimension())
    throw InputError("coboundary: degree " + std::to_string(i) + " out of range");
  const auto& lower = k.faces[i];
  const auto& upper = k.faces[i + 1];
  std::map<std::vector<int>, int> index;
  for (size_t t = 0; t < lower.size(); ++t) index[lower[t]] = static_cast<int>(t);
  IntMatrix d(static_cast<int>(upper.size()), static_cast<int>(lower.size()));
  for (size_t s = 0; s < upper.size(); ++s) {
    const std::vector<int>& sigma = upper[s];
    for (size_t j = 0; j < sigma.size(); ++j) {
      std::vector<int> tau;
      for (size_t b = 0; b < sigma.size(); ++b)
        if (b != j) tau.push_back(sigma[b]);
      auto it = index.find(tau);
      if (it == index.end()) throw NumericError("coboundary: complex not downward closed");
      d.at(static_cast<int>(s), it->second) = (j % 2 == 0) ? 1 : -1;
    }
  }
  return d;
}

IntMatrix hodge_laplacian(const SimplicialComplex& k, int i) {
  if (i < 0 || i > k.dimension())
    throw InputError("hodge_laplacian: degree " + std::to_string(i) + " out of range");
  const int ni = face_count(k, i);
  IntMatrix acc(ni, ni);
  if (i > 0) {
    IntMatrix d = coboundary(k, i - 1);
    acc = int_add(acc, int_matmul(d, int_transpose(d)));
  }
  if (i < k.dimension()) {
    IntMatrix d = coboundary(k, i);
    acc = int_add(acc, int_matmul(int_transpose(d), d));
  }
  return acc;
}

namespace {

std::string face_label(const std::vector<int>& f) {
  std::string s;
  for (size_t i = 0; i < f.size(); ++i) {
    if (i) s += "-";
    s += std::to_string(f[i]);
  }
  return s;
}

}  // namespace

DirectedHypergraph hypergraph_embedding(const SimplicialComplex& k, int i) {
  if (i < 0 || i > k.dimension())
    throw InputError("hypergraph_embedding: degree " + std::to_string(i) + " out of range");
  const int n_low = (i > 0) ? face_count(k, i - 1) : 0;
  const int n_high = (i < k.dimension()) ? face_count(k, i + 1) : 0;

  DirectedHypergraph h;
  if (i > 0)
    for (const auto& f : k.faces[i - 1]) h.vertices.push_back(face_label(f));
  if (i < k.dimension())
    for (const auto& f : k.faces[i + 1]) h.vertices.push_back(face_label(f));

  IntMatrix d_low = (i > 0) ? coboundary(k, i - 1) : IntMatrix(0, face_count(k, i));
  IntMatrix d_high =
      (i < k.dimension()) ? coboundary(k, i) : IntMatrix(0, face_count(k, i));

  for (int e = 0; e < face_count(k, i); ++e) {
    Hyperedge ed;
    // block 1: (i-1)-faces, incidence = transpose of delta_{i-1}
    for (int t = 0; t < n_low; ++t) {
      long long v = d_low.at(e, t);
      if (v == 1)
        ed.targets.push_back(t);
      else if (v == -1)
        ed.sources.push_back(t);
    }
    // block 2: (i+1)-faces, incidence = delta_i
    for (int s = 0; s < n_high; ++s) {
      long long v = d_high.at(s, e);
      if (v == 1)
        ed.targets.push_back(n_low + s);
      else if (v == -1)
        ed.sources.push_back(n_low + s);
    }
    h.hyperedges.push_back(std::move(ed));
  }
  return h;
}

namespace {

// orient each path/cycle component head-to-tail; requires deg <= 2 everywhere
DirectedHypergraph orient_coherently(const DirectedHypergraph& g) {
  const int n = g.num_vertices();
  std::vector<std::vector<std::pair<int, int>>> adj(n);  // (neighbor, edge index)
  for (int e = 0; e < g.num_hyperedges(); ++e) {
    int u = g.hyperedges[e].sources[0], v = g.hyperedges[e].targets[0];
    adj[u].push_back({v, e});
    adj[v].push_back({u, e});
  }
  for (int v = 0; v < n; ++v)
    if (adj[v].size() > 2)
      throw InputError("coherent_orientation: vertex " + g.vertices[v] + " has degree " +
                       std::to_string(adj[v].size()));

  DirectedHypergraph out;
  out.vertices = g.vertices;
  out.hyperedges = g.hyperedges;
  std::vector<char> edge_done(g.num_hyperedges(), 0);
  std::vector<char> visited(n, 0);

  auto walk = [&](int start) {
    int cur = start;
    visited[cur] = 1;
    while (true) {
      int next = -1, via = -1;
      for (auto [nb, e] : adj[cur])
        if (!edge_done[e]) {
          next = nb;
          via = e;
          break;
        }
      if (next < 0) break;
      edge_done[via] = 1;
      out.hyperedges[via] = Hyperedge{{cur}, {next}};  // cur -> next along the walk
      visited[next] = 1;
      cur = next;
    }
  };

  // paths first (start at degree-1 or isolated-with-loop-free vertices) ...
  for (int v = 0; v < n; ++v)
    if (adj[v].size() == 1 && !visited[v]) walk(v);
  // ... then remaining cycles
  for (int v = 0; v < n; ++v)
    if (!visited[v] && !adj[v].empty()) walk(v);
  return out;
}

}  // namespace

DirectedHypergraph coherent_orientation(const DirectedHypergraph& g) {
  if (!is_graph(g)) throw InputError("coherent_orientation: input must be a graph");
  return orient_coherently(g);
}

GraphDualReport graph_dual_report(const DirectedHypergraph& g) {
  if (!is_graph(g)) throw InputError("graph_dual_report: input must be a graph");
  GraphDualReport r;
  r.components = component_count(g);
  r.cyclomatic = g.num_hyperedges() - g.num_vertices() + r.components;
  r.forest = r.cyclomatic == 0;

  DegreeProfile p = degree_profile(g);
  r.deg_max = p.deg_max_v;

  if (g.num_hyperedges() > 0) {
    SpectralDecomposition s = eigh(dual_laplacian(g));
    r.dual_kernel_dim = kernel_dim(s);
    r.exponentially_stable = s.eigenvalues.front() > zero_tol(s);
  } else {
    r.dual_kernel_dim = 0;
    r.exponentially_stable = true;  // empty dual: nothing to decay
  }
  r.kernel_matches_cyclomatic = r.dual_kernel_dim == r.cyclomatic;

  r.positive_orientation_exists = r.deg_max <= 2;
  if (r.positive_orientation_exists && g.num_hyperedges() > 0) {
    DirectedHypergraph coherent = orient_coherently(g);
    Flag pos = is_positive_generator(dual(coherent));
    if (!pos.value)
      throw NumericError("graph_dual_report: coherent orientation failed to be positive");
  }

  DirectedHypergraph d = dual(g);
  r.given_orientation_positive = is_positive_generator(d).value;
  r.stochastic = is_stochastic(d).value;
  r.sub_markovian = r.given_orientation_positive && is_inf_contractive(d).value;
  return r;
}

}  // namespace hyperlap
