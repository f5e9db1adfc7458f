#include "hyperlap/hypergraph.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <string>

namespace hyperlap {

namespace {

void check_endset(const std::vector<int>& s, int n, int edge_index, const char* side) {
  for (size_t i = 0; i < s.size(); ++i) {
    if (s[i] < 0 || s[i] >= n)
      throw InputError("hyperedge " + std::to_string(edge_index) + ": " + side + " vertex " +
                       std::to_string(s[i]) + " out of range");
    if (i > 0 && s[i] <= s[i - 1])
      throw InputError("hyperedge " + std::to_string(edge_index) + ": " + side +
                       " set not strictly increasing");
  }
}

}  // namespace

Hyperedge he(std::vector<int> sources, std::vector<int> targets) {
  std::sort(sources.begin(), sources.end());
  std::sort(targets.begin(), targets.end());
  return Hyperedge{std::move(sources), std::move(targets)};
}

DirectedHypergraph make_hypergraph(int n, std::vector<Hyperedge> edges) {
  if (n < 0) throw InputError("negative vertex count");
  DirectedHypergraph h;
  h.vertices.reserve(n);
  for (int i = 0; i < n; ++i) h.vertices.push_back("v" + std::to_string(i + 1));
  h.hyperedges = std::move(edges);
  validate(h);
  return h;
}

void validate(const DirectedHypergraph& h) {
  const int n = h.num_vertices();
  {
    std::set<std::string> labels(h.vertices.begin(), h.vertices.end());
    if (static_cast<int>(labels.size()) != n) throw InputError("vertex labels not distinct");
  }
  for (int e = 0; e < h.num_hyperedges(); ++e) {
    const Hyperedge& ed = h.hyperedges[e];
    check_endset(ed.sources, n, e, "source");
    check_endset(ed.targets, n, e, "target");
    std::vector<int> common;
    std::set_intersection(ed.sources.begin(), ed.sources.end(), ed.targets.begin(),
                          ed.targets.end(), std::back_inserter(common));
    if (!common.empty())
      throw InputError("hyperedge " + std::to_string(e) + ": vertex " +
                       std::to_string(common.front()) + " on both sides");
  }
}

IntMatrix incidence(const DirectedHypergraph& h) {
  IntMatrix m(h.num_vertices(), h.num_hyperedges());
  for (int e = 0; e < h.num_hyperedges(); ++e) {
    for (int v : h.hyperedges[e].sources) m.at(v, e) = -1;
    for (int v : h.hyperedges[e].targets) m.at(v, e) = 1;
  }
  return m;
}

IntMatrix laplacian(const DirectedHypergraph& h) {
  IntMatrix inc = incidence(h);
  return int_matmul(inc, int_transpose(inc));
}

DirectedHypergraph dual(const DirectedHypergraph& h) {
  DirectedHypergraph d;
  d.vertices.reserve(h.num_hyperedges());
  for (int e = 0; e < h.num_hyperedges(); ++e) d.vertices.push_back("e" + std::to_string(e + 1));
  d.hyperedges.resize(h.num_vertices());
  for (int e = 0; e < h.num_hyperedges(); ++e) {
    for (int v : h.hyperedges[e].sources) d.hyperedges[v].sources.push_back(e);
    for (int v : h.hyperedges[e].targets) d.hyperedges[v].targets.push_back(e);
  }
  // already sorted: e increases through the loop
  return d;
}

IntMatrix dual_laplacian(const DirectedHypergraph& h) {
  IntMatrix inc = incidence(h);
  return int_matmul(int_transpose(inc), inc);
}

DirectedHypergraph hypergraph_union(const DirectedHypergraph& x, const DirectedHypergraph& y) {
  if (x.vertices != y.vertices) throw InputError("union: vertex lists differ");
  DirectedHypergraph r = x;
  r.hyperedges.insert(r.hyperedges.end(), y.hyperedges.begin(), y.hyperedges.end());
  return r;
}

DirectedHypergraph hypergraph_intersection(const DirectedHypergraph& x,
                                           const DirectedHypergraph& y) {
  if (x.vertices != y.vertices) throw InputError("intersection: vertex lists differ");
  // multiset semantics: each hyperedge is kept min(count_x, count_y) times
  std::map<std::pair<std::vector<int>, std::vector<int>>, int> avail;
  for (const Hyperedge& e : y.hyperedges) ++avail[{e.sources, e.targets}];
  DirectedHypergraph r;
  r.vertices = x.vertices;
  for (const Hyperedge& e : x.hyperedges) {
    auto it = avail.find({e.sources, e.targets});
    if (it != avail.end() && it->second > 0) {
      --it->second;
      r.hyperedges.push_back(e);
    }
  }
  return r;
}

DirectedHypergraph swap_hyperedge_orientation(const DirectedHypergraph& h, int e) {
  if (e < 0 || e >= h.num_hyperedges()) throw InputError("swap_hyperedge_orientation: bad index");
  DirectedHypergraph r = h;
  std::swap(r.hyperedges[e].sources, r.hyperedges[e].targets);
  return r;
}

DirectedHypergraph swap_vertex_role(const DirectedHypergraph& h, int v, int e) {
  if (e < 0 || e >= h.num_hyperedges()) throw InputError("swap_vertex_role: bad hyperedge index");
  DirectedHypergraph r = h;
  Hyperedge& ed = r.hyperedges[e];
  auto move = [v](std::vector<int>& from, std::vector<int>& to) {
    auto it = std::lower_bound(from.begin(), from.end(), v);
    if (it == from.end() || *it != v) return false;
    from.erase(it);
    to.insert(std::lower_bound(to.begin(), to.end(), v), v);
    return true;
  };
  if (!move(ed.sources, ed.targets) && !move(ed.targets, ed.sources))
    throw InputError("swap_vertex_role: vertex " + std::to_string(v) + " not in hyperedge " +
                     std::to_string(e));
  return r;
}

DirectedHypergraph two_section(const DirectedHypergraph& h) {
  DirectedHypergraph r;
  r.vertices = h.vertices;
  for (const Hyperedge& e : h.hyperedges)
    for (int s : e.sources)
      for (int t : e.targets) r.hyperedges.push_back(Hyperedge{{s}, {t}});
  return r;
}

bool is_graph(const DirectedHypergraph& h) {
  for (const Hyperedge& e : h.hyperedges)
    if (e.sources.size() != 1 || e.targets.size() != 1) return false;
  return true;
}

bool is_equipotent(const DirectedHypergraph& h) {
  for (const Hyperedge& e : h.hyperedges)
    if (e.sources.size() != e.targets.size()) return false;
  return true;
}

DegreeProfile degree_profile(const DirectedHypergraph& h) {
  const int n = h.num_vertices(), m = h.num_hyperedges();
  DegreeProfile p;
  p.deg.assign(n, 0);
  p.deg_in.assign(n, 0);
  p.deg_out.assign(n, 0);
  p.edge_deg.assign(m, 0);
  p.co = IntMatrix(n, n);
  p.anti = IntMatrix(n, n);
  for (int e = 0; e < m; ++e) {
    const Hyperedge& ed = h.hyperedges[e];
    p.edge_deg[e] = static_cast<long long>(ed.sources.size() + ed.targets.size());
    for (int v : ed.sources) {
      ++p.deg_out[v];
      ++p.deg[v];
    }
    for (int v : ed.targets) {
      ++p.deg_in[v];
      ++p.deg[v];
    }
    for (size_t i = 0; i < ed.sources.size(); ++i) {
      for (size_t j = i + 1; j < ed.sources.size(); ++j) {
        ++p.co.at(ed.sources[i], ed.sources[j]);
        ++p.co.at(ed.sources[j], ed.sources[i]);
      }
      for (int t : ed.targets) {
        ++p.anti.at(ed.sources[i], t);
        ++p.anti.at(t, ed.sources[i]);
      }
    }
    for (size_t i = 0; i < ed.targets.size(); ++i)
      for (size_t j = i + 1; j < ed.targets.size(); ++j) {
        ++p.co.at(ed.targets[i], ed.targets[j]);
        ++p.co.at(ed.targets[j], ed.targets[i]);
      }
  }
  if (n > 0) {
    p.deg_min_v = *std::min_element(p.deg.begin(), p.deg.end());
    p.deg_max_v = *std::max_element(p.deg.begin(), p.deg.end());
  }
  if (m > 0) p.deg_max_e = *std::max_element(p.edge_deg.begin(), p.edge_deg.end());
  return p;
}

int component_count(const DirectedHypergraph& h) {
  const int n = h.num_vertices();
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  auto unite = [&](int a, int b) { parent[find(a)] = find(b); };
  for (const Hyperedge& e : h.hyperedges) {
    int anchor = -1;
    for (int v : e.sources) {
      if (anchor < 0) anchor = v;
      unite(anchor, v);
    }
    for (int v : e.targets) {
      if (anchor < 0) anchor = v;
      unite(anchor, v);
    }
  }
  int c = 0;
  for (int v = 0; v < n; ++v)
    if (find(v) == v) ++c;
  return c;
}

}  // namespace hyperlap
