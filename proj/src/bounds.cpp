#include "hyperlap/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <set>

#include "hyperlap/eig.hpp"

namespace hyperlap {

SpectralBounds gershgorin_bounds(const DirectedHypergraph& h) {
  const int n = h.num_vertices(), m = h.num_hyperedges();
  DegreeProfile p = degree_profile(h);
  SpectralBounds b;
  if (n == 0 || m == 0) {
    // no hyperedges: L = 0, every bound collapses to [0, 0]
    b.stable_vertex = false;
    b.stable_pairwise = false;
    return b;
  }

  // vertex-side: 2 deg_min - max_v sum_{e: v in e} deg(e) <= lambda <= max_v sum
  long long max_edge_deg_sum = 0;
  bool stable_vertex = true;
  std::vector<long long> edge_deg_sum(n, 0);
  for (int e = 0; e < m; ++e) {
    for (int v : h.hyperedges[e].sources) edge_deg_sum[v] += p.edge_deg[e];
    for (int v : h.hyperedges[e].targets) edge_deg_sum[v] += p.edge_deg[e];
  }
  for (int v = 0; v < n; ++v) {
    max_edge_deg_sum = std::max(max_edge_deg_sum, edge_deg_sum[v]);
    if (2 * p.deg[v] <= edge_deg_sum[v]) stable_vertex = false;
  }
  b.vertex_lo = 2 * p.deg_min_v - max_edge_deg_sum;
  b.vertex_hi = max_edge_deg_sum;
  b.stable_vertex = stable_vertex;

  // edge-side: lambda <= max_e sum_{v in e} deg(v)
  long long edge_upper = 0;
  for (int e = 0; e < m; ++e) {
    long long s = 0;
    for (int v : h.hyperedges[e].sources) s += p.deg[v];
    for (int v : h.hyperedges[e].targets) s += p.deg[v];
    edge_upper = std::max(edge_upper, s);
  }
  b.edge_upper = edge_upper;

  // pairwise: deg_min/max -/+ max_v sum_{w != v} |co - anti|
  long long max_row = 0;
  bool stable_pairwise = true;
  for (int v = 0; v < n; ++v) {
    long long s = 0;
    for (int w = 0; w < n; ++w)
      if (w != v) s += std::llabs(p.co.at(v, w) - p.anti.at(v, w));
    max_row = std::max(max_row, s);
    if (p.deg[v] <= s) stable_pairwise = false;
  }
  b.pair_lo = p.deg_min_v - max_row;
  b.pair_hi = p.deg_max_v + max_row;
  b.stable_pairwise = stable_pairwise;

  // pairwise, edge side: deg_max(E) + max_e sum_{f != e} |four-term overlap|
  auto inter = [](const std::vector<int>& a, const std::vector<int>& c) {
    std::vector<int> out;
    std::set_intersection(a.begin(), a.end(), c.begin(), c.end(), std::back_inserter(out));
    return static_cast<long long>(out.size());
  };
  long long max_edge_row = 0;
  for (int e = 0; e < m; ++e) {
    long long s = 0;
    for (int f = 0; f < m; ++f) {
      if (f == e) continue;
      const Hyperedge &ee = h.hyperedges[e], &ff = h.hyperedges[f];
      long long term = inter(ee.targets, ff.targets) + inter(ee.sources, ff.sources) -
                       inter(ee.targets, ff.sources) - inter(ee.sources, ff.targets);
      s += std::llabs(term);
    }
    max_edge_row = std::max(max_edge_row, s);
  }
  b.pair_edge_upper = p.deg_max_e + max_edge_row;
  return b;
}

namespace {

// clip [lo, hi] to [a, b]; keep if nonempty (tiny tolerance for boundary points)
void push_clipped(std::vector<RealInterval>& out, double lo, double hi, double a, double b) {
  lo = std::max(lo, a);
  hi = std::min(hi, b);
  if (lo <= hi + 1e-12) out.push_back(RealInterval{lo, std::max(lo, hi)});
}

// solutions of tau*x^2 + qb*x + qc <= 0 within [a, b], appended to out
void solve_quadratic_leq(std::vector<RealInterval>& out, double tau, double qb, double qc,
                         double a, double b) {
  if (tau > 0) {
    double disc = qb * qb - 4.0 * tau * qc;
    if (disc < 0) return;
    double sq = std::sqrt(disc);
    double r1 = (-qb - sq) / (2.0 * tau), r2 = (-qb + sq) / (2.0 * tau);
    push_clipped(out, r1, r2, a, b);
  } else {
    // tau = -1: -x^2 + qb x + qc <= 0  <=>  x^2 - qb x - qc >= 0
    double disc = qb * qb + 4.0 * qc;
    if (disc < 0) {
      push_clipped(out, a, b, a, b);  // holds everywhere
      return;
    }
    double sq = std::sqrt(disc);
    double r1 = (qb - sq) / 2.0, r2 = (qb + sq) / 2.0;
    push_clipped(out, a, r1, a, b);
    push_clipped(out, r2, b, a, b);
  }
}

// one oval: (c + |alpha + beta*x|) / (|x - p| |x - q|) >= 1, as intervals
void oval_intervals(std::vector<RealInterval>& out, double c, double alpha, double beta, double p,
                    double q, double lo_cap, double hi_cap) {
  std::set<double> cuts = {lo_cap, hi_cap, p, q};
  if (beta != 0.0) cuts.insert(-alpha / beta);
  std::vector<double> xs(cuts.begin(), cuts.end());
  const double pl = std::min(p, q), ph = std::max(p, q);
  for (size_t i = 0; i + 1 < xs.size(); ++i) {
    double a = xs[i], b = xs[i + 1];
    if (b <= a) continue;
    double mid = 0.5 * (a + b);
    double s = (alpha + beta * mid) >= 0 ? 1.0 : -1.0;
    double tau = (mid > pl && mid < ph) ? -1.0 : 1.0;
    // c + s(alpha + beta x) >= tau (x - p)(x - q)
    // <=> tau x^2 - (tau(p + q) + s beta) x + (tau p q - s alpha - c) <= 0
    solve_quadratic_leq(out, tau, -(tau * (p + q) + s * beta), tau * p * q - s * alpha - c, a, b);
  }
}

}  // namespace

std::vector<RealInterval> dms_inclusion_3x3(const Matrix& m) {
  if (m.rows != 3 || m.cols != 3) throw InputError("dms_inclusion_3x3: need a 3x3 matrix");
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j)
      if (std::fabs(m.at(i, j) - m.at(j, i)) > 1e-12 * (1.0 + max_abs(m)))
        throw InputError("dms_inclusion_3x3: matrix not symmetric");

  const double a11 = m.at(0, 0), a22 = m.at(1, 1), a33 = m.at(2, 2);
  const double a12 = m.at(0, 1), a13 = m.at(0, 2), a23 = m.at(1, 2);
  const double alpha = a13 * a23 - a12 * a33;
  const double beta = a12;

  // Everything is contained in a Gershgorin disc union; cap the case split there.
  double r0 = std::fabs(a12) + std::fabs(a13);
  double r1 = std::fabs(a12) + std::fabs(a23);
  double r2 = std::fabs(a13) + std::fabs(a23);
  double lo_cap = std::min({a11 - r0, a22 - r1, a33 - r2}) - 1.0;
  double hi_cap = std::max({a11 + r0, a22 + r1, a33 + r2}) + 1.0;

  std::vector<RealInterval> raw;
  oval_intervals(raw, a13 * a13, alpha, beta, a11, a33, lo_cap, hi_cap);
  oval_intervals(raw, a23 * a23, alpha, beta, a22, a33, lo_cap, hi_cap);
  raw.push_back(RealInterval{a11, a11});
  raw.push_back(RealInterval{a22, a22});
  raw.push_back(RealInterval{a33, a33});

  std::sort(raw.begin(), raw.end(),
            [](const RealInterval& x, const RealInterval& y) { return x.lo < y.lo; });
  std::vector<RealInterval> merged;
  for (const RealInterval& iv : raw) {
    if (!merged.empty() && iv.lo <= merged.back().hi + 1e-12)
      merged.back().hi = std::max(merged.back().hi, iv.hi);
    else
      merged.push_back(iv);
  }
  return merged;
}

bool region_contains(const std::vector<RealInterval>& region, double x, double tol) {
  for (const RealInterval& iv : region)
    if (x >= iv.lo - tol && x <= iv.hi + tol) return true;
  return false;
}

Lambda2Report lambda2_bound_check(const DirectedHypergraph& h) {
  if (!is_equipotent(h)) throw InputError("lambda2_bound_check: hypergraph not equipotent");
  const int n = h.num_vertices();
  if (n < 2) throw InputError("lambda2_bound_check: need at least two vertices");
  DegreeProfile p = degree_profile(h);
  SpectralDecomposition s = eigh(laplacian(h));
  Lambda2Report r;
  r.lambda2 = s.eigenvalues[1];
  r.bound = static_cast<double>(n) / (n - 1) * static_cast<double>(p.deg_min_v);
  r.holds = r.lambda2 <= r.bound + 1e-8;
  return r;
}

MonotonicityReport surgery_monotonicity_oracle(const DirectedHypergraph& h,
                                               const std::vector<int>& edges_to_delete) {
  std::set<int> del(edges_to_delete.begin(), edges_to_delete.end());
  for (int e : del)
    if (e < 0 || e >= h.num_hyperedges())
      throw InputError("surgery_monotonicity_oracle: hyperedge index out of range");
  DirectedHypergraph after;
  after.vertices = h.vertices;
  for (int e = 0; e < h.num_hyperedges(); ++e)
    if (!del.count(e)) after.hyperedges.push_back(h.hyperedges[e]);
  MonotonicityReport r;
  SpectralDecomposition sb = eigh(laplacian(h));
  SpectralDecomposition sa = eigh(laplacian(after));
  r.lambda1_before = sb.eigenvalues.empty() ? 0.0 : sb.eigenvalues.front();
  r.lambda1_after = sa.eigenvalues.empty() ? 0.0 : sa.eigenvalues.front();
  r.holds = r.lambda1_after <= r.lambda1_before + 1e-8;
  return r;
}

PairingReport pairing_bound_check(
    const DirectedHypergraph& h,
    const std::vector<std::vector<std::pair<int, int>>>& pairing) {
  const int m = h.num_hyperedges();
  if (static_cast<int>(pairing.size()) != m)
    throw InputError("pairing_bound_check: one pairing per hyperedge required");
  long long half = -1;
  DirectedHypergraph g;
  g.vertices = h.vertices;
  for (int e = 0; e < m; ++e) {
    const Hyperedge& ed = h.hyperedges[e];
    if (ed.sources.size() != ed.targets.size())
      throw InputError("pairing_bound_check: hyperedge " + std::to_string(e) +
                       " not equipotent");
    long long k = static_cast<long long>(ed.sources.size());
    if (half < 0) half = k;
    if (k != half)
      throw InputError("pairing_bound_check: hyperedge " + std::to_string(e) +
                       " has endset size " + std::to_string(k) + ", expected " +
                       std::to_string(half));
    if (static_cast<long long>(pairing[e].size()) != k)
      throw InputError("pairing_bound_check: pairing for hyperedge " + std::to_string(e) +
                       " has wrong size");
    std::set<int> src_used, tgt_used;
    for (auto [s, t] : pairing[e]) {
      if (!std::binary_search(ed.sources.begin(), ed.sources.end(), s) ||
          !std::binary_search(ed.targets.begin(), ed.targets.end(), t))
        throw InputError("pairing_bound_check: pair outside hyperedge " + std::to_string(e));
      if (!src_used.insert(s).second || !tgt_used.insert(t).second)
        throw InputError("pairing_bound_check: pairing for hyperedge " + std::to_string(e) +
                         " is not a bijection");
      g.hyperedges.push_back(Hyperedge{{s}, {t}});
    }
  }
  if (half < 0) half = 0;
  PairingReport r;
  r.m = half;
  SpectralDecomposition sh = eigh(laplacian(h));
  SpectralDecomposition sg = eigh(laplacian(g));
  r.lhs = sh.eigenvalues.empty() ? 0.0 : sh.eigenvalues.front();
  r.rhs = static_cast<double>(half) * (sg.eigenvalues.empty() ? 0.0 : sg.eigenvalues.front());
  r.holds = r.lhs <= r.rhs + 1e-8;
  return r;
}

}  // namespace hyperlap
