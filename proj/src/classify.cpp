#include "hyperlap/classify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <queue>
#include <string>

namespace hyperlap {

namespace {

std::string pair_name(const DirectedHypergraph& h, int v, int w) {
  return "(" + h.vertices[v] + "," + h.vertices[w] + ")";
}

}  // namespace

Flag is_positive_generator(const DirectedHypergraph& h) {
  DegreeProfile p = degree_profile(h);
  const int n = h.num_vertices();
  for (int v = 0; v < n; ++v)
    for (int w = v + 1; w < n; ++w)
      if (p.co.at(v, w) > p.anti.at(v, w))
        return Flag{false,
                    "off-diagonal violation at " + pair_name(h, v, w) + ": co=" +
                        std::to_string(p.co.at(v, w)) + " > anti=" +
                        std::to_string(p.anti.at(v, w)),
                    static_cast<double>(p.co.at(v, w) - p.anti.at(v, w))};
  return Flag{true, "co(v,w) <= anti(v,w) for every vertex pair", {}};
}

Flag is_inf_contractive(const DirectedHypergraph& h) {
  DegreeProfile p = degree_profile(h);
  const int n = h.num_vertices();
  for (int v = 0; v < n; ++v) {
    long long row = 0;
    for (int w = 0; w < n; ++w)
      if (w != v) row += std::llabs(p.co.at(v, w) - p.anti.at(v, w));
    if (row > p.deg[v])
      return Flag{false,
                  "row " + h.vertices[v] + ": sum |co-anti| = " + std::to_string(row) +
                      " > deg = " + std::to_string(p.deg[v]),
                  static_cast<double>(row - p.deg[v])};
  }
  return Flag{true, "sum_w |co-anti| <= deg(v) for every vertex", {}};
}

Flag is_equipotent_flag(const DirectedHypergraph& h) {
  for (int e = 0; e < h.num_hyperedges(); ++e) {
    const Hyperedge& ed = h.hyperedges[e];
    if (ed.sources.size() != ed.targets.size())
      return Flag{false,
                  "hyperedge " + std::to_string(e) + " has " +
                      std::to_string(ed.sources.size()) + " sources but " +
                      std::to_string(ed.targets.size()) + " targets",
                  {}};
  }
  // cross-check: equipotency is equivalent to L*ones == 0, exactly
  IntMatrix lap = laplacian(h);
  for (int i = 0; i < lap.rows; ++i) {
    long long s = 0;
    for (int j = 0; j < lap.cols; ++j) s += lap.at(i, j);
    if (s != 0) throw NumericError("equipotency cross-check failed: row sum nonzero");
  }
  return Flag{true, "every hyperedge has equally many sources and targets", {}};
}

Flag is_stochastic(const DirectedHypergraph& h) {
  Flag eq = is_equipotent_flag(h);
  Flag pos = is_positive_generator(h);
  Flag out;
  out.value = eq.value && pos.value;
  if (!eq.value)
    out.witness = "mass not conserved: " + eq.witness;
  else if (!pos.value)
    out.witness = "flow not positive: " + pos.witness;
  else
    out.witness = "conserves mass and preserves positivity";
  return out;
}

Flag is_irreducible_generator(const DirectedHypergraph& h) {
  // matrix irreducibility: connectivity of the nonzero off-diagonal pattern
  IntMatrix lap = laplacian(h);
  const int n = lap.rows;
  if (n == 0) return Flag{false, "empty vertex set", {}};
  std::vector<char> seen(n, 0);
  std::queue<int> bfs;
  bfs.push(0);
  seen[0] = 1;
  int reached = 1;
  while (!bfs.empty()) {
    int v = bfs.front();
    bfs.pop();
    for (int w = 0; w < n; ++w)
      if (w != v && !seen[w] && lap.at(v, w) != 0) {
        seen[w] = 1;
        ++reached;
        bfs.push(w);
      }
  }
  if (reached != n) {
    int missing = 0;
    while (seen[missing]) ++missing;
    return Flag{false,
                "off-diagonal pattern disconnected: " + h.vertices[missing] +
                    " unreachable from " + h.vertices[0],
                {}};
  }
  return Flag{true, "nonzero off-diagonal pattern is connected", {}};
}

DirectedHypergraph positivity_repair(const DirectedHypergraph& h) {
  DegreeProfile p = degree_profile(h);
  DirectedHypergraph r = h;
  const int n = h.num_vertices();
  for (int v = 0; v < n; ++v)
    for (int w = v + 1; w < n; ++w) {
      long long excess = p.co.at(v, w) - p.anti.at(v, w);
      for (long long k = 0; k < excess; ++k) r.hyperedges.push_back(Hyperedge{{v}, {w}});
    }
  return r;
}

AsymptoticFlags asymptotic_and_eventual_flags(const SpectralDecomposition& s) {
  AsymptoticFlags f;
  const int n = s.vectors.rows;
  if (n == 0) {
    f.eventually_irreducible = Flag{false, "empty matrix", {}};
    f.asymptotically_positive = Flag{true, "empty matrix", {}};
    f.asymptotically_inf_contractive = Flag{true, "empty matrix", {}};
    f.exponentially_stable = Flag{false, "empty matrix", {}};
    return f;
  }
  auto clusters = eigenvalue_clusters(s);
  const EigenCluster& low = clusters.front();
  f.lambda1 = s.eigenvalues.front();
  f.lambda1_multiplicity = low.count;
  f.phi1.resize(n);
  for (int i = 0; i < n; ++i) f.phi1[i] = s.vectors.at(i, 0);

  Matrix p = projector_for(s, low);
  const double pmin = min_entry(p);
  const double pnorm = op_norm_inf(p);

  // eventually irreducible: lambda_1 simple with strictly positive eigenvector
  if (low.count != 1) {
    f.eventually_irreducible =
        Flag{false, "lambda_1 has multiplicity " + std::to_string(low.count), {}};
  } else {
    double lo = *std::min_element(f.phi1.begin(), f.phi1.end());
    if (lo > kEntryTol)
      f.eventually_irreducible =
          Flag{true, "lambda_1 simple, eigenvector strictly positive", lo};
    else
      f.eventually_irreducible =
          Flag{false, "lambda_1 simple but eigenvector not strictly positive", lo};
  }

  if (pmin >= -kEntryTol)
    f.asymptotically_positive = Flag{true, "lambda_1 projector entrywise nonnegative", pmin};
  else
    f.asymptotically_positive =
        Flag{false, "lambda_1 projector has a negative entry", pmin};

  if (pnorm <= 1.0 + kEntryTol)
    f.asymptotically_inf_contractive =
        Flag{true, "sup-norm of the lambda_1 projector is at most 1", pnorm};
  else
    f.asymptotically_inf_contractive =
        Flag{false, "sup-norm of the lambda_1 projector exceeds 1", pnorm};

  if (f.lambda1 > zero_tol(s))
    f.exponentially_stable = Flag{true, "lambda_1 > 0: the flow decays", f.lambda1};
  else
    f.exponentially_stable = Flag{false, "lambda_1 = 0: the flow does not decay", f.lambda1};
  return f;
}

ClassificationReport classify(const DirectedHypergraph& h, bool with_thresholds,
                              std::optional<double> horizon) {
  validate(h);
  ClassificationReport r;
  r.positive = is_positive_generator(h);
  r.inf_contractive = is_inf_contractive(h);
  r.equipotent = is_equipotent_flag(h);
  r.stochastic = is_stochastic(h);
  r.irreducible_generator = is_irreducible_generator(h);

  r.sub_markovian.value = r.positive.value && r.inf_contractive.value;
  if (!r.positive.value)
    r.sub_markovian.witness = "not positive: " + r.positive.witness;
  else if (!r.inf_contractive.value)
    r.sub_markovian.witness = "not an inf-contraction: " + r.inf_contractive.witness;
  else
    r.sub_markovian.witness = "positive and inf-contractive";

  // self-adjoint generator: the adjoint flow is the flow itself, so
  // stochastic and Markovian coincide
  r.markovian.value = r.stochastic.value;
  r.markovian.witness = r.stochastic.value
                            ? "stochastic with self-adjoint generator"
                            : "not stochastic (self-adjoint generator): " + r.stochastic.witness;

  SpectralDecomposition s = eigh(laplacian(h));
  AsymptoticFlags af = asymptotic_and_eventual_flags(s);
  r.eventually_irreducible = af.eventually_irreducible;
  r.asymptotically_positive = af.asymptotically_positive;
  r.asymptotically_inf_contractive = af.asymptotically_inf_contractive;
  r.exponentially_stable = af.exponentially_stable;
  r.lambda1 = af.lambda1;
  r.lambda1_multiplicity = af.lambda1_multiplicity;
  r.phi1 = af.phi1;

  // numeric cross-check of stochasticity: column sums of the flow stay 1
  if (r.stochastic.value && h.num_vertices() > 0) {
    for (double t : {0.1, 1.0, 10.0}) {
      Matrix e = heat_operator(s, t);
      for (int j = 0; j < e.cols; ++j) {
        double colsum = 0.0;
        for (int i = 0; i < e.rows; ++i) colsum += e.at(i, j);
        if (std::fabs(colsum - 1.0) > 1e-8)
          throw NumericError("stochasticity cross-check failed at t=" + std::to_string(t));
      }
    }
  }

  if (with_thresholds && h.num_vertices() > 0) {
    r.positivity_threshold = threshold_search(s, SemigroupProperty::positivity, horizon);
    r.contractivity_threshold =
        threshold_search(s, SemigroupProperty::inf_contractivity, horizon);
  }
  return r;
}

}  // namespace hyperlap
