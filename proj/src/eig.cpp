#include "hyperlap/eig.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

namespace hyperlap {

namespace {

double sym_check(const Matrix& m) {
  double worst = 0.0;
  for (int i = 0; i < m.rows; ++i)
    for (int j = i + 1; j < m.cols; ++j)
      worst = std::max(worst, std::fabs(m.at(i, j) - m.at(j, i)));
  return worst;
}

double inf_norm(const Matrix& m) {
  double best = 0.0;
  for (int i = 0; i < m.rows; ++i) {
    double s = 0.0;
    for (int j = 0; j < m.cols; ++j) s += std::fabs(m.at(i, j));
    best = std::max(best, s);
  }
  return best;
}

}  // namespace

SpectralDecomposition eigh(const Matrix& m) {
  if (m.rows != m.cols) throw InputError("eigh: matrix not square");
  const int n = m.rows;
  const double norm = inf_norm(m);
  if (n > 0 && sym_check(m) > 1e-12 * (1.0 + norm)) throw InputError("eigh: matrix not symmetric");

  SpectralDecomposition out;
  out.input_inf_norm = norm;
  out.vectors = identity(n);
  if (n == 0) return out;

  Matrix w = m;
  // enforce exact symmetry of the working copy
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) w.at(j, i) = w.at(i, j);
  Matrix& v = out.vectors;

  const double stop = 1e-15 * (1.0 + norm);
  bool converged = (n == 1);
  for (int sweep = 0; sweep < 100 && !converged; ++sweep) {
    double off = 0.0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) off = std::max(off, std::fabs(w.at(i, j)));
    if (off <= stop) {
      converged = true;
      break;
    }
    for (int p = 0; p < n - 1; ++p)
      for (int q = p + 1; q < n; ++q) {
        double apq = w.at(p, q);
        if (std::fabs(apq) <= stop) continue;
        double theta = (w.at(q, q) - w.at(p, p)) / (2.0 * apq);
        double t = (theta >= 0 ? 1.0 : -1.0) / (std::fabs(theta) + std::sqrt(theta * theta + 1.0));
        double c = 1.0 / std::sqrt(t * t + 1.0);
        double s = t * c;
        double app = w.at(p, p), aqq = w.at(q, q);
        w.at(p, p) = app - t * apq;
        w.at(q, q) = aqq + t * apq;
        w.at(p, q) = 0.0;
        w.at(q, p) = 0.0;
        for (int k = 0; k < n; ++k) {
          if (k != p && k != q) {
            double akp = w.at(k, p), akq = w.at(k, q);
            w.at(k, p) = c * akp - s * akq;
            w.at(p, k) = w.at(k, p);
            w.at(k, q) = s * akp + c * akq;
            w.at(q, k) = w.at(k, q);
          }
          double vkp = v.at(k, p), vkq = v.at(k, q);
          v.at(k, p) = c * vkp - s * vkq;
          v.at(k, q) = s * vkp + c * vkq;
        }
      }
  }
  if (!converged) {
    double off = 0.0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) off = std::max(off, std::fabs(w.at(i, j)));
    if (off > stop)
      throw NumericError("eigh: no convergence after 100 sweeps, off-diagonal max " +
                         std::to_string(off));
  }

  // ascending eigenvalue order, stable on ties
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::vector<double> diag(n);
  for (int i = 0; i < n; ++i) diag[i] = w.at(i, i);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return diag[a] < diag[b]; });

  out.eigenvalues.resize(n);
  Matrix sorted(n, n);
  for (int k = 0; k < n; ++k) {
    int src = order[k];
    out.eigenvalues[k] = diag[src];
    // sign convention: entry of largest magnitude (first on ties) positive
    int lead = 0;
    for (int i = 1; i < n; ++i)
      if (std::fabs(v.at(i, src)) > std::fabs(v.at(lead, src))) lead = i;
    double sgn = v.at(lead, src) < 0 ? -1.0 : 1.0;
    for (int i = 0; i < n; ++i) sorted.at(i, k) = sgn * v.at(i, src);
  }
  out.vectors = std::move(sorted);

  double resid = 0.0;
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i) {
      double s = 0.0;
      for (int j = 0; j < n; ++j) s += m.at(i, j) * out.vectors.at(j, k);
      resid = std::max(resid, std::fabs(s - out.eigenvalues[k] * out.vectors.at(i, k)));
    }
  out.residual = resid;
  return out;
}

SpectralDecomposition eigh(const IntMatrix& m) { return eigh(to_matrix(m)); }

double zero_tol(const SpectralDecomposition& s) {
  return kZeroTolBase * (1.0 + s.input_inf_norm);
}

int kernel_dim(const SpectralDecomposition& s) {
  const double tol = zero_tol(s);
  int k = 0;
  for (double lam : s.eigenvalues)
    if (std::fabs(lam) <= tol) ++k;
  return k;
}

std::vector<EigenCluster> eigenvalue_clusters(const SpectralDecomposition& s, double tol) {
  std::vector<EigenCluster> out;
  const int n = static_cast<int>(s.eigenvalues.size());
  int start = 0;
  while (start < n) {
    int end = start + 1;
    while (end < n && s.eigenvalues[end] - s.eigenvalues[end - 1] <= tol) ++end;
    double mean = 0.0;
    for (int i = start; i < end; ++i) mean += s.eigenvalues[i];
    out.push_back(EigenCluster{mean / (end - start), start, end - start});
    start = end;
  }
  return out;
}

Matrix projector_for(const SpectralDecomposition& s, const EigenCluster& c) {
  const int n = s.vectors.rows;
  if (c.first < 0 || c.count <= 0 || c.first + c.count > n)
    throw InputError("projector_for: cluster out of range");
  Matrix p(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      double sum = 0.0;
      for (int k = c.first; k < c.first + c.count; ++k)
        sum += s.vectors.at(i, k) * s.vectors.at(j, k);
      p.at(i, j) = sum;
      p.at(j, i) = sum;
    }
  return p;
}

Matrix lowest_projector(const SpectralDecomposition& s) {
  auto clusters = eigenvalue_clusters(s);
  if (clusters.empty()) throw InputError("lowest_projector: empty spectrum");
  return projector_for(s, clusters.front());
}

double spectral_gap(const SpectralDecomposition& s) {
  auto clusters = eigenvalue_clusters(s);
  if (clusters.size() < 2) return std::numeric_limits<double>::infinity();
  return clusters[1].value - clusters[0].value;
}

}  // namespace hyperlap
