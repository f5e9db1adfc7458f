#include "hyperlap/heat.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace hyperlap {

namespace {

// sum_k w(lambda_k) q_k q_k^T, exactly symmetric
Matrix synth(const SpectralDecomposition& s, const std::vector<double>& w) {
  const int n = s.vectors.rows;
  Matrix r(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      double sum = 0.0;
      for (int k = 0; k < n; ++k) sum += w[k] * s.vectors.at(i, k) * s.vectors.at(j, k);
      r.at(i, j) = sum;
      r.at(j, i) = sum;
    }
  return r;
}

}  // namespace

Matrix heat_operator(const SpectralDecomposition& s, double t, bool allow_backward) {
  if (t < 0 && !allow_backward)
    throw InputError("heat_operator: negative time (pass allow_backward for the backward flow)");
  const int n = s.vectors.rows;
  std::vector<double> w(n);
  for (int k = 0; k < n; ++k) w[k] = std::exp(-t * s.eigenvalues[k]);
  return synth(s, w);
}

Matrix rescaled_heat_operator(const SpectralDecomposition& s, double t) {
  if (t < 0) throw InputError("rescaled_heat_operator: negative time");
  const int n = s.vectors.rows;
  if (n == 0) return Matrix(0, 0);
  const double l1 = s.eigenvalues.front();
  std::vector<double> w(n);
  for (int k = 0; k < n; ++k) w[k] = std::exp(-t * (s.eigenvalues[k] - l1));
  return synth(s, w);
}

Matrix heat_trajectory(const SpectralDecomposition& s, const std::vector<double>& u0,
                       const std::vector<double>& times) {
  const int n = s.vectors.rows;
  if (static_cast<int>(u0.size()) != n) throw InputError("heat_trajectory: u0 has wrong length");
  // coefficients of u0 in the eigenbasis
  std::vector<double> c(n, 0.0);
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i) c[k] += s.vectors.at(i, k) * u0[i];
  Matrix out(static_cast<int>(times.size()), n);
  for (size_t r = 0; r < times.size(); ++r) {
    double t = times[r];
    if (t < 0) throw InputError("heat_trajectory: negative time");
    for (int i = 0; i < n; ++i) {
      double sum = 0.0;
      for (int k = 0; k < n; ++k)
        sum += c[k] * std::exp(-t * s.eigenvalues[k]) * s.vectors.at(i, k);
      out.at(static_cast<int>(r), i) = sum;
    }
  }
  return out;
}

double op_norm_inf(const Matrix& m) {
  double best = 0.0;
  for (int i = 0; i < m.rows; ++i) {
    double s = 0.0;
    for (int j = 0; j < m.cols; ++j) s += std::fabs(m.at(i, j));
    best = std::max(best, s);
  }
  return best;
}

double min_entry(const Matrix& m) {
  double best = m.a.empty() ? 0.0 : m.a.front();
  for (double v : m.a) best = std::min(best, v);
  return best;
}

double default_horizon(const SpectralDecomposition& s) {
  double gap = spectral_gap(s);
  if (!std::isfinite(gap) || gap <= 0) return 1.0;
  return std::clamp(10.0 / gap, 1.0, 200.0);
}

namespace {

constexpr int kGridPoints = 1024;

bool violates(const SpectralDecomposition& s, SemigroupProperty prop, double t, double tol) {
  Matrix e = heat_operator(s, t);
  if (prop == SemigroupProperty::positivity) return min_entry(e) < -tol;
  return op_norm_inf(e) > 1.0 + tol;
}

bool violates_dom(const SpectralDecomposition& sa, const SpectralDecomposition& sb, double t,
                  double tol) {
  Matrix ea = heat_operator(sa, t);
  Matrix eb = heat_operator(sb, t);
  double worst = 0.0;
  for (size_t i = 0; i < ea.a.size(); ++i)
    worst = std::min(worst, ea.a[i] - std::fabs(eb.a[i]));
  return worst < -tol;
}

// Shared grid-scan + bisection machinery. `viol` decides one time point.
template <typename F>
ThresholdReport scan_threshold(F&& viol, SemigroupProperty prop, double horizon, double tol,
                               bool certified, bool parallel) {
  ThresholdReport rep;
  rep.property = prop;
  rep.horizon = horizon;
  rep.entry_tol = tol;
  if (horizon <= 0) throw InputError("threshold scan: horizon must be positive");

  std::vector<char> bad(kGridPoints, 0);
  if (parallel) {
#pragma omp parallel for schedule(static)
    for (int i = 0; i < kGridPoints; ++i)
      bad[i] = viol(horizon * i / (kGridPoints - 1)) ? 1 : 0;
  } else {
    for (int i = 0; i < kGridPoints; ++i)
      bad[i] = viol(horizon * i / (kGridPoints - 1)) ? 1 : 0;
  }
  int last = -1;
  for (int i = 0; i < kGridPoints; ++i)
    if (bad[i]) last = i;

  if (last < 0) {
    rep.t0 = 0.0;
    rep.certified_tail = certified;
    return rep;
  }
  if (last == kGridPoints - 1) {
    rep.t0 = std::nullopt;
    rep.certified_tail = false;
    return rep;
  }
  double lo = horizon * last / (kGridPoints - 1);        // violating
  double hi = horizon * (last + 1) / (kGridPoints - 1);  // holding
  while (hi - lo > 1e-6) {
    double mid = 0.5 * (lo + hi);
    if (viol(mid))
      lo = mid;
    else
      hi = mid;
  }
  rep.t0 = hi;
  rep.certified_tail = certified;
  return rep;
}

bool tail_certificate(const SpectralDecomposition& s, SemigroupProperty prop, double tol) {
  if (s.eigenvalues.empty()) return true;
  Matrix p = lowest_projector(s);
  if (prop == SemigroupProperty::positivity) return min_entry(p) > tol;
  // inf_contractivity: either everything decays, or the projector is a strict contraction
  if (!s.eigenvalues.empty() && s.eigenvalues.front() > zero_tol(s)) return true;
  return op_norm_inf(p) < 1.0 - 1e-9;
}

ThresholdReport threshold_impl(const SpectralDecomposition& s, SemigroupProperty prop,
                               std::optional<double> horizon, double tol, bool parallel) {
  if (prop == SemigroupProperty::domination)
    throw InputError("threshold_search: use eventual_domination_threshold for domination");
  double h = horizon.value_or(default_horizon(s));
  return scan_threshold([&](double t) { return violates(s, prop, t, tol); }, prop, h, tol,
                        tail_certificate(s, prop, tol), parallel);
}

}  // namespace

ThresholdReport threshold_search(const SpectralDecomposition& s, SemigroupProperty prop,
                                 std::optional<double> horizon, double tol) {
  return threshold_impl(s, prop, horizon, tol, true);
}

ThresholdReport threshold_search_serial(const SpectralDecomposition& s, SemigroupProperty prop,
                                        std::optional<double> horizon, double tol) {
  return threshold_impl(s, prop, horizon, tol, false);
}

bool domination(const SpectralDecomposition& sa, const SpectralDecomposition& sb, double t,
                double tol) {
  if (sa.vectors.rows != sb.vectors.rows) throw InputError("domination: size mismatch");
  return !violates_dom(sa, sb, t, tol);
}

ThresholdReport eventual_domination_threshold(const SpectralDecomposition& sa,
                                              const SpectralDecomposition& sb,
                                              std::optional<double> horizon, double tol) {
  if (sa.vectors.rows != sb.vectors.rows)
    throw InputError("eventual_domination_threshold: size mismatch");
  double h = horizon.value_or(std::max(default_horizon(sa), default_horizon(sb)));
  bool certified = false;
  if (!sa.eigenvalues.empty() && !sb.eigenvalues.empty()) {
    Matrix pa = lowest_projector(sa);
    double la = sa.eigenvalues.front(), lb = sb.eigenvalues.front();
    if (lb > la + kClusterTol && min_entry(pa) > tol) {
      certified = true;  // the dominated flow decays strictly faster
    } else if (std::fabs(la - lb) <= kClusterTol) {
      Matrix pb = lowest_projector(sb);
      double worst = 0.0;
      for (size_t i = 0; i < pa.a.size(); ++i)
        worst = std::min(worst, pa.a[i] - std::fabs(pb.a[i]));
      certified = worst > -tol;
    }
  }
  return scan_threshold([&](double t) { return violates_dom(sa, sb, t, tol); },
                        SemigroupProperty::domination, h, tol, certified, true);
}

}  // namespace hyperlap
