#include "hyperlap/charpoly.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace hyperlap {

std::vector<long long> charpoly_int(const IntMatrix& m) {
  if (m.rows != m.cols) throw InputError("charpoly_int: matrix not square");
  const int n = m.rows;
  std::vector<long long> c(n + 1, 0);
  c[0] = 1;
  IntMatrix mk = int_identity(n);  // M_1 = I
  for (int k = 1; k <= n; ++k) {
    IntMatrix am = int_matmul(m, mk);
    long long tr = int_trace(am);
    if (tr % k != 0) throw NumericError("charpoly_int: inexact division (overflow?)");
    c[k] = -tr / k;
    if (k < n) {
      mk = am;
      for (int i = 0; i < n; ++i) mk.at(i, i) += c[k];
    }
  }
  return c;
}

double poly_eval(const std::vector<double>& c, double x) {
  double r = 0.0;
  for (double ci : c) r = r * x + ci;
  return r;
}

double bisect_root(const std::vector<double>& c, double lo, double hi, double tol) {
  double flo = poly_eval(c, lo), fhi = poly_eval(c, hi);
  if (flo == 0.0) return lo;
  if (fhi == 0.0) return hi;
  if ((flo > 0) == (fhi > 0)) throw InputError("bisect_root: no sign change on bracket");
  for (int it = 0; it < 200 && hi - lo > tol; ++it) {
    double mid = 0.5 * (lo + hi);
    double fm = poly_eval(c, mid);
    if (fm == 0.0) return mid;
    if ((fm > 0) == (flo > 0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

namespace {

// Evaluation-noise ceiling for deciding "p(x) is zero" at a candidate point.
double eval_tol(const std::vector<double>& c, double x) {
  double s = 0.0, ax = std::fabs(x);
  for (double ci : c) s = s * ax + std::fabs(ci);
  return 1e-11 * (1.0 + s);
}

}  // namespace

std::vector<double> real_roots_all(std::vector<double> c) {
  // strip leading zeros, normalize to monic
  size_t lead = 0;
  while (lead < c.size() && c[lead] == 0.0) ++lead;
  c.erase(c.begin(), c.begin() + lead);
  if (c.size() <= 1) return {};
  for (size_t i = 1; i < c.size(); ++i) c[i] /= c[0];
  c[0] = 1.0;
  const int d = static_cast<int>(c.size()) - 1;
  if (d == 1) return {-c[1]};

  std::vector<double> dp(d);
  for (int i = 0; i < d; ++i) dp[i] = c[i] * (d - i);
  std::vector<double> crit = real_roots_all(dp);  // ascending, with multiplicity

  double bound = 0.0;
  for (int i = 1; i <= d; ++i) bound = std::max(bound, std::fabs(c[i]));
  bound += 1.0;  // Cauchy: all roots in (-bound, bound)

  // unique critical values with multiplicities
  std::vector<std::pair<double, int>> pts;
  for (double v : crit) {
    if (!pts.empty() && std::fabs(v - pts.back().first) <= 1e-12 * (1.0 + std::fabs(v)))
      ++pts.back().second;
    else
      pts.push_back({v, 1});
  }

  std::vector<double> roots;
  for (size_t i = 0; i < pts.size(); ++i)
    if (std::fabs(poly_eval(c, pts[i].first)) <= eval_tol(c, pts[i].first)) {
      // a root of multiplicity m in p appears with multiplicity m-1 in p'
      for (int r = 0; r <= pts[i].second; ++r) roots.push_back(pts[i].first);
    }

  std::vector<double> xs;
  xs.push_back(-bound);
  for (auto& pv : pts) xs.push_back(pv.first);
  xs.push_back(bound);
  for (size_t i = 0; i + 1 < xs.size(); ++i) {
    double a = xs[i], b = xs[i + 1];
    if (b - a <= 1e-14 * (1.0 + std::fabs(a))) continue;
    // step inside so that a critical endpoint that IS a root does not mask
    // the sign on the open interval
    double pad = (b - a) * 1e-6;
    double a2 = a + pad, b2 = b - pad;
    double fa = poly_eval(c, a2), fb = poly_eval(c, b2);
    if ((fa > 0 && fb < 0) || (fa < 0 && fb > 0))
      roots.push_back(bisect_root(c, a2, b2, 1e-13 * (1.0 + std::fabs(b2))));
  }
  std::sort(roots.begin(), roots.end());
  if (static_cast<int>(roots.size()) != d)
    throw NumericError("real_roots_all: found " + std::to_string(roots.size()) +
                       " real roots for degree " + std::to_string(d));
  return roots;
}

}  // namespace hyperlap
