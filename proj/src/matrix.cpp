#include "hyperlap/matrix.hpp"

#include <cmath>
#include <cstdlib>
#include <numeric>

namespace hyperlap {

IntMatrix int_identity(int n) {
  IntMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMatrix int_transpose(const IntMatrix& m) {
  IntMatrix t(m.cols, m.rows);
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j) t.at(j, i) = m.at(i, j);
  return t;
}

IntMatrix int_matmul(const IntMatrix& x, const IntMatrix& y) {
  if (x.cols != y.rows) throw InputError("int_matmul: shape mismatch");
  IntMatrix r(x.rows, y.cols);
  for (int i = 0; i < x.rows; ++i)
    for (int k = 0; k < x.cols; ++k) {
      long long v = x.at(i, k);
      if (v == 0) continue;
      for (int j = 0; j < y.cols; ++j) r.at(i, j) += v * y.at(k, j);
    }
  return r;
}

IntMatrix int_add(const IntMatrix& x, const IntMatrix& y) {
  if (x.rows != y.rows || x.cols != y.cols) throw InputError("int_add: shape mismatch");
  IntMatrix r = x;
  for (size_t i = 0; i < r.a.size(); ++i) r.a[i] += y.a[i];
  return r;
}

IntMatrix int_sub(const IntMatrix& x, const IntMatrix& y) {
  if (x.rows != y.rows || x.cols != y.cols) throw InputError("int_sub: shape mismatch");
  IntMatrix r = x;
  for (size_t i = 0; i < r.a.size(); ++i) r.a[i] -= y.a[i];
  return r;
}

bool int_symmetric(const IntMatrix& m) {
  if (m.rows != m.cols) return false;
  for (int i = 0; i < m.rows; ++i)
    for (int j = i + 1; j < m.cols; ++j)
      if (m.at(i, j) != m.at(j, i)) return false;
  return true;
}

long long int_trace(const IntMatrix& m) {
  long long t = 0;
  for (int i = 0; i < m.rows && i < m.cols; ++i) t += m.at(i, i);
  return t;
}

long long int_inf_norm(const IntMatrix& m) {
  long long best = 0;
  for (int i = 0; i < m.rows; ++i) {
    long long s = 0;
    for (int j = 0; j < m.cols; ++j) s += std::llabs(m.at(i, j));
    if (s > best) best = s;
  }
  return best;
}

// Bareiss fraction-free elimination: all intermediate entries are exact
// integers (determinants of minors), so the rank is exact.
int integer_rank(IntMatrix m) {
  int n = m.rows, c = m.cols;
  int rank = 0;
  long long prev = 1;
  for (int col = 0; col < c && rank < n; ++col) {
    int pivot = -1;
    for (int i = rank; i < n; ++i)
      if (m.at(i, col) != 0) {
        pivot = i;
        break;
      }
    if (pivot < 0) continue;
    if (pivot != rank)
      for (int j = 0; j < c; ++j) std::swap(m.at(pivot, j), m.at(rank, j));
    long long piv = m.at(rank, col);
    for (int i = rank + 1; i < n; ++i) {
      long long head = m.at(i, col);
      for (int j = col; j < c; ++j)
        m.at(i, j) = (piv * m.at(i, j) - head * m.at(rank, j)) / prev;
    }
    prev = piv;
    ++rank;
  }
  return rank;
}

Matrix identity(int n) {
  Matrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1.0;
  return m;
}

Matrix to_matrix(const IntMatrix& m) {
  Matrix r(m.rows, m.cols);
  for (size_t i = 0; i < m.a.size(); ++i) r.a[i] = static_cast<double>(m.a[i]);
  return r;
}

Matrix transpose(const Matrix& m) {
  Matrix t(m.cols, m.rows);
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j) t.at(j, i) = m.at(i, j);
  return t;
}

Matrix matmul(const Matrix& x, const Matrix& y) {
  if (x.cols != y.rows) throw InputError("matmul: shape mismatch");
  Matrix r(x.rows, y.cols);
  for (int i = 0; i < x.rows; ++i)
    for (int k = 0; k < x.cols; ++k) {
      double v = x.at(i, k);
      if (v == 0.0) continue;
      for (int j = 0; j < y.cols; ++j) r.at(i, j) += v * y.at(k, j);
    }
  return r;
}

Matrix add(const Matrix& x, const Matrix& y) {
  if (x.rows != y.rows || x.cols != y.cols) throw InputError("add: shape mismatch");
  Matrix r = x;
  for (size_t i = 0; i < r.a.size(); ++i) r.a[i] += y.a[i];
  return r;
}

Matrix sub(const Matrix& x, const Matrix& y) {
  if (x.rows != y.rows || x.cols != y.cols) throw InputError("sub: shape mismatch");
  Matrix r = x;
  for (size_t i = 0; i < r.a.size(); ++i) r.a[i] -= y.a[i];
  return r;
}

std::vector<double> mat_vec(const Matrix& m, const std::vector<double>& v) {
  if (static_cast<int>(v.size()) != m.cols) throw InputError("mat_vec: shape mismatch");
  std::vector<double> r(m.rows, 0.0);
  for (int i = 0; i < m.rows; ++i) {
    double s = 0.0;
    for (int j = 0; j < m.cols; ++j) s += m.at(i, j) * v[j];
    r[i] = s;
  }
  return r;
}

double max_abs(const Matrix& m) {
  double best = 0.0;
  for (double v : m.a) best = std::max(best, std::fabs(v));
  return best;
}

double max_abs_diff(const Matrix& x, const Matrix& y) {
  if (x.rows != y.rows || x.cols != y.cols) throw InputError("max_abs_diff: shape mismatch");
  double best = 0.0;
  for (size_t i = 0; i < x.a.size(); ++i) best = std::max(best, std::fabs(x.a[i] - y.a[i]));
  return best;
}

}  // namespace hyperlap
