#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace hyperlap {

// Malformed input: files, hypergraphs, subsets, CLI arguments, preconditions.
struct InputError : std::runtime_error {
  explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

// A numeric routine could not certify its result (non-convergence,
// inconsistent cross-checks, root-count mismatch).
struct NumericError : std::runtime_error {
  explicit NumericError(const std::string& what) : std::runtime_error(what) {}
};

// Dense row-major integer matrix. All combinatorial quantities (incidence,
// Laplacians, degree counts) stay in exact integers; floating point enters
// only through the eigensolver.
struct IntMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<long long> a;

  IntMatrix() = default;
  IntMatrix(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c, 0) {}

  long long& at(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
  long long at(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }

  bool operator==(const IntMatrix& o) const {
    return rows == o.rows && cols == o.cols && a == o.a;
  }
};

IntMatrix int_identity(int n);
IntMatrix int_transpose(const IntMatrix& m);
IntMatrix int_matmul(const IntMatrix& x, const IntMatrix& y);
IntMatrix int_add(const IntMatrix& x, const IntMatrix& y);
IntMatrix int_sub(const IntMatrix& x, const IntMatrix& y);
bool int_symmetric(const IntMatrix& m);
long long int_trace(const IntMatrix& m);
long long int_inf_norm(const IntMatrix& m);  // max absolute row sum

// Exact rank over the rationals via fraction-free (Bareiss) elimination.
int integer_rank(IntMatrix m);

// Dense row-major real matrix.
struct Matrix {
  int rows = 0;
  int cols = 0;
  std::vector<double> a;

  Matrix() = default;
  Matrix(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c, 0.0) {}

  double& at(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
  double at(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }
};

Matrix identity(int n);
Matrix to_matrix(const IntMatrix& m);
Matrix transpose(const Matrix& m);
Matrix matmul(const Matrix& x, const Matrix& y);
Matrix add(const Matrix& x, const Matrix& y);
Matrix sub(const Matrix& x, const Matrix& y);
std::vector<double> mat_vec(const Matrix& m, const std::vector<double>& v);
double max_abs(const Matrix& m);
double max_abs_diff(const Matrix& x, const Matrix& y);

}  // namespace hyperlap
