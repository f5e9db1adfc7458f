#pragma once

#include <vector>

#include "hyperlap/matrix.hpp"

namespace hyperlap {

// Characteristic polynomial det(xI - A) of a square integer matrix, computed
// with exact integer arithmetic (Faddeev-LeVerrier; all divisions exact).
// Returns n+1 coefficients, leading first: p(x) = c[0] x^n + ... + c[n],
// c[0] = 1. Intended for small matrices (entries stay within long long for
// the sizes used here); throws NumericError if an exact division fails.
std::vector<long long> charpoly_int(const IntMatrix& m);

// Evaluate a polynomial (leading coefficient first) by Horner's rule.
double poly_eval(const std::vector<double>& c, double x);

// All real roots, ascending, with multiplicity, of a polynomial known to have
// only real roots (e.g. a characteristic polynomial of a symmetric matrix).
// Derivative-chain recursion: critical points isolate the roots, each simple
// root is bisected, multiple roots are detected at critical points. Throws
// NumericError if the root count fails to reach the degree.
std::vector<double> real_roots_all(std::vector<double> c);

// Bisection on [lo, hi]; requires a sign change. Returns the root to within
// tol. Throws InputError if p(lo) and p(hi) have the same strict sign.
double bisect_root(const std::vector<double>& c, double lo, double hi, double tol);

}  // namespace hyperlap
