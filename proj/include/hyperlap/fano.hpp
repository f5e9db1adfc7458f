#pragma once

#include <array>
#include <cstdint>
#include <utility>
#include <vector>

#include "hyperlap/hypergraph.hpp"
#include "hyperlap/matrix.hpp"

namespace hyperlap {

// The seven lines of the smallest projective plane, on points 0..6.
const std::array<std::array<int, 3>, 7>& fano_lines();

// All-target orientation: every line is a hyperedge with empty source set.
DirectedHypergraph fano_base();

// Orientation mask, 14 bits, little-endian per line: bit 2l makes the second
// vertex of line l a source, bit 2l+1 the third; the first vertex of every
// line is always a target. Mask 0 is fano_base(). Mask must be < 2^14.
DirectedHypergraph fano_orientation(unsigned mask);

// Laplacian of fano_orientation(mask), computed directly from the sign
// pattern (diagonal 3, one shared line per vertex pair).
IntMatrix fano_laplacian(unsigned mask);

// A 7x7 Laplacian packed row-major into 49 signed bytes.
using FanoKey = std::array<int8_t, 49>;
FanoKey fano_key(unsigned mask);
IntMatrix key_to_matrix(const FanoKey& k);

// All 2^14 orientation Laplacians, in mask order.
std::vector<FanoKey> enumerate_laplacians();

// Orbit of simultaneous row/column permutation by S_7.
struct FanoClass {
  FanoKey canon{};        // lexicographically least matrix in the orbit
  int size = 0;           // number of masks whose Laplacian lies in the orbit
  unsigned first_mask = 0;
};

// Groups the 16384 Laplacians into permutation classes. The canonical form of
// each matrix is the lexicographic minimum over all 5040 simultaneous
// row/column permutations (entrywise early exit). The parallel version
// canonicalizes matrices concurrently and merges single-threaded, so the
// output is independent of thread count; the serial version is the reference.
std::vector<FanoClass> permutation_classes(const std::vector<FanoKey>& laps);
std::vector<FanoClass> permutation_classes_serial(const std::vector<FanoKey>& laps);

// Sorted multiset of row multisets: a permutation invariant used as a
// cross-check on the class partition (classes never straddle buckets).
FanoKey row_multiset_invariant(const FanoKey& k);

struct FanoReport {
  int total = 0;     // 2^14
  int distinct = 0;  // distinct Laplacians among them
  int classes = 0;   // permutation classes
  int invariant_buckets = 0;
  int positive_count = 0;           // orientations with a positive flow
  int inf_contractive_count = 0;    // orientations with an inf-contractive flow
  int eventually_irreducible_classes = 0;
  int asymptotically_positive_classes = 0;
  int asymptotically_inf_contractive_classes = 0;
  std::vector<std::pair<int, int>> class_size_histogram;  // (orbit size, #classes)
  double lambda1_cubic_root = 0.0;  // least root of x^3 - 13x^2 + 40x - 4
};

// Full enumeration + classification sweep. No orientation yields a positive
// or inf-contractive flow; the long-time flags are tallied per class (they
// are permutation-invariant).
FanoReport verify_fano_universal_negatives();

// The least root of x^3 - 13x^2 + 40x - 4, bisected on [0, 0.2]: the bottom
// eigenvalue of the two distinguished orientations below.
double fano_lambda1_cubic_root();

// Distinguished orientation Laplacians used in the tests.
IntMatrix fano_l1();
IntMatrix fano_l2_minus();
IntMatrix fano_l2_plus();

}  // namespace hyperlap
