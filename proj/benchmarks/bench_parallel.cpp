// Benchmark: OpenMP kernels against their serial reference implementations.
//
// Times the two parallel code paths — permutation-class grouping over the
// full 2^14 seven-point enumeration, and threshold grid scans — and checks
// that both variants produce identical results before reporting speedups.
// Build type matters; run this from a Release build for meaningful numbers.

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "hyperlap/eig.hpp"
#include "hyperlap/fano.hpp"
#include "hyperlap/heat.hpp"
#include "hyperlap/hypergraph.hpp"

using namespace hyperlap;
using Clock = std::chrono::steady_clock;

namespace {

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Row {
  std::string name;
  double serial = 0.0;
  double parallel = 0.0;
  bool equal = false;
};

void print_table(const std::vector<Row>& rows) {
  std::printf("%-44s %10s %10s %8s %7s\n", "kernel", "serial[s]", "parallel[s]", "speedup",
              "equal");
  for (const Row& r : rows)
    std::printf("%-44s %10.4f %10.4f %7.2fx %7s\n", r.name.c_str(), r.serial, r.parallel,
                r.serial / r.parallel, r.equal ? "yes" : "NO");
}

bool same_classes(const std::vector<FanoClass>& a, const std::vector<FanoClass>& b) {
  if (a.size() != b.size()) return false;
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i].canon != b[i].canon || a[i].size != b[i].size ||
        a[i].first_mask != b[i].first_mask)
      return false;
  return true;
}

bool same_threshold(const ThresholdReport& a, const ThresholdReport& b) {
  if (a.t0.has_value() != b.t0.has_value()) return false;
  if (a.t0 && *a.t0 != *b.t0) return false;  // bitwise equal by design
  return a.certified_tail == b.certified_tail && a.horizon == b.horizon;
}

}  // namespace

int main() {
#ifdef _OPENMP
  std::printf("OpenMP enabled, max threads: %d\n\n", omp_get_max_threads());
#else
  std::printf("OpenMP disabled; comparing two serial runs\n\n");
#endif

  std::vector<Row> rows;

  // --- permutation classes over the full enumeration -----------------------
  const std::vector<FanoKey> keys = enumerate_laplacians();
  {
    Row r;
    r.name = "permutation classes (16384 Laplacians)";
    auto t0 = Clock::now();
    auto serial = permutation_classes_serial(keys);
    r.serial = seconds_since(t0);
    t0 = Clock::now();
    auto parallel = permutation_classes(keys);
    r.parallel = seconds_since(t0);
    r.equal = same_classes(serial, parallel);
    rows.push_back(r);
  }

  // --- threshold grid scans -------------------------------------------------
  // chain example: positivity sets in just past t = 1.2
  auto chain = make_hypergraph(4, {he({0}, {1, 2}), he({1}, {3}), he({3}, {2})});
  // seven-point matrix whose contractivity sets in past t = 4.3
  struct Scan {
    std::string name;
    SpectralDecomposition s;
    SemigroupProperty prop;
  };
  std::vector<Scan> scans;
  scans.push_back({"positivity scan (chain example)", eigh(laplacian(chain)),
                   SemigroupProperty::positivity});
  scans.push_back({"contractivity scan (seven-point matrix)", eigh(fano_l2_minus()),
                   SemigroupProperty::inf_contractivity});
  for (const Scan& sc : scans) {
    Row r;
    r.name = sc.name;
    // repeat to lift the measurement above clock noise
    const int reps = 200;
    auto t0 = Clock::now();
    ThresholdReport serial;
    for (int i = 0; i < reps; ++i) serial = threshold_search_serial(sc.s, sc.prop, 20.0);
    r.serial = seconds_since(t0);
    t0 = Clock::now();
    ThresholdReport parallel;
    for (int i = 0; i < reps; ++i) parallel = threshold_search(sc.s, sc.prop, 20.0);
    r.parallel = seconds_since(t0);
    r.equal = same_threshold(serial, parallel);
    if (serial.t0)
      std::printf("%s: t0 = %.9f (certified tail: %s)\n", sc.name.c_str(), *serial.t0,
                  serial.certified_tail ? "yes" : "no");
    rows.push_back(r);
  }

  std::printf("\n");
  print_table(rows);

  for (const Row& r : rows)
    if (!r.equal) {
      std::printf("\nmismatch between serial and parallel results\n");
      return 1;
    }
  return 0;
}
