#include "hyperlap/fano.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>
#include <unordered_set>

#include "hyperlap/charpoly.hpp"
#include "hyperlap/classify.hpp"
#include "hyperlap/eig.hpp"

namespace hyperlap {

const std::array<std::array<int, 3>, 7>& fano_lines() {
  static const std::array<std::array<int, 3>, 7> lines = {{{0, 1, 2},
                                                           {0, 3, 4},
                                                           {0, 5, 6},
                                                           {1, 3, 5},
                                                           {1, 4, 6},
                                                           {2, 3, 6},
                                                           {2, 4, 5}}};
  return lines;
}

DirectedHypergraph fano_base() { return fano_orientation(0); }

DirectedHypergraph fano_orientation(unsigned mask) {
  if (mask >= (1u << 14)) throw InputError("fano_orientation: mask out of range");
  DirectedHypergraph h;
  for (int v = 0; v < 7; ++v) h.vertices.push_back("p" + std::to_string(v + 1));
  for (int l = 0; l < 7; ++l) {
    const auto& line = fano_lines()[l];
    Hyperedge e;
    e.targets.push_back(line[0]);
    ((mask >> (2 * l)) & 1u ? e.sources : e.targets).push_back(line[1]);
    ((mask >> (2 * l + 1)) & 1u ? e.sources : e.targets).push_back(line[2]);
    std::sort(e.sources.begin(), e.sources.end());
    std::sort(e.targets.begin(), e.targets.end());
    h.hyperedges.push_back(std::move(e));
  }
  return h;
}

IntMatrix fano_laplacian(unsigned mask) {
  if (mask >= (1u << 14)) throw InputError("fano_laplacian: mask out of range");
  IntMatrix lap(7, 7);
  for (int v = 0; v < 7; ++v) lap.at(v, v) = 3;
  for (int l = 0; l < 7; ++l) {
    const auto& line = fano_lines()[l];
    int sign[3] = {1, (mask >> (2 * l)) & 1u ? -1 : 1, (mask >> (2 * l + 1)) & 1u ? -1 : 1};
    for (int i = 0; i < 3; ++i)
      for (int j = i + 1; j < 3; ++j) {
        lap.at(line[i], line[j]) += sign[i] * sign[j];
        lap.at(line[j], line[i]) += sign[i] * sign[j];
      }
  }
  return lap;
}

FanoKey fano_key(unsigned mask) {
  IntMatrix lap = fano_laplacian(mask);
  FanoKey k;
  for (int i = 0; i < 49; ++i) k[i] = static_cast<int8_t>(lap.a[i]);
  return k;
}

IntMatrix key_to_matrix(const FanoKey& k) {
  IntMatrix m(7, 7);
  for (int i = 0; i < 49; ++i) m.a[i] = k[i];
  return m;
}

std::vector<FanoKey> enumerate_laplacians() {
  std::vector<FanoKey> out(1u << 14);
#pragma omp parallel for schedule(static)
  for (int mask = 0; mask < (1 << 14); ++mask) out[mask] = fano_key(static_cast<unsigned>(mask));
  return out;
}

namespace {

const std::vector<std::array<int8_t, 7>>& all_perms() {
  static const std::vector<std::array<int8_t, 7>> perms = [] {
    std::vector<std::array<int8_t, 7>> out;
    out.reserve(5040);
    std::array<int8_t, 7> p = {0, 1, 2, 3, 4, 5, 6};
    do {
      out.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
  }();
  return perms;
}

// lexicographic minimum over simultaneous row/column permutation, with
// entrywise early exit
FanoKey canonical_form(const FanoKey& k) {
  FanoKey best = k;
  for (const auto& p : all_perms()) {
    bool smaller = false;
    int idx = 0;
    for (int i = 0; i < 7 && !smaller; ++i) {
      const int8_t* row = &k[static_cast<size_t>(p[i]) * 7];
      for (int j = 0; j < 7; ++j, ++idx) {
        int8_t v = row[p[j]];
        if (v > best[idx]) {
          smaller = false;
          idx = -1;  // marks "worse"
          break;
        }
        if (v < best[idx]) {
          smaller = true;
          break;
        }
      }
      if (idx < 0) break;
    }
    if (smaller) {
      for (int i = 0, at = 0; i < 7; ++i) {
        const int8_t* row = &k[static_cast<size_t>(p[i]) * 7];
        for (int j = 0; j < 7; ++j, ++at) best[at] = row[p[j]];
      }
    }
  }
  return best;
}

struct KeyHash {
  size_t operator()(const FanoKey& k) const {
    // FNV-1a over the 49 bytes
    size_t h = 1469598103934665603ull;
    for (int8_t b : k) {
      h ^= static_cast<unsigned char>(b);
      h *= 1099511628211ull;
    }
    return h;
  }
};

std::vector<FanoClass> group_classes(const std::vector<FanoKey>& laps,
                                     const std::vector<FanoKey>& canons) {
  std::unordered_map<FanoKey, FanoClass, KeyHash> classes;
  classes.reserve(256);
  for (size_t mask = 0; mask < laps.size(); ++mask) {
    auto [it, inserted] = classes.try_emplace(
        canons[mask], FanoClass{canons[mask], 0, static_cast<unsigned>(mask)});
    ++it->second.size;
  }
  std::vector<FanoClass> out;
  out.reserve(classes.size());
  for (auto& [key, cls] : classes) out.push_back(cls);
  std::sort(out.begin(), out.end(),
            [](const FanoClass& a, const FanoClass& b) { return a.canon < b.canon; });
  return out;
}

}  // namespace

FanoKey row_multiset_invariant(const FanoKey& k) {
  std::array<std::array<int8_t, 7>, 7> rows;
  for (int i = 0; i < 7; ++i) {
    for (int j = 0; j < 7; ++j) rows[i][j] = k[i * 7 + j];
    std::sort(rows[i].begin(), rows[i].end());
  }
  std::sort(rows.begin(), rows.end());
  FanoKey out;
  for (int i = 0; i < 7; ++i)
    for (int j = 0; j < 7; ++j) out[i * 7 + j] = rows[i][j];
  return out;
}

std::vector<FanoClass> permutation_classes(const std::vector<FanoKey>& laps) {
  std::vector<FanoKey> canons(laps.size());
  const int total = static_cast<int>(laps.size());
#pragma omp parallel for schedule(dynamic, 64)
  for (int i = 0; i < total; ++i) canons[i] = canonical_form(laps[i]);
  return group_classes(laps, canons);
}

std::vector<FanoClass> permutation_classes_serial(const std::vector<FanoKey>& laps) {
  std::vector<FanoKey> canons(laps.size());
  for (size_t i = 0; i < laps.size(); ++i) canons[i] = canonical_form(laps[i]);
  return group_classes(laps, canons);
}

double fano_lambda1_cubic_root() {
  // p(x) = x^3 - 13x^2 + 40x - 4; p(0) = -4 < 0 < p(0.2)
  return bisect_root({1.0, -13.0, 40.0, -4.0}, 0.0, 0.2, 1e-12);
}

FanoReport verify_fano_universal_negatives() {
  FanoReport rep;
  std::vector<FanoKey> laps = enumerate_laplacians();
  rep.total = static_cast<int>(laps.size());

  {
    std::unordered_set<FanoKey, KeyHash> distinct(laps.begin(), laps.end());
    rep.distinct = static_cast<int>(distinct.size());
  }
  {
    std::unordered_set<FanoKey, KeyHash> buckets;
    for (const FanoKey& k : laps) buckets.insert(row_multiset_invariant(k));
    rep.invariant_buckets = static_cast<int>(buckets.size());
  }

  // exact structural checks per orientation
  int positive = 0, contractive = 0;
  const int total = static_cast<int>(laps.size());
#pragma omp parallel for schedule(static) reduction(+ : positive, contractive)
  for (int mask = 0; mask < total; ++mask) {
    DirectedHypergraph h = fano_orientation(static_cast<unsigned>(mask));
    if (is_positive_generator(h).value) ++positive;
    if (is_inf_contractive(h).value) ++contractive;
  }
  rep.positive_count = positive;
  rep.inf_contractive_count = contractive;

  std::vector<FanoClass> classes = permutation_classes(laps);
  rep.classes = static_cast<int>(classes.size());
  std::map<int, int> hist;
  for (const FanoClass& c : classes) ++hist[c.size];
  rep.class_size_histogram.assign(hist.begin(), hist.end());

  // long-time flags are invariant under vertex permutation: one eigensolve per class
  int ev_irr = 0, as_pos = 0, as_inf = 0;
  const int nclasses = static_cast<int>(classes.size());
#pragma omp parallel for schedule(dynamic) reduction(+ : ev_irr, as_pos, as_inf)
  for (int c = 0; c < nclasses; ++c) {
    SpectralDecomposition s = eigh(key_to_matrix(classes[c].canon));
    AsymptoticFlags f = asymptotic_and_eventual_flags(s);
    if (f.eventually_irreducible.value) ++ev_irr;
    if (f.asymptotically_positive.value) ++as_pos;
    if (f.asymptotically_inf_contractive.value) ++as_inf;
  }
  rep.eventually_irreducible_classes = ev_irr;
  rep.asymptotically_positive_classes = as_pos;
  rep.asymptotically_inf_contractive_classes = as_inf;

  rep.lambda1_cubic_root = fano_lambda1_cubic_root();
  return rep;
}

namespace {

IntMatrix from_rows(const std::array<std::array<int, 7>, 7>& rows) {
  IntMatrix m(7, 7);
  for (int i = 0; i < 7; ++i)
    for (int j = 0; j < 7; ++j) m.at(i, j) = rows[i][j];
  return m;
}

}  // namespace

IntMatrix fano_l1() {
  return from_rows({{{3, 1, 1, 1, -1, -1, -1},
                     {1, 3, 1, -1, -1, 1, 1},
                     {1, 1, 3, -1, 1, 1, -1},
                     {1, -1, -1, 3, -1, -1, 1},
                     {-1, -1, 1, -1, 3, 1, -1},
                     {-1, 1, 1, -1, 1, 3, 1},
                     {-1, 1, -1, 1, -1, 1, 3}}});
}

IntMatrix fano_l2_minus() {
  return from_rows({{{3, -1, -1, -1, -1, -1, -1},
                     {-1, 3, 1, -1, -1, -1, -1},
                     {-1, 1, 3, -1, -1, -1, -1},
                     {-1, -1, -1, 3, 1, 1, 1},
                     {-1, -1, -1, 1, 3, 1, 1},
                     {-1, -1, -1, 1, 1, 3, 1},
                     {-1, -1, -1, 1, 1, 1, 3}}});
}

IntMatrix fano_l2_plus() {
  return from_rows({{{3, 1, 1, 1, 1, -1, -1},
                     {1, 3, 1, -1, -1, -1, -1},
                     {1, 1, 3, -1, -1, -1, -1},
                     {1, -1, -1, 3, 1, 1, 1},
                     {1, -1, -1, 1, 3, 1, 1},
                     {-1, -1, -1, 1, 1, 3, 1},
                     {-1, -1, -1, 1, 1, 1, 3}}});
}

}  // namespace hyperlap
