#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "hyperlap/bounds.hpp"
#include "hyperlap/classify.hpp"
#include "hyperlap/eig.hpp"
#include "hyperlap/fano.hpp"
#include "hyperlap/heat.hpp"
#include "hyperlap/hypergraph.hpp"
#include "hyperlap/io.hpp"
#include "hyperlap/scomplex.hpp"
#include "hyperlap/surgery.hpp"

using nlohmann::json;
using namespace hyperlap;

namespace {

struct Options {
  std::string input;
  std::string other;
  std::string format = "auto";
  std::string out;
  std::optional<double> horizon;
  double tol = kEntryTol;
  double t0 = 0.0, t1 = 1.0;
  int steps = 10;
  std::string u0 = "ones";
  std::string keep;
  int degree = 0;
  std::string mode = "co_oriented_full";
  std::string property = "positivity";
  std::optional<double> at_t;
  bool classify_classes = false;
  bool witnesses = false;
};

void emit(const Options& opt, const std::string& payload) {
  if (opt.out.empty())
    std::cout << payload;
  else
    write_file(opt.out, payload);
}

InputFormat parse_format(const std::string& f) {
  if (f == "auto") return InputFormat::auto_detect;
  if (f == "json") return InputFormat::json;
  if (f == "csv") return InputFormat::csv;
  throw InputError("unknown format '" + f + "' (expected auto|json|csv)");
}

DirectedHypergraph load_input(const Options& opt) {
  if (opt.input.empty()) throw InputError("--input is required");
  return load_hypergraph(opt.input, parse_format(opt.format));
}

json matrix_json(const IntMatrix& m) {
  json rows = json::array();
  for (int i = 0; i < m.rows; ++i) {
    json row = json::array();
    for (int j = 0; j < m.cols; ++j) row.push_back(m.at(i, j));
    rows.push_back(row);
  }
  return rows;
}

json matrix_json(const Matrix& m) {
  json rows = json::array();
  for (int i = 0; i < m.rows; ++i) {
    json row = json::array();
    for (int j = 0; j < m.cols; ++j) row.push_back(m.at(i, j));
    rows.push_back(row);
  }
  return rows;
}

json flag_json(const Flag& f) {
  json j;
  j["value"] = f.value;
  j["witness"] = f.witness;
  if (f.number) j["number"] = *f.number;
  return j;
}

const char* property_name(SemigroupProperty p) {
  switch (p) {
    case SemigroupProperty::positivity:
      return "positivity";
    case SemigroupProperty::inf_contractivity:
      return "inf_contractivity";
    default:
      return "domination";
  }
}

json threshold_json(const ThresholdReport& r) {
  json j;
  j["property"] = property_name(r.property);
  if (r.t0)
    j["t0"] = *r.t0;
  else
    j["t0"] = nullptr;
  j["horizon"] = r.horizon;
  j["entry_tol"] = r.entry_tol;
  j["certified_tail"] = r.certified_tail;
  return j;
}

json hypergraph_json_obj(const DirectedHypergraph& h) { return json::parse(hypergraph_to_json(h)); }

std::string dump(const json& j) { return j.dump(2) + "\n"; }

std::vector<double> initial_vector(const std::string& spec, int n) {
  if (spec == "ones") return std::vector<double>(n, 1.0);
  if (spec.rfind("unit:", 0) == 0) {
    int k = 0;
    try {
      k = std::stoi(spec.substr(5));
    } catch (const std::exception&) {
      throw InputError("bad unit vector spec '" + spec + "'");
    }
    if (k < 1 || k > n) throw InputError("unit vector index out of range in '" + spec + "'");
    std::vector<double> u(n, 0.0);
    u[k - 1] = 1.0;
    return u;
  }
  std::vector<double> u = parse_double_csv(spec);
  if (static_cast<int>(u.size()) != n)
    throw InputError("--u0 has " + std::to_string(u.size()) + " entries, expected " +
                     std::to_string(n));
  return u;
}

int cmd_laplacian(const Options& opt) {
  DirectedHypergraph h = load_input(opt);
  emit(opt, int_matrix_to_csv(laplacian(h)));
  return 0;
}

int cmd_spectrum(const Options& opt) {
  DirectedHypergraph h = load_input(opt);
  SpectralDecomposition s = eigh(laplacian(h));
  json j;
  j["schema_version"] = 1;
  j["eigenvalues"] = s.eigenvalues;
  json clusters = json::array();
  for (const EigenCluster& c : eigenvalue_clusters(s)) {
    json jc;
    jc["value"] = c.value;
    jc["first"] = c.first;
    jc["count"] = c.count;
    clusters.push_back(jc);
  }
  j["clusters"] = clusters;
  j["kernel_dim"] = kernel_dim(s);
  j["residual"] = s.residual;
  j["zero_tol"] = zero_tol(s);
  if (opt.witnesses) j["eigenvectors"] = matrix_json(s.vectors);
  emit(opt, dump(j));
  return 0;
}

int cmd_classify(const Options& opt) {
  DirectedHypergraph h = load_input(opt);
  ClassificationReport r = classify(h, true, opt.horizon);
  json j;
  j["schema_version"] = 1;
  j["positive"] = flag_json(r.positive);
  j["irreducible_generator"] = flag_json(r.irreducible_generator);
  j["inf_contractive"] = flag_json(r.inf_contractive);
  j["sub_markovian"] = flag_json(r.sub_markovian);
  j["stochastic"] = flag_json(r.stochastic);
  j["markovian"] = flag_json(r.markovian);
  j["equipotent"] = flag_json(r.equipotent);
  j["exponentially_stable"] = flag_json(r.exponentially_stable);
  j["eventually_irreducible"] = flag_json(r.eventually_irreducible);
  j["asymptotically_positive"] = flag_json(r.asymptotically_positive);
  j["asymptotically_inf_contractive"] = flag_json(r.asymptotically_inf_contractive);
  j["lambda1"] = r.lambda1;
  j["lambda1_multiplicity"] = r.lambda1_multiplicity;
  if (r.positivity_threshold) j["positivity_threshold"] = threshold_json(*r.positivity_threshold);
  if (r.contractivity_threshold)
    j["contractivity_threshold"] = threshold_json(*r.contractivity_threshold);
  if (opt.witnesses) {
    j["phi1"] = r.phi1;
    SpectralDecomposition s = eigh(laplacian(h));
    j["lowest_projector"] = matrix_json(lowest_projector(s));
  }
  emit(opt, dump(j));
  return 0;
}

int cmd_flow(const Options& opt) {
  DirectedHypergraph h = load_input(opt);
  if (opt.steps < 1) throw InputError("--steps must be at least 1");
  if (opt.t1 < opt.t0) throw InputError("--t1 must be >= --t0");
  SpectralDecomposition s = eigh(laplacian(h));
  std::vector<double> u0 = initial_vector(opt.u0, h.num_vertices());
  std::vector<double> times;
  for (int i = 0; i <= opt.steps; ++i)
    times.push_back(opt.steps == 0 ? opt.t0
                                   : opt.t0 + (opt.t1 - opt.t0) * i / opt.steps);
  Matrix traj = heat_trajectory(s, u0, times);
  std::string out = "t";
  for (const std::string& v : h.vertices) out += ",u(" + v + ")";
  out += "\n";
  char buf[64];
  for (size_t r = 0; r < times.size(); ++r) {
    std::snprintf(buf, sizeof(buf), "%.17g", times[r]);
    out += buf;
    for (int i = 0; i < h.num_vertices(); ++i) {
      std::snprintf(buf, sizeof(buf), "%.17g", traj.at(static_cast<int>(r), i));
      out += ",";
      out += buf;
    }
    out += "\n";
  }
  emit(opt, out);
  return 0;
}

int cmd_threshold(const Options& opt) {
  DirectedHypergraph h = load_input(opt);
  SemigroupProperty prop;
  if (opt.property == "positivity")
    prop = SemigroupProperty::positivity;
  else if (opt.property == "contractivity" || opt.property == "inf_contractivity")
    prop = SemigroupProperty::inf_contractivity;
  else
    throw InputError("unknown property '" + opt.property + "'");
  SpectralDecomposition s = eigh(laplacian(h));
  ThresholdReport r = threshold_search(s, prop, opt.horizon, opt.tol);
  json j = threshold_json(r);
  j["schema_version"] = 1;
  emit(opt, dump(j));
  return 0;
}

int cmd_dual(const Options& opt) {
  DirectedHypergraph h = load_input(opt);
  DirectedHypergraph d = dual(h);
  json j;
  j["schema_version"] = 1;
  j["hypergraph"] = hypergraph_json_obj(d);
  j["dual_laplacian"] = matrix_json(dual_laplacian(h));
  emit(opt, dump(j));
  return 0;
}

std::vector<int> parse_keep(const DirectedHypergraph& h, const std::string& keep) {
  if (keep.empty()) throw InputError("--keep is required");
  std::vector<int> members;
  std::stringstream ss(keep);
  std::string label;
  while (std::getline(ss, label, ',')) {
    auto it = std::find(h.vertices.begin(), h.vertices.end(), label);
    if (it == h.vertices.end()) throw InputError("--keep: unknown vertex '" + label + "'");
    members.push_back(static_cast<int>(it - h.vertices.begin()));
  }
  return members;
}

int cmd_dirichlet(const Options& opt) {
  DirectedHypergraph h = load_input(opt);
  VertexSubset keep = make_subset(h.num_vertices(), parse_keep(h, opt.keep));
  json j;
  j["schema_version"] = 1;
  j["kept"] = json::array();
  for (int v : keep.members) j["kept"].push_back(h.vertices[v]);
  j["dirichlet_laplacian"] = matrix_json(dirichlet_laplacian(h, keep));
  j["induced_subhypergraph"] = hypergraph_json_obj(induced_subhypergraph(h, keep));
  DirectedHypergraph dsub = d_subhypergraph(h, keep);
  j["d_subhypergraph"] = hypergraph_json_obj(dsub);
  j["restricted_flow_positive"] = flag_json(is_positive_generator(dsub));
  emit(opt, dump(j));
  return 0;
}

int cmd_union_lemma(const Options& opt) {
  DirectedHypergraph g = load_input(opt);
  UnionMode mode;
  if (opt.mode == "co_oriented_full")
    mode = UnionMode::co_oriented_full;
  else if (opt.mode == "bipartite_signless")
    mode = UnionMode::bipartite_signless;
  else if (opt.mode == "equipotent_half")
    mode = UnionMode::equipotent_half;
  else
    throw InputError("unknown mode '" + opt.mode + "'");
  UnionSpectrumReport r = union_spectrum_verifier(g, mode);
  json j;
  j["schema_version"] = 1;
  j["mode"] = opt.mode;
  j["components"] = r.components;
  j["computed"] = r.computed;
  j["predicted"] = r.predicted;
  j["spectrum_matches"] = r.spectrum_matches;
  j["lambda1_simple"] = r.lambda1_simple;
  j["kernel_vector_positive"] = r.kernel_vector_positive;
  j["projector_min_entry"] = r.projector_min_entry;
  j["projector_positive"] = r.projector_positive;
  j["union"] = hypergraph_json_obj(r.h);
  emit(opt, dump(j));
  return 0;
}

int cmd_hodge(const Options& opt) {
  if (opt.input.empty()) throw InputError("--input is required");
  SimplicialComplex k = load_complex(opt.input);
  IntMatrix lap = hodge_laplacian(k, opt.degree);
  SpectralDecomposition s = eigh(lap);
  json j;
  j["schema_version"] = 1;
  j["degree"] = opt.degree;
  j["size"] = lap.rows;
  j["matrix"] = matrix_json(lap);
  j["eigenvalues"] = s.eigenvalues;
  j["kernel_dim"] = kernel_dim(s);
  bool z = true;
  for (int i = 0; i < lap.rows && z; ++i)
    for (int jcol = 0; jcol < lap.cols; ++jcol)
      if (i != jcol && lap.at(i, jcol) > 0) {
        z = false;
        break;
      }
  j["z_matrix"] = z;
  AsymptoticFlags af = asymptotic_and_eventual_flags(s);
  j["exponentially_stable"] = flag_json(af.exponentially_stable);
  j["asymptotically_positive"] = flag_json(af.asymptotically_positive);
  j["asymptotically_inf_contractive"] = flag_json(af.asymptotically_inf_contractive);
  j["embedding"] = hypergraph_json_obj(hypergraph_embedding(k, opt.degree));
  emit(opt, dump(j));
  return 0;
}

int cmd_graph_dual(const Options& opt) {
  DirectedHypergraph g = load_input(opt);
  GraphDualReport r = graph_dual_report(g);
  json j;
  j["schema_version"] = 1;
  j["components"] = r.components;
  j["cyclomatic"] = r.cyclomatic;
  j["dual_kernel_dim"] = r.dual_kernel_dim;
  j["kernel_matches_cyclomatic"] = r.kernel_matches_cyclomatic;
  j["forest"] = r.forest;
  j["exponentially_stable"] = r.exponentially_stable;
  j["deg_max"] = r.deg_max;
  j["positive_orientation_exists"] = r.positive_orientation_exists;
  j["given_orientation_positive"] = r.given_orientation_positive;
  j["stochastic"] = r.stochastic;
  j["sub_markovian"] = r.sub_markovian;
  emit(opt, dump(j));
  return 0;
}

int cmd_bounds(const Options& opt) {
  DirectedHypergraph h = load_input(opt);
  SpectralBounds b = gershgorin_bounds(h);
  json j;
  j["schema_version"] = 1;
  j["vertex_lo"] = b.vertex_lo;
  j["vertex_hi"] = b.vertex_hi;
  j["edge_upper"] = b.edge_upper;
  j["pair_lo"] = b.pair_lo;
  j["pair_hi"] = b.pair_hi;
  j["pair_edge_upper"] = b.pair_edge_upper;
  j["stable_vertex"] = b.stable_vertex;
  j["stable_pairwise"] = b.stable_pairwise;
  if (h.num_vertices() == 3) {
    json region = json::array();
    for (const RealInterval& iv : dms_inclusion_3x3(to_matrix(laplacian(h)))) {
      json jiv;
      jiv["lo"] = iv.lo;
      jiv["hi"] = iv.hi;
      region.push_back(jiv);
    }
    j["inclusion_region"] = region;
  }
  emit(opt, dump(j));
  return 0;
}

int cmd_dominate(const Options& opt) {
  DirectedHypergraph a = load_input(opt);
  if (opt.other.empty()) throw InputError("--other is required (the dominated flow)");
  DirectedHypergraph b = load_hypergraph(opt.other, parse_format(opt.format));
  if (a.num_vertices() != b.num_vertices())
    throw InputError("dominate: vertex counts differ");
  SpectralDecomposition sa = eigh(laplacian(a));
  SpectralDecomposition sb = eigh(laplacian(b));
  json j;
  j["schema_version"] = 1;
  if (opt.at_t) {
    j["t"] = *opt.at_t;
    j["dominates"] = domination(sa, sb, *opt.at_t, opt.tol);
  } else {
    j["threshold"] = threshold_json(eventual_domination_threshold(sa, sb, opt.horizon, opt.tol));
  }
  emit(opt, dump(j));
  return 0;
}

int cmd_fano(const Options& opt, bool enumerate) {
  if (!enumerate) throw InputError("fano: the only action is 'enumerate'");
  FanoReport rep = verify_fano_universal_negatives();
  json j;
  j["schema_version"] = 1;
  j["total"] = rep.total;
  j["distinct"] = rep.distinct;
  j["classes"] = rep.classes;
  j["invariant_buckets"] = rep.invariant_buckets;
  j["positive_count"] = rep.positive_count;
  j["inf_contractive_count"] = rep.inf_contractive_count;
  j["eventually_irreducible_classes"] = rep.eventually_irreducible_classes;
  j["asymptotically_positive_classes"] = rep.asymptotically_positive_classes;
  j["asymptotically_inf_contractive_classes"] = rep.asymptotically_inf_contractive_classes;
  json hist = json::array();
  for (auto [size, count] : rep.class_size_histogram) {
    json row;
    row["orbit_size"] = size;
    row["classes"] = count;
    hist.push_back(row);
  }
  j["class_size_histogram"] = hist;
  j["lambda1_cubic_root"] = rep.lambda1_cubic_root;

  if (opt.classify_classes || !opt.out.empty()) {
    std::vector<FanoKey> laps = enumerate_laplacians();
    std::vector<FanoClass> classes = permutation_classes(laps);
    std::string csv = "representative_hash,first_mask,orbit_size,"
                      "lambda1,lambda2,lambda3,lambda4,lambda5,lambda6,lambda7,"
                      "eventually_irreducible,asymptotically_positive,"
                      "asymptotically_inf_contractive\n";
    json rows = json::array();
    char buf[64];
    for (const FanoClass& c : classes) {
      unsigned long long hash = 1469598103934665603ull;
      for (int8_t b : c.canon) {
        hash ^= static_cast<unsigned char>(b);
        hash *= 1099511628211ull;
      }
      std::snprintf(buf, sizeof(buf), "%016llx", hash);
      std::string hash_hex = buf;
      SpectralDecomposition s = eigh(key_to_matrix(c.canon));
      AsymptoticFlags f = asymptotic_and_eventual_flags(s);
      csv += hash_hex + "," + std::to_string(c.first_mask) + "," + std::to_string(c.size);
      for (double ev : s.eigenvalues) {
        std::snprintf(buf, sizeof(buf), "%.17g", ev);
        csv += ",";
        csv += buf;
      }
      csv += std::string(",") + (f.eventually_irreducible.value ? "1" : "0") + "," +
             (f.asymptotically_positive.value ? "1" : "0") + "," +
             (f.asymptotically_inf_contractive.value ? "1" : "0") + "\n";
      if (opt.classify_classes) {
        json row;
        row["representative_hash"] = hash_hex;
        row["first_mask"] = c.first_mask;
        row["orbit_size"] = c.size;
        row["eigenvalues"] = s.eigenvalues;
        row["eventually_irreducible"] = f.eventually_irreducible.value;
        row["asymptotically_positive"] = f.asymptotically_positive.value;
        row["asymptotically_inf_contractive"] = f.asymptotically_inf_contractive.value;
        rows.push_back(row);
      }
    }
    if (opt.classify_classes) j["class_table"] = rows;
    if (!opt.out.empty()) write_file(opt.out, csv);
  }
  std::cout << dump(j);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Laplacians, heat flows and order properties of directed hypergraphs"};
  app.require_subcommand(1);
  Options opt;

  auto add_io = [&](CLI::App* sub, bool needs_input = true) {
    if (needs_input) sub->add_option("--input", opt.input, "input file (hypergraph JSON or incidence CSV)");
    sub->add_option("--format", opt.format, "input format: auto|json|csv");
    sub->add_option("--out", opt.out, "write output to this file instead of stdout");
  };

  CLI::App* lap = app.add_subcommand("laplacian", "integer Laplacian as CSV");
  add_io(lap);

  CLI::App* spec = app.add_subcommand("spectrum", "eigenvalues, clusters and kernel");
  add_io(spec);
  spec->add_flag("--witnesses", opt.witnesses, "include eigenvectors");

  CLI::App* cls = app.add_subcommand("classify", "full order-theoretic report");
  add_io(cls);
  cls->add_option("--horizon", opt.horizon, "threshold scan horizon");
  cls->add_flag("--witnesses", opt.witnesses, "include phi1 and the lowest projector");

  CLI::App* flow = app.add_subcommand("flow", "heat trajectory as CSV");
  add_io(flow);
  flow->add_option("--t0", opt.t0, "start time");
  flow->add_option("--t1", opt.t1, "end time");
  flow->add_option("--steps", opt.steps, "number of steps");
  flow->add_option("--u0", opt.u0, "initial vector: ones | unit:k | comma-separated values");

  CLI::App* thr = app.add_subcommand("threshold", "when a property starts to hold");
  add_io(thr);
  thr->add_option("--property", opt.property, "positivity | contractivity");
  thr->add_option("--horizon", opt.horizon, "scan horizon");
  thr->add_option("--tol", opt.tol, "entry tolerance");

  CLI::App* dl = app.add_subcommand("dual", "dual hypergraph and its Laplacian");
  add_io(dl);

  CLI::App* dir = app.add_subcommand("dirichlet", "absorbing restriction to a vertex subset");
  add_io(dir);
  dir->add_option("--keep", opt.keep, "comma-separated vertex labels to keep");

  CLI::App* ul = app.add_subcommand("union-lemma", "spectrum of a graph-hyperedge union");
  add_io(ul);
  ul->add_option("--mode", opt.mode,
                 "co_oriented_full | bipartite_signless | equipotent_half");

  CLI::App* hodge = app.add_subcommand("hodge", "Hodge Laplacian of a simplicial complex");
  add_io(hodge);
  hodge->add_option("--degree", opt.degree, "degree i");

  CLI::App* gd = app.add_subcommand("graph-dual", "dual flow structure of a graph");
  add_io(gd);

  CLI::App* bnd = app.add_subcommand("bounds", "spectral enclosures from degree data");
  add_io(bnd);

  CLI::App* dom = app.add_subcommand("dominate", "does one flow dominate another");
  add_io(dom);
  dom->add_option("--other", opt.other, "input file of the dominated flow");
  dom->add_option("--t", opt.at_t, "single time to test");
  dom->add_option("--horizon", opt.horizon, "scan horizon for the threshold");
  dom->add_option("--tol", opt.tol, "entry tolerance");

  CLI::App* fano = app.add_subcommand("fano", "orientations of the smallest projective plane");
  CLI::App* fano_enum = fano->add_subcommand("enumerate", "enumerate and classify all 16384");
  fano_enum->add_flag("--classify", opt.classify_classes, "include the per-class table");
  fano_enum->add_option("--out", opt.out, "write the per-class CSV here");
  fano->require_subcommand(1);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  try {
    if (lap->parsed()) return cmd_laplacian(opt);
    if (spec->parsed()) return cmd_spectrum(opt);
    if (cls->parsed()) return cmd_classify(opt);
    if (flow->parsed()) return cmd_flow(opt);
    if (thr->parsed()) return cmd_threshold(opt);
    if (dl->parsed()) return cmd_dual(opt);
    if (dir->parsed()) return cmd_dirichlet(opt);
    if (ul->parsed()) return cmd_union_lemma(opt);
    if (hodge->parsed()) return cmd_hodge(opt);
    if (gd->parsed()) return cmd_graph_dual(opt);
    if (bnd->parsed()) return cmd_bounds(opt);
    if (dom->parsed()) return cmd_dominate(opt);
    if (fano->parsed()) return cmd_fano(opt, fano_enum->parsed());
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const NumericError& e) {
    std::cerr << "numeric error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
