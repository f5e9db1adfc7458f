#include "hyperlap/io.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>

#include <json.hpp>

namespace hyperlap {

using nlohmann::json;

namespace {

json parse_json(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) throw InputError("malformed JSON");
  return j;
}

std::vector<std::string> string_list(const json& j, const char* what) {
  if (!j.is_array()) throw InputError(std::string(what) + ": expected an array");
  std::vector<std::string> out;
  for (const auto& v : j) {
    if (!v.is_string()) throw InputError(std::string(what) + ": expected strings");
    out.push_back(v.get<std::string>());
  }
  return out;
}

}  // namespace

std::string hypergraph_to_json(const DirectedHypergraph& h) {
  json j;
  j["schema_version"] = 1;
  j["vertices"] = h.vertices;
  json edges = json::array();
  for (const Hyperedge& e : h.hyperedges) {
    json je;
    json src = json::array(), tgt = json::array();
    for (int v : e.sources) src.push_back(h.vertices[v]);
    for (int v : e.targets) tgt.push_back(h.vertices[v]);
    je["sources"] = src;
    je["targets"] = tgt;
    edges.push_back(je);
  }
  j["hyperedges"] = edges;
  return j.dump(2) + "\n";
}

DirectedHypergraph hypergraph_from_json(const std::string& text) {
  json j = parse_json(text);
  if (!j.is_object() || !j.contains("vertices") || !j.contains("hyperedges"))
    throw InputError("hypergraph JSON needs 'vertices' and 'hyperedges'");
  DirectedHypergraph h;
  h.vertices = string_list(j["vertices"], "vertices");
  std::map<std::string, int> index;
  for (size_t i = 0; i < h.vertices.size(); ++i) {
    if (!index.emplace(h.vertices[i], static_cast<int>(i)).second)
      throw InputError("repeated vertex label '" + h.vertices[i] + "'");
  }
  if (!j["hyperedges"].is_array()) throw InputError("'hyperedges' must be an array");
  int at = 0;
  for (const auto& je : j["hyperedges"]) {
    if (!je.is_object() || !je.contains("sources") || !je.contains("targets"))
      throw InputError("hyperedge " + std::to_string(at) + ": needs 'sources' and 'targets'");
    Hyperedge e;
    for (const char* side : {"sources", "targets"}) {
      std::vector<int>& dst = side[0] == 's' ? e.sources : e.targets;
      for (const std::string& label : string_list(je[side], side)) {
        auto it = index.find(label);
        if (it == index.end())
          throw InputError("hyperedge " + std::to_string(at) + ": unknown vertex '" + label +
                           "'");
        dst.push_back(it->second);
      }
      std::sort(dst.begin(), dst.end());
      if (std::adjacent_find(dst.begin(), dst.end()) != dst.end())
        throw InputError("hyperedge " + std::to_string(at) + ": repeated vertex in " + side);
    }
    h.hyperedges.push_back(std::move(e));
    ++at;
  }
  validate(h);
  return h;
}

DirectedHypergraph hypergraph_from_incidence_csv(const std::string& text) {
  std::vector<std::vector<long long>> rows;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::string trimmed = line;
    trimmed.erase(std::remove_if(trimmed.begin(), trimmed.end(),
                                 [](char ch) { return ch == ' ' || ch == '\t'; }),
                  trimmed.end());
    if (trimmed.empty()) continue;
    std::vector<long long> row;
    std::stringstream cells(trimmed);
    std::string cell;
    while (std::getline(cells, cell, ',')) {
      try {
        size_t used = 0;
        long long v = std::stoll(cell, &used);
        if (used != cell.size()) throw std::invalid_argument(cell);
        row.push_back(v);
      } catch (const std::exception&) {
        throw InputError("incidence CSV: bad cell '" + cell + "'");
      }
    }
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw InputError("incidence CSV: no rows");
  const size_t cols = rows.front().size();
  for (const auto& r : rows)
    if (r.size() != cols) throw InputError("incidence CSV: ragged rows");

  DirectedHypergraph h;
  for (size_t v = 0; v < rows.size(); ++v) h.vertices.push_back("v" + std::to_string(v + 1));
  for (size_t e = 0; e < cols; ++e) {
    Hyperedge ed;
    for (size_t v = 0; v < rows.size(); ++v) {
      long long x = rows[v][e];
      if (x == 1)
        ed.targets.push_back(static_cast<int>(v));
      else if (x == -1)
        ed.sources.push_back(static_cast<int>(v));
      else if (x != 0)
        throw InputError("incidence CSV: entry " + std::to_string(x) + " not in {-1,0,1}");
    }
    h.hyperedges.push_back(std::move(ed));
  }
  validate(h);
  return h;
}

std::string complex_to_json(const SimplicialComplex& k) {
  json j;
  j["schema_version"] = 1;
  j["n"] = k.n;
  // serialize the top-dimensional faces plus any face not covered by one
  // (all faces are reproducible from closure of the maximal ones)
  json faces = json::array();
  for (int i = k.dimension(); i >= 0; --i)
    for (const auto& f : k.faces[i]) {
      bool covered = false;
      for (int u = i + 1; u <= k.dimension() && !covered; ++u)
        for (const auto& g : k.faces[u]) {
          if (std::includes(g.begin(), g.end(), f.begin(), f.end())) {
            covered = true;
            break;
          }
        }
      if (!covered) faces.push_back(f);
    }
  j["maximal_faces"] = faces;
  return j.dump(2) + "\n";
}

SimplicialComplex complex_from_json(const std::string& text) {
  json j = parse_json(text);
  if (!j.is_object() || !j.contains("n") || !j.contains("maximal_faces"))
    throw InputError("complex JSON needs 'n' and 'maximal_faces'");
  if (!j["n"].is_number_integer()) throw InputError("'n' must be an integer");
  int n = j["n"].get<int>();
  if (!j["maximal_faces"].is_array()) throw InputError("'maximal_faces' must be an array");
  std::vector<std::vector<int>> faces;
  for (const auto& jf : j["maximal_faces"]) {
    if (!jf.is_array()) throw InputError("each maximal face must be an array");
    std::vector<int> f;
    for (const auto& v : jf) {
      if (!v.is_number_integer()) throw InputError("face entries must be integers");
      f.push_back(v.get<int>());
    }
    faces.push_back(std::move(f));
  }
  return closure(n, faces);
}

std::string int_matrix_to_csv(const IntMatrix& m) {
  std::string out;
  for (int i = 0; i < m.rows; ++i) {
    for (int j = 0; j < m.cols; ++j) {
      if (j) out += ",";
      out += std::to_string(m.at(i, j));
    }
    out += "\n";
  }
  return out;
}

std::string matrix_to_csv(const Matrix& m) {
  std::string out;
  char buf[64];
  for (int i = 0; i < m.rows; ++i) {
    for (int j = 0; j < m.cols; ++j) {
      if (j) out += ",";
      std::snprintf(buf, sizeof(buf), "%.17g", m.at(i, j));
      out += buf;
    }
    out += "\n";
  }
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write '" + path + "'");
  out << content;
}

DirectedHypergraph load_hypergraph(const std::string& path, InputFormat f) {
  std::string text = read_file(path);
  if (f == InputFormat::auto_detect) {
    if (path.size() >= 5 && path.substr(path.size() - 5) == ".json")
      f = InputFormat::json;
    else if (path.size() >= 4 && path.substr(path.size() - 4) == ".csv")
      f = InputFormat::csv;
    else {
      size_t first = text.find_first_not_of(" \t\r\n");
      f = (first != std::string::npos && text[first] == '{') ? InputFormat::json
                                                             : InputFormat::csv;
    }
  }
  return f == InputFormat::json ? hypergraph_from_json(text)
                                : hypergraph_from_incidence_csv(text);
}

SimplicialComplex load_complex(const std::string& path) {
  return complex_from_json(read_file(path));
}

std::vector<double> parse_double_csv(const std::string& text) {
  std::vector<double> out;
  std::stringstream cells(text);
  std::string cell;
  while (std::getline(cells, cell, ',')) {
    try {
      size_t used = 0;
      double v = std::stod(cell, &used);
      while (used < cell.size() && (cell[used] == ' ' || cell[used] == '\t')) ++used;
      if (used != cell.size()) throw std::invalid_argument(cell);
      out.push_back(v);
    } catch (const std::exception&) {
      throw InputError("bad numeric value '" + cell + "'");
    }
  }
  return out;
}

}  // namespace hyperlap
