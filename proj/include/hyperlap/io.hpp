#pragma once

#include <optional>
#include <string>

#include "hyperlap/hypergraph.hpp"
#include "hyperlap/matrix.hpp"
#include "hyperlap/scomplex.hpp"

namespace hyperlap {

// JSON hypergraph:
//   {"schema_version": 1,
//    "vertices": ["v1", "v2", ...],
//    "hyperedges": [{"sources": ["v1"], "targets": ["v2", "v3"]}, ...]}
// Endsets name vertices by label. Unknown or repeated labels, or a label
// occurring on both sides of one hyperedge, raise InputError naming the
// hyperedge index. Serialization is deterministic (sorted keys).
std::string hypergraph_to_json(const DirectedHypergraph& h);
DirectedHypergraph hypergraph_from_json(const std::string& text);

// Incidence CSV: one row per vertex, entries in {-1, 0, 1}; vertices are
// labeled v1..vn in row order.
DirectedHypergraph hypergraph_from_incidence_csv(const std::string& text);

// JSON simplicial complex:
//   {"schema_version": 1, "n": 5, "maximal_faces": [[0,1,2], [1,3], ...]}
std::string complex_to_json(const SimplicialComplex& k);
SimplicialComplex complex_from_json(const std::string& text);

// CSV writers. Real entries use printf %.17g (round-trip exact, deterministic).
std::string int_matrix_to_csv(const IntMatrix& m);
std::string matrix_to_csv(const Matrix& m);

std::string read_file(const std::string& path);             // InputError on failure
void write_file(const std::string& path, const std::string& content);

enum class InputFormat { auto_detect, json, csv };

// Loads a hypergraph from a file: JSON (hypergraph object) or incidence CSV.
// auto_detect keys on the extension, falling back to content sniffing.
DirectedHypergraph load_hypergraph(const std::string& path, InputFormat f = InputFormat::auto_detect);

// Loads a simplicial complex (JSON only).
SimplicialComplex load_complex(const std::string& path);

// Comma-separated doubles ("0.5,1,0") -> vector; InputError on junk.
std::vector<double> parse_double_csv(const std::string& text);

}  // namespace hyperlap
