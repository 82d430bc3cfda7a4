#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "disorient/complex.hpp"
#include "disorient/dual_graph.hpp"

namespace disorient::io {

using Json = nlohmann::ordered_json;

inline constexpr const char* kFormatName = "disorient-complex";
inline constexpr const char* kFormatVersion = "1";

/// Thrown for malformed or inconsistent complex documents.
class DocumentError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// A complex together with the external vertex labels and the per-top-simplex
/// reference orientation read from a document.
struct LabeledComplex {
  SimplicialComplex complex;
  std::vector<std::string> vertex_names;  // indexed by VertexId
  ReferenceOrientation reference;         // empty means all +1

  /// Label of a vertex as it appears in documents and reports: a JSON number
  /// for canonical non-negative integer labels, a string otherwise.
  Json label(VertexId v) const;
  Json labels(const Simplex& s) const;
};

/// Identity labels "0".."n-1" and sorted reference orientations.
LabeledComplex with_default_labels(SimplicialComplex k);

/// Parses a complex document (JSON):
///
///   {
///     "format": "disorient-complex",          (optional)
///     "format_version": "1",                  (optional)
///     "vertex_names": ["a", "b", ...],        (optional; strings or integers)
///     "maximal_simplices": [["a", "b"], ...], (required)
///     "reference_orientations": [             (optional)
///       {"simplex": ["a", "b", "c"], "sign": -1},
///       {"ordering": ["b", "a", "c"]}
///     ]
///   }
///
/// Vertex ids follow first appearance: the vertex_names table when present,
/// then the simplices. With a names table every simplex label must be listed.
/// Orientation entries must name top-dimensional simplices of the complex.
/// Throws DocumentError.
LabeledComplex parse_complex(const std::string& text);
LabeledComplex parse_document(const Json& doc);

/// Document with every vertex listed in vertex_names and the maximal
/// simplices in canonical order; parse(write(x)) reproduces x exactly.
Json write_complex(const LabeledComplex& k);

std::string read_text(const std::string& path);  // "-" reads standard input
void write_text(const std::string& path, const std::string& text);

}  // namespace disorient::io
