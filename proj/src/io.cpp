#include "disorient/io.hpp"

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <unordered_map>

namespace disorient::io {

namespace {

bool is_canonical_integer(const std::string& s) {
  if (s.empty() || s.size() > 18) return false;
  if (s.size() > 1 && s[0] == '0') return false;
  for (char c : s) {
    if (c < '0' || c > '9') return false;
  }
  return true;
}

std::string label_key(const Json& value) {
  if (value.is_string()) return value.get<std::string>();
  if (value.is_number_integer() || value.is_number_unsigned()) {
    if (value.is_number_integer() && value.get<long long>() < 0) {
      throw DocumentError("negative vertex label " + value.dump());
    }
    return std::to_string(value.get<unsigned long long>());
  }
  throw DocumentError("vertex labels must be strings or non-negative integers, got " + value.dump());
}

class LabelTable {
public:
  VertexId intern(const std::string& key, bool allow_new) {
    auto it = ids_.find(key);
    if (it != ids_.end()) return it->second;
    if (!allow_new) throw DocumentError("unknown vertex label '" + key + "'");
    auto id = static_cast<VertexId>(names_.size());
    ids_.emplace(key, id);
    names_.push_back(key);
    return id;
  }
  bool contains(const std::string& key) const { return ids_.count(key) > 0; }
  std::vector<std::string> take_names() { return std::move(names_); }

private:
  std::unordered_map<std::string, VertexId> ids_;
  std::vector<std::string> names_;
};

std::vector<VertexId> resolve(const Json& list, LabelTable& table, bool allow_new, const char* what) {
  if (!list.is_array() || list.empty()) throw DocumentError(std::string(what) + " must be a nonempty array");
  std::vector<VertexId> ids;
  for (const auto& v : list) ids.push_back(table.intern(label_key(v), allow_new));
  return ids;
}

}  // namespace

Json LabeledComplex::label(VertexId v) const {
  const std::string& name = vertex_names.at(v);
  if (is_canonical_integer(name)) return std::stoull(name);
  return name;
}

Json LabeledComplex::labels(const Simplex& s) const {
  Json out = Json::array();
  for (auto v : s) out.push_back(label(v));
  return out;
}

LabeledComplex with_default_labels(SimplicialComplex k) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < k.vertex_count(); ++i) names.push_back(std::to_string(i));
  return {std::move(k), std::move(names), {}};
}

LabeledComplex parse_complex(const std::string& text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw DocumentError(std::string("malformed document: ") + e.what());
  }
  return parse_document(doc);
}

LabeledComplex parse_document(const Json& doc) {
  if (!doc.is_object()) throw DocumentError("document must be a JSON object");
  if (doc.contains("format") && doc["format"] != kFormatName) {
    throw DocumentError("unsupported format " + doc["format"].dump());
  }
  if (doc.contains("format_version") && doc["format_version"] != kFormatVersion) {
    throw DocumentError("unsupported format_version " + doc["format_version"].dump());
  }
  if (!doc.contains("maximal_simplices")) throw DocumentError("missing maximal_simplices");
  const Json& simplices = doc["maximal_simplices"];
  if (!simplices.is_array() || simplices.empty()) throw DocumentError("maximal_simplices must be a nonempty array");

  LabelTable table;
  const bool named = doc.contains("vertex_names");
  if (named) {
    if (!doc["vertex_names"].is_array()) throw DocumentError("vertex_names must be an array");
    for (const auto& v : doc["vertex_names"]) {
      std::string key = label_key(v);
      if (table.contains(key)) throw DocumentError("duplicate vertex name '" + key + "'");
      table.intern(key, true);
    }
  }

  std::vector<std::vector<VertexId>> lists;
  for (const auto& s : simplices) lists.push_back(resolve(s, table, !named, "each simplex"));

  LabeledComplex out{SimplicialComplex{}, {}, {}};
  try {
    out.complex = SimplicialComplex::from_maximal(lists);
  } catch (const std::invalid_argument& e) {
    throw DocumentError(e.what());
  }
  out.vertex_names = table.take_names();
  if (out.vertex_names.size() != out.complex.vertex_count()) {
    throw DocumentError("vertex_names lists vertices that appear in no simplex");
  }

  if (doc.contains("reference_orientations")) {
    const Json& refs = doc["reference_orientations"];
    if (!refs.is_array()) throw DocumentError("reference_orientations must be an array");
    const int n = out.complex.dimension();
    out.reference.assign(out.complex.top_count(), Sign::plus());
    for (const auto& r : refs) {
      if (!r.is_object()) throw DocumentError("orientation entries must be objects");
      OrientedSimplex os;
      try {
        if (r.contains("ordering")) {
          os = OrientedSimplex::from_ordering(resolve(r["ordering"], table, false, "ordering"));
        } else if (r.contains("simplex") && r.contains("sign") && r["sign"].is_number_integer()) {
          os = {Simplex(resolve(r["simplex"], table, false, "simplex")), Sign::from_int(r["sign"].get<int>())};
        } else {
          throw DocumentError("orientation entries need \"ordering\" or \"simplex\" and \"sign\"");
        }
      } catch (const std::invalid_argument& e) {
        throw DocumentError(std::string("bad orientation entry: ") + e.what());
      }
      if (os.simplex.dim() != n) {
        throw DocumentError("orientation entry " + r.dump() + " does not name a top-dimensional simplex");
      }
      auto idx = out.complex.index_of(os.simplex);
      if (!idx) throw DocumentError("orientation entry " + r.dump() + " names a simplex not in the complex");
      out.reference[*idx] = os.sign;
    }
  }
  return out;
}

Json write_complex(const LabeledComplex& k) {
  Json doc;
  doc["format"] = kFormatName;
  doc["format_version"] = kFormatVersion;
  Json names = Json::array();
  for (VertexId v = 0; v < k.complex.vertex_count(); ++v) names.push_back(k.label(v));
  doc["vertex_names"] = std::move(names);
  Json simplices = Json::array();
  for (const auto& s : k.complex.maximal_simplices()) simplices.push_back(k.labels(s));
  doc["maximal_simplices"] = std::move(simplices);
  Json refs = Json::array();
  for (std::size_t i = 0; i < k.reference.size(); ++i) {
    if (k.reference[i].positive()) continue;
    refs.push_back({{"simplex", k.labels(k.complex.top_simplices()[i])}, {"sign", -1}});
  }
  if (!refs.empty()) doc["reference_orientations"] = std::move(refs);
  return doc;
}

std::string read_text(const std::string& path) {
  if (path == "-") {
    return std::string(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << text;
  if (!out) throw std::runtime_error("write to '" + path + "' failed");
}

}  // namespace disorient::io
