#pragma once

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "polymux/constructions.hpp"
#include "polymux/face_lattice.hpp"
#include "polymux/toric.hpp"

namespace polymux {

// Serializable snapshot of a constructed lattice: the proper faces grouped
// by dimension, the f-vector, optional flag and toric data, and a checksum
// of the canonical JSON form.
struct LatticeDocument {
  std::optional<PolytopeSpec> spec;
  int n_vertices = 0;
  int dim = 0;
  bool has_vertex_list = true;                           // appendix documents imply their vertices
  std::map<int, std::vector<std::vector<int>>> faces_by_dim;  // 0..dim-1 where known
  std::vector<long long> f_vector;
  std::optional<std::map<std::string, long long>> flag_vector;
  std::optional<ToricHVector> toric_h;
  std::string checksum;
};

inline std::string fnv1a_hex(const std::string& data) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  std::ostringstream out;
  out << std::hex << h;
  return out.str();
}

inline std::string flag_key(unsigned mask, int d) {
  std::string key;
  for (int r = 0; r < d; ++r) {
    if (mask & (1u << r)) {
      if (!key.empty()) key += ",";
      key += std::to_string(r);
    }
  }
  return key;
}

inline LatticeDocument make_document(const std::optional<PolytopeSpec>& spec, const FaceLattice& L,
                                     bool with_flags = true, bool with_toric = true) {
  LatticeDocument doc;
  doc.spec = spec;
  doc.n_vertices = L.n_vertices;
  doc.dim = L.dim;
  for (int r = 0; r < L.dim; ++r) {
    std::vector<std::vector<int>> faces;
    for (int id : L.faces_of_dim(r)) faces.push_back(L.faces[id].to_vector());
    std::sort(faces.begin(), faces.end());
    doc.faces_by_dim[r] = std::move(faces);
  }
  doc.f_vector = L.f_vector();
  if (with_flags) {
    FlagVector fv = flag_vector(L);
    std::map<std::string, long long> flags;
    for (unsigned mask = 0; mask < fv.counts.size(); ++mask)
      flags[flag_key(mask, L.dim)] = fv.counts[mask];
    doc.flag_vector = std::move(flags);
  }
  if (with_toric) doc.toric_h = toric_h(L);
  return doc;
}

inline nlohmann::json document_to_json(const LatticeDocument& doc) {
  nlohmann::json j;
  if (doc.spec) {
    nlohmann::json s;
    s["kind"] = kind_name(doc.spec->kind);
    s["d"] = doc.spec->d;
    if (doc.spec->kind == Kind::Ordinary) s["k"] = doc.spec->k;
    s["n"] = doc.spec->n;
    j["spec"] = s;
  }
  j["n_vertices"] = doc.n_vertices;
  j["dim"] = doc.dim;
  nlohmann::json fb = nlohmann::json::object();
  for (const auto& [r, faces] : doc.faces_by_dim) fb[std::to_string(r)] = faces;
  j["faces_by_dim"] = fb;
  j["f_vector"] = doc.f_vector;
  if (doc.flag_vector) j["flag_vector"] = *doc.flag_vector;
  if (doc.toric_h) j["toric_h"] = *doc.toric_h;
  j["checksum"] = fnv1a_hex(j.dump());
  return j;
}

inline std::string document_to_json_text(const LatticeDocument& doc) {
  return document_to_json(doc).dump(2) + "\n";
}

inline LatticeDocument document_from_json(const nlohmann::json& j) {
  LatticeDocument doc;
  try {
    if (j.contains("spec")) {
      PolytopeSpec s;
      s.kind = parse_kind(j["spec"].at("kind").get<std::string>());
      s.d = j["spec"].value("d", 0);
      s.k = j["spec"].value("k", 0);
      s.n = j["spec"].value("n", 0);
      doc.spec = s;
    }
    doc.n_vertices = j.at("n_vertices").get<int>();
    doc.dim = j.at("dim").get<int>();
    for (const auto& [key, faces] : j.at("faces_by_dim").items()) {
      doc.faces_by_dim[std::stoi(key)] = faces.get<std::vector<std::vector<int>>>();
    }
    doc.f_vector = j.at("f_vector").get<std::vector<long long>>();
    if (j.contains("flag_vector"))
      doc.flag_vector = j["flag_vector"].get<std::map<std::string, long long>>();
    if (j.contains("toric_h")) doc.toric_h = j["toric_h"].get<ToricHVector>();
    if (j.contains("checksum")) {
      nlohmann::json copy = j;
      copy.erase("checksum");
      std::string expect = fnv1a_hex(copy.dump());
      doc.checksum = j["checksum"].get<std::string>();
      if (doc.checksum != expect) throw ParseError("document checksum mismatch");
    }
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed document: ") + e.what());
  }
  if (doc.checksum.empty()) {
    nlohmann::json canon = document_to_json(doc);
    doc.checksum = canon["checksum"].get<std::string>();
  }
  return doc;
}

// Appendix-style text: digit-string faces grouped by dimension under the
// headings used in the published listing, each group in (size, lex) order.
// Only proper faces of dimension >= 1 are listed; vertices are implicit.
// Valid only while every vertex is a single digit.
inline std::string to_appendix_text(const LatticeDocument& doc) {
  if (doc.n_vertices > 10)
    throw AppendixFormatUnavailable("appendix format requires single-digit vertex labels");
  std::ostringstream out;
  auto emit = [&](int r, const std::string& heading) {
    out << heading << ":\n\n";
    auto it = doc.faces_by_dim.find(r);
    std::vector<std::vector<int>> faces = (it == doc.faces_by_dim.end()) ? std::vector<std::vector<int>>{} : it->second;
    std::sort(faces.begin(), faces.end(), [](const std::vector<int>& a, const std::vector<int>& b) {
      if (a.size() != b.size()) return a.size() < b.size();
      return a < b;
    });
    for (size_t i = 0; i < faces.size(); ++i) {
      if (i) out << ", ";
      for (int v : faces[i]) out << v;
    }
    out << "\n\n";
  };
  emit(doc.dim - 1, "Facets");
  for (int r = doc.dim - 2; r >= 2; --r) emit(r, std::to_string(r) + "-dimensional faces");
  emit(1, "Edges");
  return out.str();
}

// Parse the appendix format back into a document.  The facet heading fixes
// the top dimension; vertices are taken to be 0..max digit seen.
inline LatticeDocument document_from_appendix_text(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::map<std::string, std::vector<std::vector<int>>> sections;
  std::string current;
  int max_vertex = -1;
  while (std::getline(in, line)) {
    auto colon = line.find(':');
    bool heading = colon != std::string::npos;
    if (heading) {
      for (size_t i = colon + 1; i < line.size(); ++i)
        if (!std::isspace(static_cast<unsigned char>(line[i]))) heading = false;
    }
    if (heading) {
      current = line.substr(0, colon);
      while (!current.empty() && std::isspace(static_cast<unsigned char>(current.front())))
        current.erase(current.begin());
      continue;
    }
    if (current.empty()) continue;
    std::vector<int> face;
    for (char c : line) {
      if (std::isdigit(static_cast<unsigned char>(c))) {
        int v = c - '0';
        face.push_back(v);
        max_vertex = std::max(max_vertex, v);
      } else {
        if (!face.empty()) sections[current].push_back(face);
        face.clear();
      }
    }
    if (!face.empty()) sections[current].push_back(face);
  }
  if (!sections.count("Facets") || !sections.count("Edges"))
    throw ParseError("appendix text needs Facets and Edges sections");

  int facet_dim = 2;
  for (const auto& [name, faces] : sections) {
    auto dash = name.find("-dimensional");
    if (dash != std::string::npos) facet_dim = std::max(facet_dim, std::stoi(name.substr(0, dash)) + 1);
  }

  LatticeDocument doc;
  doc.dim = facet_dim + 1;
  doc.n_vertices = max_vertex + 1;
  doc.has_vertex_list = false;
  auto store = [&](const std::string& name, int r) {
    auto it = sections.find(name);
    if (it == sections.end()) throw ParseError("missing appendix section: " + name);
    std::vector<std::vector<int>> faces = it->second;
    for (std::vector<int>& f : faces) std::sort(f.begin(), f.end());
    std::sort(faces.begin(), faces.end());
    doc.faces_by_dim[r] = std::move(faces);
  };
  store("Facets", facet_dim);
  for (int r = 2; r <= facet_dim - 1; ++r) store(std::to_string(r) + "-dimensional faces", r);
  store("Edges", 1);
  doc.f_vector.assign(doc.dim, 0);
  doc.f_vector[0] = doc.n_vertices;
  for (int r = 1; r < doc.dim; ++r)
    doc.f_vector[r] = static_cast<long long>(doc.faces_by_dim[r].size());
  doc.checksum = fnv1a_hex(document_to_json(doc).dump());
  return doc;
}

inline LatticeDocument load_document(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  std::string text = buf.str();
  size_t first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') {
    nlohmann::json j = nlohmann::json::parse(text, nullptr, false);
    if (j.is_discarded()) throw ParseError("invalid JSON in " + path);
    return document_from_json(j);
  }
  return document_from_appendix_text(text);
}

// Face-set comparison per dimension.  Vertices, bottom and top are treated
// as implicit: dimensions 1..d-1 are compared explicitly and the vertex
// count separately.
struct DiffReport {
  bool dims_match = true;
  bool vertex_count_match = true;
  std::map<int, std::vector<std::vector<int>>> only_in_a;
  std::map<int, std::vector<std::vector<int>>> only_in_b;

  bool empty() const {
    return dims_match && vertex_count_match && only_in_a.empty() && only_in_b.empty();
  }

  std::string to_string() const {
    if (empty()) return "documents describe identical lattices\n";
    std::ostringstream out;
    if (!dims_match) out << "dimension mismatch\n";
    if (!vertex_count_match) out << "vertex count mismatch\n";
    auto dump = [&](const char* label, const std::map<int, std::vector<std::vector<int>>>& side) {
      for (const auto& [r, faces] : side) {
        out << label << " (dim " << r << "):";
        for (const std::vector<int>& f : faces) {
          out << " ";
          for (size_t i = 0; i < f.size(); ++i) out << f[i] << (i + 1 < f.size() ? "," : "");
        }
        out << "\n";
      }
    };
    dump("only in first", only_in_a);
    dump("only in second", only_in_b);
    return out.str();
  }
};

inline DiffReport compare_documents(const LatticeDocument& a, const LatticeDocument& b) {
  DiffReport rep;
  rep.dims_match = (a.dim == b.dim);
  rep.vertex_count_match = (a.n_vertices == b.n_vertices);
  if (!rep.dims_match) return rep;
  for (int r = 1; r < a.dim; ++r) {
    auto ia = a.faces_by_dim.find(r);
    auto ib = b.faces_by_dim.find(r);
    std::vector<std::vector<int>> fa = (ia == a.faces_by_dim.end()) ? std::vector<std::vector<int>>{} : ia->second;
    std::vector<std::vector<int>> fb = (ib == b.faces_by_dim.end()) ? std::vector<std::vector<int>>{} : ib->second;
    std::sort(fa.begin(), fa.end());
    std::sort(fb.begin(), fb.end());
    std::vector<std::vector<int>> a_only, b_only;
    std::set_difference(fa.begin(), fa.end(), fb.begin(), fb.end(), std::back_inserter(a_only));
    std::set_difference(fb.begin(), fb.end(), fa.begin(), fa.end(), std::back_inserter(b_only));
    if (!a_only.empty()) rep.only_in_a[r] = std::move(a_only);
    if (!b_only.empty()) rep.only_in_b[r] = std::move(b_only);
  }
  return rep;
}

}  // namespace polymux
