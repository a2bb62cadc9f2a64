#include "tfr/io.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

namespace tfr::io {

namespace {

std::string label_of(const json& j, const char* what) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_number_integer()) return std::to_string(j.get<long long>());
  throw InputError(std::string(what) + " must be a string or an integer, got " + j.dump());
}

const json& field_of(const json& j, const char* key, const char* schema) {
  if (!j.is_object()) throw InputError(std::string(schema) + " must be a JSON object");
  auto it = j.find(key);
  if (it == j.end()) throw InputError(std::string(schema) + " is missing \"" + key + "\"");
  return *it;
}

const json& array_of(const json& j, const char* what) {
  if (!j.is_array()) throw InputError(std::string(what) + " must be an array, got " + j.dump());
  return j;
}

std::int64_t integer_of(const json& j, const char* what) {
  if (!j.is_number_integer()) throw InputError(std::string(what) + " must be an integer, got " + j.dump());
  return j.get<std::int64_t>();
}

Rational rational_of(const json& j) {
  if (j.is_number_integer()) return Rational(Integer(std::to_string(j.get<long long>())));
  if (j.is_string()) {
    try {
      Rational q(j.get<std::string>());
      if (q.get_den() == 0) throw InputError("zero denominator in matrix entry " + j.dump());
      q.canonicalize();
      return q;
    } catch (const std::invalid_argument&) {
      throw InputError("matrix entry " + j.dump() + " is not a rational number");
    }
  }
  throw InputError("matrix entry " + j.dump() + " must be an integer or a string like \"-3/4\"");
}

std::vector<std::string> labels_of(const json& arr, const char* what) {
  std::vector<std::string> out;
  for (const auto& e : array_of(arr, what)) out.push_back(label_of(e, what));
  return out;
}

std::size_t find_label(const std::vector<std::string>& labels, const std::string& l, const char* what) {
  auto it = std::find(labels.begin(), labels.end(), l);
  if (it == labels.end()) throw InputError(std::string(what) + " '" + l + "' is not declared");
  return static_cast<std::size_t>(it - labels.begin());
}

std::string trim(std::string s) {
  const auto b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return "";
  return s.substr(b, s.find_last_not_of(" \t") - b + 1);
}

}  // namespace

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw InputError("malformed JSON in '" + path + "': " + e.what());
  }
}

SimplicialComplex parse_complex(const json& j) {
  auto vertices = labels_of(field_of(j, "vertices", "complex"), "vertex");
  std::vector<std::vector<std::size_t>> facets;
  for (const auto& f : array_of(field_of(j, "facets", "complex"), "facets")) {
    std::vector<std::size_t> facet;
    for (const auto& v : array_of(f, "facet")) facet.push_back(find_label(vertices, label_of(v, "vertex"), "vertex"));
    facets.push_back(std::move(facet));
  }
  try {
    return SimplicialComplex::from_facets(std::move(vertices), facets);
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
}

Poset parse_poset(const json& j, std::vector<std::string>* warnings) {
  const auto labels = labels_of(field_of(j, "elements", "poset"), "poset element");
  std::vector<Relation> relations;
  for (const auto& pair : array_of(field_of(j, "hasse", "poset"), "hasse")) {
    if (!pair.is_array() || pair.size() != 2) throw InputError("hasse entries must be pairs, got " + pair.dump());
    relations.emplace_back(find_label(labels, label_of(pair[0], "poset element"), "poset element"),
                           find_label(labels, label_of(pair[1], "poset element"), "poset element"));
  }
  std::vector<Relation> redundant;
  Poset p;
  try {
    p = Poset::from_relations(labels, relations, &redundant);
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
  if (warnings && !redundant.empty()) {
    std::string msg = "dropped non-covering hasse pairs:";
    for (const auto& [a, b] : redundant) msg += " " + labels[a] + "<" + labels[b];
    warnings->push_back(msg);
  }
  return p;
}

Fan parse_fan(const json& j) {
  const std::int64_t d = integer_of(field_of(j, "ambient_dim", "fan"), "ambient_dim");
  if (d < 0) throw InputError("ambient_dim must be non-negative");
  std::vector<std::vector<LatticeVector>> cones;
  for (const auto& c : array_of(field_of(j, "cones", "fan"), "cones")) {
    std::vector<LatticeVector> gens;
    for (const auto& g : array_of(c, "cone")) {
      LatticeVector v;
      for (const auto& x : array_of(g, "generator")) v.push_back(integer_of(x, "generator entry"));
      if (v.size() != static_cast<std::size_t>(d))
        throw InputError("generator " + g.dump() + " does not have length " + std::to_string(d));
      gens.push_back(std::move(v));
    }
    cones.push_back(std::move(gens));
  }
  return Fan::validate(static_cast<std::size_t>(d), cones);
}

KPModule parse_module(const json& j, const Field& field, std::vector<std::string>* warnings) {
  Poset p = parse_poset(field_of(j, "poset", "module"), warnings);
  std::vector<std::size_t> stalks(p.size(), 0);
  const json& st = field_of(j, "stalks", "module");
  if (!st.is_object()) throw InputError("\"stalks\" must be an object");
  for (const auto& [key, value] : st.items()) {
    const auto n = integer_of(value, "stalk dimension");
    if (n < 0) throw InputError("stalk dimension of '" + key + "' is negative");
    stalks[find_label(p.labels(), key, "poset element")] = static_cast<std::size_t>(n);
  }
  std::map<Relation, Matrix> edges;
  if (j.contains("edges")) {
    const json& ed = j.at("edges");
    if (!ed.is_object()) throw InputError("\"edges\" must be an object");
    for (const auto& [key, value] : ed.items()) {
      const auto lt = key.find('<');
      if (lt == std::string::npos || key.find('<', lt + 1) != std::string::npos)
        throw InputError("edge key '" + key + "' must have the form \"x<y\"");
      const Element x = find_label(p.labels(), trim(key.substr(0, lt)), "poset element");
      const Element y = find_label(p.labels(), trim(key.substr(lt + 1)), "poset element");
      std::vector<std::vector<Rational>> rows;
      for (const auto& r : array_of(value, "matrix")) {
        std::vector<Rational> row;
        for (const auto& e : array_of(r, "matrix row")) row.push_back(rational_of(e));
        rows.push_back(std::move(row));
      }
      for (const auto& r : rows)
        if (r.size() != stalks[y])
          throw InputError("edge " + key + ": rows must have " + std::to_string(stalks[y]) + " entries");
      if (rows.size() != stalks[x])
        throw InputError("edge " + key + ": matrix must have " + std::to_string(stalks[x]) + " rows");
      edges.emplace(Relation{x, y}, Matrix::from_rows(rows, stalks[y]));
    }
  }
  return KPModule(std::move(p), std::move(stalks), std::move(edges), field);
}

LatticeVector parse_degree(const std::string& text) {
  std::string s = trim(text);
  if (!s.empty() && s.front() == '[') {
    if (s.back() != ']') throw InputError("unbalanced brackets in degree '" + text + "'");
    s = s.substr(1, s.size() - 2);
  }
  LatticeVector out;
  if (trim(s).empty()) return out;
  std::stringstream ss(s);
  std::string part;
  while (std::getline(ss, part, ',')) {
    part = trim(part);
    std::size_t used = 0;
    long long v = 0;
    try {
      v = std::stoll(part, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (part.empty() || used != part.size()) throw InputError("bad degree entry '" + part + "' in '" + text + "'");
    out.push_back(v);
  }
  return out;
}

FaceMask parse_face(const SimplicialComplex& complex, const std::string& text) {
  std::string s = trim(text);
  if (!s.empty() && s.front() == '{' && s.back() == '}') s = s.substr(1, s.size() - 2);
  FaceMask f = 0;
  if (trim(s).empty()) return f;
  std::stringstream ss(s);
  std::string part;
  while (std::getline(ss, part, ',')) {
    const auto k = find_label(complex.vertices(), trim(part), "vertex");
    f |= FaceMask{1} << k;
  }
  if (!complex.contains(f)) throw InputError(complex.face_label(f) + " is not a face of the complex");
  return f;
}

json to_json(const SimplicialComplex& complex) {
  json facets = json::array();
  for (FaceMask f : complex.facets()) {
    json facet = json::array();
    for (auto v : face_indices(f)) facet.push_back(complex.vertices()[v]);
    facets.push_back(facet);
  }
  return json{{"vertices", complex.vertices()}, {"facets", facets}};
}

json to_json(const Poset& p) {
  json hasse = json::array();
  for (const auto& [a, b] : p.hasse()) hasse.push_back({p.label(a), p.label(b)});
  return json{{"elements", p.labels()}, {"hasse", hasse}};
}

json to_json(const LatticeVector& v) {
  json out = json::array();
  for (auto x : v) out.push_back(x);
  return out;
}

json to_json(const Fan& fan) {
  json cones = json::array();
  for (auto c : fan.maximal_cones()) {
    json rays = json::array();
    for (const auto& r : fan.cone(c).rays()) rays.push_back(to_json(r));
    cones.push_back(rays);
  }
  return json{{"ambient_dim", fan.ambient_dim()}, {"cones", cones}};
}

json to_json(const GradedDims& dims) {
  json out = json::object();
  for (const auto& [i, n] : dims.support()) out[std::to_string(i)] = n;
  return out;
}

json to_json(const Verdict& v) {
  json w = json::array();
  for (const auto& x : v.witnesses)
    w.push_back(json{{"element", x.label}, {"degree", x.degree}, {"dimension", x.dimension}});
  return json{{"result", v.result}, {"witnesses", w}};
}

json table_to_json(const LocalCohomologyTable& table, const Fan& fan) {
  json out = json::array();
  for (std::size_t c = 0; c < fan.size(); ++c) {
    json rays = json::array();
    for (const auto& r : fan.cone(c).rays()) rays.push_back(to_json(r));
    out.push_back(json{{"cone", rays}, {"betti", to_json(table.at(c))}});
  }
  return out;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

}  // namespace tfr::io
