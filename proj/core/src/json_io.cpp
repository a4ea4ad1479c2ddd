#include "clarke/json_io.hpp"

#include <fstream>

namespace clarke {
namespace io {

json polytope_to_json(const poly::Polytope& p) {
  json j;
  j["rank"] = p.rank;
  j["lattice"] = lattice::tag_name(p.tag);
  json verts = json::array();
  for (const auto& v : p.vertices) {
    json row = json::array();
    for (const auto& q : v) {
      if (!is_integral(q)) throw InputError("polytope_to_json: lattice polytopes only");
      row.push_back(static_cast<long long>(numerator(q).convert_to<long long>()));
    }
    verts.push_back(row);
  }
  j["vertices"] = verts;
  if (!p.name.empty()) j["name"] = p.name;
  return j;
}

poly::Polytope polytope_from_json(const json& j) {
  if (!j.contains("rank") || !j.contains("lattice") || !j.contains("vertices"))
    throw InputError("polytope document: missing field");
  int rank = j["rank"].get<int>();
  std::string lat = j["lattice"].get<std::string>();
  if (lat != "N" && lat != "M") throw InputError("polytope document: lattice must be N or M");
  std::vector<RatVec> pts;
  for (const auto& row : j["vertices"]) {
    RatVec v;
    for (const auto& x : row) v.push_back(Rat(x.get<long long>()));
    if (static_cast<int>(v.size()) != rank)
      throw InputError("polytope document: vertex rank mismatch");
    pts.push_back(v);
  }
  poly::Polytope p = poly::convex_hull(pts, lat == "N" ? lattice::Tag::N : lattice::Tag::M);
  if (j.contains("name")) p.name = j["name"].get<std::string>();
  return p;
}

json fan_to_json(const fan::StackyFan& f) {
  json j;
  j["rank"] = f.fan.rank;
  j["lattice"] = lattice::tag_name(f.fan.tag);
  json rays = json::array();
  for (const auto& r : f.fan.rays) {
    json row = json::array();
    for (const auto& x : r) row.push_back(static_cast<long long>(x.convert_to<long long>()));
    rays.push_back(row);
  }
  j["rays"] = rays;
  json beta = json::array();
  for (const auto& b : f.beta) beta.push_back(static_cast<long long>(b.convert_to<long long>()));
  j["beta"] = beta;
  json cones = json::array();
  for (const auto& c : f.fan.maximal_cones) cones.push_back(c);
  j["cones"] = cones;
  if (!f.fan.name.empty()) j["name"] = f.fan.name;
  return j;
}

fan::StackyFan fan_from_json(const json& j) {
  if (!j.contains("rank") || !j.contains("rays") || !j.contains("cones"))
    throw InputError("fan document: missing field");
  int rank = j["rank"].get<int>();
  std::vector<IntVec> rays;
  for (const auto& row : j["rays"]) {
    IntVec r;
    for (const auto& x : row) r.push_back(Int(x.get<long long>()));
    if (static_cast<int>(r.size()) != rank) throw InputError("fan document: ray rank mismatch");
    rays.push_back(r);
  }
  std::vector<std::vector<IntVec>> maxc;
  for (const auto& cone : j["cones"]) {
    std::vector<IntVec> c;
    for (const auto& idx : cone) {
      int i = idx.get<int>();
      if (i < 0 || i >= static_cast<int>(rays.size()))
        throw InputError("fan document: cone index out of range");
      c.push_back(rays[i]);
    }
    maxc.push_back(c);
  }
  lattice::Tag tag = lattice::Tag::N;
  if (j.contains("lattice")) {
    std::string lat = j["lattice"].get<std::string>();
    if (lat != "N" && lat != "M") throw InputError("fan document: lattice must be N or M");
    tag = lat == "N" ? lattice::Tag::N : lattice::Tag::M;
  }
  fan::Fan f = fan::make_fan(rank, tag, maxc);
  fan::StackyFan s = fan::trivial_stacky(f);
  if (j.contains("beta")) {
    if (j["beta"].size() != j["rays"].size())
      throw InputError("fan document: beta length mismatch");
    // beta entries are given in the order of the listed rays
    for (size_t i = 0; i < rays.size(); ++i) {
      Int b(j["beta"][i].get<long long>());
      if (b <= 0) throw InputError("fan document: multipliers must be positive");
      s.beta[f.ray_index(primitive(rays[i]))] = b;
    }
  }
  if (j.contains("name")) s.fan.name = j["name"].get<std::string>();
  return s;
}

json diamond_to_json(const hodge::Diamond& d) {
  json j;
  json entries = json::array();
  for (const auto& [k, v] : d.entries)
    entries.push_back({k.first, k.second, static_cast<long long>(v.convert_to<long long>())});
  j["entries"] = entries;
  std::map<int, json> by_degree;
  for (const auto& [k, v] : d.entries) {
    int deg2 = k.first + k.second;
    if (deg2 % 2 != 0) throw MathError("diamond_to_json: entry at non-integral degree");
    by_degree[deg2 / 2].push_back({k.first, k.second, static_cast<long long>(v.convert_to<long long>())});
  }
  json bd = json::object();
  for (const auto& [n, arr] : by_degree) bd[std::to_string(n)] = arr;
  j["by_degree"] = bd;
  return j;
}

hodge::Diamond diamond_from_json(const json& j) {
  hodge::Diamond d;
  if (!j.contains("entries")) throw InputError("diamond document: missing entries");
  for (const auto& e : j["entries"])
    d.add(e[0].get<int>(), e[1].get<int>(), Int(e[2].get<long long>()));
  return d;
}

json nef_to_json(const nef::NefPartition& np) {
  json j;
  if (!np.delta.name.empty())
    j["polytope"] = np.delta.name;
  else
    j["polytope"] = polytope_to_json(np.delta);
  j["parts"] = np.parts;
  return j;
}

nef::NefPartition nef_from_json(const json& j) {
  if (!j.contains("polytope") || !j.contains("parts"))
    throw InputError("nef document: missing field");
  poly::Polytope delta;
  if (j["polytope"].is_string()) {
    std::string name = j["polytope"].get<std::string>();
    if (name == "segment") {
      delta = fixtures::segment();
    } else {
      bool found = false;
      for (const auto& p : fixtures::reflexive_polygons())
        if (p.name == name) { delta = p; found = true; }
      if (!found) throw InputError("nef document: unknown polytope name " + name);
    }
  } else {
    delta = polytope_from_json(j["polytope"]);
  }
  std::vector<std::vector<int>> parts;
  for (const auto& s : j["parts"]) parts.push_back(s.get<std::vector<int>>());
  return nef::validate_nef_partition(delta, parts);
}

json load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    throw InputError("malformed JSON in " + path + ": " + e.what());
  }
  return j;
}

void emit_file(const std::string& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write " + path);
  out << j.dump(2) << "\n";
}

const poly::Polytope& Workspace::polytope(const std::string& name) const {
  auto it = polytopes.find(name);
  if (it == polytopes.end()) throw InputError("workspace: unknown polytope " + name);
  return it->second;
}

}  // namespace io
}  // namespace clarke
