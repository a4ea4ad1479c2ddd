#ifndef CLARKE_JSON_IO_HPP
#define CLARKE_JSON_IO_HPP

#include "json.hpp"

#include "clarke/fixtures.hpp"
#include "clarke/hodge.hpp"

namespace clarke {
namespace io {

using nlohmann::json;

// {"rank": int, "lattice": "N"|"M", "vertices": [[int...]...], "name"?}
json polytope_to_json(const poly::Polytope& p);
poly::Polytope polytope_from_json(const json& j);

// {"rank": int, "rays": [[int...]...], "beta": [int...], "cones": [[i...]...]}
json fan_to_json(const fan::StackyFan& f);
fan::StackyFan fan_from_json(const json& j);

// {"entries": [[2l, 2m, count]...], "by_degree": {"n": [[2l, 2m, count]...]}}
json diamond_to_json(const hodge::Diamond& d);
hodge::Diamond diamond_from_json(const json& j);

// {"polytope": <name or inline document>, "parts": [[vertex indices]...]}
// Named polytopes resolve against the bundled fixtures.
json nef_to_json(const nef::NefPartition& np);
nef::NefPartition nef_from_json(const json& j);

json load_file(const std::string& path);
void emit_file(const std::string& path, const json& j);

// Named registry of loaded objects with a deterministic run log.
struct Workspace {
  std::map<std::string, poly::Polytope> polytopes;
  std::map<std::string, fan::StackyFan> fans;
  std::map<std::string, hodge::Diamond> diamonds;
  std::vector<std::string> log;

  void note(const std::string& line) { log.push_back(line); }
  const poly::Polytope& polytope(const std::string& name) const;
};

}  // namespace io
}  // namespace clarke

#endif
