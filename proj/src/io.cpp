#include "homconf/io.hpp"

namespace homconf {

nlohmann::json to_json(const OrbitObject& o) {
  return {{"root", o.root.coords}, {"shift", o.shift}};
}

nlohmann::json to_json(const Configuration& c) {
  auto arr = nlohmann::json::array();
  for (const auto& o : c.members) arr.push_back(to_json(o));
  return arr;
}

nlohmann::json to_json(const NCElement& u) {
  const int n = u.element.rank();
  auto matrix = nlohmann::json::array();
  for (int r = 0; r < n; ++r) {
    auto row = nlohmann::json::array();
    for (int c = 0; c < n; ++c) row.push_back(u.element(r, c));
    matrix.push_back(std::move(row));
  }
  auto word = nlohmann::json::array();
  for (const auto& r : u.word) word.push_back(r.coords);
  return {{"matrix", std::move(matrix)},
          {"word", std::move(word)},
          {"length", u.length()},
          {"positive", is_positive(u, n)}};
}

nlohmann::json to_json(const MutationGraph& g) {
  auto nodes = nlohmann::json::array();
  for (const auto& c : g.nodes) nodes.push_back(to_json(c));
  auto edges = nlohmann::json::array();
  for (const auto& e : g.edges) edges.push_back({e.a, e.b});
  return {{"nodes", std::move(nodes)}, {"edges", std::move(edges)}};
}

OrbitObject object_from_json(const nlohmann::json& j) {
  try {
    return {Root{j.at("root").get<std::vector<int>>()}, j.at("shift").get<int>()};
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("malformed object: ") + e.what());
  }
}

Configuration configuration_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw InputError("configuration must be a JSON array");
  std::vector<OrbitObject> objects;
  for (const auto& o : j) objects.push_back(object_from_json(o));
  return Configuration(std::move(objects));
}

}  // namespace homconf
