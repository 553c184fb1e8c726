#include "homconf/mutation.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>

namespace homconf {

namespace {

void check_pair(const Configuration& t, const OrbitObject& x, const OrbitObject& y, int rank) {
  if (t.size() != static_cast<std::size_t>(rank))
    throw InputError("mutation needs a Hom-configuration");
  if (x == y || !t.contains(x) || !t.contains(y))
    throw InputError("mutation pair must be two distinct members of the configuration");
}

}  // namespace

std::vector<OrbitObject> biperp_objects(const OrbitCategory& cat, const Configuration& t,
                                        const OrbitObject& x, const OrbitObject& y) {
  check_pair(t, x, y, cat.rank());
  if (!is_hom_free(cat, t.members)) throw InputError("mutation needs a Hom-configuration");
  std::vector<std::size_t> rest;
  for (const auto& w : t.members)
    if (w != x && w != y) rest.push_back(cat.index_of(w));
  std::vector<OrbitObject> out;
  for (std::size_t z = 0; z < cat.size(); ++z)
    if (std::all_of(rest.begin(), rest.end(), [&](std::size_t w) { return cat.orthogonal(z, w); }))
      out.push_back(cat.object(z));
  if (out.size() != 2 && out.size() != 4)
    throw InvariantViolation("bi-perpendicular category has " + std::to_string(out.size()) +
                             " objects");
  return out;
}

std::vector<std::pair<OrbitObject, OrbitObject>> pair_completions(const OrbitCategory& cat,
                                                                  const Configuration& t,
                                                                  const OrbitObject& x,
                                                                  const OrbitObject& y) {
  const auto objects = biperp_objects(cat, t, x, y);
  std::vector<std::pair<OrbitObject, OrbitObject>> out;
  for (std::size_t a = 0; a < objects.size(); ++a)
    for (std::size_t b = a + 1; b < objects.size(); ++b)
      if (cat.orthogonal(cat.index_of(objects[a]), cat.index_of(objects[b])))
        out.emplace_back(objects[a], objects[b]);
  const std::size_t expected = objects.size() == 4 ? 2 : 1;
  if (out.size() != expected)
    throw InvariantViolation("rank-2 remainder has " + std::to_string(out.size()) +
                             " completions, expected " + std::to_string(expected));
  return out;
}

Configuration mutate(const OrbitCategory& cat, const Configuration& t, const OrbitObject& x,
                     const OrbitObject& y) {
  const auto completions = pair_completions(cat, t, x, y);
  const auto [lo, hi] = std::minmax(x, y);
  for (const auto& [u, v] : completions) {
    if (u == lo && v == hi) continue;
    std::vector<OrbitObject> members;
    for (const auto& w : t.members)
      if (w != x && w != y) members.push_back(w);
    members.push_back(u);
    members.push_back(v);
    return Configuration(std::move(members));
  }
  return t;
}

std::vector<std::size_t> MutationGraph::degrees() const {
  std::vector<std::size_t> d(nodes.size(), 0);
  for (const auto& e : edges) {
    ++d[e.a];
    ++d[e.b];
  }
  return d;
}

MutationGraph mutation_graph(const OrbitCategory& cat) {
  MutationGraph g;
  g.nodes = enumerate_hom_configurations(cat);
  std::map<Configuration, std::size_t> index;
  for (std::size_t i = 0; i < g.nodes.size(); ++i) index.emplace(g.nodes[i], i);

  std::map<std::pair<std::size_t, std::size_t>, std::size_t> edge_index;
  for (std::size_t i = 0; i < g.nodes.size(); ++i) {
    const auto& t = g.nodes[i];
    for (std::size_t a = 0; a < t.size(); ++a)
      for (std::size_t b = a + 1; b < t.size(); ++b) {
        const auto m = mutate(cat, t, t.members[a], t.members[b]);
        if (m == t) continue;
        const auto it = index.find(m);
        if (it == index.end()) throw InvariantViolation("mutation left the set of configurations");
        const std::size_t j = it->second;
        const auto key = std::minmax(i, j);
        auto [pos, fresh] = edge_index.emplace(key, g.edges.size());
        if (fresh) g.edges.push_back({key.first, key.second, {}});
        if (i == key.first) g.edges[pos->second].witnesses.emplace_back(t.members[a], t.members[b]);
      }
  }
  std::sort(g.edges.begin(), g.edges.end(), [](const MutationEdge& x, const MutationEdge& y) {
    return std::tie(x.a, x.b) < std::tie(y.a, y.b);
  });
  return g;
}

bool is_connected(const MutationGraph& g) {
  if (g.nodes.empty()) return true;
  std::vector<std::vector<std::size_t>> adj(g.nodes.size());
  for (const auto& e : g.edges) {
    adj[e.a].push_back(e.b);
    adj[e.b].push_back(e.a);
  }
  std::vector<bool> seen(g.nodes.size(), false);
  std::queue<std::size_t> todo;
  todo.push(0);
  seen[0] = true;
  std::size_t count = 1;
  while (!todo.empty()) {
    const auto v = todo.front();
    todo.pop();
    for (auto w : adj[v])
      if (!seen[w]) {
        seen[w] = true;
        ++count;
        todo.push(w);
      }
  }
  return count == g.nodes.size();
}

std::string export_dot(const MutationGraph& g, const DynkinQuiver& q) {
  auto quoted = [&](std::size_t i) { return "\"" + configuration_label(q, g.nodes[i]) + "\""; };
  std::string s = "graph {\n";
  for (std::size_t i = 0; i < g.nodes.size(); ++i) s += "  " + quoted(i) + ";\n";
  for (const auto& e : g.edges) s += "  " + quoted(e.a) + " -- " + quoted(e.b) + ";\n";
  return s + "}\n";
}

CheckReport verify_mutation(const OrbitCategory& cat) {
  CheckReport report;
  const auto& q = cat.quiver();
  for (const auto& t : enumerate_hom_configurations(cat)) {
    for (std::size_t a = 0; a < t.size(); ++a)
      for (std::size_t b = a + 1; b < t.size(); ++b) {
        ++report.checked;
        const auto& x = t.members[a];
        const auto& y = t.members[b];
        const auto objects = biperp_objects(cat, t, x, y);
        const auto completions = pair_completions(cat, t, x, y);
        const auto m = mutate(cat, t, x, y);
        const auto where = configuration_label(q, t) + " at {" + object_label(q, x) + "," +
                           object_label(q, y) + "}";
        if ((objects.size() == 4) != (completions.size() == 2) || (m == t) != (completions.size() == 1))
          report.fail(where + ": rank-2 dichotomy fails");
        if (m.size() != t.size() || !is_hom_free(cat, m.members))
          report.fail(where + ": mutation is not a Hom-configuration");
        // The replacement pair, mutated again, gives T back.
        std::vector<OrbitObject> added;
        for (const auto& o : m.members)
          if (!t.contains(o)) added.push_back(o);
        if (added.size() == 2 && mutate(cat, m, added[0], added[1]) != t)
          report.fail(where + ": mutation is not an involution");
        if (m == t && !(objects.size() == 2 && objects[0] == std::min(x, y) &&
                        objects[1] == std::max(x, y)))
          report.fail(where + ": fixed point without an A1 x A1 remainder");
      }
  }
  return report;
}

}  // namespace homconf
