#pragma once

#include <string>
#include <utility>
#include <vector>

#include "homconf/configs.hpp"

namespace homconf {

/// Objects orthogonal (both directions) to every member of T except x, y.
/// Always contains x and y; has 4 objects when the rank-2 remainder is of
/// type A2 and 2 when it is A1 x A1.
std::vector<OrbitObject> biperp_objects(const OrbitCategory& cat, const Configuration& t,
                                        const OrbitObject& x, const OrbitObject& y);

/// The completions of T \ {x, y} inside the bi-perpendicular objects.
std::vector<std::pair<OrbitObject, OrbitObject>> pair_completions(const OrbitCategory& cat,
                                                                  const Configuration& t,
                                                                  const OrbitObject& x,
                                                                  const OrbitObject& y);

/// Replaces {x, y} by the other completion, or returns T when there is none.
Configuration mutate(const OrbitCategory& cat, const Configuration& t, const OrbitObject& x,
                     const OrbitObject& y);

struct MutationEdge {
  std::size_t a = 0;  // a < b, node indices
  std::size_t b = 0;
  std::vector<std::pair<OrbitObject, OrbitObject>> witnesses;  // pairs removed from node a
};

struct MutationGraph {
  std::vector<Configuration> nodes;
  std::vector<MutationEdge> edges;

  std::vector<std::size_t> degrees() const;
};

MutationGraph mutation_graph(const OrbitCategory& cat);
bool is_connected(const MutationGraph& g);

/// Undirected DOT, nodes labelled by configuration_label(), stable order.
std::string export_dot(const MutationGraph& g, const DynkinQuiver& q);

/// Completion-count dichotomy and the involution property over every
/// configuration and pair.
CheckReport verify_mutation(const OrbitCategory& cat);

}  // namespace homconf
