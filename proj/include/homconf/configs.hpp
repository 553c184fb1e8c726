#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "homconf/orbit.hpp"
#include "homconf/report.hpp"

namespace homconf {

/// A set of orbit-category objects in canonical (sorted) order.
struct Configuration {
  std::vector<OrbitObject> members;

  Configuration() = default;
  explicit Configuration(std::vector<OrbitObject> objects);

  std::size_t size() const { return members.size(); }
  bool contains(const OrbitObject& x) const;
  friend auto operator<=>(const Configuration&, const Configuration&) = default;
};

/// "12", "1[1]" for type A (support written out, vertices up to 9);
/// "root=(d1,...,dn)[s]" otherwise.
std::string object_label(const DynkinQuiver& q, const OrbitObject& x);
std::string configuration_label(const DynkinQuiver& q, const Configuration& c);
/// Accepts either label form.
OrbitObject parse_object_label(const DynkinQuiver& q, std::string_view label);
Configuration parse_configuration(const DynkinQuiver& q, const std::vector<std::string>& labels);

bool is_hom_free(const OrbitCategory& cat, const std::vector<OrbitObject>& objects);

/// All Hom-free sets of size rank(), in canonical order.
std::vector<Configuration> enumerate_hom_configurations(const OrbitCategory& cat);
/// All nonempty Hom-free sets, as sorted object indices.
std::vector<std::vector<std::size_t>> enumerate_hom_free_sets(const OrbitCategory& cat);
/// All Hom-configurations containing `partial`.
std::vector<Configuration> complete_to_configurations(const OrbitCategory& cat,
                                                      const std::vector<OrbitObject>& partial);

std::vector<Root> module_part(const Configuration& c);
bool is_sincere(int rank, const std::vector<Root>& roots);
/// Pairwise Hom-orthogonal sets of modules.
bool is_module_hom_free(const OrbitCategory& cat, const std::vector<Root>& roots);
/// Every sincere Hom-free set of modules, roots sorted.
std::vector<std::vector<Root>> sincere_hom_free_sets(const OrbitCategory& cat);

/// Roots M with Hom(X, M) = 0 = Ext(X, M) for every X in `t`.
std::vector<Root> perp(const OrbitCategory& cat, const std::vector<Root>& t);

/// The unique `expected_rank`-subset of `wide` that is pairwise
/// Hom-orthogonal: the simple objects of the wide subcategory.
std::vector<Root> simples_of_wide(const OrbitCategory& cat, const std::vector<Root>& wide,
                                  int expected_rank);

/// T together with the shifted simples of its perpendicular category.
Configuration beta(const OrbitCategory& cat, const std::vector<Root>& t);

CheckReport verify_beta_bijection(const OrbitCategory& cat);

/// Orders a Hom-free set so that module shadows form an exceptional sequence,
/// modules before shifted objects. Ties go to the canonically smaller object.
std::vector<OrbitObject> exceptional_order(const OrbitCategory& cat,
                                           const std::vector<OrbitObject>& members);
/// Every order satisfying the same constraints.
std::vector<std::vector<OrbitObject>> all_exceptional_orders(
    const OrbitCategory& cat, const std::vector<OrbitObject>& members);

/// Every object of the fundamental domain maps nontrivially into some member.
bool covering_check(const OrbitCategory& cat, const std::vector<OrbitObject>& members);

/// Hom(E_i, E_j) = 0 = Ext(E_i, E_j) whenever j > i.
bool is_exceptional_sequence(const OrbitCategory& cat, const std::vector<Root>& seq);

enum class BraidDirection { Forward, Inverse };

/// sigma_i (1-based i) replaces (b_i, b_{i+1}) by (b_{i+1}, t_{b_{i+1}} b_i);
/// sigma_i^-1 replaces it by (t_{b_i} b_{i+1}, b_i). Roots are taken positive.
std::vector<Root> braid_mutate(const OrbitCategory& cat, const std::vector<Root>& seq,
                               int i, BraidDirection dir);

/// Every complete exceptional sequence, found by backtracking over roots.
std::vector<std::vector<Root>> complete_exceptional_sequences(const OrbitCategory& cat);

/// Closure of `seed` under sigma_i and sigma_i^-1 for all i.
std::vector<std::vector<Root>> braid_orbit(const OrbitCategory& cat, const std::vector<Root>& seed);

}  // namespace homconf
