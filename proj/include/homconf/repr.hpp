#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "homconf/cartan.hpp"
#include "homconf/errors.hpp"
#include "homconf/linalg.hpp"

namespace homconf {

/// A finite-dimensional representation of a quiver. `maps[k]` belongs to
/// arrow k of the quiver and has shape dims[target] x dims[source].
struct Representation {
  std::vector<int> dims;
  std::vector<RatMatrix> maps;

  Root dimension_vector() const { return Root{dims}; }
};

/// Raised when a reflection functor is applied to the simple it annihilates.
class SimpleAtVertexError : public InputError {
 public:
  using InputError::InputError;
};

enum class ReflectionDirection { Plus, Minus };

Representation simple_representation(const DynkinQuiver& q, int vertex);

/// R_i^+ (kernel construction, i a sink) or R_i^- (cokernel construction,
/// i a source). The result is a representation of reflect_quiver(q, i).
Representation reflection_functor(const DynkinQuiver& q, int vertex,
                                  const Representation& m, ReflectionDirection dir);

/// The indecomposable with dimension vector `beta`: reflect beta along the
/// cyclic sink order until it becomes simple, then rebuild from that simple
/// with the inverse functors.
Representation build_indecomposable(const DynkinQuiver& q, const Root& beta);

/// dim Hom(M, N): nullity of f_t M_a = N_a f_s over all arrows a: s -> t.
std::size_t hom_dim(const DynkinQuiver& q, const Representation& m,
                    const Representation& n);

/// dim Ext^1(M, N) = dim Hom(M, N) - <dim M, dim N>.
std::size_t ext_dim(const DynkinQuiver& q, const Representation& m,
                    const Representation& n);

/// All indecomposable KQ-modules with their pairwise Hom and Ext dimensions.
/// Indices follow positive_roots(q).
class ModuleCategory {
 public:
  explicit ModuleCategory(DynkinQuiver q, unsigned threads = 1);

  const DynkinQuiver& quiver() const { return quiver_; }
  int rank() const { return quiver_.rank(); }
  std::size_t size() const { return roots_.size(); }
  const std::vector<Root>& roots() const { return roots_; }
  const Root& root(std::size_t i) const { return roots_[i]; }
  const Representation& module(std::size_t i) const { return modules_[i]; }

  /// Index of `r` in roots(); throws InputError for non-roots.
  std::size_t index_of(const Root& r) const;

  int hom(std::size_t i, std::size_t j) const { return hom_[i * size() + j]; }
  int ext(std::size_t i, std::size_t j) const { return ext_[i * size() + j]; }

  bool is_projective(std::size_t i) const;
  bool is_injective(std::size_t i) const;

 private:
  DynkinQuiver quiver_;
  std::vector<Root> roots_;
  std::map<Root, std::size_t> index_;
  std::vector<Representation> modules_;
  std::vector<int> hom_;
  std::vector<int> ext_;
};

}  // namespace homconf
