#pragma once

#include <compare>
#include <cstddef>
#include <filesystem>
#include <limits>
#include <map>
#include <string>
#include <vector>

#include "homconf/cartan.hpp"
#include "homconf/repr.hpp"

namespace homconf {

/// An indecomposable of the orbit category, represented in the fundamental
/// domain: a module (shift 0) or a non-injective module shifted once.
struct OrbitObject {
  Root root;
  int shift = 0;

  friend bool operator==(const OrbitObject&, const OrbitObject&) = default;
  friend std::strong_ordering operator<=>(const OrbitObject& a, const OrbitObject& b) {
    if (auto c = a.shift <=> b.shift; c != 0) return c;
    return a.root <=> b.root;
  }
};

/// Modules first, then shifted non-injectives; lexicographic inside each.
std::vector<OrbitObject> fundamental_domain(const ModuleCategory& mods);

/// dim Hom in the orbit category, by cases on the two shifts:
///   (0,0) hom(M,N)   (0,1) ext(M,N)   (1,0) hom(N,M)   (1,1) hom(M,N).
/// Of the two derived-category summands Hom(X,Y) and Hom(X, tau Y[2]) at
/// most one is nonzero for objects of the fundamental domain, and each case
/// above is that summand.
int hom_orbit(const ModuleCategory& mods, const OrbitObject& x, const OrbitObject& y);

struct HomTable {
  std::string quiver;  // canonical quiver spec
  std::vector<OrbitObject> objects;
  std::vector<int> dims;  // row-major, dims[x * size + y] = dim Hom(x, y)

  std::size_t size() const { return objects.size(); }
  int at(std::size_t x, std::size_t y) const { return dims[x * size() + y]; }

  friend bool operator==(const HomTable&, const HomTable&) = default;
};

HomTable hom_table(const ModuleCategory& mods);

/// Row-major dims without whitespace, e.g. "[[1,0],[0,1]]".
std::string canonical_dims(const HomTable& t);
std::string sha256_hex(const std::string& data);

void save_hom_table(const HomTable& t, const std::filesystem::path& path);
/// Throws IntegrityError on a malformed file, a checksum mismatch, or a
/// table written for a different quiver than `expected`.
HomTable load_hom_table(const std::filesystem::path& path, const DynkinQuiver& expected);

/// The orbit category of one quiver, backed by its Hom table. Module-level
/// Hom and Ext are read back from the table: Hom(M,N) is the (0,0) entry,
/// Ext(M,N) is the (0,1) entry, and Ext into an injective vanishes.
class OrbitCategory {
 public:
  static constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();

  OrbitCategory(DynkinQuiver q, HomTable table);
  static OrbitCategory build(const DynkinQuiver& q, unsigned threads = 1);

  const DynkinQuiver& quiver() const { return quiver_; }
  int rank() const { return quiver_.rank(); }
  const HomTable& table() const { return table_; }

  std::size_t size() const { return table_.size(); }
  const std::vector<OrbitObject>& objects() const { return table_.objects; }
  const OrbitObject& object(std::size_t i) const { return table_.objects[i]; }
  std::size_t index_of(const OrbitObject& x) const;  // throws InputError if absent
  int hom(std::size_t x, std::size_t y) const { return table_.at(x, y); }
  bool orthogonal(std::size_t x, std::size_t y) const {
    return hom(x, y) == 0 && hom(y, x) == 0;
  }

  const std::vector<Root>& roots() const { return roots_; }
  std::size_t root_index(const Root& r) const;  // throws InputError if absent
  std::size_t object_of_root(std::size_t root, int shift) const;  // npos if absent
  bool is_injective(std::size_t root) const { return shifted_[root] == npos; }
  int module_hom(std::size_t a, std::size_t b) const;
  int module_ext(std::size_t a, std::size_t b) const;

 private:
  DynkinQuiver quiver_;
  HomTable table_;
  std::vector<Root> roots_;
  std::map<OrbitObject, std::size_t> index_;
  std::map<Root, std::size_t> root_index_;
  std::vector<std::size_t> unshifted_;
  std::vector<std::size_t> shifted_;
};

}  // namespace homconf
