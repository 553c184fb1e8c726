#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace homconf {

enum class DiagramType { A, D, E };

char to_char(DiagramType t);

/// An arrow source -> target between 1-based vertices.
struct Arrow {
  int source = 0;
  int target = 0;
  friend auto operator<=>(const Arrow&, const Arrow&) = default;
};

/// An orientation of a simply-laced Dynkin diagram.
///
/// Vertices are 1..rank. A_n is the path 1-2-...-n; D_n is the path
/// 1-...-(n-2) with n-1 and n attached to n-2; E_n uses Bourbaki labels
/// (1-3-4-5-...-n with 2 attached to 4). Arrows are kept sorted by their
/// underlying edge, so reflecting at a vertex preserves arrow indices.
class DynkinQuiver {
 public:
  DynkinQuiver(DiagramType type, int rank, std::vector<Arrow> arrows);

  /// Default orientation: every arrow points to the lower-numbered endpoint
  /// (for A_n that is the linear quiver n -> n-1 -> ... -> 1).
  static DynkinQuiver standard(DiagramType type, int rank);

  DiagramType type() const { return type_; }
  int rank() const { return rank_; }
  const std::vector<Arrow>& arrows() const { return arrows_; }

  bool is_sink(int v) const;
  bool is_source(int v) const;
  bool adjacent(int u, int v) const;

  /// Canonical spec string, e.g. "A4:2>1,2>3,4>3".
  std::string spec() const;
  std::string name() const;

  friend bool operator==(const DynkinQuiver&, const DynkinQuiver&) = default;

 private:
  DiagramType type_;
  int rank_;
  std::vector<Arrow> arrows_;
};

/// Undirected edges of the ADE tree, each as (smaller, larger).
std::vector<std::pair<int, int>> diagram_edges(DiagramType type, int rank);
bool is_supported(DiagramType type, int rank);

/// Parses `<TYPE><rank>` or `<TYPE><rank>:<s>><t>,...`; whitespace is ignored.
DynkinQuiver parse_quiver(std::string_view spec);

std::vector<int> sinks(const DynkinQuiver& q);
std::vector<int> sources(const DynkinQuiver& q);

/// Reverses every arrow at a sink or source.
DynkinQuiver reflect_quiver(const DynkinQuiver& q, int vertex);

/// (i_1, ..., i_n) with i_k a sink of s_{i_{k-1}}...s_{i_1}(Q), smallest
/// eligible vertex first. Each vertex occurs once.
std::vector<int> sink_order(const DynkinQuiver& q);

/// Dimension vector / root coordinates over the simple roots.
struct Root {
  std::vector<int> coords;

  int rank() const { return static_cast<int>(coords.size()); }
  int operator[](int vertex) const { return coords[vertex - 1]; }
  bool is_simple() const;
  friend auto operator<=>(const Root&, const Root&) = default;
};

Root simple_root(int rank, int vertex);
std::vector<int> support(const Root& r);

/// Symmetric Cartan matrix (2 on the diagonal, -1 on edges), row-major.
std::vector<int> cartan_matrix(DiagramType type, int rank);

/// Tits form sum x_i^2 - sum_{edges} x_i x_j.
int tits_form(DiagramType type, const Root& r);

/// <a, b> = sum a_i b_i - sum_{arrows i->j} a_i b_j.
int euler_form(const DynkinQuiver& q, const Root& a, const Root& b);

/// Symmetric pairing (a, b) = <a, b> + <b, a>.
int symmetric_form(DiagramType type, const Root& a, const Root& b);

struct CoxeterData {
  int h = 0;
  std::vector<int> exponents;
};

CoxeterData coxeter_data(DiagramType type, int rank);

/// All positive roots in lexicographic order of their coordinates.
std::vector<Root> positive_roots(DiagramType type, int rank);
inline std::vector<Root> positive_roots(const DynkinQuiver& q) {
  return positive_roots(q.type(), q.rank());
}

/// Weyl group element as an integer matrix acting on root coordinates
/// (column vectors). Products compose right to left: (a*b)(v) = a(b(v)).
class WElement {
 public:
  WElement() = default;
  explicit WElement(int rank);  // identity
  WElement(int rank, std::vector<std::int64_t> entries);

  int rank() const { return rank_; }
  std::int64_t operator()(int row, int col) const { return m_[row * rank_ + col]; }
  const std::vector<std::int64_t>& entries() const { return m_; }

  std::vector<std::int64_t> apply(const std::vector<std::int64_t>& v) const;
  Root apply_positive(const Root& r) const;  // throws unless the image is a positive root

  /// Inverse, using that W preserves the symmetric form: w^-1 = C^-1 w^T C.
  WElement inverse(DiagramType type) const;
  bool is_identity() const;

  friend WElement operator*(const WElement& a, const WElement& b);
  friend auto operator<=>(const WElement&, const WElement&) = default;

 private:
  int rank_ = 0;
  std::vector<std::int64_t> m_;
};

WElement simple_reflection(DiagramType type, int rank, int vertex);
/// t_b(v) = v - (v, b) b.
WElement reflection_of_root(DiagramType type, const Root& beta);
/// t_{r_1} t_{r_2} ... t_{r_k}.
WElement reflection_product(DiagramType type, int rank, const std::vector<Root>& roots);
/// c = s_{i_1} ... s_{i_n} along sink_order(q).
WElement coxeter_element(const DynkinQuiver& q);

/// The root -v when v is a negative root, v itself otherwise.
Root positive_representative(const std::vector<std::int64_t>& v);

}  // namespace homconf
