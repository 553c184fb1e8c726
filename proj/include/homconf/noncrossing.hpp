#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "homconf/configs.hpp"

namespace homconf {

/// An element of NC(W, c) with one reduced word in the reflections. The word
/// lists the roots b_1..b_k with element == t_{b_1} ... t_{b_k}.
struct NCElement {
  WElement element;
  std::vector<Root> word;

  int length() const { return static_cast<int>(word.size()); }
};

/// l_T(w) = rank(w - 1).
int absolute_length(const WElement& w);

/// The interval [1, c] in absolute order for the sink-adapted c of `q`,
/// listed by length; identity first, c last.
std::vector<NCElement> enumerate_nc(const DynkinQuiver& q);

/// Not contained in a proper standard parabolic subgroup, read off the
/// supports of the stored word.
bool is_positive(const NCElement& u, int rank);

/// prod (e_i + h + 1) / (e_i + 1)
std::uint64_t catalan(DiagramType type, int rank);
/// prod (e_i + h - 1) / (e_i + 1)
std::uint64_t positive_fuss_catalan(DiagramType type, int rank);

/// Product of the reflections of T taken in exceptional order.
NCElement psi(const OrbitCategory& cat, const std::vector<Root>& t);

/// psi over every sincere Hom-free set, inverted for phi and rho.
class PsiTable {
 public:
  explicit PsiTable(const OrbitCategory& cat);

  const std::vector<NCElement>& lattice() const { return nc_; }
  const std::map<WElement, std::vector<Root>>& preimages() const { return preimage_; }

  std::vector<Root> phi(const NCElement& u) const;
  Configuration rho(const NCElement& u) const;

 private:
  const OrbitCategory* cat_;
  std::vector<NCElement> nc_;
  std::map<WElement, std::size_t> nc_index_;
  std::map<WElement, std::vector<Root>> preimage_;
};

/// Lattice size and length identities: |NC| matches catalan(), every u has
/// l_T(u) + l_T(u^-1 c) = n, and stored words are reduced.
CheckReport verify_nc_lattice(const DynkinQuiver& q);

/// psi(simples) = c, psi is injective on sincere Hom-free sets, and its image
/// is exactly the positive part of NC.
CheckReport verify_psi_bijection(const OrbitCategory& cat);

/// Every admissible exceptional order of a sincere Hom-free set gives the
/// same product.
CheckReport verify_psi_order_independence(const OrbitCategory& cat);

/// For every ordered rank-tuple of distinct positive roots: exceptional iff
/// the product of reflections is c.
CheckReport check_reflection_product(const OrbitCategory& cat);

}  // namespace homconf
