#include "homconf/noncrossing.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include <gmpxx.h>

namespace homconf {

int absolute_length(const WElement& w) {
  const int n = w.rank();
  auto m = w.entries();
  for (int i = 0; i < n; ++i) m[i * n + i] -= 1;
  return static_cast<int>(integer_rank(std::move(m), n, n));
}

std::vector<NCElement> enumerate_nc(const DynkinQuiver& q) {
  const int n = q.rank();
  const auto roots = positive_roots(q);
  std::vector<WElement> refl;
  for (const auto& r : roots) refl.push_back(reflection_of_root(q.type(), r));
  const WElement c = coxeter_element(q);

  struct Node {
    NCElement u;
    WElement inverse;
  };
  std::vector<NCElement> out;
  std::vector<Node> level{{NCElement{WElement(n), {}}, WElement(n)}};
  for (int k = 0; k <= n; ++k) {
    std::map<WElement, std::size_t> seen;
    std::vector<Node> next;
    for (const auto& node : level) {
      out.push_back(node.u);
      if (k == n) continue;
      for (std::size_t t = 0; t < refl.size(); ++t) {
        WElement v = node.u.element * refl[t];
        if (seen.contains(v) || absolute_length(v) != k + 1) continue;
        WElement v_inv = refl[t] * node.inverse;
        if (absolute_length(v_inv * c) != n - k - 1) continue;
        seen.emplace(v, next.size());
        auto word = node.u.word;
        word.push_back(roots[t]);
        next.push_back({NCElement{std::move(v), std::move(word)}, std::move(v_inv)});
      }
    }
    level = std::move(next);
  }
  return out;
}

bool is_positive(const NCElement& u, int rank) { return is_sincere(rank, u.word); }

namespace {

std::uint64_t exponent_product(DiagramType type, int rank, int shift) {
  const auto d = coxeter_data(type, rank);
  mpz_class num = 1, den = 1;
  for (int e : d.exponents) {
    num *= e + d.h + shift;
    den *= e + 1;
  }
  if (num % den != 0) throw InvariantViolation("Catalan product is not an integer");
  const mpz_class q = num / den;
  if (!q.fits_ulong_p()) throw InputError("Catalan number does not fit in 64 bits");
  return q.get_ui();
}

}  // namespace

std::uint64_t catalan(DiagramType type, int rank) { return exponent_product(type, rank, 1); }

std::uint64_t positive_fuss_catalan(DiagramType type, int rank) {
  return exponent_product(type, rank, -1);
}

NCElement psi(const OrbitCategory& cat, const std::vector<Root>& t) {
  if (!is_sincere(cat.rank(), t)) throw InputError("psi: set is not sincere");
  if (!is_module_hom_free(cat, t)) throw InputError("psi: set is not Hom-free");
  std::vector<OrbitObject> objects;
  for (const auto& r : t) objects.push_back({r, 0});
  NCElement u;
  for (const auto& o : exceptional_order(cat, objects)) u.word.push_back(o.root);
  u.element = reflection_product(cat.quiver().type(), cat.rank(), u.word);
  return u;
}

PsiTable::PsiTable(const OrbitCategory& cat) : cat_(&cat), nc_(enumerate_nc(cat.quiver())) {
  for (std::size_t i = 0; i < nc_.size(); ++i) nc_index_.emplace(nc_[i].element, i);
  for (const auto& t : sincere_hom_free_sets(cat)) {
    const auto u = psi(cat, t);
    if (!preimage_.emplace(u.element, t).second)
      throw InvariantViolation("psi is not injective");
  }
}

std::vector<Root> PsiTable::phi(const NCElement& u) const {
  const auto it = nc_index_.find(u.element);
  if (it == nc_index_.end()) throw InputError("phi: element is not a noncrossing partition");
  if (!is_positive(nc_[it->second], cat_->rank()))
    throw InputError("phi: noncrossing partition is not positive");
  const auto pre = preimage_.find(u.element);
  if (pre == preimage_.end()) throw InvariantViolation("positive noncrossing partition has no preimage");
  return pre->second;
}

Configuration PsiTable::rho(const NCElement& u) const { return beta(*cat_, phi(u)); }

CheckReport verify_nc_lattice(const DynkinQuiver& q) {
  CheckReport report;
  const int n = q.rank();
  const auto nc = enumerate_nc(q);
  const WElement c = coxeter_element(q);
  if (nc.size() != catalan(q.type(), n))
    report.fail("|NC| = " + std::to_string(nc.size()) + ", expected " +
                std::to_string(catalan(q.type(), n)));
  if (nc.empty() || !nc.front().element.is_identity() || nc.back().element != c)
    report.fail("identity and c are not the ends of the lattice");
  for (const auto& u : nc) {
    ++report.checked;
    const int len = absolute_length(u.element);
    if (len != u.length()) report.fail("stored word is not reduced");
    if (reflection_product(q.type(), n, u.word) != u.element)
      report.fail("stored word does not multiply to its element");
    if (len + absolute_length(u.element.inverse(q.type()) * c) != n)
      report.fail("element is not below c in absolute order");
  }
  return report;
}

CheckReport verify_psi_bijection(const OrbitCategory& cat) {
  CheckReport report;
  const auto& q = cat.quiver();
  const int n = q.rank();
  std::vector<Root> simples;
  for (int v = 1; v <= n; ++v) simples.push_back(simple_root(n, v));
  if (psi(cat, simples).element != coxeter_element(q)) report.fail("psi(simples) != c");

  const PsiTable table(cat);  // throws if psi is not injective
  std::set<WElement> positives;
  for (const auto& u : table.lattice())
    if (is_positive(u, n)) positives.insert(u.element);
  for (const auto& [w, t] : table.preimages()) {
    ++report.checked;
    if (!positives.contains(w))
      report.fail("psi(T) is not a positive noncrossing partition for |T| = " +
                  std::to_string(t.size()));
    if (absolute_length(w) != static_cast<int>(t.size())) report.fail("l_T(psi(T)) != |T|");
  }
  if (table.preimages().size() != positives.size())
    report.fail("psi image has " + std::to_string(table.preimages().size()) +
                " elements, positive NC has " + std::to_string(positives.size()));
  return report;
}

CheckReport verify_psi_order_independence(const OrbitCategory& cat) {
  CheckReport report;
  const auto type = cat.quiver().type();
  for (const auto& t : sincere_hom_free_sets(cat)) {
    std::vector<OrbitObject> objects;
    for (const auto& r : t) objects.push_back({r, 0});
    const auto orders = all_exceptional_orders(cat, objects);
    if (orders.empty()) {
      report.fail("sincere Hom-free set admits no exceptional order");
      continue;
    }
    std::set<WElement> products;
    for (const auto& order : orders) {
      ++report.checked;
      std::vector<Root> word;
      for (const auto& o : order) word.push_back(o.root);
      if (!is_exceptional_sequence(cat, word)) report.fail("admissible order is not exceptional");
      products.insert(reflection_product(type, cat.rank(), word));
    }
    if (products.size() != 1) report.fail("exceptional orders give different products");
  }
  return report;
}

CheckReport check_reflection_product(const OrbitCategory& cat) {
  CheckReport report;
  const auto& q = cat.quiver();
  const int n = q.rank();
  const auto& roots = cat.roots();
  const WElement c = coxeter_element(q);
  std::vector<WElement> refl;
  for (const auto& r : roots) refl.push_back(reflection_of_root(q.type(), r));

  std::vector<std::size_t> tuple;
  std::vector<bool> used(roots.size(), false);
  std::function<void(const WElement&)> walk = [&](const WElement& prefix) {
    if (static_cast<int>(tuple.size()) == n) {
      ++report.checked;
      std::vector<Root> seq;
      for (auto i : tuple) seq.push_back(roots[i]);
      if (is_exceptional_sequence(cat, seq) != (prefix == c)) {
        std::string what = "tuple";
        for (const auto& r : seq) {
          what += " (";
          for (int x : r.coords) what += std::to_string(x);
          what += ")";
        }
        report.fail(what + ": exceptionality and product = c disagree");
      }
      return;
    }
    for (std::size_t i = 0; i < roots.size(); ++i) {
      if (used[i]) continue;
      used[i] = true;
      tuple.push_back(i);
      walk(prefix * refl[i]);
      tuple.pop_back();
      used[i] = false;
    }
  };
  walk(WElement(n));
  return report;
}

}  // namespace homconf
