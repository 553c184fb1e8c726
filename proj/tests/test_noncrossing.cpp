#include "catch2/catch_amalgamated.hpp"

#include <set>

#include "homconf/configs.hpp"
#include "homconf/errors.hpp"
#include "homconf/noncrossing.hpp"
#include "homconf/type_a.hpp"
#include "support.hpp"

using namespace homconf;
using testing::category;

namespace {

const std::vector<std::pair<char, int>> kSmall = {{'A', 1}, {'A', 2}, {'A', 3}, {'A', 4},
                                                  {'A', 5}, {'A', 6}, {'D', 4}, {'D', 5},
                                                  {'D', 6}, {'E', 6}};

std::string spec_of(char t, int n) { return std::string(1, t) + std::to_string(n); }

}  // namespace

TEST_CASE("closed forms", "[nc]") {
  CHECK(catalan(DiagramType::A, 1) == 2);
  CHECK(catalan(DiagramType::A, 2) == 5);
  CHECK(catalan(DiagramType::A, 3) == 14);
  CHECK(positive_fuss_catalan(DiagramType::A, 3) == 5);
  CHECK(positive_fuss_catalan(DiagramType::D, 4) == 20);
  CHECK(positive_fuss_catalan(DiagramType::E, 6) == 418);
  CHECK(positive_fuss_catalan(DiagramType::E, 7) == 2431);
  CHECK(positive_fuss_catalan(DiagramType::E, 8) == 17342);
  for (auto [t, n] : kSmall) {
    const auto type = parse_quiver(spec_of(t, n)).type();
    CHECK(catalan(type, n) == testing::product_formula(t, n, 1));
    CHECK(positive_fuss_catalan(type, n) == testing::product_formula(t, n, -1));
  }
  for (int n = 4; n <= 8; ++n)
    CHECK(catalan(DiagramType::D, n) ==
          (3 * n - 2) * testing::binomial(2 * n - 2, n - 1) / n);
}

TEST_CASE("noncrossing lattice sizes and positivity", "[nc]") {
  for (auto [t, n] : kSmall) {
    const auto q = parse_quiver(spec_of(t, n));
    const auto nc = enumerate_nc(q);
    INFO(q.spec());
    CHECK(nc.size() == testing::product_formula(t, n, 1));
    std::size_t positive = 0;
    for (const auto& u : nc) positive += is_positive(u, n);
    CHECK(positive == testing::product_formula(t, n, -1));
  }
}

TEST_CASE("noncrossing elements of A3", "[nc]") {
  const auto q = parse_quiver("A3");
  const auto nc = enumerate_nc(q);
  REQUIRE(nc.size() == 14);
  CHECK(nc.front().element.is_identity());
  CHECK_FALSE(is_positive(nc.front(), 3));
  const auto c = coxeter_element(q);
  bool has_c = false;
  for (const auto& u : nc) {
    CHECK(absolute_length(u.element) == u.length());
    CHECK(absolute_length(u.element) + absolute_length(u.element.inverse(q.type()) * c) == 3);
    CHECK(reflection_product(q.type(), 3, u.word) == u.element);
    if (u.element == c) {
      has_c = true;
      CHECK(is_positive(u, 3));
    }
  }
  CHECK(has_c);
}

TEST_CASE("noncrossing elements of A_{n} are the noncrossing permutations", "[nc]") {
  // Independent oracle: the Kreweras-type bijection with NC(n+1).
  for (int n = 1; n <= 5; ++n) {
    const auto q = DynkinQuiver::standard(DiagramType::A, n);
    std::set<SetPartition> from_group;
    for (const auto& u : enumerate_nc(q)) from_group.insert(biane_to_partition(u.element));
    const auto all = noncrossing_partitions(n + 1);
    CHECK(from_group == std::set<SetPartition>(all.begin(), all.end()));
  }
}

TEST_CASE("lattice self-check", "[nc]") {
  for (const std::string spec : {"A3", "A4:4>3,2>3,2>1", "D4", "D5"})
    CHECK(verify_nc_lattice(parse_quiver(spec)).ok());
}

TEST_CASE("psi examples", "[nc]") {
  for (const std::string spec : {"A1", "A3", "A4:4>3,2>3,2>1", "D4:1>2,3>2,4>2", "E6"}) {
    const auto& cat = category(spec);
    std::vector<Root> simples;
    for (int v = 1; v <= cat.rank(); ++v) simples.push_back(simple_root(cat.rank(), v));
    CHECK(psi(cat, simples).element == coxeter_element(cat.quiver()));
  }

  const auto& a4 = category("A4");
  const auto& q4 = a4.quiver();
  const std::vector<Root> t{parse_object_label(q4, "12").root, parse_object_label(q4, "34").root};
  CHECK(permutation_of(psi(a4, t).element) == std::vector<int>{3, 2, 5, 4, 1});

  const auto& a3 = category("A3");
  const auto u = psi(a3, {Root{{1, 1, 1}}});
  CHECK(u.length() == 1);
  CHECK(is_positive(u, 3));
  CHECK(u.element == reflection_of_root(DiagramType::A, Root{{1, 1, 1}}));
}

TEST_CASE("phi and rho invert psi", "[nc]") {
  const auto& cat = category("A3");
  const auto& q = cat.quiver();
  const PsiTable table(cat);
  const auto nc = enumerate_nc(q);
  const auto c = coxeter_element(q);
  for (const auto& u : nc) {
    if (u.element == c) {
      auto s = table.phi(u);
      std::sort(s.begin(), s.end());
      CHECK(s == std::vector<Root>{simple_root(3, 3), simple_root(3, 2), simple_root(3, 1)});
      CHECK(table.rho(u) == parse_configuration(q, {"1", "2", "3"}));
    }
    if (u.element == reflection_of_root(q.type(), Root{{1, 1, 1}})) {
      CHECK(table.phi(u) == std::vector<Root>{Root{{1, 1, 1}}});
      CHECK(table.rho(u) == parse_configuration(q, {"123", "1[1]", "2[1]"}));
    }
    if (u.element.is_identity()) CHECK_THROWS_AS(table.phi(u), InputError);
  }
  std::set<Configuration> images;
  for (const auto& u : nc)
    if (is_positive(u, 3)) images.insert(table.rho(u));
  CHECK(images.size() == 5);
}

TEST_CASE("psi is a bijection onto the positive elements", "[nc]") {
  for (const std::string spec : {"A2", "A3", "A4:4>3,2>3,2>1", "A5", "D4", "D5"}) {
    const auto r = verify_psi_bijection(category(spec));
    INFO(spec << (r.ok() ? "" : r.violations.front()));
    CHECK(r.ok());
  }
}

TEST_CASE("psi does not depend on the exceptional order", "[nc]") {
  for (const std::string spec : {"A3", "A4:4>3,2>3,2>1", "D4"})
    CHECK(verify_psi_order_independence(category(spec)).ok());
}

TEST_CASE("reflection products equal to c are exactly exceptional sequences", "[nc]") {
  const auto a2 = check_reflection_product(category("A2"));
  CHECK(a2.ok());
  CHECK(a2.checked == 6);
  const auto a3 = check_reflection_product(category("A3"));
  CHECK(a3.ok());
  CHECK(a3.checked == 120);
  CHECK(check_reflection_product(category("A1")).ok());

  // independent count: products of 3 distinct reflections equal to c
  const auto& cat = category("A3");
  const auto c = coxeter_element(cat.quiver());
  const auto& roots = cat.roots();
  std::size_t hits = 0;
  for (const auto& a : roots)
    for (const auto& b : roots)
      for (const auto& d : roots)
        hits += reflection_product(DiagramType::A, 3, {a, b, d}) == c;
  CHECK(hits == 16);
}
