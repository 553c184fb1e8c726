#include "catch2/catch_amalgamated.hpp"

#include <array>
#include <set>

#include "homconf/configs.hpp"
#include "homconf/errors.hpp"
#include "homconf/noncrossing.hpp"
#include "support.hpp"

using namespace homconf;
using testing::binomial;
using testing::category;

namespace {

std::vector<std::string> labels(const DynkinQuiver& q, const std::vector<OrbitObject>& xs) {
  std::vector<std::string> out;
  for (const auto& x : xs) out.push_back(object_label(q, x));
  return out;
}

std::vector<Root> roots_of(const DynkinQuiver& q, const std::vector<std::string>& ls) {
  std::vector<Root> out;
  for (const auto& l : ls) out.push_back(parse_object_label(q, l).root);
  return out;
}

// Complete exceptional sequences straight from the module category.
std::set<std::vector<Root>> brute_force_sequences(const DynkinQuiver& q) {
  const ModuleCategory mods(q);
  const int n = q.rank();
  std::set<std::vector<Root>> out;
  std::vector<std::size_t> idx(n, 0);
  const std::size_t m = mods.size();
  std::size_t total = 1;
  for (int i = 0; i < n; ++i) total *= m;
  for (std::size_t code = 0; code < total; ++code) {
    std::size_t c = code;
    for (int i = 0; i < n; ++i, c /= m) idx[i] = c % m;
    bool ok = true;
    for (int i = 0; i < n && ok; ++i)
      for (int j = i + 1; j < n && ok; ++j)
        ok = mods.hom(idx[i], idx[j]) == 0 && mods.ext(idx[i], idx[j]) == 0 &&
             idx[i] != idx[j];
    if (!ok) continue;
    std::vector<Root> s;
    for (auto i : idx) s.push_back(mods.root(i));
    out.insert(s);
  }
  return out;
}

}  // namespace

TEST_CASE("configuration counts, type A", "[configs]") {
  for (int n = 1; n <= 6; ++n) {
    const auto& cat = category("A" + std::to_string(n));
    CHECK(enumerate_hom_configurations(cat).size() == binomial(2 * n, n) / (n + 1));
  }
  CHECK(enumerate_hom_configurations(category("A4:4>3,2>3,2>1")).size() == 14);
}

TEST_CASE("configuration counts, type D", "[configs]") {
  for (int n = 4; n <= 6; ++n) {
    const auto& cat = category("D" + std::to_string(n));
    CHECK(enumerate_hom_configurations(cat).size() ==
          (3 * n - 4) * binomial(2 * n - 3, n - 1) / n);
  }
}

TEST_CASE("configuration count, E6", "[configs][slow]") {
  CHECK(enumerate_hom_configurations(category("E6")).size() == 418);
}

TEST_CASE("A3 configurations are the five of the figure", "[configs]") {
  const auto& cat = category("A3");
  std::set<std::string> got;
  for (const auto& c : enumerate_hom_configurations(cat))
    got.insert(configuration_label(cat.quiver(), c));
  CHECK(got == std::set<std::string>{"{3,2,1}", "{3,12,1[1]}", "{2,123,12[1]}",
                                     "{23,1,2[1]}", "{123,2[1],1[1]}"});
}

TEST_CASE("labels round trip", "[configs]") {
  for (const std::string spec : {"A3", "D4", "E6"}) {
    const auto& cat = category(spec);
    for (const auto& x : cat.objects())
      CHECK(parse_object_label(cat.quiver(), object_label(cat.quiver(), x)) == x);
  }
  const auto& d4 = category("D4");
  CHECK(object_label(d4.quiver(), {Root{{1, 2, 1, 1}}, 0}) == "root=(1,2,1,1)[0]");
  CHECK_THROWS_AS(parse_object_label(category("A3").quiver(), "13"), InputError);
  CHECK_THROWS_AS(parse_object_label(d4.quiver(), "root=(1,2,1,2)[0]"), InputError);
  CHECK_THROWS_AS(parse_object_label(category("A3").quiver(), "12[2]"), InputError);
}

TEST_CASE("Hom-free", "[configs]") {
  const auto& cat = category("A2");
  const auto& q = cat.quiver();
  CHECK(is_hom_free(cat, parse_configuration(q, {"1", "2"}).members));
  CHECK_FALSE(is_hom_free(cat, parse_configuration(q, {"1", "12"}).members));
  CHECK_FALSE(is_hom_free(cat, parse_configuration(q, {"2", "1[1]"}).members));
  CHECK(is_hom_free(cat, {}));
}

TEST_CASE("configurations are maximal Hom-free sets of size n", "[configs]") {
  for (const std::string spec : {"A3", "A4:4>3,2>3,2>1", "D4"}) {
    const auto& cat = category(spec);
    std::set<Configuration> configs;
    for (const auto& c : enumerate_hom_configurations(cat)) {
      CHECK(is_hom_free(cat, c.members));
      CHECK(c.size() == static_cast<std::size_t>(cat.rank()));
      configs.insert(c);
    }
    std::size_t full = 0;
    for (const auto& set : enumerate_hom_free_sets(cat)) {
      CHECK(set.size() <= static_cast<std::size_t>(cat.rank()));
      if (set.size() == static_cast<std::size_t>(cat.rank())) ++full;
    }
    CHECK(full == configs.size());
  }
}

TEST_CASE("completing a partial configuration", "[configs]") {
  const auto& cat = category("A3");
  const auto partial = parse_configuration(cat.quiver(), {"123"}).members;
  const auto done = complete_to_configurations(cat, partial);
  CHECK(done.size() == 2);
  for (const auto& c : done) CHECK(c.contains(partial[0]));
}

TEST_CASE("D4 configurations are symmetric under the leg permutations", "[configs]") {
  const auto& cat = category("D4:1>2,3>2,4>2");
  const auto configs = enumerate_hom_configurations(cat);
  const std::set<Configuration> all(configs.begin(), configs.end());
  const std::vector<std::array<int, 4>> perms = {{0, 1, 3, 2}, {2, 1, 0, 3}, {3, 1, 2, 0}};
  for (const auto& p : perms)
    for (const auto& c : configs) {
      std::vector<OrbitObject> image;
      for (const auto& x : c.members) {
        Root r{std::vector<int>(4)};
        for (int i = 0; i < 4; ++i) r.coords[p[i]] = x.root.coords[i];
        image.push_back({r, x.shift});
      }
      CHECK(all.count(Configuration(image)) == 1);
    }
}

TEST_CASE("Ringel uniqueness: the simples are the only all-module configuration", "[configs]") {
  for (const std::string spec : {"A1", "A3", "A4:4>3,2>3,2>1", "D4", "D5"}) {
    const auto& cat = category(spec);
    std::size_t found = 0;
    for (const auto& c : enumerate_hom_configurations(cat))
      if (module_part(c).size() == c.size()) {
        ++found;
        for (const auto& x : c.members) CHECK(x.root.is_simple());
      }
    CHECK(found == 1);
  }
}

TEST_CASE("perpendicular category and beta", "[configs]") {
  const auto& cat = category("A4:4>3,2>3,2>1");
  const auto& q = cat.quiver();
  const auto t = roots_of(q, {"34", "12"});
  auto p = perp(cat, t);
  std::sort(p.begin(), p.end());
  CHECK(p == [&] {
    auto r = roots_of(q, {"1", "23", "123"});
    std::sort(r.begin(), r.end());
    return r;
  }());
  CHECK(configuration_label(q, beta(cat, t)) == "{34,12,23[1],1[1]}");
  CHECK(beta(cat, t) == parse_configuration(q, {"12", "34", "1[1]", "23[1]"}));

  const auto& a3 = category("A3");
  CHECK(beta(a3, roots_of(a3.quiver(), {"123"})) ==
        parse_configuration(a3.quiver(), {"123", "1[1]", "2[1]"}));
  CHECK(beta(a3, roots_of(a3.quiver(), {"1", "2", "3"})) ==
        parse_configuration(a3.quiver(), {"1", "2", "3"}));
}

TEST_CASE("beta is a bijection", "[configs]") {
  for (const std::string spec : {"A1", "A2", "A3", "A4:4>3,2>3,2>1", "D4", "D5"}) {
    const auto r = verify_beta_bijection(category(spec));
    INFO(spec << ": " << (r.ok() ? "" : r.violations.front()));
    CHECK(r.ok());
    CHECK(r.checked > 0);
  }
}

TEST_CASE("simples of a wide subcategory", "[configs]") {
  const auto& cat = category("A3");
  const auto& q = cat.quiver();
  auto s = simples_of_wide(cat, roots_of(q, {"1", "2", "12"}), 2);
  std::sort(s.begin(), s.end());
  CHECK(s == std::vector<Root>{Root{{0, 1, 0}}, Root{{1, 0, 0}}});
  CHECK_THROWS_AS(simples_of_wide(cat, roots_of(q, {"1", "2", "12"}), 3), InvariantViolation);
}

TEST_CASE("exceptional orders", "[configs]") {
  const auto& cat = category("A3");
  const auto& q = cat.quiver();
  const auto order =
      exceptional_order(cat, parse_configuration(q, {"123", "1[1]", "2[1]"}).members);
  CHECK(labels(q, order) == std::vector<std::string>{"123", "1[1]", "2[1]"});
  CHECK(reflection_product(q.type(), 3, roots_of(q, {"123", "1", "2"})) == coxeter_element(q));

  const auto simples = exceptional_order(cat, parse_configuration(q, {"1", "2", "3"}).members);
  CHECK(labels(q, simples) == std::vector<std::string>{"1", "2", "3"});

  const auto& ex = category("A4:4>3,2>3,2>1");
  const auto members = parse_configuration(ex.quiver(), {"12", "34", "1[1]", "23[1]"}).members;
  const auto ord = exceptional_order(ex, members);
  CHECK(ord[0].shift == 0);
  CHECK(ord[1].shift == 0);
  std::vector<Root> shadows;
  for (const auto& x : ord) shadows.push_back(x.root);
  CHECK(is_exceptional_sequence(ex, shadows));
  for (const auto& o : all_exceptional_orders(ex, members)) {
    std::vector<Root> s;
    for (const auto& x : o) s.push_back(x.root);
    CHECK(is_exceptional_sequence(ex, s));
  }
}

TEST_CASE("covering", "[configs]") {
  const auto& a2 = category("A2");
  const auto& q = a2.quiver();
  CHECK(covering_check(a2, parse_configuration(q, {"1", "2"}).members));
  CHECK_FALSE(covering_check(a2, parse_configuration(q, {"1"}).members));
  CHECK(covering_check(category("A1"), parse_configuration(category("A1").quiver(), {"1"}).members));
  CHECK_THROWS_AS(covering_check(a2, parse_configuration(q, {"1", "12"}).members), InputError);

  for (const std::string spec : {"A3", "A4", "A4:4>3,2>3,2>1", "D4"}) {
    const auto& cat = category(spec);
    for (const auto& set : enumerate_hom_free_sets(cat)) {
      std::vector<OrbitObject> xs;
      for (auto i : set) xs.push_back(cat.object(i));
      CHECK(covering_check(cat, xs) == (xs.size() == static_cast<std::size_t>(cat.rank())));
    }
  }
}

TEST_CASE("exceptional sequence predicate", "[configs]") {
  const auto& cat = category("A2");
  CHECK(is_exceptional_sequence(cat, {simple_root(2, 1), simple_root(2, 2)}));
  CHECK_FALSE(is_exceptional_sequence(cat, {simple_root(2, 2), simple_root(2, 1)}));
  CHECK(is_exceptional_sequence(cat, {simple_root(2, 2)}));
}

TEST_CASE("complete exceptional sequences match brute force", "[configs]") {
  for (const std::string spec : {"A2", "A3", "A3:1>2,3>2", "D4"}) {
    const auto& cat = category(spec);
    const auto got = complete_exceptional_sequences(cat);
    const auto oracle = brute_force_sequences(cat.quiver());
    CHECK(std::set<std::vector<Root>>(got.begin(), got.end()) == oracle);
  }
  CHECK(complete_exceptional_sequences(category("A3")).size() == 16);
  // n! h^n / |W| for D4
  CHECK(complete_exceptional_sequences(category("D4")).size() == 162);
}

TEST_CASE("braid group action", "[configs]") {
  const auto& a2 = category("A2");
  const auto moved =
      braid_mutate(a2, {simple_root(2, 1), simple_root(2, 2)}, 1, BraidDirection::Forward);
  CHECK(moved == std::vector<Root>{simple_root(2, 2), Root{{1, 1}}});
  CHECK_THROWS_AS(braid_mutate(a2, moved, 2, BraidDirection::Forward), InputError);
  CHECK_THROWS_AS(braid_mutate(a2, {simple_root(2, 2), simple_root(2, 1)}, 1,
                               BraidDirection::Forward),
                  InputError);

  const auto& a3 = category("A3");
  const auto all = complete_exceptional_sequences(a3);
  auto s = [&](const std::vector<Root>& x, int i) {
    return braid_mutate(a3, x, i, BraidDirection::Forward);
  };
  for (const auto& x : all) {
    for (int i = 1; i <= 2; ++i) {
      CHECK(braid_mutate(a3, s(x, i), i, BraidDirection::Inverse) == x);
      CHECK(s(braid_mutate(a3, x, i, BraidDirection::Inverse), i) == x);
    }
    CHECK(s(s(s(x, 1), 2), 1) == s(s(s(x, 2), 1), 2));
  }
  const std::vector<Root> simples{simple_root(3, 1), simple_root(3, 2), simple_root(3, 3)};
  CHECK(braid_orbit(a3, simples) == all);
}
