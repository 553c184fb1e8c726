#include "catch2/catch_amalgamated.hpp"

#include <set>

#include "homconf/cartan.hpp"
#include "homconf/errors.hpp"
#include "support.hpp"

using namespace homconf;

namespace {

const std::vector<std::pair<DiagramType, int>> kSupported = {
    {DiagramType::A, 1}, {DiagramType::A, 2}, {DiagramType::A, 3}, {DiagramType::A, 4},
    {DiagramType::A, 5}, {DiagramType::A, 6}, {DiagramType::D, 4}, {DiagramType::D, 5},
    {DiagramType::D, 6}, {DiagramType::E, 6}, {DiagramType::E, 7}, {DiagramType::E, 8}};

}  // namespace

TEST_CASE("quiver specs parse and print canonically", "[cartan]") {
  const auto q = parse_quiver("A3");
  CHECK(q.spec() == "A3:2>1,3>2");
  CHECK(q == DynkinQuiver::standard(DiagramType::A, 3));

  const auto p = parse_quiver("A4:4>3,2>3,2>1");
  CHECK(p.spec() == "A4:2>1,2>3,4>3");
  CHECK(sinks(p) == std::vector<int>{1, 3});
  CHECK(sources(p) == std::vector<int>{2, 4});
  CHECK(parse_quiver(p.spec()) == p);

  CHECK(parse_quiver("D4:1>2,3>2,4>2").is_sink(2));
}

TEST_CASE("bad quiver specs are rejected", "[cartan]") {
  for (const char* bad : {"", "X3", "A0", "D3", "E5", "E9", "A3:1>3,3>2", "A3:1>2",
                          "A3:1>2,2>1,3>2", "A3:1>1,3>2", "A3:2>1,", "A3:2-1,3>2", "A2:2>9"})
    CHECK_THROWS_AS(parse_quiver(bad), InputError);
}

TEST_CASE("positive roots", "[cartan]") {
  for (auto [type, n] : kSupported) {
    const auto roots = positive_roots(type, n);
    const auto ex = testing::exponents_oracle(to_char(type), n);
    INFO(to_char(type) << n);
    CHECK(roots.size() == static_cast<std::size_t>(n * ex.h / 2));
    CHECK(std::is_sorted(roots.begin(), roots.end()));
    const auto edges = diagram_edges(type, n);
    for (const auto& r : roots) {
      int q = 0;
      for (int x : r.coords) q += x * x;
      for (auto [a, b] : edges) q -= r[a] * r[b];
      CHECK(q == 1);
    }
  }
}

TEST_CASE("type A roots are the intervals", "[cartan]") {
  for (int n = 1; n <= 6; ++n) {
    std::set<Root> oracle;
    for (int i = 1; i <= n; ++i)
      for (int j = i; j <= n; ++j) {
        Root r{std::vector<int>(n, 0)};
        for (int k = i; k <= j; ++k) r.coords[k - 1] = 1;
        oracle.insert(r);
      }
    const auto roots = positive_roots(DiagramType::A, n);
    CHECK(std::set<Root>(roots.begin(), roots.end()) == oracle);
  }
}

TEST_CASE("D4 highest root", "[cartan]") {
  const auto roots = positive_roots(DiagramType::D, 4);
  CHECK(std::find(roots.begin(), roots.end(), Root{{1, 2, 1, 1}}) != roots.end());
}

TEST_CASE("Euler form of the linear A3 quiver", "[cartan]") {
  const auto q = parse_quiver("A3");
  CHECK(euler_form(q, simple_root(3, 1), simple_root(3, 1)) == 1);
  // arrow 2>1 gives <e2, e1> = -1
  CHECK(euler_form(q, simple_root(3, 2), simple_root(3, 1)) == -1);
  CHECK(euler_form(q, simple_root(3, 1), simple_root(3, 2)) == 0);
  const Root r{{1, 1, 1}};
  CHECK(euler_form(q, r, r) == 1);
  CHECK(symmetric_form(DiagramType::A, r, r) == 2);
}

TEST_CASE("Coxeter element has order h", "[cartan]") {
  for (auto [type, n] : kSupported) {
    const auto q = DynkinQuiver::standard(type, n);
    const auto c = coxeter_element(q);
    const int h = testing::exponents_oracle(to_char(type), n).h;
    INFO(q.spec());
    CHECK(coxeter_data(type, n).h == h);
    WElement w(n);
    for (int k = 1; k <= h; ++k) {
      w = w * c;
      CHECK(w.is_identity() == (k == h));
    }
    CHECK(c.inverse(type) * c == WElement(n));
  }
}

TEST_CASE("reflections", "[cartan]") {
  const auto type = DiagramType::D;
  for (const auto& r : positive_roots(type, 5)) {
    const auto t = reflection_of_root(type, r);
    CHECK((t * t).is_identity());
    std::vector<std::int64_t> v(r.coords.begin(), r.coords.end());
    auto img = t.apply(v);
    for (auto& x : img) x = -x;
    CHECK(img == v);
  }
  CHECK(reflection_of_root(type, simple_root(5, 3)) == simple_reflection(type, 5, 3));
  CHECK_THROWS_AS(reflection_of_root(type, Root{{1, 1, 0, 1, 0}}), InputError);
}

TEST_CASE("Coxeter element is the sink-order product", "[cartan]") {
  const auto q = parse_quiver("A4:4>3,2>3,2>1");
  const auto order = sink_order(q);
  REQUIRE(order.size() == 4);
  CHECK(order.front() == 1);
  std::vector<Root> simples;
  for (int v : order) simples.push_back(simple_root(4, v));
  CHECK(reflection_product(q.type(), 4, simples) == coxeter_element(q));
}

TEST_CASE("reflecting a quiver at a sink or source", "[cartan]") {
  const auto q = parse_quiver("A3");
  const auto r = reflect_quiver(q, 1);
  CHECK(r.spec() == "A3:1>2,3>2");
  CHECK(reflect_quiver(r, 1) == q);
  CHECK_THROWS_AS(reflect_quiver(q, 2), InputError);
}
