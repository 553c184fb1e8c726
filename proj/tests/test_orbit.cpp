#include "catch2/catch_amalgamated.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "homconf/configs.hpp"
#include "homconf/errors.hpp"
#include "homconf/orbit.hpp"
#include "support.hpp"

using namespace homconf;
namespace fs = std::filesystem;

namespace {

fs::path scratch(const std::string& name) {
  const auto dir = fs::temp_directory_path() / "homconf_tests";
  fs::create_directories(dir);
  return dir / name;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("fundamental domain has 2|roots| - n objects", "[orbit]") {
  for (const std::string spec : {"A1", "A2", "A3", "A5", "D4", "D5", "E6"}) {
    const auto& cat = testing::category(spec);
    CHECK(cat.size() == 2 * cat.roots().size() - cat.rank());
    for (std::size_t x = 0; x < cat.size(); ++x) CHECK(cat.hom(x, x) == 1);
    CHECK(std::is_sorted(cat.objects().begin(), cat.objects().end()));
  }
}

TEST_CASE("orbit Hom cases", "[orbit]") {
  const auto& cat = testing::category("A2");
  const auto& q = cat.quiver();
  auto idx = [&](const char* label) { return cat.index_of(parse_object_label(q, label)); };
  // Arrow 2>1: S1 projective, S2 injective, P2 = I1 = 12; S1 is the only shiftable module.
  REQUIRE(cat.size() == 4);
  CHECK(cat.hom(idx("2"), idx("1[1]")) == 1);
  CHECK(cat.hom(idx("1[1]"), idx("12")) == 0);
  CHECK(cat.hom(idx("1"), idx("12")) == 1);
  CHECK(cat.hom(idx("12"), idx("1")) == 0);
  CHECK(cat.hom(idx("12"), idx("2")) == 1);
  CHECK(cat.hom(idx("1[1]"), idx("1")) == 1);
  CHECK(cat.hom(idx("1[1]"), idx("1[1]")) == 1);
  CHECK(cat.hom(idx("1"), idx("1[1]")) == 0);
}

TEST_CASE("hom table agrees with the case formula", "[orbit]") {
  for (const std::string spec : {"A4:4>3,2>3,2>1", "D4"}) {
    const auto& cat = testing::category(spec);
    const ModuleCategory mods(cat.quiver());
    for (std::size_t x = 0; x < cat.size(); ++x)
      for (std::size_t y = 0; y < cat.size(); ++y) {
        const auto& X = cat.object(x);
        const auto& Y = cat.object(y);
        const auto m = mods.index_of(X.root), n = mods.index_of(Y.root);
        int expected = 0;
        if (X.shift == Y.shift) expected = mods.hom(m, n);
        else if (X.shift == 0) expected = mods.ext(m, n);
        else expected = mods.hom(n, m);
        CHECK(cat.hom(x, y) == expected);
      }
  }
}

TEST_CASE("hom table round trip and tamper detection", "[orbit]") {
  const auto& cat = testing::category("A3");
  const auto path = scratch("a3.json");
  save_hom_table(cat.table(), path);
  CHECK(load_hom_table(path, cat.quiver()) == cat.table());
  CHECK(slurp(path) == slurp(path));

  const auto first = slurp(path);
  save_hom_table(cat.table(), path);
  CHECK(slurp(path) == first);

  SECTION("spec mismatch") {
    CHECK_THROWS_AS(load_hom_table(path, parse_quiver("A3:1>2,3>2")), IntegrityError);
  }
  SECTION("edited entry") {
    auto text = first;
    const auto pos = text.find("[[1,");
    REQUIRE(pos != std::string::npos);
    text[pos + 2] = '2';
    std::ofstream(path) << text;
    CHECK_THROWS_AS(load_hom_table(path, cat.quiver()), IntegrityError);
  }
  SECTION("truncated file") {
    std::ofstream(path) << first.substr(0, first.size() / 2);
    CHECK_THROWS_AS(load_hom_table(path, cat.quiver()), IntegrityError);
  }
  SECTION("missing file") {
    CHECK_THROWS_AS(load_hom_table(scratch("absent.json"), cat.quiver()), InputError);
  }
}

TEST_CASE("sha256 known answer", "[orbit]") {
  CHECK(sha256_hex("abc") == "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}

TEST_CASE("objects outside the domain are rejected", "[orbit]") {
  const auto& cat = testing::category("A3");
  // injective modules have no shifted copy
  CHECK_THROWS_AS(cat.index_of({Root{{1, 1, 1}}, 1}), InputError);
  CHECK_THROWS_AS(cat.index_of({Root{{1, 0, 1}}, 0}), InputError);
}
