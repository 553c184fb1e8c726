#include "homconf/orbit.hpp"

#include <fstream>
#include <iomanip>
#include <sstream>

#include <openssl/evp.h>

#include "json.hpp"

namespace homconf {

std::vector<OrbitObject> fundamental_domain(const ModuleCategory& mods) {
  std::vector<OrbitObject> out;
  for (std::size_t i = 0; i < mods.size(); ++i) out.push_back({mods.root(i), 0});
  for (std::size_t i = 0; i < mods.size(); ++i)
    if (!mods.is_injective(i)) out.push_back({mods.root(i), 1});
  return out;
}

int hom_orbit(const ModuleCategory& mods, const OrbitObject& x, const OrbitObject& y) {
  auto check = [&](const OrbitObject& o) {
    if (o.shift != 0 && o.shift != 1) throw InputError("shift must be 0 or 1");
    const auto i = mods.index_of(o.root);
    if (o.shift == 1 && mods.is_injective(i))
      throw InputError("shifted injective is not in the fundamental domain");
    return i;
  };
  const auto m = check(x);
  const auto n = check(y);
  if (x.shift == 0 && y.shift == 0) return mods.hom(m, n);
  if (x.shift == 0 && y.shift == 1) return mods.ext(m, n);
  if (x.shift == 1 && y.shift == 0) return mods.hom(n, m);
  return mods.hom(m, n);
}

HomTable hom_table(const ModuleCategory& mods) {
  HomTable t;
  t.quiver = mods.quiver().spec();
  t.objects = fundamental_domain(mods);
  const auto n = t.objects.size();
  t.dims.resize(n * n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      t.dims[x * n + y] = hom_orbit(mods, t.objects[x], t.objects[y]);
  return t;
}

std::string canonical_dims(const HomTable& t) {
  std::string s = "[";
  for (std::size_t x = 0; x < t.size(); ++x) {
    if (x) s += ',';
    s += '[';
    for (std::size_t y = 0; y < t.size(); ++y) {
      if (y) s += ',';
      s += std::to_string(t.at(x, y));
    }
    s += ']';
  }
  return s + ']';
}

std::string sha256_hex(const std::string& data) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), digest, &len, EVP_sha256(), nullptr) != 1)
    throw std::runtime_error("SHA-256 failed");
  std::ostringstream hex;
  for (unsigned int i = 0; i < len; ++i)
    hex << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(digest[i]);
  return hex.str();
}

void save_hom_table(const HomTable& t, const std::filesystem::path& path) {
  nlohmann::json j;
  j["quiver"] = t.quiver;
  j["objects"] = nlohmann::json::array();
  for (const auto& o : t.objects) j["objects"].push_back({{"root", o.root.coords}, {"shift", o.shift}});
  auto rows = nlohmann::json::array();
  for (std::size_t x = 0; x < t.size(); ++x)
    rows.push_back(std::vector<int>(t.dims.begin() + x * t.size(),
                                    t.dims.begin() + (x + 1) * t.size()));
  j["dims"] = std::move(rows);
  j["sha256"] = sha256_hex(canonical_dims(t));
  std::ofstream out(path);
  if (!out) throw InputError("cannot write " + path.string());
  out << j.dump() << '\n';
  if (!out) throw InputError("write failed for " + path.string());
}

HomTable load_hom_table(const std::filesystem::path& path, const DynkinQuiver& expected) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read " + path.string());
  HomTable t;
  try {
    const auto j = nlohmann::json::parse(in);
    t.quiver = j.at("quiver").get<std::string>();
    for (const auto& o : j.at("objects"))
      t.objects.push_back({Root{o.at("root").get<std::vector<int>>()}, o.at("shift").get<int>()});
    const auto rows = j.at("dims").get<std::vector<std::vector<int>>>();
    if (rows.size() != t.objects.size()) throw IntegrityError("dims has the wrong row count");
    for (const auto& r : rows) {
      if (r.size() != t.objects.size()) throw IntegrityError("dims has a ragged row");
      t.dims.insert(t.dims.end(), r.begin(), r.end());
    }
    if (sha256_hex(canonical_dims(t)) != j.at("sha256").get<std::string>())
      throw IntegrityError("hom table checksum mismatch in " + path.string());
  } catch (const nlohmann::json::exception& e) {
    throw IntegrityError("malformed hom table " + path.string() + ": " + e.what());
  }
  if (t.quiver != expected.spec())
    throw IntegrityError("hom table " + path.string() + " is for " + t.quiver + ", not " +
                         expected.spec());
  return t;
}

OrbitCategory::OrbitCategory(DynkinQuiver q, HomTable table)
    : quiver_(std::move(q)), table_(std::move(table)), roots_(positive_roots(quiver_)) {
  if (table_.quiver != quiver_.spec())
    throw IntegrityError("hom table is for " + table_.quiver + ", not " + quiver_.spec());
  unshifted_.assign(roots_.size(), npos);
  shifted_.assign(roots_.size(), npos);
  for (std::size_t r = 0; r < roots_.size(); ++r) root_index_.emplace(roots_[r], r);
  for (std::size_t i = 0; i < table_.size(); ++i) {
    const auto& o = table_.objects[i];
    if (i > 0 && !(table_.objects[i - 1] < o))
      throw IntegrityError("hom table objects are not in canonical order");
    const auto it = root_index_.find(o.root);
    if (it == root_index_.end() || (o.shift != 0 && o.shift != 1) ||
        !index_.emplace(o, i).second)
      throw IntegrityError("hom table lists an object outside the fundamental domain");
    (o.shift == 0 ? unshifted_ : shifted_)[it->second] = i;
  }
  for (auto u : unshifted_)
    if (u == npos) throw IntegrityError("hom table is missing a module");
  if (table_.dims.size() != table_.size() * table_.size())
    throw IntegrityError("hom table has the wrong shape");
  for (std::size_t i = 0; i < table_.size(); ++i)
    if (table_.at(i, i) != 1) throw IntegrityError("hom table diagonal is not 1");
}

OrbitCategory OrbitCategory::build(const DynkinQuiver& q, unsigned threads) {
  return OrbitCategory(q, hom_table(ModuleCategory(q, threads)));
}

std::size_t OrbitCategory::index_of(const OrbitObject& x) const {
  const auto it = index_.find(x);
  if (it == index_.end()) throw InputError("object is not in the fundamental domain");
  return it->second;
}

std::size_t OrbitCategory::root_index(const Root& r) const {
  const auto it = root_index_.find(r);
  if (it == root_index_.end()) throw InputError("not a positive root of " + quiver_.name());
  return it->second;
}

std::size_t OrbitCategory::object_of_root(std::size_t root, int shift) const {
  return shift == 0 ? unshifted_[root] : shifted_[root];
}

int OrbitCategory::module_hom(std::size_t a, std::size_t b) const {
  return hom(unshifted_[a], unshifted_[b]);
}

int OrbitCategory::module_ext(std::size_t a, std::size_t b) const {
  return shifted_[b] == npos ? 0 : hom(unshifted_[a], shifted_[b]);
}

}  // namespace homconf
