#include "homconf/configs.hpp"

#include <algorithm>
#include <bitset>
#include <charconv>
#include <functional>
#include <set>

namespace homconf {

namespace {

// Large enough for the fundamental domain of E8 (232 objects).
using Mask = std::bitset<256>;

std::vector<Mask> orthogonality_masks(const OrbitCategory& cat) {
  if (cat.size() > Mask().size()) throw InvariantViolation("fundamental domain too large");
  std::vector<Mask> masks(cat.size());
  for (std::size_t x = 0; x < cat.size(); ++x)
    for (std::size_t y = 0; y < cat.size(); ++y)
      if (x != y && cat.orthogonal(x, y)) masks[x].set(y);
  return masks;
}

Mask above(std::size_t i, std::size_t size) {
  Mask m;
  for (std::size_t j = i + 1; j < size; ++j) m.set(j);
  return m;
}

std::vector<std::size_t> indices_of(const OrbitCategory& cat,
                                    const std::vector<OrbitObject>& objects) {
  std::vector<std::size_t> idx;
  for (const auto& o : objects) idx.push_back(cat.index_of(o));
  return idx;
}

std::vector<std::size_t> root_indices(const OrbitCategory& cat, const std::vector<Root>& roots) {
  std::vector<std::size_t> idx;
  for (const auto& r : roots) idx.push_back(cat.root_index(r));
  return idx;
}

bool is_hom_free_indices(const OrbitCategory& cat, const std::vector<std::size_t>& idx) {
  for (std::size_t a = 0; a < idx.size(); ++a)
    for (std::size_t b = a + 1; b < idx.size(); ++b)
      if (idx[a] == idx[b] || !cat.orthogonal(idx[a], idx[b])) return false;
  return true;
}

}  // namespace

Configuration::Configuration(std::vector<OrbitObject> objects) : members(std::move(objects)) {
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
}

bool Configuration::contains(const OrbitObject& x) const {
  return std::binary_search(members.begin(), members.end(), x);
}

std::string object_label(const DynkinQuiver& q, const OrbitObject& x) {
  const auto& c = x.root.coords;
  const bool interval_style =
      q.type() == DiagramType::A && q.rank() <= 9 &&
      std::all_of(c.begin(), c.end(), [](int v) { return v == 0 || v == 1; });
  std::string s;
  if (interval_style) {
    for (int v : support(x.root)) s += std::to_string(v);
    if (x.shift == 1) s += "[1]";
    return s;
  }
  s = "root=(";
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(c[i]);
  }
  return s + ")[" + std::to_string(x.shift) + "]";
}

std::string configuration_label(const DynkinQuiver& q, const Configuration& c) {
  std::string s = "{";
  for (std::size_t i = 0; i < c.members.size(); ++i) {
    if (i) s += ',';
    s += object_label(q, c.members[i]);
  }
  return s + "}";
}

OrbitObject parse_object_label(const DynkinQuiver& q, std::string_view label) {
  OrbitObject o;
  o.root.coords.assign(q.rank(), 0);
  std::string_view body = label;
  if (body.ends_with("]")) {
    const auto open = body.rfind('[');
    if (open == std::string_view::npos) throw InputError("bad object label");
    const auto shift = body.substr(open + 1, body.size() - open - 2);
    if (shift == "1") o.shift = 1;
    else if (shift != "0") throw InputError("bad shift in object label");
    body = body.substr(0, open);
  }
  if (body.starts_with("root=(") && body.ends_with(")")) {
    body = body.substr(6, body.size() - 7);
    std::size_t i = 0;
    while (!body.empty()) {
      const auto comma = body.find(',');
      const auto item = body.substr(0, comma);
      int v = 0;
      auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
      if (ec != std::errc() || ptr != item.data() + item.size() || i >= o.root.coords.size())
        throw InputError("bad root in object label");
      o.root.coords[i++] = v;
      if (comma == std::string_view::npos) break;
      body = body.substr(comma + 1);
    }
    if (i != o.root.coords.size()) throw InputError("root has the wrong length");
  } else {
    if (body.empty()) throw InputError("empty object label");
    for (char ch : body) {
      const int v = ch - '0';
      if (v < 1 || v > q.rank() || o.root.coords[v - 1]) throw InputError("bad object label");
      o.root.coords[v - 1] = 1;
    }
  }
  if (std::any_of(o.root.coords.begin(), o.root.coords.end(), [](int v) { return v < 0; }) ||
      tits_form(q.type(), o.root) != 1)
    throw InputError("object label " + std::string(label) + " is not a positive root");
  return o;
}

Configuration parse_configuration(const DynkinQuiver& q, const std::vector<std::string>& labels) {
  std::vector<OrbitObject> objects;
  for (const auto& l : labels) objects.push_back(parse_object_label(q, l));
  return Configuration(std::move(objects));
}

bool is_hom_free(const OrbitCategory& cat, const std::vector<OrbitObject>& objects) {
  return is_hom_free_indices(cat, indices_of(cat, objects));
}

namespace {

// Extends `chosen` by objects from `candidates` (all orthogonal to chosen) up
// to `target` elements, reporting each completed set.
void extend(const std::vector<Mask>& masks, std::size_t target, std::vector<std::size_t>& chosen,
            const Mask& candidates, const std::function<void(const std::vector<std::size_t>&)>& emit) {
  if (chosen.size() == target) {
    emit(chosen);
    return;
  }
  if (chosen.size() + candidates.count() < target) return;
  for (std::size_t x = candidates._Find_first(); x < candidates.size();
       x = candidates._Find_next(x)) {
    chosen.push_back(x);
    extend(masks, target, chosen, candidates & masks[x] & above(x, masks.size()), emit);
    chosen.pop_back();
  }
}

Configuration to_configuration(const OrbitCategory& cat, const std::vector<std::size_t>& idx) {
  std::vector<OrbitObject> objects;
  for (auto i : idx) objects.push_back(cat.object(i));
  return Configuration(std::move(objects));
}

}  // namespace

std::vector<Configuration> enumerate_hom_configurations(const OrbitCategory& cat) {
  return complete_to_configurations(cat, {});
}

std::vector<std::vector<std::size_t>> enumerate_hom_free_sets(const OrbitCategory& cat) {
  const auto masks = orthogonality_masks(cat);
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> chosen;
  std::function<void(const Mask&)> walk = [&](const Mask& candidates) {
    for (std::size_t x = candidates._Find_first(); x < candidates.size();
         x = candidates._Find_next(x)) {
      chosen.push_back(x);
      out.push_back(chosen);
      walk(candidates & masks[x] & above(x, masks.size()));
      chosen.pop_back();
    }
  };
  Mask all;
  for (std::size_t x = 0; x < cat.size(); ++x) all.set(x);
  walk(all);
  return out;
}

std::vector<Configuration> complete_to_configurations(const OrbitCategory& cat,
                                                      const std::vector<OrbitObject>& partial) {
  const auto fixed = indices_of(cat, partial);
  if (!is_hom_free_indices(cat, fixed)) throw InputError("partial set is not Hom-free");
  if (fixed.size() > static_cast<std::size_t>(cat.rank())) return {};
  const auto masks = orthogonality_masks(cat);
  Mask candidates;
  for (std::size_t x = 0; x < cat.size(); ++x) candidates.set(x);
  for (auto f : fixed) candidates &= masks[f];

  std::vector<Configuration> out;
  std::vector<std::size_t> chosen;
  const std::size_t target = cat.rank() - fixed.size();
  extend(masks, target, chosen, candidates, [&](const std::vector<std::size_t>& extra) {
    auto all = fixed;
    all.insert(all.end(), extra.begin(), extra.end());
    out.push_back(to_configuration(cat, all));
  });
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Root> module_part(const Configuration& c) {
  std::vector<Root> out;
  for (const auto& o : c.members)
    if (o.shift == 0) out.push_back(o.root);
  return out;
}

bool is_sincere(int rank, const std::vector<Root>& roots) {
  std::vector<bool> covered(rank, false);
  for (const auto& r : roots)
    for (int v : support(r)) covered[v - 1] = true;
  return std::all_of(covered.begin(), covered.end(), [](bool b) { return b; });
}

bool is_module_hom_free(const OrbitCategory& cat, const std::vector<Root>& roots) {
  const auto idx = root_indices(cat, roots);
  for (std::size_t a = 0; a < idx.size(); ++a)
    for (std::size_t b = a + 1; b < idx.size(); ++b)
      if (idx[a] == idx[b] || cat.module_hom(idx[a], idx[b]) != 0 ||
          cat.module_hom(idx[b], idx[a]) != 0)
        return false;
  return true;
}

std::vector<std::vector<Root>> sincere_hom_free_sets(const OrbitCategory& cat) {
  const auto& roots = cat.roots();
  std::vector<std::vector<Root>> out;
  std::vector<std::size_t> chosen;
  std::function<void(std::size_t)> walk = [&](std::size_t start) {
    for (std::size_t r = start; r < roots.size(); ++r) {
      bool ok = true;
      for (auto c : chosen)
        if (cat.module_hom(c, r) != 0 || cat.module_hom(r, c) != 0) {
          ok = false;
          break;
        }
      if (!ok) continue;
      chosen.push_back(r);
      std::vector<Root> set;
      for (auto c : chosen) set.push_back(roots[c]);
      if (is_sincere(cat.rank(), set)) out.push_back(std::move(set));
      walk(r + 1);
      chosen.pop_back();
    }
  };
  walk(0);
  return out;
}

std::vector<Root> perp(const OrbitCategory& cat, const std::vector<Root>& t) {
  const auto idx = root_indices(cat, t);
  std::vector<Root> out;
  for (std::size_t m = 0; m < cat.roots().size(); ++m) {
    const bool in = std::all_of(idx.begin(), idx.end(), [&](std::size_t x) {
      return cat.module_hom(x, m) == 0 && cat.module_ext(x, m) == 0;
    });
    if (in) out.push_back(cat.roots()[m]);
  }
  return out;
}

std::vector<Root> simples_of_wide(const OrbitCategory& cat, const std::vector<Root>& wide,
                                  int expected_rank) {
  const auto idx = root_indices(cat, wide);
  std::vector<std::vector<Root>> found;
  std::vector<std::size_t> chosen;
  std::function<void(std::size_t)> walk = [&](std::size_t start) {
    if (static_cast<int>(chosen.size()) == expected_rank) {
      std::vector<Root> s;
      for (auto c : chosen) s.push_back(wide[c]);
      found.push_back(std::move(s));
      return;
    }
    for (std::size_t a = start; a < idx.size(); ++a) {
      const bool ok = std::all_of(chosen.begin(), chosen.end(), [&](std::size_t c) {
        return cat.module_hom(idx[a], idx[c]) == 0 && cat.module_hom(idx[c], idx[a]) == 0;
      });
      if (!ok) continue;
      chosen.push_back(a);
      walk(a + 1);
      chosen.pop_back();
    }
  };
  walk(0);
  if (found.size() != 1)
    throw InvariantViolation("wide subcategory has " + std::to_string(found.size()) +
                             " candidate sets of simples instead of exactly one");
  std::sort(found[0].begin(), found[0].end());
  return found[0];
}

Configuration beta(const OrbitCategory& cat, const std::vector<Root>& t) {
  if (!is_sincere(cat.rank(), t)) throw InputError("beta: set is not sincere");
  if (!is_module_hom_free(cat, t)) throw InputError("beta: set is not Hom-free");
  const auto wide = perp(cat, t);
  const auto simples = simples_of_wide(cat, wide, cat.rank() - static_cast<int>(t.size()));
  std::vector<OrbitObject> objects;
  for (const auto& r : t) objects.push_back({r, 0});
  for (const auto& s : simples) {
    if (cat.is_injective(cat.root_index(s)))
      throw InvariantViolation("simple of a perpendicular category is injective");
    objects.push_back({s, 1});
  }
  return Configuration(std::move(objects));
}

CheckReport verify_beta_bijection(const OrbitCategory& cat) {
  CheckReport report;
  const auto& q = cat.quiver();
  const auto configs = enumerate_hom_configurations(cat);
  std::set<std::vector<Root>> parts;
  for (const auto& c : configs) {
    ++report.checked;
    auto part = module_part(c);
    std::sort(part.begin(), part.end());
    if (!is_sincere(q.rank(), part) || !is_module_hom_free(cat, part)) {
      report.fail("module part of " + configuration_label(q, c) + " is not sincere Hom-free");
      continue;
    }
    parts.insert(part);
    if (beta(cat, part) != c) report.fail("beta(module part) != " + configuration_label(q, c));
  }
  const auto sets = sincere_hom_free_sets(cat);
  for (const auto& s : sets) {
    ++report.checked;
    const auto b = beta(cat, s);
    auto back = module_part(b);
    std::sort(back.begin(), back.end());
    if (back != s) report.fail("module part of beta(T) != T for " + configuration_label(q, b));
    if (b.size() != static_cast<std::size_t>(q.rank()) || !is_hom_free(cat, b.members))
      report.fail("beta(T) is not a Hom-configuration: " + configuration_label(q, b));
  }
  if (sets.size() != configs.size() || parts.size() != configs.size())
    report.fail("sincere Hom-free sets: " + std::to_string(sets.size()) +
                ", Hom-configurations: " + std::to_string(configs.size()));
  return report;
}

namespace {

// before[a][b]: member a must come before member b.
std::vector<std::vector<bool>> order_constraints(const OrbitCategory& cat,
                                                 const std::vector<OrbitObject>& members) {
  const auto n = members.size();
  std::vector<std::size_t> shadow;
  for (const auto& m : members) shadow.push_back(cat.root_index(m.root));
  std::vector<std::vector<bool>> before(n, std::vector<bool>(n, false));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      if (a == b) continue;
      // b may not precede a when Hom or Ext from b's shadow to a's is nonzero.
      if (cat.module_hom(shadow[b], shadow[a]) != 0 || cat.module_ext(shadow[b], shadow[a]) != 0)
        before[a][b] = true;
      if (members[a].shift == 0 && members[b].shift == 1) before[a][b] = true;
    }
  return before;
}

}  // namespace

std::vector<OrbitObject> exceptional_order(const OrbitCategory& cat,
                                           const std::vector<OrbitObject>& members_in) {
  if (!is_hom_free(cat, members_in)) throw InputError("exceptional_order: set is not Hom-free");
  const auto members = Configuration(members_in).members;
  const auto before = order_constraints(cat, members);
  const auto n = members.size();
  std::vector<bool> placed(n, false);
  std::vector<OrbitObject> out;
  for (std::size_t step = 0; step < n; ++step) {
    std::size_t pick = n;
    for (std::size_t b = 0; b < n && pick == n; ++b) {
      if (placed[b]) continue;
      bool free = true;
      for (std::size_t a = 0; a < n; ++a)
        if (!placed[a] && before[a][b]) free = false;
      if (free) pick = b;
    }
    if (pick == n) throw InvariantViolation("exceptional order constraints contain a cycle");
    placed[pick] = true;
    out.push_back(members[pick]);
  }
  return out;
}

std::vector<std::vector<OrbitObject>> all_exceptional_orders(
    const OrbitCategory& cat, const std::vector<OrbitObject>& members_in) {
  if (!is_hom_free(cat, members_in)) throw InputError("exceptional order: set is not Hom-free");
  const auto members = Configuration(members_in).members;
  const auto before = order_constraints(cat, members);
  const auto n = members.size();
  std::vector<std::vector<OrbitObject>> out;
  std::vector<bool> placed(n, false);
  std::vector<OrbitObject> cur;
  std::function<void()> walk = [&] {
    if (cur.size() == n) {
      out.push_back(cur);
      return;
    }
    for (std::size_t b = 0; b < n; ++b) {
      if (placed[b]) continue;
      bool free = true;
      for (std::size_t a = 0; a < n; ++a)
        if (!placed[a] && before[a][b]) free = false;
      if (!free) continue;
      placed[b] = true;
      cur.push_back(members[b]);
      walk();
      cur.pop_back();
      placed[b] = false;
    }
  };
  walk();
  return out;
}

bool covering_check(const OrbitCategory& cat, const std::vector<OrbitObject>& members) {
  const auto idx = indices_of(cat, members);
  if (!is_hom_free_indices(cat, idx)) throw InputError("covering_check: set is not Hom-free");
  for (std::size_t z = 0; z < cat.size(); ++z) {
    const bool hit =
        std::any_of(idx.begin(), idx.end(), [&](std::size_t x) { return cat.hom(z, x) != 0; });
    if (!hit) return false;
  }
  return true;
}

bool is_exceptional_sequence(const OrbitCategory& cat, const std::vector<Root>& seq) {
  const auto idx = root_indices(cat, seq);
  for (std::size_t i = 0; i < idx.size(); ++i)
    for (std::size_t j = i + 1; j < idx.size(); ++j)
      if (cat.module_hom(idx[i], idx[j]) != 0 || cat.module_ext(idx[i], idx[j]) != 0)
        return false;
  return true;
}

std::vector<Root> braid_mutate(const OrbitCategory& cat, const std::vector<Root>& seq, int i,
                               BraidDirection dir) {
  if (i < 1 || i >= static_cast<int>(seq.size()))
    throw InputError("braid generator index out of range");
  if (!is_exceptional_sequence(cat, seq)) throw InputError("braid_mutate: not exceptional");
  const auto type = cat.quiver().type();
  const auto& left = seq[i - 1];
  const auto& right = seq[i];
  auto image = [&](const Root& mirror, const Root& r) {
    return positive_representative(reflection_of_root(type, mirror)
                                       .apply(std::vector<std::int64_t>(r.coords.begin(),
                                                                        r.coords.end())));
  };
  auto out = seq;
  if (dir == BraidDirection::Forward) {
    out[i - 1] = right;
    out[i] = image(right, left);
  } else {
    out[i - 1] = image(left, right);
    out[i] = left;
  }
  if (!is_exceptional_sequence(cat, out))
    throw InvariantViolation("braid mutation produced a non-exceptional sequence");
  if (reflection_product(type, cat.rank(), out) != reflection_product(type, cat.rank(), seq))
    throw InvariantViolation("braid mutation changed the reflection product");
  return out;
}

std::vector<std::vector<Root>> complete_exceptional_sequences(const OrbitCategory& cat) {
  const auto& roots = cat.roots();
  std::vector<std::vector<Root>> out;
  std::vector<std::size_t> seq;
  std::function<void()> walk = [&] {
    if (static_cast<int>(seq.size()) == cat.rank()) {
      std::vector<Root> s;
      for (auto i : seq) s.push_back(roots[i]);
      out.push_back(std::move(s));
      return;
    }
    for (std::size_t r = 0; r < roots.size(); ++r) {
      const bool ok = std::all_of(seq.begin(), seq.end(), [&](std::size_t e) {
        return e != r && cat.module_hom(e, r) == 0 && cat.module_ext(e, r) == 0;
      });
      if (!ok) continue;
      seq.push_back(r);
      walk();
      seq.pop_back();
    }
  };
  walk();
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<Root>> braid_orbit(const OrbitCategory& cat, const std::vector<Root>& seed) {
  std::set<std::vector<Root>> seen{seed};
  std::vector<std::vector<Root>> todo{seed};
  while (!todo.empty()) {
    const auto cur = todo.back();
    todo.pop_back();
    for (int i = 1; i < static_cast<int>(cur.size()); ++i)
      for (auto dir : {BraidDirection::Forward, BraidDirection::Inverse}) {
        auto next = braid_mutate(cat, cur, i, dir);
        if (seen.insert(next).second) todo.push_back(std::move(next));
      }
  }
  return {seen.begin(), seen.end()};
}

}  // namespace homconf
