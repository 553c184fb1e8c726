#include "homconf/type_a.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <numeric>

namespace homconf {

SetPartition::SetPartition(int ground, std::vector<std::vector<int>> bs)
    : n(ground), blocks(std::move(bs)) {
  std::vector<int> seen(n + 1, 0);
  for (auto& b : blocks) {
    if (b.empty()) throw InputError("partition has an empty block");
    std::sort(b.begin(), b.end());
    for (int k : b) {
      if (k < 1 || k > n) throw InputError("partition element out of range 1.." + std::to_string(n));
      if (seen[k]++) throw InputError("element " + std::to_string(k) + " appears twice");
    }
  }
  for (int k = 1; k <= n; ++k)
    if (!seen[k]) throw InputError("element " + std::to_string(k) + " is in no block");
  std::sort(blocks.begin(), blocks.end());
}

const std::vector<int>& SetPartition::block_of(int k) const {
  for (const auto& b : blocks)
    if (std::binary_search(b.begin(), b.end(), k)) return b;
  throw InputError("element " + std::to_string(k) + " is in no block");
}

SetPartition parse_partition(std::string_view text, int n) {
  std::vector<std::vector<int>> blocks;
  std::vector<int> cur;
  int largest = 0;
  std::string digits;
  auto flush_number = [&] {
    if (digits.empty()) throw InputError("empty entry in partition '" + std::string(text) + "'");
    int v = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), v);
    if (ec != std::errc() || ptr != digits.data() + digits.size())
      throw InputError("bad number in partition '" + std::string(text) + "'");
    cur.push_back(v);
    largest = std::max(largest, v);
    digits.clear();
  };
  for (char ch : text) {
    if (ch == ' ' || ch == '\t') continue;
    if (ch == ',') {
      flush_number();
    } else if (ch == '|') {
      flush_number();
      blocks.push_back(std::move(cur));
      cur.clear();
    } else if (ch >= '0' && ch <= '9') {
      digits += ch;
    } else {
      throw InputError("unexpected character in partition '" + std::string(text) + "'");
    }
  }
  flush_number();
  blocks.push_back(std::move(cur));
  return SetPartition(n ? n : largest, std::move(blocks));
}

std::string format_partition(const SetPartition& p) {
  std::string s;
  for (std::size_t b = 0; b < p.blocks.size(); ++b) {
    if (b) s += '|';
    for (std::size_t i = 0; i < p.blocks[b].size(); ++i) {
      if (i) s += ',';
      s += std::to_string(p.blocks[b][i]);
    }
  }
  return s;
}

bool is_noncrossing_partition(const SetPartition& p) {
  std::vector<int> block(p.n + 1);
  for (std::size_t b = 0; b < p.blocks.size(); ++b)
    for (int k : p.blocks[b]) block[k] = static_cast<int>(b);
  // a < b < c < d with a, c in one block and b, d in another.
  for (int a = 1; a <= p.n; ++a)
    for (int b = a + 1; b <= p.n; ++b)
      for (int c = b + 1; c <= p.n; ++c) {
        if (block[c] != block[a] || block[b] == block[a]) continue;
        for (int d = c + 1; d <= p.n; ++d)
          if (block[d] == block[b]) return false;
      }
  return true;
}

std::vector<SetPartition> noncrossing_partitions(int n) {
  // Restricted growth strings enumerate every set partition once.
  std::vector<SetPartition> out;
  std::vector<int> label(n, 0);
  std::function<void(int, int)> walk = [&](int pos, int used) {
    if (pos == n) {
      std::vector<std::vector<int>> blocks(used);
      for (int k = 0; k < n; ++k) blocks[label[k]].push_back(k + 1);
      SetPartition p(n, std::move(blocks));
      if (is_noncrossing_partition(p)) out.push_back(std::move(p));
      return;
    }
    for (int b = 0; b <= used && b < n; ++b) {
      label[pos] = b;
      walk(pos + 1, std::max(used, b + 1));
    }
  };
  if (n >= 1) walk(1, 1);
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

// Root coordinates of e_a - e_b over alpha_1..alpha_{m-1}.
std::vector<std::int64_t> epsilon_difference(int m, int a, int b) {
  std::vector<std::int64_t> v(m - 1, 0);
  const int lo = std::min(a, b), hi = std::max(a, b);
  const int sign = a < b ? 1 : -1;
  for (int i = lo; i < hi; ++i) v[i - 1] = sign;
  return v;
}

}  // namespace

std::vector<int> permutation_of(const WElement& w) {
  const int m = w.rank() + 1;
  std::vector<int> perm(m, 0);
  for (int k = 2; k <= m; ++k) {
    // w(e_1 - e_k) = e_{perm(1)} - e_{perm(k)}
    const auto img = w.apply(epsilon_difference(m, 1, k));
    std::vector<std::int64_t> eps(m, 0);
    for (int j = 1; j <= m; ++j)
      eps[j - 1] = (j <= m - 1 ? img[j - 1] : 0) - (j >= 2 ? img[j - 2] : 0);
    int plus = 0, minus = 0;
    for (int j = 1; j <= m; ++j) {
      if (eps[j - 1] == 1 && !plus) plus = j;
      else if (eps[j - 1] == -1 && !minus) minus = j;
      else if (eps[j - 1] != 0) throw InputError("matrix is not a type A Weyl group element");
    }
    if (!plus || !minus || (perm[0] && perm[0] != plus))
      throw InputError("matrix is not a type A Weyl group element");
    perm[0] = plus;
    perm[k - 1] = minus;
  }
  if (m == 1) perm[0] = 1;
  return perm;
}

WElement element_of_permutation(const std::vector<int>& perm) {
  const int m = static_cast<int>(perm.size());
  std::vector<int> sorted = perm;
  std::sort(sorted.begin(), sorted.end());
  for (int k = 0; k < m; ++k)
    if (sorted[k] != k + 1) throw InputError("not a permutation");
  const int n = m - 1;
  std::vector<std::int64_t> entries(n * n, 0);
  for (int i = 1; i <= n; ++i) {
    const auto col = epsilon_difference(m, perm[i - 1], perm[i]);
    for (int r = 0; r < n; ++r) entries[r * n + (i - 1)] = col[r];
  }
  return WElement(n, std::move(entries));
}

SetPartition biane_to_partition(const WElement& w) {
  const auto perm = permutation_of(w);
  const int m = static_cast<int>(perm.size());
  std::vector<bool> seen(m + 1, false);
  std::vector<std::vector<int>> blocks;
  for (int k = 1; k <= m; ++k) {
    if (seen[k]) continue;
    std::vector<int> cycle;
    for (int x = k; !seen[x]; x = perm[x - 1]) {
      seen[x] = true;
      cycle.push_back(x);
    }
    blocks.push_back(std::move(cycle));
  }
  return SetPartition(m, std::move(blocks));
}

WElement biane_to_perm(const SetPartition& p) {
  std::vector<int> perm(p.n);
  for (const auto& b : p.blocks)
    for (std::size_t i = 0; i < b.size(); ++i) perm[b[i] - 1] = b[(i + 1) % b.size()];
  return element_of_permutation(perm);
}

namespace {

// x mod l with representatives 1..l.
int mod_one_based(int x, int l) { return ((x - 1) % l + l) % l + 1; }

}  // namespace

std::vector<std::pair<int, int>> riedtmann_coordinates(const SetPartition& p) {
  if (!is_noncrossing_partition(p)) throw InputError("partition is crossing");
  std::vector<std::pair<int, int>> out;
  for (int k = 1; k <= p.n; ++k) {
    const auto& b = p.block_of(k);
    const int s = static_cast<int>(b.size());
    const int r = static_cast<int>(std::find(b.begin(), b.end(), k) - b.begin()) + 1;
    const int next = b[mod_one_based(r + 1, s) - 1];
    out.emplace_back(k, mod_one_based(next - k, p.n));
  }
  return out;
}

OrbitObject decode_coordinate(int n, int i, int j) {
  OrbitObject o;
  o.root.coords.assign(n, 0);
  int first = i, last = i + j - 1;
  if (i + j > n + 1) {
    first = i + j - n - 1;
    last = i - 1;
    o.shift = 1;
  }
  if (first < 1 || last > n || first > last) throw InvariantViolation("coordinate outside the domain");
  for (int l = first; l <= last; ++l) o.root.coords[l - 1] = 1;
  return o;
}

Configuration gamma(const SetPartition& p) {
  std::vector<OrbitObject> objects;
  for (auto [i, j] : riedtmann_coordinates(p)) objects.push_back(decode_coordinate(p.n, i, j));
  return Configuration(std::move(objects));
}

SetPartition f_map(const SetPartition& p) {
  if (!is_noncrossing_partition(p)) throw InputError("partition is crossing");
  auto blocks = p.blocks;
  for (auto& b : blocks)
    if (b.front() == 1) b.push_back(p.n + 1);
  return SetPartition(p.n + 1, std::move(blocks));
}

bool is_positive_classical(const SetPartition& p) {
  const auto& b = p.block_of(1);
  return std::binary_search(b.begin(), b.end(), p.n);
}

CheckReport check_riedtmann_compat(const OrbitCategory& cat) {
  CheckReport report;
  const auto& q = cat.quiver();
  const int n = q.rank();
  if (q != DynkinQuiver::standard(DiagramType::A, n))
    throw InputError("Riedtmann's map needs the linear A_n quiver");
  for (const auto& p : noncrossing_partitions(n)) {
    ++report.checked;
    const auto g = gamma(p);
    const auto label = format_partition(p);
    bool in_domain = true;
    for (const auto& o : g.members) {
      try {
        (void)cat.index_of(o);
      } catch (const InputError&) {
        in_domain = false;
      }
    }
    if (!in_domain || g.size() != static_cast<std::size_t>(n) || !is_hom_free(cat, g.members)) {
      report.fail("gamma(" + label + ") is not a Hom-configuration");
      continue;
    }
    const auto u = psi(cat, module_part(g));
    const auto lhs = biane_to_partition(u.element);
    const auto rhs = f_map(p);
    if (lhs != rhs)
      report.fail("P = " + label + ": rho^-1(gamma(P)) = " + format_partition(lhs) +
                  ", f(P) = " + format_partition(rhs));
  }
  return report;
}

CheckReport check_riedtmann_compat(int n) {
  return check_riedtmann_compat(OrbitCategory::build(DynkinQuiver::standard(DiagramType::A, n)));
}

}  // namespace homconf
