#include "homconf/cartan.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <map>
#include <numeric>
#include <queue>
#include <set>

#include "homconf/errors.hpp"
#include "homconf/linalg.hpp"

namespace homconf {

char to_char(DiagramType t) {
  switch (t) {
    case DiagramType::A: return 'A';
    case DiagramType::D: return 'D';
    case DiagramType::E: return 'E';
  }
  return '?';
}

bool is_supported(DiagramType type, int rank) {
  switch (type) {
    case DiagramType::A: return rank >= 1;
    case DiagramType::D: return rank >= 4;
    case DiagramType::E: return rank >= 6 && rank <= 8;
  }
  return false;
}

std::vector<std::pair<int, int>> diagram_edges(DiagramType type, int rank) {
  if (!is_supported(type, rank))
    throw InputError(std::string("unsupported Dynkin type ") + to_char(type) +
                     std::to_string(rank));
  std::vector<std::pair<int, int>> edges;
  switch (type) {
    case DiagramType::A:
      for (int i = 1; i < rank; ++i) edges.emplace_back(i, i + 1);
      break;
    case DiagramType::D:
      for (int i = 1; i < rank - 2; ++i) edges.emplace_back(i, i + 1);
      edges.emplace_back(rank - 2, rank - 1);
      edges.emplace_back(rank - 2, rank);
      break;
    case DiagramType::E:
      edges.emplace_back(1, 3);
      edges.emplace_back(2, 4);
      for (int i = 3; i < rank; ++i) edges.emplace_back(i, i + 1);
      break;
  }
  std::sort(edges.begin(), edges.end());
  return edges;
}

namespace {

std::pair<int, int> edge_of(const Arrow& a) {
  return {std::min(a.source, a.target), std::max(a.source, a.target)};
}

}  // namespace

DynkinQuiver::DynkinQuiver(DiagramType type, int rank, std::vector<Arrow> arrows)
    : type_(type), rank_(rank), arrows_(std::move(arrows)) {
  const auto edges = diagram_edges(type, rank);
  std::set<std::pair<int, int>> seen;
  for (const auto& a : arrows_) {
    if (a.source < 1 || a.source > rank || a.target < 1 || a.target > rank)
      throw InputError("arrow " + std::to_string(a.source) + ">" +
                       std::to_string(a.target) + " has a vertex outside 1.." +
                       std::to_string(rank));
    if (a.source == a.target)
      throw InputError("loop at vertex " + std::to_string(a.source));
    const auto e = edge_of(a);
    if (!std::binary_search(edges.begin(), edges.end(), e))
      throw InputError("edge {" + std::to_string(e.first) + "," + std::to_string(e.second) +
                       "} is not an edge of " + name());
    if (!seen.insert(e).second)
      throw InputError("duplicate arrow on edge {" + std::to_string(e.first) + "," +
                       std::to_string(e.second) + "}");
  }
  if (seen.size() != edges.size())
    throw InputError(name() + " needs exactly " + std::to_string(edges.size()) +
                     " arrows, got " + std::to_string(seen.size()));
  std::sort(arrows_.begin(), arrows_.end(),
            [](const Arrow& x, const Arrow& y) { return edge_of(x) < edge_of(y); });
}

DynkinQuiver DynkinQuiver::standard(DiagramType type, int rank) {
  std::vector<Arrow> arrows;
  for (auto [lo, hi] : diagram_edges(type, rank)) arrows.push_back({hi, lo});
  return DynkinQuiver(type, rank, std::move(arrows));
}

bool DynkinQuiver::is_sink(int v) const {
  return std::none_of(arrows_.begin(), arrows_.end(),
                      [v](const Arrow& a) { return a.source == v; });
}

bool DynkinQuiver::is_source(int v) const {
  return std::none_of(arrows_.begin(), arrows_.end(),
                      [v](const Arrow& a) { return a.target == v; });
}

bool DynkinQuiver::adjacent(int u, int v) const {
  return std::any_of(arrows_.begin(), arrows_.end(), [&](const Arrow& a) {
    return (a.source == u && a.target == v) || (a.source == v && a.target == u);
  });
}

std::string DynkinQuiver::name() const { return to_char(type_) + std::to_string(rank_); }

std::string DynkinQuiver::spec() const {
  std::string s = name();
  if (arrows_.empty()) return s;
  s += ':';
  for (std::size_t i = 0; i < arrows_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(arrows_[i].source) + '>' + std::to_string(arrows_[i].target);
  }
  return s;
}

DynkinQuiver parse_quiver(std::string_view spec) {
  std::string s;
  for (char ch : spec)
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  if (s.empty()) throw InputError("empty quiver spec");

  DiagramType type;
  switch (std::toupper(static_cast<unsigned char>(s[0]))) {
    case 'A': type = DiagramType::A; break;
    case 'D': type = DiagramType::D; break;
    case 'E': type = DiagramType::E; break;
    default: throw InputError("unknown Dynkin type in '" + s + "'");
  }

  auto parse_int = [&](std::string_view text) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || ptr != text.data() + text.size() || text.empty())
      throw InputError("bad number '" + std::string(text) + "' in quiver spec '" + s + "'");
    return value;
  };

  const auto colon = s.find(':');
  const int rank = parse_int(std::string_view(s).substr(1, colon == std::string::npos
                                                               ? std::string::npos
                                                               : colon - 1));
  if (!is_supported(type, rank))
    throw InputError("unsupported Dynkin type '" + s.substr(0, colon) + "'");
  if (colon == std::string::npos) return DynkinQuiver::standard(type, rank);

  std::vector<Arrow> arrows;
  std::string_view rest = std::string_view(s).substr(colon + 1);
  while (!rest.empty()) {
    const auto comma = rest.find(',');
    const auto item = rest.substr(0, comma);
    const auto gt = item.find('>');
    if (gt == std::string_view::npos) throw InputError("bad arrow '" + std::string(item) + "'");
    arrows.push_back({parse_int(item.substr(0, gt)), parse_int(item.substr(gt + 1))});
    if (comma == std::string_view::npos) break;
    rest = rest.substr(comma + 1);
    if (rest.empty()) throw InputError("trailing comma in quiver spec '" + s + "'");
  }
  return DynkinQuiver(type, rank, std::move(arrows));
}

std::vector<int> sinks(const DynkinQuiver& q) {
  std::vector<int> out;
  for (int v = 1; v <= q.rank(); ++v)
    if (q.is_sink(v)) out.push_back(v);
  return out;
}

std::vector<int> sources(const DynkinQuiver& q) {
  std::vector<int> out;
  for (int v = 1; v <= q.rank(); ++v)
    if (q.is_source(v)) out.push_back(v);
  return out;
}

DynkinQuiver reflect_quiver(const DynkinQuiver& q, int vertex) {
  if (vertex < 1 || vertex > q.rank() || !(q.is_sink(vertex) || q.is_source(vertex)))
    throw InputError("vertex " + std::to_string(vertex) + " is neither a sink nor a source");
  auto arrows = q.arrows();
  for (auto& a : arrows)
    if (a.source == vertex || a.target == vertex) std::swap(a.source, a.target);
  return DynkinQuiver(q.type(), q.rank(), std::move(arrows));
}

std::vector<int> sink_order(const DynkinQuiver& q) {
  std::vector<int> order;
  std::vector<bool> used(q.rank() + 1, false);
  DynkinQuiver cur = q;
  for (int step = 0; step < q.rank(); ++step) {
    int pick = 0;
    for (int v = 1; v <= q.rank() && !pick; ++v)
      if (!used[v] && cur.is_sink(v)) pick = v;
    if (!pick) throw InvariantViolation("no unused sink while building a sink order");
    used[pick] = true;
    order.push_back(pick);
    cur = reflect_quiver(cur, pick);
  }
  return order;
}

bool Root::is_simple() const {
  return std::accumulate(coords.begin(), coords.end(), 0) == 1 &&
         std::all_of(coords.begin(), coords.end(), [](int x) { return x >= 0; });
}

Root simple_root(int rank, int vertex) {
  Root r{std::vector<int>(rank, 0)};
  r.coords[vertex - 1] = 1;
  return r;
}

std::vector<int> support(const Root& r) {
  std::vector<int> out;
  for (int v = 1; v <= r.rank(); ++v)
    if (r[v] != 0) out.push_back(v);
  return out;
}

std::vector<int> cartan_matrix(DiagramType type, int rank) {
  std::vector<int> c(rank * rank, 0);
  for (int i = 0; i < rank; ++i) c[i * rank + i] = 2;
  for (auto [u, v] : diagram_edges(type, rank)) {
    c[(u - 1) * rank + (v - 1)] = -1;
    c[(v - 1) * rank + (u - 1)] = -1;
  }
  return c;
}

int tits_form(DiagramType type, const Root& r) {
  int q = 0;
  for (int x : r.coords) q += x * x;
  for (auto [u, v] : diagram_edges(type, r.rank())) q -= r[u] * r[v];
  return q;
}

int euler_form(const DynkinQuiver& q, const Root& a, const Root& b) {
  int e = 0;
  for (int i = 0; i < a.rank(); ++i) e += a.coords[i] * b.coords[i];
  for (const auto& arrow : q.arrows()) e -= a[arrow.source] * b[arrow.target];
  return e;
}

int symmetric_form(DiagramType type, const Root& a, const Root& b) {
  const int n = a.rank();
  const auto c = cartan_matrix(type, n);
  int s = 0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) s += a.coords[i] * c[i * n + j] * b.coords[j];
  return s;
}

CoxeterData coxeter_data(DiagramType type, int rank) {
  if (!is_supported(type, rank))
    throw InputError(std::string("unsupported Dynkin type ") + to_char(type) +
                     std::to_string(rank));
  CoxeterData d;
  switch (type) {
    case DiagramType::A:
      d.h = rank + 1;
      for (int i = 1; i <= rank; ++i) d.exponents.push_back(i);
      break;
    case DiagramType::D:
      d.h = 2 * rank - 2;
      for (int i = 1; i <= 2 * rank - 3; i += 2) d.exponents.push_back(i);
      d.exponents.push_back(rank - 1);
      std::sort(d.exponents.begin(), d.exponents.end());
      break;
    case DiagramType::E:
      if (rank == 6) d = {12, {1, 4, 5, 7, 8, 11}};
      if (rank == 7) d = {18, {1, 5, 7, 9, 11, 13, 17}};
      if (rank == 8) d = {30, {1, 7, 11, 13, 17, 19, 23, 29}};
      break;
  }
  return d;
}

std::vector<Root> positive_roots(DiagramType type, int rank) {
  // Every positive root is reachable from a simple root by adding simple roots
  // one at a time while staying inside the root system.
  std::set<Root> found;
  std::queue<Root> frontier;
  for (int v = 1; v <= rank; ++v) {
    found.insert(simple_root(rank, v));
    frontier.push(simple_root(rank, v));
  }
  while (!frontier.empty()) {
    Root r = frontier.front();
    frontier.pop();
    for (int v = 1; v <= rank; ++v) {
      Root next = r;
      ++next.coords[v - 1];
      if (tits_form(type, next) == 1 && found.insert(next).second) frontier.push(next);
    }
  }
  return {found.begin(), found.end()};
}

WElement::WElement(int rank) : rank_(rank), m_(rank * rank, 0) {
  for (int i = 0; i < rank; ++i) m_[i * rank + i] = 1;
}

WElement::WElement(int rank, std::vector<std::int64_t> entries)
    : rank_(rank), m_(std::move(entries)) {
  if (static_cast<int>(m_.size()) != rank * rank)
    throw InputError("Weyl group matrix has the wrong number of entries");
}

std::vector<std::int64_t> WElement::apply(const std::vector<std::int64_t>& v) const {
  std::vector<std::int64_t> out(rank_, 0);
  for (int i = 0; i < rank_; ++i)
    for (int j = 0; j < rank_; ++j) out[i] += m_[i * rank_ + j] * v[j];
  return out;
}

Root WElement::apply_positive(const Root& r) const {
  const auto img = apply(std::vector<std::int64_t>(r.coords.begin(), r.coords.end()));
  Root out{std::vector<int>(rank_)};
  for (int i = 0; i < rank_; ++i) {
    if (img[i] < 0) throw InvariantViolation("image of a positive root is not positive");
    out.coords[i] = static_cast<int>(img[i]);
  }
  return out;
}

WElement WElement::inverse(DiagramType type) const {
  // w^T C w = C, so C w^-1 = w^T C; solve by Gauss-Jordan on [C | w^T C].
  const auto c = cartan_matrix(type, rank_);
  const int n = rank_;
  RatMatrix sys(n, 2 * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      sys(i, j) = c[i * n + j];
      long rhs = 0;
      for (int k = 0; k < n; ++k) rhs += m_[k * n + i] * c[k * n + j];
      sys(i, n + j) = rhs;
    }
  for (int col = 0; col < n; ++col) {
    int sel = col;
    while (sgn(sys(sel, col)) == 0) ++sel;
    for (int cc = 0; cc < 2 * n; ++cc) std::swap(sys(sel, cc), sys(col, cc));
    const Rational inv = 1 / sys(col, col);
    for (int cc = 0; cc < 2 * n; ++cc) sys(col, cc) *= inv;
    for (int r = 0; r < n; ++r) {
      if (r == col || sgn(sys(r, col)) == 0) continue;
      const Rational f = sys(r, col);
      for (int cc = 0; cc < 2 * n; ++cc) sys(r, cc) -= f * sys(col, cc);
    }
  }
  std::vector<std::int64_t> out(n * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const Rational& v = sys(i, n + j);
      if (v.get_den() != 1) throw InvariantViolation("Weyl group inverse is not integral");
      out[i * n + j] = v.get_num().get_si();
    }
  WElement result(n, std::move(out));
  if (!(result * *this).is_identity()) throw InvariantViolation("Weyl group inverse check failed");
  return result;
}

bool WElement::is_identity() const { return *this == WElement(rank_); }

WElement operator*(const WElement& a, const WElement& b) {
  const int n = a.rank_;
  std::vector<std::int64_t> p(n * n, 0);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      const auto x = a.m_[i * n + k];
      if (x == 0) continue;
      for (int j = 0; j < n; ++j) p[i * n + j] += x * b.m_[k * n + j];
    }
  return WElement(n, std::move(p));
}

WElement simple_reflection(DiagramType type, int rank, int vertex) {
  return reflection_of_root(type, simple_root(rank, vertex));
}

WElement reflection_of_root(DiagramType type, const Root& beta) {
  const int n = beta.rank();
  if (tits_form(type, beta) != 1) throw InputError("not a root");
  const auto c = cartan_matrix(type, n);
  // (v, beta) = sum_l (C beta)_l v_l
  std::vector<std::int64_t> cb(n, 0);
  for (int l = 0; l < n; ++l)
    for (int j = 0; j < n; ++j) cb[l] += c[l * n + j] * beta.coords[j];
  std::vector<std::int64_t> m(n * n, 0);
  for (int k = 0; k < n; ++k)
    for (int l = 0; l < n; ++l) m[k * n + l] = (k == l ? 1 : 0) - beta.coords[k] * cb[l];
  return WElement(n, std::move(m));
}

WElement reflection_product(DiagramType type, int rank, const std::vector<Root>& roots) {
  WElement w(rank);
  for (const auto& r : roots) w = w * reflection_of_root(type, r);
  return w;
}

WElement coxeter_element(const DynkinQuiver& q) {
  WElement c(q.rank());
  for (int v : sink_order(q)) c = c * simple_reflection(q.type(), q.rank(), v);
  return c;
}

Root positive_representative(const std::vector<std::int64_t>& v) {
  const bool neg = std::any_of(v.begin(), v.end(), [](auto x) { return x < 0; });
  Root r{std::vector<int>(v.size())};
  for (std::size_t i = 0; i < v.size(); ++i) {
    const auto x = neg ? -v[i] : v[i];
    if (x < 0) throw InvariantViolation("vector is neither positive nor negative");
    r.coords[i] = static_cast<int>(x);
  }
  return r;
}

}  // namespace homconf
