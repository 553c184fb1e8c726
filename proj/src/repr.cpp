#include "homconf/repr.hpp"

#include <algorithm>
#include <thread>

namespace homconf {

namespace {

void check_shapes(const DynkinQuiver& q, const Representation& m) {
  if (static_cast<int>(m.dims.size()) != q.rank() || m.maps.size() != q.arrows().size())
    throw InputError("representation does not match the quiver");
  for (std::size_t k = 0; k < q.arrows().size(); ++k) {
    const auto& a = q.arrows()[k];
    const auto& f = m.maps[k];
    if (static_cast<int>(f.rows()) != m.dims[a.target - 1] ||
        static_cast<int>(f.cols()) != m.dims[a.source - 1])
      throw InputError("representation map has the wrong shape");
  }
}

bool is_simple_at(const Representation& m, int vertex) {
  for (std::size_t v = 0; v < m.dims.size(); ++v)
    if (m.dims[v] != (static_cast<int>(v) + 1 == vertex ? 1 : 0)) return false;
  return true;
}

}  // namespace

Representation simple_representation(const DynkinQuiver& q, int vertex) {
  Representation s;
  s.dims.assign(q.rank(), 0);
  s.dims[vertex - 1] = 1;
  for (const auto& a : q.arrows())
    s.maps.emplace_back(s.dims[a.target - 1], s.dims[a.source - 1]);
  return s;
}

Representation reflection_functor(const DynkinQuiver& q, int vertex, const Representation& m,
                                  ReflectionDirection dir) {
  check_shapes(q, m);
  const bool plus = dir == ReflectionDirection::Plus;
  if (plus && !q.is_sink(vertex))
    throw InputError("R+ needs a sink, vertex " + std::to_string(vertex) + " is not one");
  if (!plus && !q.is_source(vertex))
    throw InputError("R- needs a source, vertex " + std::to_string(vertex) + " is not one");
  if (is_simple_at(m, vertex))
    throw SimpleAtVertexError("reflection functor at " + std::to_string(vertex) +
                              " annihilates the simple module there");

  // Arrows incident to the vertex, with the offset of the neighbour's block
  // inside the direct sum of neighbour spaces.
  std::vector<std::size_t> incident;
  std::vector<int> offset;
  int total = 0;
  for (std::size_t k = 0; k < q.arrows().size(); ++k) {
    const auto& a = q.arrows()[k];
    if (a.source != vertex && a.target != vertex) continue;
    const int other = a.source == vertex ? a.target : a.source;
    incident.push_back(k);
    offset.push_back(total);
    total += m.dims[other - 1];
  }
  const int here = m.dims[vertex - 1];

  Representation out = m;
  if (plus) {
    // (M_a)_a : sum M_j -> M_i; new space is its kernel.
    RatMatrix g(here, total);
    for (std::size_t l = 0; l < incident.size(); ++l) {
      const auto& f = m.maps[incident[l]];
      for (std::size_t r = 0; r < f.rows(); ++r)
        for (std::size_t c = 0; c < f.cols(); ++c) g(r, offset[l] + c) = f(r, c);
    }
    const RatMatrix kernel = nullspace(g);
    const int k = static_cast<int>(kernel.cols());
    out.dims[vertex - 1] = k;
    for (std::size_t l = 0; l < incident.size(); ++l) {
      const auto& a = q.arrows()[incident[l]];
      const int other = a.source;
      RatMatrix proj(m.dims[other - 1], k);
      for (int r = 0; r < m.dims[other - 1]; ++r)
        for (int c = 0; c < k; ++c) proj(r, c) = kernel(offset[l] + r, c);
      out.maps[incident[l]] = std::move(proj);
    }
  } else {
    // M_i -> sum M_j; new space is its cokernel.
    RatMatrix f(total, here);
    for (std::size_t l = 0; l < incident.size(); ++l) {
      const auto& map = m.maps[incident[l]];
      for (std::size_t r = 0; r < map.rows(); ++r)
        for (std::size_t c = 0; c < map.cols(); ++c) f(offset[l] + r, c) = map(r, c);
    }
    const RatMatrix coker = left_nullspace(f);
    const int k = static_cast<int>(coker.rows());
    out.dims[vertex - 1] = k;
    for (std::size_t l = 0; l < incident.size(); ++l) {
      const auto& a = q.arrows()[incident[l]];
      const int other = a.target;
      RatMatrix inj(k, m.dims[other - 1]);
      for (int r = 0; r < k; ++r)
        for (int c = 0; c < m.dims[other - 1]; ++c) inj(r, c) = coker(r, offset[l] + c);
      out.maps[incident[l]] = std::move(inj);
    }
  }
  return out;
}

Representation build_indecomposable(const DynkinQuiver& q, const Root& beta) {
  if (beta.rank() != q.rank() || tits_form(q.type(), beta) != 1 ||
      std::any_of(beta.coords.begin(), beta.coords.end(), [](int x) { return x < 0; }))
    throw InputError("not a positive root of " + q.name());

  const auto order = sink_order(q);
  const int cap = q.rank() * coxeter_data(q.type(), q.rank()).h;

  std::vector<DynkinQuiver> quivers{q};
  std::vector<int> letters;
  std::vector<std::int64_t> v(beta.coords.begin(), beta.coords.end());
  auto is_simple = [](const std::vector<std::int64_t>& x) {
    return std::count(x.begin(), x.end(), 0) == static_cast<long>(x.size()) - 1 &&
           std::count(x.begin(), x.end(), 1) == 1;
  };
  while (!is_simple(v)) {
    if (static_cast<int>(letters.size()) >= cap)
      throw InvariantViolation("sink-order reduction of a root did not terminate");
    const int i = order[letters.size() % order.size()];
    v = simple_reflection(q.type(), q.rank(), i).apply(v);
    if (std::any_of(v.begin(), v.end(), [](auto x) { return x < 0; }))
      throw InvariantViolation("sink-order reduction left the positive roots");
    letters.push_back(i);
    quivers.push_back(reflect_quiver(quivers.back(), i));
  }

  const int j = static_cast<int>(std::find(v.begin(), v.end(), 1) - v.begin()) + 1;
  Representation m = simple_representation(quivers.back(), j);
  for (std::size_t step = letters.size(); step-- > 0;)
    m = reflection_functor(quivers[step + 1], letters[step], m, ReflectionDirection::Minus);
  if (m.dims != beta.coords)
    throw InvariantViolation("rebuilt representation has the wrong dimension vector");
  return m;
}

std::size_t hom_dim(const DynkinQuiver& q, const Representation& m, const Representation& n) {
  check_shapes(q, m);
  check_shapes(q, n);
  const int rank = q.rank();
  // Unknown f_v is dims_n[v] x dims_m[v], stored row-major from offset[v].
  std::vector<int> offset(rank + 1, 0);
  for (int v = 0; v < rank; ++v) offset[v + 1] = offset[v] + n.dims[v] * m.dims[v];
  const int unknowns = offset[rank];
  if (unknowns == 0) return 0;

  int equations = 0;
  for (const auto& a : q.arrows()) equations += n.dims[a.target - 1] * m.dims[a.source - 1];
  RatMatrix sys(equations, unknowns);

  int row = 0;
  for (std::size_t k = 0; k < q.arrows().size(); ++k) {
    const int s = q.arrows()[k].source - 1;
    const int t = q.arrows()[k].target - 1;
    const auto& ma = m.maps[k];
    const auto& na = n.maps[k];
    // (f_t M_a - N_a f_s)[r][c]
    for (int r = 0; r < n.dims[t]; ++r)
      for (int c = 0; c < m.dims[s]; ++c, ++row) {
        for (int x = 0; x < m.dims[t]; ++x)
          sys(row, offset[t] + r * m.dims[t] + x) += ma(x, c);
        for (int x = 0; x < n.dims[s]; ++x)
          sys(row, offset[s] + x * m.dims[s] + c) -= na(r, x);
      }
  }
  return unknowns - rank_in_place(sys);
}

std::size_t ext_dim(const DynkinQuiver& q, const Representation& m, const Representation& n) {
  const long hom = static_cast<long>(hom_dim(q, m, n));
  const long ext = hom - euler_form(q, m.dimension_vector(), n.dimension_vector());
  if (ext < 0) throw InvariantViolation("negative Ext dimension");
  return static_cast<std::size_t>(ext);
}

ModuleCategory::ModuleCategory(DynkinQuiver q, unsigned threads)
    : quiver_(std::move(q)), roots_(positive_roots(quiver_)) {
  for (std::size_t i = 0; i < roots_.size(); ++i) index_.emplace(roots_[i], i);
  modules_.reserve(roots_.size());
  for (const auto& r : roots_) modules_.push_back(build_indecomposable(quiver_, r));

  const std::size_t n = roots_.size();
  hom_.assign(n * n, 0);
  ext_.assign(n * n, 0);
  auto fill_rows = [&](std::size_t first, std::size_t stride) {
    for (std::size_t i = first; i < n; i += stride)
      for (std::size_t j = 0; j < n; ++j) {
        const int h = static_cast<int>(hom_dim(quiver_, modules_[i], modules_[j]));
        const int e = h - euler_form(quiver_, roots_[i], roots_[j]);
        if (e < 0) throw InvariantViolation("negative Ext dimension");
        hom_[i * n + j] = h;
        ext_[i * n + j] = e;
      }
  };
  if (threads <= 1) {
    fill_rows(0, 1);
  } else {
    std::vector<std::jthread> workers;
    std::vector<std::exception_ptr> errors(threads);
    for (unsigned t = 0; t < threads; ++t)
      workers.emplace_back([&, t] {
        try {
          fill_rows(t, threads);
        } catch (...) {
          errors[t] = std::current_exception();
        }
      });
    workers.clear();
    for (auto& e : errors)
      if (e) std::rethrow_exception(e);
  }
}

std::size_t ModuleCategory::index_of(const Root& r) const {
  const auto it = index_.find(r);
  if (it == index_.end()) throw InputError("not a positive root of " + quiver_.name());
  return it->second;
}

bool ModuleCategory::is_projective(std::size_t i) const {
  for (std::size_t j = 0; j < size(); ++j)
    if (ext(i, j) != 0) return false;
  return true;
}

bool ModuleCategory::is_injective(std::size_t i) const {
  for (std::size_t j = 0; j < size(); ++j)
    if (ext(j, i) != 0) return false;
  return true;
}

}  // namespace homconf
