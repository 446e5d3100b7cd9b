#include "mcdeform/mc.hpp"

#include <functional>
#include <mutex>
#include <tuple>

namespace mcdeform {

namespace {

std::vector<DynkinWord> compute_dynkin(std::size_t max_length) {
  std::map<std::pair<std::size_t, std::uint32_t>, Rational> acc;
  struct Block {
    std::size_t r, s;
  };
  std::vector<Block> blocks;
  // Enumerate sequences of blocks (r_i, s_i), r_i + s_i >= 1, total length <= max_length.
  std::function<void(std::size_t)> rec = [&](std::size_t used) {
    if (!blocks.empty()) {
      const std::size_t n = blocks.size();
      Rational denom = Rational(static_cast<long>(used));
      std::uint32_t letters = 0;
      std::size_t pos = 0;
      for (const auto& b : blocks) {
        denom *= factorial(static_cast<unsigned>(b.r)) * factorial(static_cast<unsigned>(b.s));
        pos += b.r;
        for (std::size_t k = 0; k < b.s; ++k) letters |= (1u << pos++);
      }
      Rational coeff = Rational(n % 2 == 1 ? 1 : -1) / Rational(static_cast<long>(n)) / denom;
      acc[{used, letters}] += coeff;
    }
    for (std::size_t total = 1; used + total <= max_length; ++total)
      for (std::size_t r = 0; r <= total; ++r) {
        blocks.push_back({r, total - r});
        rec(used + total);
        blocks.pop_back();
      }
  };
  rec(0);
  std::vector<DynkinWord> out;
  for (const auto& [key, c] : acc) {
    if (c == 0) continue;
    const auto [len, letters] = key;
    // Right-nested brackets ending in [a, a] vanish in degree 0.
    if (len >= 2 && (((letters >> (len - 1)) & 1u) == ((letters >> (len - 2)) & 1u))) continue;
    out.push_back({len, letters, c});
  }
  return out;
}

}  // namespace

std::vector<DynkinWord> dynkin_coefficients(std::size_t max_length) {
  static std::mutex mutex;
  static std::map<std::size_t, std::vector<DynkinWord>> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(max_length);
  if (it == cache.end()) it = cache.emplace(max_length, compute_dynkin(max_length)).first;
  return it->second;
}

ArtinHost::ArtinHost(ArtinianLocalDGA base, DGLA g)
    : base_(std::move(base)), g_(std::move(g)) {
  filtration_ = m_filtration(base_);
  host_ = tensor_dgla(maximal_ideal(base_), g_);
  auto c = nilpotency_class(host_);
  if (!c) throw PreconditionFailed("m (x) g is not nilpotent");
  depth_ = *c;
}

Vec ArtinHost::element(const std::vector<std::tuple<Rational, std::string, std::string>>& terms) const {
  Vec v = host_.zero();
  for (const auto& [c, r, x] : terms) {
    auto ri = base_.index_of(r);
    auto xi = g_.index_of(x);
    if (!ri || !xi) throw PreconditionFailed("unknown label in element term " + r + "*" + x);
    auto mp = base_.m_position(*ri);
    if (!mp) throw PreconditionFailed("coefficient " + r + " is not in the maximal ideal");
    v[index(*mp, *xi)] += c;
  }
  return v;
}

std::vector<Vec> ArtinHost::filtration_basis(std::size_t j, int degree) const {
  std::vector<Vec> out;
  const auto& level = filtration_.level(j);
  if (level.empty()) return out;
  const auto& mb = base_.m_basis();
  const auto& alg = base_.algebra();
  std::map<int, std::vector<std::size_t>> m_by_degree;
  for (std::size_t p = 0; p < mb.size(); ++p) m_by_degree[alg.basis[mb[p]].degree].push_back(p);
  for (const auto& [rdeg, positions] : m_by_degree) {
    auto xs = g_.indices_in_degree(degree - rdeg);
    if (xs.empty()) continue;
    // m^j is graded, so projecting its basis to one degree spans m^j in that degree.
    std::vector<Vec> proj;
    for (const auto& v : level) {
      Vec p(positions.size());
      for (std::size_t q = 0; q < positions.size(); ++q) p[q] = v[mb[positions[q]]];
      if (!p.is_zero()) proj.push_back(std::move(p));
    }
    if (proj.empty()) continue;
    for (const auto& b : span_basis(proj, positions.size()))
      for (auto x : xs) {
        Vec e = host_.zero();
        for (std::size_t q = 0; q < positions.size(); ++q)
          if (b[q] != 0) e[index(positions[q], x)] = b[q];
        out.push_back(std::move(e));
      }
  }
  return out;
}

bool ArtinHost::in_filtration(const Vec& v, std::size_t j) const {
  if (j <= 1) return true;
  const auto& level = filtration_.level(j);
  const auto& mb = base_.m_basis();
  for (std::size_t x = 0; x < g_.dim(); ++x) {
    Vec column(base_.dim());
    for (std::size_t p = 0; p < mb.size(); ++p) column[mb[p]] = v[index(p, x)];
    if (column.is_zero()) continue;
    if (level.empty() || !in_span(level, column)) return false;
  }
  return true;
}

std::size_t ArtinHost::filtration_level(const Vec& v) const {
  const std::size_t n = filtration_.nilpotency_index;
  for (std::size_t j = n; j >= 1; --j)
    if (in_filtration(v, j)) return j;
  return 1;
}

Vec curvature(const ArtinHost& h, const Vec& z) { return curvature(h.host(), z); }
bool is_mc(const ArtinHost& h, const Vec& z) { return is_mc(h.host(), z); }
Vec gauge_act(const ArtinHost& h, const Vec& gamma, const Vec& z) { return gauge_act(h.host(), gamma, z); }
Vec bch(const ArtinHost& h, const Vec& x, const Vec& y) { return bch(h.host(), x, y, h.nilpotency_depth()); }

namespace {

std::vector<Vec> embed_degree(const DGLA& g, int degree, const std::vector<Vec>& local) {
  auto idx = g.indices_in_degree(degree);
  std::vector<Vec> out;
  for (const auto& v : local) {
    Vec e = g.zero();
    for (std::size_t q = 0; q < idx.size(); ++q) e[idx[q]] = v[q];
    out.push_back(std::move(e));
  }
  return out;
}

// Matrix of d from degree `degree` to degree + 1 in the host's own indices.
QMatrix degree_block(const DGLA& g, int degree) {
  auto src = g.indices_in_degree(degree);
  auto tgt = g.indices_in_degree(degree + 1);
  std::vector<std::size_t> pos(g.dim(), 0);
  for (std::size_t q = 0; q < tgt.size(); ++q) pos[tgt[q]] = q;
  QMatrix m(tgt.size(), src.size());
  for (std::size_t c = 0; c < src.size(); ++c)
    for (const auto& [i, x] : g.d_basis(src[c])) m(pos[i], c) = x;
  return m;
}

// Canonical representative of v modulo span(basis): zero at every pivot.
Vec reduce_modulo(const Vec& v, const std::vector<Vec>& basis) {
  if (basis.empty()) return v;
  RowEchelon e = row_echelon(QMatrix::from_rows(v.size(), basis));
  Vec r = v;
  for (std::size_t k = 0; k < e.pivot_columns.size(); ++k) {
    const Rational f = r[e.pivot_columns[k]];
    if (f != 0) r -= f * e.reduced.row(k);
  }
  return r;
}

std::optional<Vec> solve_modulo(const DGLA& g, const std::vector<Vec>& unknowns,
                                const std::vector<Vec>& modulo, const Vec& rhs) {
  std::vector<Vec> cols;
  for (const auto& u : unknowns) cols.push_back(g.differential(u));
  cols.insert(cols.end(), modulo.begin(), modulo.end());
  if (cols.empty()) return rhs.is_zero() ? std::optional<Vec>(g.zero()) : std::nullopt;
  auto c = solve_affine(QMatrix::from_columns(g.dim(), cols), rhs);
  if (!c) return std::nullopt;
  Vec u = g.zero();
  for (std::size_t k = 0; k < unknowns.size(); ++k)
    if ((*c)[k] != 0) u += (*c)[k] * unknowns[k];
  return u;
}

}  // namespace

SquareZeroSolution mc_solve_square_zero(const ArtinHost& h) {
  if (!is_square_zero(h.base())) throw PreconditionFailed("mc_solve_square_zero needs m^2 = 0");
  const DGLA& g = h.host();
  QMatrix d1 = degree_block(g, 1);
  std::vector<Vec> local;
  if (d1.cols() > 0) local = kernel_basis(d1);
  return {embed_degree(g, 1, local)};
}

ObstructionStep obstruction_step(const ArtinHost& h, const Vec& z, std::size_t order) {
  const DGLA& g = h.host();
  if (order < 1) throw PreconditionFailed("obstruction order starts at 1");
  if (!g.is_homogeneous(z, 1)) throw PreconditionFailed("lifting needs a degree-1 element");
  Vec f = curvature(h, z);
  if (!h.in_filtration(f, order))
    throw PreconditionFailed("curvature is not in m^" + std::to_string(order) + " (x) g");

  ObstructionStep step;
  step.order = order;
  step.curvature_component = reduce_modulo(f, h.filtration_basis(order + 1, 2));
  step.correction = g.zero();
  if (step.curvature_component.is_zero()) {
    step.lifted = z;
    return step;
  }
  step.closed = h.in_filtration(g.differential(step.curvature_component), order + 1);
  auto u = solve_modulo(g, h.filtration_basis(order, 1), h.filtration_basis(order + 1, 2), -f);
  if (!u) {
    step.obstructed = true;
    return step;
  }
  step.correction = *u;
  step.lifted = z + *u;
  return step;
}

std::vector<ObstructionStep> lift(const ArtinHost& h, const Vec& z, std::size_t max_order) {
  std::vector<ObstructionStep> steps;
  Vec current = z;
  for (std::size_t order = 1; order <= max_order; ++order) {
    steps.push_back(obstruction_step(h, current, order));
    if (steps.back().obstructed) break;
    current = *steps.back().lifted;
  }
  return steps;
}

GaugeSearch gauge_equivalent(const ArtinHost& h, const Vec& z, const Vec& z_prime) {
  const DGLA& g = h.host();
  if (!is_mc(h, z) || !is_mc(h, z_prime)) throw PreconditionFailed("gauge_equivalent needs two MC elements");
  const std::size_t n = h.filtration().nilpotency_index;
  // Invariant at level j: exp(gamma) . z = z' mod F^j, and exp(stab) is the
  // full stabilizer of z mod F^j. On stab, s -> exp(s) . z - z mod F^{j+1}
  // is linear (a homomorphism into an abelian group), so each level is one
  // exact linear solve and the set of candidates is never narrowed.
  Vec gamma = g.zero();
  std::vector<Vec> stab = h.filtration_basis(1, 0);
  for (std::size_t j = 1; j < n; ++j) {
    const Vec delta = gauge_act(h, gamma, z) - z_prime;
    const auto modulus = h.filtration_basis(j + 1, 1);
    std::vector<Vec> cols;
    for (const auto& s : stab) cols.push_back(gauge_act(h, s, z) - z);
    cols.insert(cols.end(), modulus.begin(), modulus.end());
    if (!h.in_filtration(delta, j + 1)) {
      auto c = cols.empty() ? std::nullopt : solve_affine(QMatrix::from_columns(g.dim(), cols), -delta);
      if (!c) return GaugeNotFound{j};
      Vec sigma = g.zero();
      for (std::size_t k = 0; k < stab.size(); ++k)
        if ((*c)[k] != 0) sigma += (*c)[k] * stab[k];
      gamma = bch(h, gamma, sigma);
    }
    if (cols.empty()) continue;
    std::vector<Vec> next;
    for (const auto& k : kernel_basis(QMatrix::from_columns(g.dim(), cols))) {
      Vec s = g.zero();
      for (std::size_t i = 0; i < stab.size(); ++i)
        if (k[i] != 0) s += k[i] * stab[i];
      if (!s.is_zero()) next.push_back(std::move(s));
    }
    stab = span_basis(next, g.dim());
  }
  if (gauge_act(h, gamma, z) == z_prime) return GaugeFound{gamma};
  return GaugeNotFound{n};
}

}  // namespace mcdeform
