#include "mcdeform/graded.hpp"

#include <algorithm>
#include <set>
#include <tuple>

#include "mcdeform/errors.hpp"

namespace mcdeform {

GradedVectorSpace::GradedVectorSpace(std::map<int, std::vector<std::string>> components) {
  for (auto& [deg, labels] : components) {
    if (labels.empty()) continue;
    std::set<std::string> seen(labels.begin(), labels.end());
    if (seen.size() != labels.size())
      throw ShapeMismatch("duplicate basis label in degree " + std::to_string(deg));
    components_.emplace(deg, std::move(labels));
  }
}

std::size_t GradedVectorSpace::dim(int degree) const {
  auto it = components_.find(degree);
  return it == components_.end() ? 0 : it->second.size();
}

std::size_t GradedVectorSpace::total_dim() const {
  std::size_t n = 0;
  for (const auto& [deg, labels] : components_) n += labels.size();
  return n;
}

const std::vector<std::string>& GradedVectorSpace::labels(int degree) const {
  static const std::vector<std::string> empty;
  auto it = components_.find(degree);
  return it == components_.end() ? empty : it->second;
}

std::vector<int> GradedVectorSpace::degrees() const {
  std::vector<int> out;
  for (const auto& [deg, labels] : components_) out.push_back(deg);
  return out;
}

std::optional<std::size_t> GradedVectorSpace::index_of(int degree, const std::string& label) const {
  const auto& ls = labels(degree);
  auto it = std::find(ls.begin(), ls.end(), label);
  if (it == ls.end()) return std::nullopt;
  return static_cast<std::size_t>(it - ls.begin());
}

ChainComplex::ChainComplex(GradedVectorSpace space, std::map<int, QMatrix> differential)
    : space_(std::move(space)) {
  for (auto& [deg, m] : differential) {
    if (m.rows() != space_.dim(deg + 1) || m.cols() != space_.dim(deg))
      throw ShapeMismatch("differential block d^" + std::to_string(deg) + " has shape " +
                          std::to_string(m.rows()) + "x" + std::to_string(m.cols()) + ", expected " +
                          std::to_string(space_.dim(deg + 1)) + "x" + std::to_string(space_.dim(deg)));
    if (m.rows() == 0 || m.cols() == 0 || m.is_zero()) continue;
    differential_.emplace(deg, std::move(m));
  }
}

QMatrix ChainComplex::d(int degree) const {
  auto it = differential_.find(degree);
  if (it != differential_.end()) return it->second;
  return QMatrix(space_.dim(degree + 1), space_.dim(degree));
}

QMatrix GradedMap::block(const ChainComplex& source, const ChainComplex& target, int i) const {
  auto it = blocks.find(i);
  if (it != blocks.end()) return it->second;
  return QMatrix(target.dim(i + degree), source.dim(i));
}

ValidationReport validate_complex(const ChainComplex& c) {
  for (int deg : c.degrees()) {
    QMatrix dd = c.d(deg + 1) * c.d(deg);
    for (std::size_t r = 0; r < dd.rows(); ++r)
      for (std::size_t col = 0; col < dd.cols(); ++col)
        if (dd(r, col) != 0) {
          return ValidationReport::fail(
              "d_squared",
              {std::to_string(deg), c.space().labels(deg)[col], c.space().labels(deg + 2)[r]},
              "d^" + std::to_string(deg + 1) + " d^" + std::to_string(deg) + " has entry " +
                  to_string(dd(r, col)) + " at (" + c.space().labels(deg + 2)[r] + ", " +
                  c.space().labels(deg)[col] + ")");
        }
  }
  return ValidationReport::pass();
}

std::size_t homology_dim(const ChainComplex& c, int degree) {
  const std::size_t n = c.dim(degree);
  if (n == 0) return 0;
  const std::size_t kernel = n - rank(c.d(degree));
  return kernel - rank(c.d(degree - 1));
}

long euler_characteristic(const ChainComplex& c) {
  long chi = 0;
  for (int deg : c.degrees()) chi += (deg % 2 == 0 ? 1 : -1) * static_cast<long>(c.dim(deg));
  return chi;
}

long homology_euler_characteristic(const ChainComplex& c) {
  long chi = 0;
  for (int deg : c.degrees())
    chi += (deg % 2 == 0 ? 1 : -1) * static_cast<long>(homology_dim(c, deg));
  return chi;
}

std::vector<HomUnit> hom_basis(const ChainComplex& a, const ChainComplex& b, int k) {
  std::vector<HomUnit> units;
  for (int i : a.degrees()) {
    const std::size_t tdim = b.dim(i + k);
    for (std::size_t r = 0; r < tdim; ++r)
      for (std::size_t s = 0; s < a.dim(i); ++s) units.push_back({i, s, r});
  }
  return units;
}

std::vector<int> hom_degrees(const ChainComplex& a, const ChainComplex& b) {
  auto ad = a.degrees();
  auto bd = b.degrees();
  std::vector<int> out;
  if (ad.empty() || bd.empty()) return out;
  for (int k = bd.front() - ad.back(); k <= bd.back() - ad.front(); ++k)
    if (!hom_basis(a, b, k).empty()) out.push_back(k);
  return out;
}

namespace {

using UnitKey = std::tuple<int, std::size_t, std::size_t>;

std::map<UnitKey, std::size_t> unit_index(const std::vector<HomUnit>& units) {
  std::map<UnitKey, std::size_t> idx;
  for (std::size_t n = 0; n < units.size(); ++n)
    idx[{units[n].source_degree, units[n].target_index, units[n].source_index}] = n;
  return idx;
}

std::vector<std::string> hom_labels(const ChainComplex& a, const ChainComplex& b,
                                    const std::vector<HomUnit>& units, int k, bool qualify) {
  std::vector<std::string> labels;
  labels.reserve(units.size());
  for (const auto& u : units) {
    const std::string& src = a.space().labels(u.source_degree)[u.source_index];
    const std::string& tgt = b.space().labels(u.source_degree + k)[u.target_index];
    if (qualify)
      labels.push_back(src + "@" + std::to_string(u.source_degree) + "->" + tgt + "@" +
                       std::to_string(u.source_degree + k));
    else
      labels.push_back(src + "->" + tgt);
  }
  return labels;
}

}  // namespace

GradedMap hom_vector_to_map(const ChainComplex& a, const ChainComplex& b, int k, const Vec& coords) {
  auto units = hom_basis(a, b, k);
  if (coords.size() != units.size()) throw ShapeMismatch("Hom coordinate vector has wrong length");
  GradedMap f;
  f.degree = k;
  for (int i : a.degrees())
    if (b.dim(i + k) > 0) f.blocks.emplace(i, QMatrix(b.dim(i + k), a.dim(i)));
  for (std::size_t n = 0; n < units.size(); ++n) {
    if (coords[n] == 0) continue;
    const auto& u = units[n];
    f.blocks.at(u.source_degree)(u.target_index, u.source_index) = coords[n];
  }
  return f;
}

Vec hom_map_to_vector(const ChainComplex& a, const ChainComplex& b, const GradedMap& f) {
  auto units = hom_basis(a, b, f.degree);
  Vec v(units.size());
  for (std::size_t n = 0; n < units.size(); ++n) {
    const auto& u = units[n];
    auto it = f.blocks.find(u.source_degree);
    if (it != f.blocks.end()) v[n] = it->second(u.target_index, u.source_index);
  }
  return v;
}

GradedMap compose(const ChainComplex& a, const ChainComplex& b, const ChainComplex& c,
                  const GradedMap& g, const GradedMap& f) {
  GradedMap h;
  h.degree = f.degree + g.degree;
  for (int i : a.degrees()) {
    if (c.dim(i + h.degree) == 0) continue;
    QMatrix m = g.block(b, c, i + f.degree) * f.block(a, b, i);
    if (!m.is_zero()) h.blocks.emplace(i, std::move(m));
  }
  return h;
}

ChainComplex hom_complex(const ChainComplex& a, const ChainComplex& b) {
  const auto degrees = hom_degrees(a, b);
  std::map<int, std::vector<HomUnit>> units;
  for (int k : degrees) units[k] = hom_basis(a, b, k);

  // Qualify labels with degrees only when plain "src->tgt" labels collide.
  bool qualify = false;
  for (const auto& [k, us] : units) {
    auto ls = hom_labels(a, b, us, k, false);
    std::set<std::string> seen(ls.begin(), ls.end());
    if (seen.size() != ls.size()) qualify = true;
  }
  std::map<int, std::vector<std::string>> comps;
  for (const auto& [k, us] : units) comps[k] = hom_labels(a, b, us, k, qualify);

  std::map<int, QMatrix> diff;
  for (const auto& [k, us] : units) {
    auto next = units.find(k + 1);
    if (next == units.end()) continue;
    auto idx = unit_index(next->second);
    QMatrix m(next->second.size(), us.size());
    const Rational sign = (k % 2 == 0) ? 1 : -1;
    for (std::size_t n = 0; n < us.size(); ++n) {
      const auto& u = us[n];
      const int tdeg = u.source_degree + k;
      // d_B o e
      QMatrix db = b.d(tdeg);
      for (std::size_t r = 0; r < db.rows(); ++r)
        if (db(r, u.target_index) != 0)
          m(idx.at({u.source_degree, r, u.source_index}), n) += db(r, u.target_index);
      // - (-1)^k e o d_A
      QMatrix da = a.d(u.source_degree - 1);
      for (std::size_t s = 0; s < da.cols(); ++s)
        if (da(u.source_index, s) != 0)
          m(idx.at({u.source_degree - 1, u.target_index, s}), n) -= sign * da(u.source_index, s);
    }
    diff.emplace(k, std::move(m));
  }
  return ChainComplex(GradedVectorSpace(std::move(comps)), std::move(diff));
}

ChainComplex end_complex(const ChainComplex& a) { return hom_complex(a, a); }

ChainComplex mapping_cone(const ChainComplex& a, const ChainComplex& b, const GradedMap& f) {
  if (f.degree != 0) throw ShapeMismatch("mapping cone needs a degree-0 map");
  std::set<int> degs;
  for (int i : a.degrees()) degs.insert(i - 1);
  for (int i : b.degrees()) degs.insert(i);

  std::map<int, std::vector<std::string>> comps;
  for (int n : degs) {
    auto& ls = comps[n];
    for (const auto& l : a.space().labels(n + 1)) ls.push_back("a:" + l);
    for (const auto& l : b.space().labels(n)) ls.push_back("b:" + l);
  }
  std::map<int, QMatrix> diff;
  for (int n : degs) {
    const std::size_t a1 = a.dim(n + 1), b0 = b.dim(n);
    const std::size_t a2 = a.dim(n + 2), b1 = b.dim(n + 1);
    if (a1 + b0 == 0 || a2 + b1 == 0) continue;
    QMatrix m(a2 + b1, a1 + b0);
    QMatrix da = a.d(n + 1);
    QMatrix fb = f.block(a, b, n + 1);
    QMatrix db = b.d(n);
    for (std::size_t r = 0; r < a2; ++r)
      for (std::size_t c = 0; c < a1; ++c) m(r, c) = -da(r, c);
    for (std::size_t r = 0; r < b1; ++r) {
      for (std::size_t c = 0; c < a1; ++c) m(a2 + r, c) = fb(r, c);
      for (std::size_t c = 0; c < b0; ++c) m(a2 + r, a1 + c) = db(r, c);
    }
    diff.emplace(n, std::move(m));
  }
  return ChainComplex(GradedVectorSpace(std::move(comps)), std::move(diff));
}

bool is_chain_map(const ChainComplex& a, const ChainComplex& b, const GradedMap& f) {
  std::set<int> degs;
  for (int i : a.degrees()) {
    degs.insert(i);
    degs.insert(i - 1);
  }
  const Rational sign = (f.degree % 2 == 0) ? 1 : -1;
  for (int i : degs) {
    QMatrix lhs = b.d(i + f.degree) * f.block(a, b, i);
    QMatrix rhs = sign * (f.block(a, b, i + 1) * a.d(i));
    if (!(lhs == rhs)) return false;
  }
  return true;
}

}  // namespace mcdeform
