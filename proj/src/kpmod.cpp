#include "tfr/kpmod.hpp"

#include <algorithm>

namespace tfr {

namespace {

Matrix reduce_into(const Matrix& m, const Field& field) {
  if (field.is_rational()) return m;
  Matrix out(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c)
      out(r, c) = Rational(static_cast<unsigned long>(reduce_mod(m(r, c), field.modulus())));
  return out;
}

std::string edge_name(const Poset& p, Element x, Element y) { return p.label(x) + "<" + p.label(y); }

// Indicator-style modules: stalk K on `support`, identity between supported
// neighbours, zero maps elsewhere.
KPModule indicator_module(const Poset& p, const std::vector<bool>& support, const Field& field) {
  std::vector<std::size_t> stalks(p.size());
  for (Element x = 0; x < p.size(); ++x) stalks[x] = support[x] ? 1 : 0;
  std::map<Relation, Matrix> edges;
  for (const auto& [x, y] : p.hasse())
    edges.emplace(Relation{x, y}, support[x] && support[y] ? Matrix::identity(1) : Matrix(stalks[x], stalks[y]));
  return KPModule(p, std::move(stalks), std::move(edges), field);
}

}  // namespace

KPModule::KPModule(Poset poset, std::vector<std::size_t> stalk_dims, std::map<Relation, Matrix> edge_maps,
                   Field field)
    : poset_(std::move(poset)), stalks_(std::move(stalk_dims)), field_(field) {
  const std::size_t n = poset_.size();
  if (stalks_.size() != n) throw std::invalid_argument("one stalk dimension per poset element is required");
  for (auto& [edge, mat] : edge_maps) {
    const auto [x, y] = edge;
    if (x >= n || y >= n || !poset_.covers(x, y))
      throw std::invalid_argument("transition given on a pair that is not a Hasse edge");
    if (mat.rows() != stalks_[x] || mat.cols() != stalks_[y])
      throw std::invalid_argument("transition " + edge_name(poset_, x, y) + " must be " +
                                  std::to_string(stalks_[x]) + "x" + std::to_string(stalks_[y]));
  }
  for (const auto& [x, y] : poset_.hasse()) {
    auto it = edge_maps.find({x, y});
    edges_.emplace(Relation{x, y},
                   reduce_into(it == edge_maps.end() ? Matrix(stalks_[x], stalks_[y]) : it->second, field_));
  }

  // Composites M_xy: for each y walk down in reverse linear extension; every
  // upper cover z of x below y must give the same E_xz M_zy.
  composite_.assign(n * n, std::nullopt);
  const auto& order = poset_.linear_extension();
  for (Element y = 0; y < n; ++y) {
    composite_[y * n + y] = Matrix::identity(stalks_[y]);
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
      const Element x = *it;
      if (!poset_.less(x, y)) continue;
      std::optional<Matrix> value;
      for (auto z : poset_.upper_covers(x)) {
        if (!poset_.leq(z, y)) continue;
        Matrix candidate = reduce_into(edges_.at({x, z}) * *composite_[z * n + y], field_);
        if (!value) {
          value = std::move(candidate);
        } else if (!value->equals_in(candidate, field_)) {
          throw FunctorialityError("module is not functorial: two Hasse paths from " + poset_.label(y) + " down to " +
                                       poset_.label(x) + " give different maps",
                                   x, y);
        }
      }
      composite_[x * n + y] = std::move(value);
    }
  }
}

const Matrix& KPModule::transition(Element x, Element y) const {
  const std::size_t n = poset_.size();
  if (x >= n || y >= n || !poset_.leq(x, y)) throw std::invalid_argument("transition requires x <= y");
  return *composite_[x * n + y];
}

// ----------------------------------------------------------------- limits

Limit limit_on_open(const KPModule& m, const std::vector<Element>& open) {
  const Poset& p = m.poset();
  if (!is_lower_set(p, open)) throw std::invalid_argument("restriction set is not open (not a lower set)");
  Limit lim;
  lim.elements = open;
  std::sort(lim.elements.begin(), lim.elements.end());
  std::vector<int> position(p.size(), -1);
  std::size_t total = 0;
  for (std::size_t i = 0; i < lim.elements.size(); ++i) {
    position[lim.elements[i]] = static_cast<int>(i);
    lim.offsets.push_back(total);
    total += m.stalk_dim(lim.elements[i]);
  }
  // m_x - M_xy m_y = 0 on Hasse edges inside the open set.
  std::vector<std::vector<Rational>> rows;
  for (const auto& [x, y] : p.hasse()) {
    if (position[x] < 0 || position[y] < 0) continue;
    const Matrix& e = m.edge_maps().at({x, y});
    const std::size_t ox = lim.offsets[static_cast<std::size_t>(position[x])];
    const std::size_t oy = lim.offsets[static_cast<std::size_t>(position[y])];
    for (std::size_t r = 0; r < m.stalk_dim(x); ++r) {
      std::vector<Rational> row(total);
      row[ox + r] = 1;
      for (std::size_t c = 0; c < m.stalk_dim(y); ++c) row[oy + c] -= e(r, c);
      rows.push_back(std::move(row));
    }
  }
  lim.basis = kernel_basis(Matrix::from_rows(rows, total), m.field());
  lim.dim = lim.basis.cols();
  return lim;
}

Limit limit(const KPModule& m) {
  std::vector<Element> all(m.poset().size());
  for (Element x = 0; x < all.size(); ++x) all[x] = x;
  return limit_on_open(m, all);
}

std::size_t limit_dim_on_open(const KPModule& m, const std::vector<Element>& open) {
  return limit_on_open(m, open).dim;
}

// ------------------------------------------------------------- flasqueness

FlasqueVerdict is_flasque(const KPModule& m) {
  const Poset& p = m.poset();
  for (auto x : p.linear_extension()) {
    const auto below = strict_down_set(p, x);
    const Limit lim = limit_on_open(m, below);
    // Image of M_x in ⊕_{z<x} M_z.
    Matrix restriction(lim.offsets.empty() ? 0 : lim.offsets.back() + m.stalk_dim(below.back()), m.stalk_dim(x));
    for (std::size_t i = 0; i < below.size(); ++i) {
      const Matrix& t = m.transition(below[i], x);
      for (std::size_t r = 0; r < t.rows(); ++r)
        for (std::size_t c = 0; c < t.cols(); ++c) restriction(lim.offsets[i] + r, c) = t(r, c);
    }
    if (rank(restriction, m.field()) != lim.dim) {
      auto closed = below;
      closed.push_back(x);
      std::sort(closed.begin(), closed.end());
      return {false, std::make_pair(std::move(closed), x)};
    }
  }
  return {};
}

FlasqueVerdict is_flasque_by_open_sets(const KPModule& m, std::size_t bound) {
  const Poset& p = m.poset();
  for (const auto& open : lower_sets(p, bound)) {
    const Limit big = limit_on_open(m, open);
    for (auto x : open) {
      const bool maximal =
          std::none_of(open.begin(), open.end(), [&](Element y) { return p.less(x, y); });
      if (!maximal) continue;
      std::vector<Element> smaller;
      for (auto y : open)
        if (y != x) smaller.push_back(y);
      const Limit small = limit_on_open(m, smaller);
      // Project the basis of lim M|_U onto the coordinates of U \ x.
      std::vector<std::vector<Rational>> rows;
      for (std::size_t i = 0; i < big.elements.size(); ++i) {
        if (big.elements[i] == x) continue;
        for (std::size_t r = 0; r < m.stalk_dim(big.elements[i]); ++r) {
          std::vector<Rational> row(big.dim);
          for (std::size_t c = 0; c < big.dim; ++c) row[c] = big.basis(big.offsets[i] + r, c);
          rows.push_back(std::move(row));
        }
      }
      if (rank(Matrix::from_rows(rows, big.dim), m.field()) != small.dim) return {false, std::make_pair(open, x)};
    }
  }
  return {};
}

// -------------------------------------------------------- cochain model

CochainComplex poset_cochain_complex(const KPModule& m, std::size_t max_degree) {
  const Poset& p = m.poset();
  const auto chains = strict_chains(p, max_degree + 2);
  const std::size_t degrees = max_degree + 2;

  // Index chains whose bottom stalk is nonzero.
  std::vector<std::map<std::vector<Element>, std::size_t>> offset(degrees);
  CochainComplex c;
  c.min_degree = 0;
  c.dims.assign(degrees, 0);
  for (std::size_t n = 0; n < degrees && n < chains.size(); ++n)
    for (const auto& chain : chains[n]) {
      const std::size_t d = m.stalk_dim(chain.front());
      if (d == 0) continue;
      offset[n].emplace(chain, c.dims[n]);
      c.dims[n] += d;
    }

  for (std::size_t n = 0; n + 1 < degrees; ++n) {
    SparseMatrix delta(c.dims[n + 1], c.dims[n]);
    for (const auto& [sigma, row0] : offset[n + 1]) {
      const Element x0 = sigma.front();
      // Omit x0: apply M_{x0 x1}.
      std::vector<Element> face(sigma.begin() + 1, sigma.end());
      if (auto it = offset[n].find(face); it != offset[n].end()) {
        const Matrix& t = m.transition(x0, sigma[1]);
        for (std::size_t r = 0; r < t.rows(); ++r)
          for (std::size_t col = 0; col < t.cols(); ++col)
            if (sgn(t(r, col)) != 0) delta.add(row0 + r, it->second + col, t(r, col));
      }
      // Omit x_i, i >= 1: sign (-1)^i on the identity of M_{x0}.
      for (std::size_t i = 1; i < sigma.size(); ++i) {
        face.assign(sigma.begin(), sigma.end());
        face.erase(face.begin() + static_cast<std::ptrdiff_t>(i));
        auto it = offset[n].find(face);
        if (it == offset[n].end()) continue;
        for (std::size_t r = 0; r < m.stalk_dim(x0); ++r) delta.add(row0 + r, it->second + r, i % 2 == 0 ? 1 : -1);
      }
    }
    c.coboundaries.push_back(std::move(delta));
  }
  return c;
}

GradedDims poset_cohomology(const KPModule& m, std::size_t max_degree) {
  const GradedDims full = cohomology_dims(poset_cochain_complex(m, max_degree), m.field());
  GradedDims out;
  for (const auto& [n, v] : full.support())
    if (n <= static_cast<int>(max_degree)) out.set(n, v);
  return out;
}

// ---------------------------------------------------------- constructions

KPModule constant_module(const Poset& p, const Field& field) {
  return indicator_module(p, std::vector<bool>(p.size(), true), field);
}

KPModule skyscraper(const Poset& p, Element x, const Field& field) {
  if (x >= p.size()) throw std::out_of_range("skyscraper: unknown element");
  std::vector<bool> support(p.size(), false);
  support[x] = true;
  return indicator_module(p, support, field);
}

KPModule interval_module(const Poset& p, Element x, const Field& field) {
  if (x >= p.size()) throw std::out_of_range("interval_module: unknown element");
  std::vector<bool> support(p.size());
  for (Element y = 0; y < p.size(); ++y) support[y] = p.leq(x, y);
  return indicator_module(p, support, field);
}

KPModule degree_sheaf(const Fan& fan, const LatticeVector& a, const Field& field) {
  if (a.size() != fan.ambient_dim())
    throw std::invalid_argument("degree vector has length " + std::to_string(a.size()) + ", expected " +
                                std::to_string(fan.ambient_dim()));
  std::vector<bool> support(fan.size());
  for (std::size_t i = 0; i < fan.size(); ++i) support[i] = fan.cone(i).contains(a);
  return indicator_module(face_poset(fan), support, field);
}

}  // namespace tfr
