#include "tfr/fan.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace tfr {

namespace {

using ZVec = std::vector<Integer>;

ZVec to_z(const LatticeVector& v) {
  ZVec out;
  out.reserve(v.size());
  for (auto x : v) out.emplace_back(static_cast<long>(x));
  return out;
}

LatticeVector to_lattice(const ZVec& v) {
  LatticeVector out;
  out.reserve(v.size());
  for (const auto& x : v) {
    if (!x.fits_slong_p()) throw std::overflow_error("lattice vector entry exceeds 64 bits");
    out.push_back(x.get_si());
  }
  return out;
}

Integer dot(const ZVec& a, const ZVec& b) {
  Integer s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

__int128 dot(const LatticeVector& a, const LatticeVector& b) {
  __int128 s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += static_cast<__int128>(a[i]) * b[i];
  return s;
}

void make_primitive(ZVec& v) {
  Integer g = 0;
  for (const auto& x : v) g = gcd(g, x);
  if (g > 1)
    for (auto& x : v) x /= g;
}

bool is_zero(const ZVec& v) {
  return std::all_of(v.begin(), v.end(), [](const Integer& x) { return x == 0; });
}

Matrix to_matrix(const std::vector<ZVec>& rows, std::size_t cols) {
  Matrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  return m;
}

std::size_t rank_of(const std::vector<ZVec>& rows, std::size_t cols) {
  return rank(to_matrix(rows, cols), Field::rationals());
}

// Columns of a rational matrix scaled to primitive integer vectors.
std::vector<ZVec> integer_columns(const Matrix& m) {
  std::vector<ZVec> out;
  for (std::size_t c = 0; c < m.cols(); ++c) {
    Integer denom_lcm = 1;
    for (std::size_t r = 0; r < m.rows(); ++r) denom_lcm = lcm(denom_lcm, m(r, c).get_den());
    ZVec v(m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r) {
      Rational scaled = m(r, c) * denom_lcm;
      v[r] = scaled.get_num();
    }
    make_primitive(v);
    out.push_back(std::move(v));
  }
  return out;
}

// Indices of a maximal linearly independent subfamily, chosen greedily.
std::vector<std::size_t> independent_rows(const std::vector<ZVec>& rows, std::size_t cols) {
  std::vector<std::size_t> picked;
  std::vector<ZVec> basis;
  for (std::size_t i = 0; i < rows.size() && basis.size() < cols; ++i) {
    basis.push_back(rows[i]);
    if (rank_of(basis, cols) == basis.size())
      picked.push_back(i);
    else
      basis.pop_back();
  }
  return picked;
}

// Inverse of a square rational matrix by Gauss-Jordan elimination.
Matrix inverse(const Matrix& a) {
  const std::size_t n = a.rows();
  std::vector<std::vector<Rational>> w(n, std::vector<Rational>(2 * n));
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) w[r][c] = a(r, c);
    w[r][n + r] = 1;
  }
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t sel = col;
    while (sel < n && sgn(w[sel][col]) == 0) ++sel;
    if (sel == n) throw std::logic_error("singular matrix in inverse");
    std::swap(w[col], w[sel]);
    const Rational scale = 1 / w[col][col];
    for (auto& x : w[col]) x *= scale;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || sgn(w[r][col]) == 0) continue;
      const Rational factor = w[r][col];
      for (std::size_t c = 0; c < 2 * n; ++c) w[r][c] -= factor * w[col][c];
    }
  }
  Matrix inv(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) inv(r, c) = w[r][n + c];
  return inv;
}

struct Ray {
  ZVec v;
  std::vector<bool> tight;  // over constraint rows
};

bool subset_of(const std::vector<bool>& a, const std::vector<bool>& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] && !b[i]) return false;
  return true;
}

std::vector<ZVec> extreme_rays_z(const std::vector<ZVec>& a, std::size_t k) {
  if (k == 0) return {};
  const std::size_t m = a.size();
  const auto init = independent_rows(a, k);
  if (init.size() < k) throw std::invalid_argument("inequality system does not define a pointed cone");

  // Start from the simplicial cone cut out by k independent rows: its rays
  // are the columns of the inverse.
  Matrix a0(k, k);
  for (std::size_t r = 0; r < k; ++r)
    for (std::size_t c = 0; c < k; ++c) a0(r, c) = a[init[r]][c];
  const auto columns = integer_columns(inverse(a0));

  std::vector<bool> processed(m, false);
  for (auto i : init) processed[i] = true;
  std::vector<Ray> rays;
  for (const auto& col : columns) {
    Ray ray{col, std::vector<bool>(m, false)};
    for (std::size_t i = 0; i < m; ++i)
      if (processed[i] && dot(a[i], col) == 0) ray.tight[i] = true;
    rays.push_back(std::move(ray));
  }

  for (std::size_t row = 0; row < m; ++row) {
    if (processed[row]) continue;
    std::vector<Integer> value(rays.size());
    std::vector<std::size_t> pos, neg;
    std::vector<Ray> next;
    for (std::size_t r = 0; r < rays.size(); ++r) {
      value[r] = dot(a[row], rays[r].v);
      const int s = sgn(value[r]);
      if (s > 0) pos.push_back(r);
      if (s < 0) neg.push_back(r);
      if (s >= 0) {
        Ray kept = rays[r];
        if (s == 0) kept.tight[row] = true;
        next.push_back(std::move(kept));
      }
    }
    for (auto p : pos)
      for (auto n : neg) {
        std::vector<bool> common(m);
        std::size_t count = 0;
        for (std::size_t i = 0; i < m; ++i) {
          common[i] = rays[p].tight[i] && rays[n].tight[i];
          if (common[i]) ++count;
        }
        if (count + 2 < k) continue;
        bool adjacent = true;
        for (std::size_t r = 0; r < rays.size() && adjacent; ++r)
          if (r != p && r != n && subset_of(common, rays[r].tight)) adjacent = false;
        if (!adjacent) continue;
        ZVec v(k);
        for (std::size_t c = 0; c < k; ++c) v[c] = value[p] * rays[n].v[c] - value[n] * rays[p].v[c];
        make_primitive(v);
        common[row] = true;
        next.push_back(Ray{std::move(v), std::move(common)});
      }
    processed[row] = true;
    rays = std::move(next);
  }

  std::vector<ZVec> out;
  for (auto& r : rays) out.push_back(std::move(r.v));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// Basis (as columns, integer primitive) of {x : rows · x = 0}.
std::vector<ZVec> kernel_z(const std::vector<ZVec>& rows, std::size_t cols) {
  if (rows.empty()) {
    std::vector<ZVec> out(cols, ZVec(cols, 0));
    for (std::size_t i = 0; i < cols; ++i) out[i][i] = 1;
    return out;
  }
  return integer_columns(kernel_basis(to_matrix(rows, cols), Field::rationals()));
}

void check_dim(const LatticeVector& a, std::size_t d) {
  if (a.size() != d)
    throw std::invalid_argument("degree vector has length " + std::to_string(a.size()) + ", expected " +
                                std::to_string(d));
}

}  // namespace

std::string to_string(const LatticeVector& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i > 0) s += ",";
    s += std::to_string(v[i]);
  }
  return s + "]";
}

std::vector<LatticeVector> extreme_rays(const std::vector<LatticeVector>& inequalities, std::size_t dim) {
  std::vector<ZVec> a;
  for (const auto& row : inequalities) {
    check_dim(row, dim);
    a.push_back(to_z(row));
  }
  std::vector<LatticeVector> out;
  for (const auto& r : extreme_rays_z(a, dim)) out.push_back(to_lattice(r));
  return out;
}

// ------------------------------------------------------------------ Cone

Cone Cone::from_generators(std::size_t ambient_dim, const std::vector<LatticeVector>& generators) {
  std::vector<ZVec> gens;
  for (const auto& g : generators) {
    if (g.size() != ambient_dim)
      throw std::invalid_argument("generator " + to_string(g) + " does not lie in R^" + std::to_string(ambient_dim));
    ZVec z = to_z(g);
    if (is_zero(z)) continue;
    make_primitive(z);
    gens.push_back(std::move(z));
  }
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());

  Cone cone;
  cone.ambient_dim_ = ambient_dim;
  for (const auto& e : kernel_z(gens, ambient_dim)) cone.equations_.push_back(to_lattice(e));
  if (gens.empty()) return cone;

  const auto basis_idx = independent_rows(gens, ambient_dim);
  const std::size_t r = basis_idx.size();
  cone.dim_ = r;

  // Dual cone in coordinates of the span: y -> h = Σ y_j b_j.
  std::vector<ZVec> a;
  for (const auto& g : gens) {
    ZVec row(r);
    for (std::size_t j = 0; j < r; ++j) row[j] = dot(gens[basis_idx[j]], g);
    a.push_back(std::move(row));
  }
  const auto ys = extreme_rays_z(a, r);
  if (rank_of(ys, r) < r) {
    std::string shown;
    for (const auto& g : gens) shown += to_string(to_lattice(g));
    throw NonPointedCone("cone generated by " + shown + " contains a line");
  }
  std::vector<ZVec> facets;
  for (const auto& y : ys) {
    ZVec h(ambient_dim, 0);
    for (std::size_t j = 0; j < r; ++j)
      for (std::size_t c = 0; c < ambient_dim; ++c) h[c] += y[j] * gens[basis_idx[j]][c];
    make_primitive(h);
    facets.push_back(std::move(h));
  }
  std::sort(facets.begin(), facets.end());
  for (const auto& h : facets) cone.facets_.push_back(to_lattice(h));

  // A generator is extreme iff its tight facets have rank dim - 1.
  for (const auto& g : gens) {
    std::vector<ZVec> tight;
    for (const auto& h : facets)
      if (dot(h, g) == 0) tight.push_back(h);
    if (rank_of(tight, ambient_dim) + 1 == r) cone.rays_.push_back(to_lattice(g));
  }
  std::sort(cone.rays_.begin(), cone.rays_.end());
  return cone;
}

bool Cone::contains(const LatticeVector& a) const {
  check_dim(a, ambient_dim_);
  for (const auto& e : equations_)
    if (dot(e, a) != 0) return false;
  for (const auto& h : facets_)
    if (dot(h, a) < 0) return false;
  return true;
}

bool Cone::relint_contains(const LatticeVector& a) const {
  check_dim(a, ambient_dim_);
  for (const auto& e : equations_)
    if (dot(e, a) != 0) return false;
  for (const auto& h : facets_)
    if (dot(h, a) <= 0) return false;
  return true;
}

bool Cone::contains(const Cone& other) const {
  return std::all_of(other.rays_.begin(), other.rays_.end(), [&](const LatticeVector& r) { return contains(r); });
}

std::string Cone::label() const {
  std::string s = "[";
  for (std::size_t i = 0; i < rays_.size(); ++i) {
    if (i > 0) s += ",";
    s += to_string(rays_[i]);
  }
  return s + "]";
}

bool Cone::operator<(const Cone& other) const {
  if (ambient_dim_ != other.ambient_dim_) return ambient_dim_ < other.ambient_dim_;
  if (dim_ != other.dim_) return dim_ < other.dim_;
  return rays_ < other.rays_;
}

bool relint_contains(const Cone& cone, const LatticeVector& a) { return cone.relint_contains(a); }

std::vector<Cone> cone_faces(const Cone& cone) {
  const auto& rays = cone.rays();
  const std::size_t n = rays.size();
  std::vector<std::vector<bool>> tight_sets;
  for (const auto& h : cone.facets()) {
    std::vector<bool> t(n);
    for (std::size_t i = 0; i < n; ++i) t[i] = dot(h, rays[i]) == 0;
    tight_sets.push_back(std::move(t));
  }
  // Close {all rays} under intersection with facet tight sets.
  std::set<std::vector<bool>> found{std::vector<bool>(n, true)};
  std::vector<std::vector<bool>> frontier{std::vector<bool>(n, true)};
  while (!frontier.empty()) {
    std::vector<std::vector<bool>> next;
    for (const auto& s : frontier)
      for (const auto& t : tight_sets) {
        std::vector<bool> meet(n);
        for (std::size_t i = 0; i < n; ++i) meet[i] = s[i] && t[i];
        if (found.insert(meet).second) next.push_back(std::move(meet));
      }
    frontier = std::move(next);
  }
  std::vector<Cone> faces;
  for (const auto& s : found) {
    std::vector<LatticeVector> gens;
    for (std::size_t i = 0; i < n; ++i)
      if (s[i]) gens.push_back(rays[i]);
    faces.push_back(Cone::from_generators(cone.ambient_dim(), gens));
  }
  std::sort(faces.begin(), faces.end());
  faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
  return faces;
}

Cone intersect(const Cone& a, const Cone& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw std::invalid_argument("intersect: cones live in different spaces");
  const std::size_t d = a.ambient_dim();
  std::vector<ZVec> eqs;
  for (const auto& e : a.equations()) eqs.push_back(to_z(e));
  for (const auto& e : b.equations()) eqs.push_back(to_z(e));
  const auto kernel = kernel_z(eqs, d);
  const std::size_t k = kernel.size();
  if (k == 0) return Cone::zero(d);

  std::vector<ZVec> rows;
  for (const Cone* c : {&a, &b})
    for (const auto& h : c->facets()) {
      const ZVec hz = to_z(h);
      ZVec row(k);
      for (std::size_t j = 0; j < k; ++j) row[j] = dot(hz, kernel[j]);
      rows.push_back(std::move(row));
    }
  std::vector<LatticeVector> gens;
  for (const auto& z : extreme_rays_z(rows, k)) {
    ZVec x(d, 0);
    for (std::size_t j = 0; j < k; ++j)
      for (std::size_t c = 0; c < d; ++c) x[c] += z[j] * kernel[j][c];
    make_primitive(x);
    gens.push_back(to_lattice(x));
  }
  return Cone::from_generators(d, gens);
}

// ------------------------------------------------------------------- Fan

Fan Fan::validate(std::size_t ambient_dim, const std::vector<std::vector<LatticeVector>>& maximal) {
  std::vector<Cone> cones;
  for (const auto& gens : maximal) cones.push_back(Cone::from_generators(ambient_dim, gens));
  return validate(ambient_dim, cones);
}

Fan Fan::validate(std::size_t ambient_dim, const std::vector<Cone>& maximal) {
  std::vector<std::vector<Cone>> faces;
  for (const auto& c : maximal) {
    if (c.ambient_dim() != ambient_dim)
      throw std::invalid_argument("cone " + c.label() + " does not lie in R^" + std::to_string(ambient_dim));
    faces.push_back(cone_faces(c));
  }
  for (std::size_t i = 0; i < maximal.size(); ++i)
    for (std::size_t j = i + 1; j < maximal.size(); ++j) {
      const Cone meet = intersect(maximal[i], maximal[j]);
      const bool face_i = std::binary_search(faces[i].begin(), faces[i].end(), meet);
      const bool face_j = std::binary_search(faces[j].begin(), faces[j].end(), meet);
      if (!face_i || !face_j)
        throw FanValidationError("cones " + maximal[i].label() + " and " + maximal[j].label() + " meet in " +
                                     meet.label() + ", which is not a common face",
                                 maximal[i].label(), maximal[j].label());
    }
  Fan fan;
  fan.ambient_dim_ = ambient_dim;
  fan.cones_.push_back(Cone::zero(ambient_dim));
  for (auto& fs : faces) fan.cones_.insert(fan.cones_.end(), fs.begin(), fs.end());
  std::sort(fan.cones_.begin(), fan.cones_.end());
  fan.cones_.erase(std::unique(fan.cones_.begin(), fan.cones_.end()), fan.cones_.end());
  return fan;
}

std::optional<std::size_t> Fan::index_of(const Cone& c) const {
  auto it = std::lower_bound(cones_.begin(), cones_.end(), c);
  if (it == cones_.end() || !(*it == c)) return std::nullopt;
  return static_cast<std::size_t>(it - cones_.begin());
}

std::vector<std::size_t> Fan::maximal_cones() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < cones_.size(); ++i) {
    bool maximal = true;
    for (std::size_t j = 0; j < cones_.size() && maximal; ++j)
      if (j != i && cones_[j].dim() > cones_[i].dim() && cones_[j].contains(cones_[i])) maximal = false;
    if (maximal) out.push_back(i);
  }
  return out;
}

Poset face_poset(const Fan& fan) {
  const auto& cones = fan.cones();
  std::vector<std::string> labels;
  for (const auto& c : cones) labels.push_back(c.label());
  std::vector<std::vector<bool>> table(cones.size(), std::vector<bool>(cones.size(), false));
  for (std::size_t i = 0; i < cones.size(); ++i)
    for (std::size_t j = 0; j < cones.size(); ++j)
      table[i][j] = i == j || (cones[i].dim() < cones[j].dim() && cones[j].contains(cones[i]));
  return Poset::from_order(std::move(labels), table);
}

std::optional<std::size_t> carrier_cone(const Fan& fan, const LatticeVector& a) {
  check_dim(a, fan.ambient_dim());
  std::optional<std::size_t> found;
  for (std::size_t i = 0; i < fan.size(); ++i) {
    if (!fan.cone(i).relint_contains(a)) continue;
    if (found) throw std::logic_error("degree " + to_string(a) + " lies in the relative interior of two cones");
    found = i;
  }
  return found;
}

Fan fan_of_complex(const SimplicialComplex& complex) {
  const std::size_t n = complex.vertex_count();
  const std::size_t d = n + 1;
  std::vector<std::pair<Cone, FaceMask>> cones;
  for (auto f : complex.faces()) {
    std::vector<LatticeVector> gens;
    for (auto v : face_indices(f)) {
      LatticeVector g(d, 0);
      g[v] = 1;
      g[n] = 1;
      gens.push_back(std::move(g));
    }
    cones.emplace_back(Cone::from_generators(d, gens), f);
  }
  std::sort(cones.begin(), cones.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
  Fan fan;
  fan.ambient_dim_ = d;
  fan.complex_vertices_ = complex.vertices();
  for (auto& [c, f] : cones) {
    fan.cones_.push_back(std::move(c));
    fan.complex_faces_.push_back(f);
  }
  return fan;
}

LatticeVector embed_sr_degree(const LatticeVector& a) {
  LatticeVector out = a;
  out.push_back(std::accumulate(a.begin(), a.end(), std::int64_t{0}));
  return out;
}

}  // namespace tfr
