#include "tfr/linalg.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

namespace tfr {

namespace {

// Arithmetic policies for the elimination kernels below.
struct RationalArith {
  using Scalar = Rational;
  explicit RationalArith(const Field&) {}
  Scalar from(const Rational& x) const { return x; }
  Rational to_rational(const Scalar& x) const { return x; }
  bool is_zero(const Scalar& x) const { return sgn(x) == 0; }
  Scalar mul(const Scalar& a, const Scalar& b) const { return a * b; }
  Scalar sub(const Scalar& a, const Scalar& b) const { return a - b; }
  Scalar inv(const Scalar& a) const { return Scalar(1) / a; }
  Scalar neg(const Scalar& a) const { return -a; }
};

struct ModArith {
  using Scalar = std::uint32_t;
  explicit ModArith(const Field& f) : p(f.modulus()) {}
  std::uint32_t p;
  Scalar from(const Rational& x) const { return reduce_mod(x, p); }
  Rational to_rational(Scalar x) const { return Rational(static_cast<unsigned long>(x)); }
  bool is_zero(Scalar x) const { return x == 0; }
  Scalar mul(Scalar a, Scalar b) const {
    return static_cast<Scalar>((static_cast<std::uint64_t>(a) * b) % p);
  }
  Scalar sub(Scalar a, Scalar b) const { return a >= b ? a - b : a + (p - b); }
  Scalar neg(Scalar a) const { return a == 0 ? 0 : p - a; }
  Scalar inv(Scalar a) const {
    // a^(p-2)
    std::uint64_t result = 1, base = a, e = p - 2;
    while (e > 0) {
      if (e & 1) result = result * base % p;
      base = base * base % p;
      e >>= 1;
    }
    return static_cast<Scalar>(result);
  }
};

template <class Arith>
using SparseRow = std::vector<std::pair<std::size_t, typename Arith::Scalar>>;

// row <- row - factor * pivot, both sorted by column.
template <class Arith>
SparseRow<Arith> axpy(const Arith& ar, const SparseRow<Arith>& row,
                      const typename Arith::Scalar& factor, const SparseRow<Arith>& pivot) {
  SparseRow<Arith> out;
  out.reserve(row.size() + pivot.size());
  std::size_t i = 0, j = 0;
  while (i < row.size() || j < pivot.size()) {
    if (j == pivot.size() || (i < row.size() && row[i].first < pivot[j].first)) {
      out.push_back(row[i++]);
    } else if (i == row.size() || pivot[j].first < row[i].first) {
      out.emplace_back(pivot[j].first, ar.neg(ar.mul(factor, pivot[j].second)));
      ++j;
    } else {
      auto v = ar.sub(row[i].second, ar.mul(factor, pivot[j].second));
      if (!ar.is_zero(v)) out.emplace_back(row[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  return out;
}

template <class Arith>
std::size_t sparse_rank_impl(const SparseMatrix& m, const Field& field) {
  Arith ar(field);
  std::unordered_map<std::size_t, SparseRow<Arith>> pivots;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    SparseRow<Arith> row;
    for (const auto& [c, v] : m.row(r)) {
      auto s = ar.from(v);
      if (!ar.is_zero(s)) row.emplace_back(c, std::move(s));
    }
    while (!row.empty()) {
      auto it = pivots.find(row.front().first);
      if (it == pivots.end()) {
        auto scale = ar.inv(row.front().second);
        for (auto& e : row) e.second = ar.mul(e.second, scale);
        pivots.emplace(row.front().first, std::move(row));
        break;
      }
      auto factor = row.front().second;
      row = axpy(ar, row, factor, it->second);
    }
  }
  return pivots.size();
}

// Reduced row echelon form in place; returns pivot columns.
template <class Arith>
std::vector<std::size_t> rref(const Arith& ar, std::vector<std::vector<typename Arith::Scalar>>& a,
                              std::size_t cols) {
  std::vector<std::size_t> pivot_cols;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < a.size(); ++col) {
    std::size_t sel = row;
    while (sel < a.size() && ar.is_zero(a[sel][col])) ++sel;
    if (sel == a.size()) continue;
    std::swap(a[row], a[sel]);
    auto scale = ar.inv(a[row][col]);
    for (auto& x : a[row]) x = ar.mul(x, scale);
    for (std::size_t r = 0; r < a.size(); ++r) {
      if (r == row || ar.is_zero(a[r][col])) continue;
      auto factor = a[r][col];
      for (std::size_t c = col; c < cols; ++c) a[r][c] = ar.sub(a[r][c], ar.mul(factor, a[row][c]));
    }
    pivot_cols.push_back(col);
    ++row;
  }
  return pivot_cols;
}

template <class Arith>
Matrix kernel_impl(const Matrix& m, const Field& field) {
  Arith ar(field);
  std::vector<std::vector<typename Arith::Scalar>> a(m.rows(),
                                                      std::vector<typename Arith::Scalar>(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) a[r][c] = ar.from(m(r, c));
  const auto pivot_cols = rref(ar, a, m.cols());
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : pivot_cols) is_pivot[c] = true;

  Matrix basis(m.cols(), m.cols() - pivot_cols.size());
  std::size_t k = 0;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    basis(free, k) = 1;
    for (std::size_t i = 0; i < pivot_cols.size(); ++i) {
      if (!ar.is_zero(a[i][free])) basis(pivot_cols[i], k) = ar.to_rational(ar.neg(a[i][free]));
    }
    ++k;
  }
  return basis;
}

std::atomic<std::size_t> g_euler_checks{0};
std::atomic<std::size_t> g_euler_failures{0};

}  // namespace

bool is_prime(std::uint32_t n) {
  if (n < 2) return false;
  for (std::uint32_t d = 2; static_cast<std::uint64_t>(d) * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

Field Field::prime(std::uint32_t p) {
  if (!is_prime(p)) throw std::invalid_argument("field modulus " + std::to_string(p) + " is not prime");
  // Products are formed in 64 bits.
  if (p > (1u << 31)) throw std::invalid_argument("field modulus too large");
  return Field(Kind::prime, p);
}

Field Field::parse(const std::string& spec) {
  if (spec == "q" || spec == "Q" || spec == "rationals") return rationals();
  std::string digits;
  if (spec.rfind("gf:", 0) == 0 || spec.rfind("GF:", 0) == 0) {
    digits = spec.substr(3);
  } else if (spec.rfind("gf(", 0) == 0 || spec.rfind("GF(", 0) == 0) {
    if (spec.back() != ')') throw std::invalid_argument("bad field spec '" + spec + "'");
    digits = spec.substr(3, spec.size() - 4);
  } else if (spec.rfind("gf", 0) == 0 || spec.rfind("GF", 0) == 0) {
    digits = spec.substr(2);
  } else {
    throw std::invalid_argument("bad field spec '" + spec + "' (expected q or gf:<p>)");
  }
  if (digits.empty() || digits.size() > 10 ||
      !std::all_of(digits.begin(), digits.end(), [](char ch) { return ch >= '0' && ch <= '9'; }))
    throw std::invalid_argument("bad field modulus in '" + spec + "'");
  const auto value = std::stoull(digits);
  if (value > 0xffffffffull) throw std::invalid_argument("field modulus too large");
  return prime(static_cast<std::uint32_t>(value));
}

std::string Field::name() const {
  return is_rational() ? std::string("Q") : "GF(" + std::to_string(p_) + ")";
}

std::uint32_t reduce_mod(const Rational& x, std::uint32_t p) {
  const Integer mod(static_cast<unsigned long>(p));
  Integer num = x.get_num() % mod;
  if (num < 0) num += mod;
  Integer den = x.get_den() % mod;
  if (den == 0) throw std::domain_error("denominator vanishes modulo " + std::to_string(p));
  Integer inv;
  mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), mod.get_mpz_t());
  Integer r = (num * inv) % mod;
  return static_cast<std::uint32_t>(r.get_ui());
}

bool is_zero_in(const Rational& x, const Field& field) {
  if (field.is_rational()) return sgn(x) == 0;
  return reduce_mod(x, field.modulus()) == 0;
}

// ---------------------------------------------------------------- Matrix

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_rows(const std::vector<std::vector<Rational>>& rows, std::size_t cols) {
  if (!rows.empty()) cols = rows.front().size();
  Matrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw std::invalid_argument("ragged matrix rows");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

Matrix Matrix::operator*(const Matrix& rhs) const {
  if (cols_ != rhs.rows_) throw std::invalid_argument("matrix product shape mismatch");
  Matrix out(rows_, rhs.cols_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Rational& a = (*this)(r, k);
      if (sgn(a) == 0) continue;
      for (std::size_t c = 0; c < rhs.cols_; ++c) out(r, c) += a * rhs(k, c);
    }
  return out;
}

Matrix Matrix::operator-(const Matrix& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw std::invalid_argument("matrix difference shape mismatch");
  Matrix out(rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = data_[i] - rhs.data_[i];
  return out;
}

bool Matrix::operator==(const Matrix& rhs) const {
  return rows_ == rhs.rows_ && cols_ == rhs.cols_ && data_ == rhs.data_;
}

bool Matrix::is_zero(const Field& field) const {
  return std::all_of(data_.begin(), data_.end(), [&](const Rational& x) { return is_zero_in(x, field); });
}

bool Matrix::equals_in(const Matrix& other, const Field& field) const {
  if (rows_ != other.rows_ || cols_ != other.cols_) return false;
  for (std::size_t i = 0; i < data_.size(); ++i)
    if (!is_zero_in(data_[i] - other.data_[i], field)) return false;
  return true;
}

// ---------------------------------------------------------- SparseMatrix

SparseMatrix SparseMatrix::from_dense(const Matrix& m) {
  SparseMatrix s(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c)
      if (sgn(m(r, c)) != 0) s.rows_[r].emplace_back(c, m(r, c));
  return s;
}

void SparseMatrix::add(std::size_t r, std::size_t c, const Rational& value) {
  if (r >= rows_.size() || c >= cols_) throw std::out_of_range("sparse matrix index out of range");
  auto& row = rows_[r];
  auto it = std::lower_bound(row.begin(), row.end(), c,
                             [](const Entry& e, std::size_t col) { return e.first < col; });
  if (it != row.end() && it->first == c) {
    it->second += value;
    if (sgn(it->second) == 0) row.erase(it);
  } else if (sgn(value) != 0) {
    row.insert(it, Entry(c, value));
  }
}

std::size_t SparseMatrix::nonzeros() const {
  std::size_t n = 0;
  for (const auto& row : rows_) n += row.size();
  return n;
}

Matrix SparseMatrix::to_dense() const {
  Matrix m(rows(), cols_);
  for (std::size_t r = 0; r < rows(); ++r)
    for (const auto& [c, v] : rows_[r]) m(r, c) = v;
  return m;
}

SparseMatrix SparseMatrix::multiply(const SparseMatrix& rhs) const {
  if (cols_ != rhs.rows()) throw std::invalid_argument("sparse product shape mismatch");
  SparseMatrix out(rows(), rhs.cols());
  for (std::size_t r = 0; r < rows(); ++r) {
    std::map<std::size_t, Rational> acc;
    for (const auto& [k, a] : rows_[r])
      for (const auto& [c, b] : rhs.rows_[k]) acc[c] += a * b;
    for (auto& [c, v] : acc)
      if (sgn(v) != 0) out.rows_[r].emplace_back(c, std::move(v));
  }
  return out;
}

bool SparseMatrix::is_zero(const Field& field) const {
  for (const auto& row : rows_)
    for (const auto& e : row)
      if (!is_zero_in(e.second, field)) return false;
  return true;
}

// ------------------------------------------------------------------ rank

std::size_t rank(const SparseMatrix& m, const Field& field) {
  if (field.is_rational()) return sparse_rank_impl<RationalArith>(m, field);
  return sparse_rank_impl<ModArith>(m, field);
}

std::size_t rank(const Matrix& m, const Field& field) { return rank(SparseMatrix::from_dense(m), field); }

Matrix kernel_basis(const Matrix& m, const Field& field) {
  if (field.is_rational()) return kernel_impl<RationalArith>(m, field);
  return kernel_impl<ModArith>(m, field);
}

// ------------------------------------------------------------ GradedDims

GradedDims::GradedDims(std::map<int, std::size_t> values) {
  for (const auto& [d, v] : values)
    if (v != 0) values_.emplace(d, v);
}

std::size_t GradedDims::operator[](int degree) const {
  auto it = values_.find(degree);
  return it == values_.end() ? 0 : it->second;
}

void GradedDims::set(int degree, std::size_t value) {
  if (value == 0)
    values_.erase(degree);
  else
    values_[degree] = value;
}

long long GradedDims::euler_characteristic() const {
  long long chi = 0;
  for (const auto& [d, v] : values_) chi += (d % 2 == 0 ? 1 : -1) * static_cast<long long>(v);
  return chi;
}

GradedDims GradedDims::shifted(int offset) const {
  GradedDims out;
  for (const auto& [d, v] : values_) out.values_.emplace(d + offset, v);
  return out;
}

std::string to_string(const GradedDims& dims) {
  std::string s = "{";
  bool first = true;
  for (const auto& [d, v] : dims.support()) {
    if (!first) s += ", ";
    first = false;
    s += std::to_string(d) + ": " + std::to_string(v);
  }
  return s + "}";
}

// -------------------------------------------------------- CochainComplex

std::size_t CochainComplex::dim(int degree) const {
  if (degree < min_degree || degree > max_degree()) return 0;
  return dims[static_cast<std::size_t>(degree - min_degree)];
}

void validate(const CochainComplex& c, const Field& field, bool check_square_zero) {
  const std::size_t n = c.dims.size();
  if (n == 0) {
    if (!c.coboundaries.empty()) throw std::invalid_argument("cochain complex has maps but no spaces");
    return;
  }
  if (c.coboundaries.size() + 1 != n)
    throw std::invalid_argument("cochain complex needs one coboundary per consecutive pair of degrees");
  for (std::size_t k = 0; k + 1 < n; ++k) {
    const auto& d = c.coboundaries[k];
    if (d.rows() != c.dims[k + 1] || d.cols() != c.dims[k])
      throw std::invalid_argument("coboundary " + std::to_string(c.min_degree + static_cast<int>(k)) +
                                  " has wrong shape");
  }
  if (!check_square_zero) return;
  for (std::size_t k = 0; k + 2 < n; ++k) {
    if (!c.coboundaries[k + 1].multiply(c.coboundaries[k]).is_zero(field))
      throw std::invalid_argument("coboundaries " + std::to_string(c.min_degree + static_cast<int>(k)) +
                                  " and " + std::to_string(c.min_degree + static_cast<int>(k) + 1) +
                                  " do not compose to zero");
  }
}

GradedDims cohomology_dims(const CochainComplex& c, const Field& field, bool check_square_zero) {
  validate(c, field, check_square_zero);
  const std::size_t n = c.dims.size();
  std::vector<std::size_t> ranks(n, 0);  // ranks[k] = rank of map out of degree k
  for (std::size_t k = 0; k < c.coboundaries.size(); ++k) ranks[k] = rank(c.coboundaries[k], field);

  GradedDims out;
  long long chi_spaces = 0;
  for (std::size_t k = 0; k < n; ++k) {
    const std::size_t incoming = k == 0 ? 0 : ranks[k - 1];
    if (ranks[k] + incoming > c.dims[k]) throw std::logic_error("rank exceeds space dimension");
    const int degree = c.min_degree + static_cast<int>(k);
    out.set(degree, c.dims[k] - ranks[k] - incoming);
    chi_spaces += (degree % 2 == 0 ? 1 : -1) * static_cast<long long>(c.dims[k]);
  }
  const bool ok = chi_spaces == out.euler_characteristic();
  EulerAudit::record(ok);
  if (!ok) throw std::logic_error("Euler characteristic mismatch in cochain complex");
  return out;
}

std::size_t EulerAudit::checks() { return g_euler_checks.load(); }
std::size_t EulerAudit::failures() { return g_euler_failures.load(); }
void EulerAudit::record(bool ok) {
  ++g_euler_checks;
  if (!ok) ++g_euler_failures;
}

}  // namespace tfr
