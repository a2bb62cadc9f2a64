// Exact linear algebra over Q or a prime field GF(p).
//
// Every matrix stores rational entries. Computations over GF(p) reduce the
// entries modulo p first, so a single matrix can be queried in several
// characteristics (this is how characteristic dependence is exposed).

#ifndef TFR_LINALG_HPP
#define TFR_LINALG_HPP

#include <gmpxx.h>

#include <atomic>
#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace tfr {

using Rational = mpq_class;
using Integer = mpz_class;

inline constexpr std::uint32_t kDefaultPrime = 32003;

class Field {
 public:
  enum class Kind { rationals, prime };

  static Field rationals() { return Field(Kind::rationals, 0); }
  /// Throws std::invalid_argument unless `p` is prime.
  static Field prime(std::uint32_t p);
  /// Parses "q", "Q", "gf:<p>", "gf<p>", "gf(<p>)".
  static Field parse(const std::string& spec);

  Kind kind() const { return kind_; }
  bool is_rational() const { return kind_ == Kind::rationals; }
  std::uint32_t modulus() const { return p_; }
  std::string name() const;

  bool operator==(const Field&) const = default;

 private:
  Field(Kind kind, std::uint32_t p) : kind_(kind), p_(p) {}
  Kind kind_;
  std::uint32_t p_;
};

bool is_prime(std::uint32_t n);

/// Residue of `x` modulo `p`; throws std::domain_error if p divides the
/// denominator.
std::uint32_t reduce_mod(const Rational& x, std::uint32_t p);

/// True iff `x` is zero when read in `field`.
bool is_zero_in(const Rational& x, const Field& field);

class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  static Matrix identity(std::size_t n);
  static Matrix from_rows(const std::vector<std::vector<Rational>>& rows, std::size_t cols = 0);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Matrix transpose() const;
  Matrix operator*(const Matrix& rhs) const;
  Matrix operator-(const Matrix& rhs) const;
  bool operator==(const Matrix& rhs) const;

  /// All entries vanish in `field`.
  bool is_zero(const Field& field) const;
  /// Entry-wise equality after reduction into `field`.
  bool equals_in(const Matrix& other, const Field& field) const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

/// Row-sparse matrix; rows hold (column, value) pairs sorted by column.
class SparseMatrix {
 public:
  using Entry = std::pair<std::size_t, Rational>;

  SparseMatrix() = default;
  SparseMatrix(std::size_t rows, std::size_t cols) : cols_(cols), rows_(rows) {}
  static SparseMatrix from_dense(const Matrix& m);

  std::size_t rows() const { return rows_.size(); }
  std::size_t cols() const { return cols_; }

  /// Adds `value` to entry (r, c).
  void add(std::size_t r, std::size_t c, const Rational& value);
  const std::vector<Entry>& row(std::size_t r) const { return rows_[r]; }
  std::size_t nonzeros() const;

  Matrix to_dense() const;
  /// this * rhs
  SparseMatrix multiply(const SparseMatrix& rhs) const;
  bool is_zero(const Field& field) const;

 private:
  std::size_t cols_ = 0;
  std::vector<std::vector<Entry>> rows_;
};

std::size_t rank(const Matrix& m, const Field& field);
std::size_t rank(const SparseMatrix& m, const Field& field);

/// Basis of {v : m v = 0} as the columns of the result; entries of GF(p)
/// results are the canonical representatives 0..p-1.
Matrix kernel_basis(const Matrix& m, const Field& field);

/// Dimensions indexed by an integer degree; absent degrees read as zero.
class GradedDims {
 public:
  GradedDims() = default;
  explicit GradedDims(std::map<int, std::size_t> values);

  std::size_t operator[](int degree) const;
  void set(int degree, std::size_t value);
  /// Nonzero entries only, ascending degree.
  const std::map<int, std::size_t>& support() const { return values_; }
  bool is_zero() const { return values_.empty(); }
  /// Sum of (-1)^n dims[n].
  long long euler_characteristic() const;
  GradedDims shifted(int offset) const;

  bool operator==(const GradedDims&) const = default;

 private:
  std::map<int, std::size_t> values_;
};

std::string to_string(const GradedDims& dims);

/// coboundaries[n] : degree (min_degree + n) -> (min_degree + n + 1).
struct CochainComplex {
  int min_degree = 0;
  std::vector<std::size_t> dims;
  std::vector<SparseMatrix> coboundaries;

  int max_degree() const { return min_degree + static_cast<int>(dims.size()) - 1; }
  std::size_t dim(int degree) const;
};

/// Throws std::invalid_argument on shape mismatch; with `check_square_zero`
/// also when consecutive coboundaries fail to compose to zero in `field`.
void validate(const CochainComplex& c, const Field& field, bool check_square_zero = true);

/// dim ker(d^n) - rank(d^{n-1}) for every stored degree. Validates the
/// complex and audits the Euler characteristic of the result.
GradedDims cohomology_dims(const CochainComplex& c, const Field& field,
                           bool check_square_zero = true);

/// Process-wide count of Euler characteristic audits run by
/// cohomology_dims (and the Čech oracle); failures raise std::logic_error.
struct EulerAudit {
  static std::size_t checks();
  static std::size_t failures();
  static void record(bool ok);
};

}  // namespace tfr

#endif  // TFR_LINALG_HPP
