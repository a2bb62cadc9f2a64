#ifndef TFR_TESTS_HELPERS_HPP
#define TFR_TESTS_HELPERS_HPP

#include <initializer_list>
#include <random>
#include <vector>

#include "tfr/linalg.hpp"
#include "tfr/simplicial.hpp"
#include "oracles.hpp"

namespace testing {

inline tfr::Matrix mat(std::initializer_list<std::initializer_list<long>> rows, std::size_t cols = 0) {
  std::vector<std::vector<tfr::Rational>> r;
  for (const auto& row : rows) {
    std::vector<tfr::Rational> v;
    for (long x : row) v.emplace_back(x);
    r.push_back(v);
  }
  return tfr::Matrix::from_rows(r, cols);
}

inline oracle::Rows rows_of(const tfr::Matrix& m) {
  oracle::Rows out(m.rows(), std::vector<oracle::Q>(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out[r][c] = m(r, c);
  return out;
}

inline tfr::Matrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, int spread = 3) {
  tfr::Matrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = static_cast<long>(rng() % (2 * spread + 1)) - spread;
  return m;
}

inline std::map<int, std::size_t> as_map(const tfr::GradedDims& d) { return d.support(); }

}  // namespace testing

#endif  // TFR_TESTS_HELPERS_HPP
