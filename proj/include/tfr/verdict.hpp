#ifndef TFR_VERDICT_HPP
#define TFR_VERDICT_HPP

#include <cstddef>
#include <string>
#include <vector>

namespace tfr {

/// A nonvanishing cohomology group that breaks a criterion: the poset
/// element (cone or face) it sits at, its degree, and its dimension.
struct Witness {
  std::size_t element = 0;
  std::string label;
  int degree = 0;
  std::size_t dimension = 0;

  bool operator==(const Witness&) const = default;
};

struct Verdict {
  bool result = true;
  std::vector<Witness> witnesses;

  void add(Witness w) {
    witnesses.push_back(std::move(w));
    result = false;
  }
};

}  // namespace tfr

#endif  // TFR_VERDICT_HPP
