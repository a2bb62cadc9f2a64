// Finite posets with their Alexandrov topology (open sets = lower sets).

#ifndef TFR_POSET_HPP
#define TFR_POSET_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace tfr {

class SimplicialComplex;

using Element = std::size_t;
using Relation = std::pair<Element, Element>;

/// Immutable finite poset. Elements are indices 0..size()-1 carrying
/// opaque string labels; leq is precomputed as a reachability table and
/// the Hasse diagram holds exactly the covering pairs.
class Poset {
 public:
  Poset() = default;

  /// Builds the poset generated by `relations` (each pair means first <=
  /// second). Throws std::invalid_argument on duplicate labels, indices out
  /// of range, or cycles. Pairs that are not covering relations are
  /// dropped and returned through `redundant` when non-null.
  static Poset from_relations(std::vector<std::string> labels, const std::vector<Relation>& relations,
                              std::vector<Relation>* redundant = nullptr);

  /// Builds from a full reflexive order table `leq[x][y]` (x <= y).
  static Poset from_order(std::vector<std::string> labels, const std::vector<std::vector<bool>>& leq);

  std::size_t size() const { return labels_.size(); }
  bool empty() const { return labels_.empty(); }

  const std::string& label(Element x) const { return labels_.at(x); }
  const std::vector<std::string>& labels() const { return labels_; }
  /// Throws std::out_of_range for an unknown label.
  Element index_of(const std::string& label) const;

  bool leq(Element x, Element y) const { return leq_[x * labels_.size() + y] != 0; }
  bool less(Element x, Element y) const { return x != y && leq(x, y); }
  bool leq(const std::string& x, const std::string& y) const { return leq(index_of(x), index_of(y)); }
  bool less(const std::string& x, const std::string& y) const { return less(index_of(x), index_of(y)); }

  /// Covering pairs (lower, upper), sorted.
  const std::vector<Relation>& hasse() const { return hasse_; }
  const std::vector<Element>& upper_covers(Element x) const { return up_.at(x); }
  const std::vector<Element>& lower_covers(Element x) const { return down_.at(x); }
  bool covers(Element lower, Element upper) const;

  std::vector<Element> minimal_elements() const;
  std::vector<Element> maximal_elements() const;
  /// A linear extension (every element after all elements below it).
  const std::vector<Element>& linear_extension() const { return topo_; }

  /// Induced subposet on `subset` (kept in the given order).
  Poset induced(const std::vector<Element>& subset) const;

 private:
  void finish();

  std::vector<std::string> labels_;
  std::vector<std::uint8_t> leq_;
  std::vector<Relation> hasse_;
  std::vector<std::vector<Element>> up_;
  std::vector<std::vector<Element>> down_;
  std::vector<Element> topo_;
  std::unordered_map<std::string, Element> index_;
};

/// Largest poset for which lower_sets enumerates; the environment variable
/// TFR_LOWER_SET_BOUND overrides the default of 20.
std::size_t lower_set_bound();

/// Strict up-set {y : x < y} as an induced subposet; elements keep their
/// labels, in the parent's index order.
Poset open_interval(const Poset& p, Element x);
/// Indices (in `p`) of the elements of open_interval(p, x).
std::vector<Element> open_interval_elements(const Poset& p, Element x);

/// Principal strict down-set {y : y < x}; it is always a lower set.
std::vector<Element> strict_down_set(const Poset& p, Element x);

/// True iff `subset` is closed downward.
bool is_lower_set(const Poset& p, const std::vector<Element>& subset);

/// Every open set of the Alexandrov topology, each as a sorted index list.
/// Throws std::length_error when p.size() exceeds `bound`.
std::vector<std::vector<Element>> lower_sets(const Poset& p, std::size_t bound);
std::vector<std::vector<Element>> lower_sets(const Poset& p);

/// All strict chains x0 < x1 < ... < xk with k + 1 <= max_length elements,
/// grouped by length: result[k] holds chains with k + 1 elements.
std::vector<std::vector<std::vector<Element>>> strict_chains(const Poset& p, std::size_t max_length);

/// Simplicial complex of chains; vertices are the poset labels. Requires at
/// most 64 elements.
SimplicialComplex order_complex(const Poset& p);

/// Rank function when every maximal chain has the same length.
std::optional<std::vector<std::size_t>> is_graded(const Poset& p);

}  // namespace tfr

#endif  // TFR_POSET_HPP
