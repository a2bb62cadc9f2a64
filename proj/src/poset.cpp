#include "tfr/poset.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <numeric>
#include <stdexcept>

#include "tfr/simplicial.hpp"

namespace tfr {

namespace {

std::unordered_map<std::string, Element> build_index(const std::vector<std::string>& labels) {
  std::unordered_map<std::string, Element> index;
  for (Element i = 0; i < labels.size(); ++i) {
    if (!index.emplace(labels[i], i).second)
      throw std::invalid_argument("duplicate poset element '" + labels[i] + "'");
  }
  return index;
}

}  // namespace

Poset Poset::from_relations(std::vector<std::string> labels, const std::vector<Relation>& relations,
                            std::vector<Relation>* redundant) {
  const std::size_t n = labels.size();
  std::vector<std::vector<bool>> reach(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i) reach[i][i] = true;
  for (const auto& [x, y] : relations) {
    if (x >= n || y >= n) throw std::invalid_argument("relation refers to an unknown element");
    reach[x][y] = true;
  }
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      if (reach[i][k])
        for (std::size_t j = 0; j < n; ++j)
          if (reach[k][j]) reach[i][j] = true;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (reach[i][j] && reach[j][i])
        throw std::invalid_argument("order relation has a cycle through '" + labels[i] + "' and '" + labels[j] +
                                    "'");
  Poset p = from_order(std::move(labels), reach);
  if (redundant != nullptr) {
    redundant->clear();
    for (const auto& [x, y] : relations)
      if (x != y && !p.covers(x, y)) redundant->emplace_back(x, y);
    std::sort(redundant->begin(), redundant->end());
    redundant->erase(std::unique(redundant->begin(), redundant->end()), redundant->end());
  }
  return p;
}

Poset Poset::from_order(std::vector<std::string> labels, const std::vector<std::vector<bool>>& leq) {
  const std::size_t n = labels.size();
  if (leq.size() != n) throw std::invalid_argument("order table has wrong size");
  for (const auto& row : leq)
    if (row.size() != n) throw std::invalid_argument("order table has wrong size");
  for (std::size_t i = 0; i < n; ++i) {
    if (!leq[i][i]) throw std::invalid_argument("order table is not reflexive");
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j && leq[i][j] && leq[j][i]) throw std::invalid_argument("order table is not antisymmetric");
      if (!leq[i][j]) continue;
      for (std::size_t k = 0; k < n; ++k)
        if (leq[j][k] && !leq[i][k]) throw std::invalid_argument("order table is not transitive");
    }
  }
  Poset p;
  p.index_ = build_index(labels);
  p.labels_ = std::move(labels);
  p.leq_.assign(n * n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) p.leq_[i * n + j] = leq[i][j] ? 1 : 0;
  p.finish();
  return p;
}

void Poset::finish() {
  const std::size_t n = labels_.size();
  up_.assign(n, {});
  down_.assign(n, {});
  hasse_.clear();
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y) {
      if (!less(x, y)) continue;
      bool cover = true;
      for (Element z = 0; z < n && cover; ++z)
        if (less(x, z) && less(z, y)) cover = false;
      if (cover) {
        hasse_.emplace_back(x, y);
        up_[x].push_back(y);
        down_[y].push_back(x);
      }
    }
  std::vector<std::size_t> below(n, 0);
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y)
      if (leq(y, x)) ++below[x];
  topo_.resize(n);
  std::iota(topo_.begin(), topo_.end(), Element{0});
  std::stable_sort(topo_.begin(), topo_.end(), [&](Element a, Element b) { return below[a] < below[b]; });
}

Element Poset::index_of(const std::string& label) const {
  auto it = index_.find(label);
  if (it == index_.end()) throw std::out_of_range("unknown poset element '" + label + "'");
  return it->second;
}

bool Poset::covers(Element lower, Element upper) const {
  const auto& ups = up_.at(lower);
  return std::find(ups.begin(), ups.end(), upper) != ups.end();
}

std::vector<Element> Poset::minimal_elements() const {
  std::vector<Element> out;
  for (Element x = 0; x < size(); ++x)
    if (down_[x].empty()) out.push_back(x);
  return out;
}

std::vector<Element> Poset::maximal_elements() const {
  std::vector<Element> out;
  for (Element x = 0; x < size(); ++x)
    if (up_[x].empty()) out.push_back(x);
  return out;
}

Poset Poset::induced(const std::vector<Element>& subset) const {
  std::vector<std::string> labels;
  labels.reserve(subset.size());
  for (auto x : subset) labels.push_back(label(x));
  std::vector<std::vector<bool>> table(subset.size(), std::vector<bool>(subset.size()));
  for (std::size_t i = 0; i < subset.size(); ++i)
    for (std::size_t j = 0; j < subset.size(); ++j) table[i][j] = leq(subset[i], subset[j]);
  return from_order(std::move(labels), table);
}

std::size_t lower_set_bound() {
  if (const char* env = std::getenv("TFR_LOWER_SET_BOUND")) {
    char* end = nullptr;
    const auto value = std::strtoul(env, &end, 10);
    if (end != env && *end == '\0' && value > 0) return value;
  }
  return 20;
}

std::vector<Element> open_interval_elements(const Poset& p, Element x) {
  if (x >= p.size()) throw std::out_of_range("unknown poset element");
  std::vector<Element> out;
  for (Element y = 0; y < p.size(); ++y)
    if (p.less(x, y)) out.push_back(y);
  return out;
}

Poset open_interval(const Poset& p, Element x) { return p.induced(open_interval_elements(p, x)); }

std::vector<Element> strict_down_set(const Poset& p, Element x) {
  if (x >= p.size()) throw std::out_of_range("unknown poset element");
  std::vector<Element> out;
  for (Element y = 0; y < p.size(); ++y)
    if (p.less(y, x)) out.push_back(y);
  return out;
}

bool is_lower_set(const Poset& p, const std::vector<Element>& subset) {
  std::vector<bool> in(p.size(), false);
  for (auto x : subset) {
    if (x >= p.size()) throw std::out_of_range("unknown poset element");
    in[x] = true;
  }
  for (auto y : subset)
    for (auto x : p.lower_covers(y))
      if (!in[x]) return false;
  return true;
}

std::vector<std::vector<Element>> lower_sets(const Poset& p) { return lower_sets(p, lower_set_bound()); }

std::vector<std::vector<Element>> lower_sets(const Poset& p, std::size_t bound) {
  if (p.size() > bound)
    throw std::length_error("poset has " + std::to_string(p.size()) + " elements; open-set enumeration is capped at " +
                            std::to_string(bound));
  const auto& order = p.linear_extension();
  std::vector<bool> in(p.size(), false);
  std::vector<std::vector<Element>> out;
  std::function<void(std::size_t)> walk = [&](std::size_t k) {
    if (k == order.size()) {
      std::vector<Element> set;
      for (Element x = 0; x < p.size(); ++x)
        if (in[x]) set.push_back(x);
      out.push_back(std::move(set));
      return;
    }
    walk(k + 1);
    const Element x = order[k];
    const auto& below = p.lower_covers(x);
    if (std::all_of(below.begin(), below.end(), [&](Element y) { return in[y]; })) {
      in[x] = true;
      walk(k + 1);
      in[x] = false;
    }
  };
  walk(0);
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  return out;
}

std::vector<std::vector<std::vector<Element>>> strict_chains(const Poset& p, std::size_t max_length) {
  std::vector<std::vector<std::vector<Element>>> out(max_length);
  if (max_length == 0) return out;
  std::vector<Element> chain;
  std::function<void()> extend = [&]() {
    out[chain.size() - 1].push_back(chain);
    if (chain.size() == max_length) return;
    const Element top = chain.back();
    for (Element y = 0; y < p.size(); ++y) {
      if (!p.less(top, y)) continue;
      chain.push_back(y);
      extend();
      chain.pop_back();
    }
  };
  for (Element x = 0; x < p.size(); ++x) {
    chain.assign(1, x);
    extend();
  }
  // Drop empty trailing lengths.
  while (!out.empty() && out.back().empty()) out.pop_back();
  return out;
}

SimplicialComplex order_complex(const Poset& p) {
  if (p.size() > kMaxVertices)
    throw std::length_error("order complex supports at most " + std::to_string(kMaxVertices) + " elements");
  // Maximal chains suffice; from_facet_masks closes downward.
  std::vector<FaceMask> chains;
  std::function<void(Element, FaceMask)> grow = [&](Element top, FaceMask mask) {
    const auto& ups = p.upper_covers(top);
    if (ups.empty()) {
      chains.push_back(mask);
      return;
    }
    for (auto y : ups) grow(y, mask | (FaceMask{1} << y));
  };
  for (auto x : p.minimal_elements()) grow(x, FaceMask{1} << x);
  return SimplicialComplex::from_facet_masks(p.labels(), chains);
}

std::optional<std::vector<std::size_t>> is_graded(const Poset& p) {
  const std::size_t n = p.size();
  std::vector<std::size_t> shortest(n, 0), longest(n, 0);
  for (auto x : p.linear_extension()) {
    const auto& below = p.lower_covers(x);
    if (below.empty()) continue;
    shortest[x] = static_cast<std::size_t>(-1);
    for (auto y : below) {
      shortest[x] = std::min(shortest[x], shortest[y] + 1);
      longest[x] = std::max(longest[x], longest[y] + 1);
    }
  }
  for (Element x = 0; x < n; ++x)
    if (shortest[x] != longest[x]) return std::nullopt;
  const auto tops = p.maximal_elements();
  for (auto x : tops)
    if (longest[x] != longest[tops.front()]) return std::nullopt;
  return longest;
}

}  // namespace tfr
