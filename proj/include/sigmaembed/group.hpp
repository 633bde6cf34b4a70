#ifndef SIGMAEMBED_GROUP_HPP
#define SIGMAEMBED_GROUP_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <unordered_map>
#include <vector>

#include "bsgs.hpp"
#include "perm.hpp"

namespace sigmaembed {

constexpr uint64_t kDefaultOrderCap = 5000;

namespace detail {

struct GroupData {
  unsigned degree = 0;
  std::vector<Perm> generators;
  std::vector<Perm> elements;  // sorted
  Bsgs bsgs;
  uint64_t order = 0;

  // Index-level structure, built once on demand behind a mutex.
  mutable std::once_flag tables_once;
  mutable std::vector<uint16_t> mult;  // order*order, present iff order <= kMultTableCap
  mutable std::vector<uint32_t> inv;
  mutable std::unordered_map<Perm, uint32_t, PermHash> index_of;

  static constexpr uint64_t kMultTableCap = 2048;

  void build_tables() const {
    std::call_once(tables_once, [this] {
      index_of.reserve(elements.size() * 2);
      for (uint32_t i = 0; i < elements.size(); ++i) index_of.emplace(elements[i], i);
      inv.resize(elements.size());
      for (uint32_t i = 0; i < elements.size(); ++i)
        inv[i] = index_of.at(elements[i].inverse());
      if (order <= kMultTableCap) {
        mult.resize(order * order);
        for (uint32_t i = 0; i < order; ++i)
          for (uint32_t j = 0; j < order; ++j)
            mult[i * order + j] =
                static_cast<uint16_t>(index_of.at(elements[i] * elements[j]));
      }
    });
  }
};

}  // namespace detail

/// Immutable handle to a finite permutation group with certified order.
class Group {
public:
  Group() = default;

  static Group from_generators(unsigned degree, std::vector<Perm> gens,
                               uint64_t order_cap = kDefaultOrderCap) {
    auto data = std::make_shared<detail::GroupData>();
    data->degree = degree;
    for (const Perm& g : gens)
      if (g.degree() != degree)
        throw ValidationError("generator degree mismatch");
    data->generators = std::move(gens);
    data->elements = closure(degree, data->generators, order_cap);
    data->order = data->elements.size();
    data->bsgs = Bsgs(degree, data->generators);
    return Group(std::move(data));
  }

  unsigned degree() const { return data_->degree; }
  uint64_t order() const { return data_->order; }
  const std::vector<Perm>& generators() const { return data_->generators; }
  const std::vector<Perm>& elements() const { return data_->elements; }
  const Bsgs& bsgs() const { return data_->bsgs; }

  bool contains(const Perm& g) const {
    if (g.degree() != degree())
      throw ValidationError("degree mismatch in membership test");
    return data_->bsgs.contains(g);
  }

  const Perm& element(uint32_t idx) const { return data_->elements[idx]; }

  uint32_t index_of(const Perm& g) const {
    data_->build_tables();
    auto it = data_->index_of.find(g);
    if (it == data_->index_of.end())
      throw ValidationError("element not in group");
    return it->second;
  }

  bool try_index_of(const Perm& g, uint32_t& out) const {
    data_->build_tables();
    auto it = data_->index_of.find(g);
    if (it == data_->index_of.end()) return false;
    out = it->second;
    return true;
  }

  uint32_t mult(uint32_t i, uint32_t j) const {
    data_->build_tables();
    if (!data_->mult.empty()) return data_->mult[i * data_->order + j];
    return data_->index_of.at(data_->elements[i] * data_->elements[j]);
  }

  uint32_t inv(uint32_t i) const {
    data_->build_tables();
    return data_->inv[i];
  }

  /// g^-1 * x * g by element index.
  uint32_t conj(uint32_t x, uint32_t g) const {
    return mult(mult(inv(g), x), g);
  }

  uint32_t identity_index() const { return index_of(Perm::identity(degree())); }

  bool same_data(const Group& other) const { return data_ == other.data_; }

  static std::vector<Perm> closure(unsigned degree, const std::vector<Perm>& gens,
                                   uint64_t order_cap) {
    std::unordered_map<Perm, char, PermHash> seen;
    std::vector<Perm> frontier{Perm::identity(degree)};
    seen.emplace(frontier[0], 1);
    for (size_t i = 0; i < frontier.size(); ++i) {
      for (const Perm& g : gens) {
        Perm next = frontier[i] * g;
        if (seen.emplace(next, 1).second) {
          frontier.push_back(std::move(next));
          if (frontier.size() > order_cap)
            throw BudgetError("group order exceeds cap " + std::to_string(order_cap));
        }
      }
    }
    std::sort(frontier.begin(), frontier.end());
    return frontier;
  }

private:
  explicit Group(std::shared_ptr<detail::GroupData> data) : data_(std::move(data)) {}
  std::shared_ptr<detail::GroupData> data_;
};

}  // namespace sigmaembed

#endif
