#ifndef SIGMAEMBED_LATTICE_HPP
#define SIGMAEMBED_LATTICE_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "subgroup.hpp"

namespace sigmaembed {

constexpr uint64_t kDefaultLatticeCap = 512;
constexpr uint64_t kDefaultModularityCap = 200;

/// Witness for a violated modular-lattice identity: the pair (X,Z) or (Y,Z)
/// on which ⟨·,·⟩ / ∩ fail to commute.
struct ModularityWitness {
  uint32_t first;   // lattice index of X (identity 1) or Y (identity 2)
  uint32_t second;  // lattice index of Z
  int identity;     // 1 or 2
};

/// The full subgroup lattice of a group, with containment, join/meet
/// tables, conjugacy classes and normality precomputed. Immutable once
/// constructed apart from the lazily filled modularity cache.
class SubgroupLattice {
public:
  explicit SubgroupLattice(const Group& g, uint64_t cap = kDefaultLatticeCap)
      : group_(g) {
    if (g.order() > cap)
      throw BudgetError("lattice cap " + std::to_string(cap) +
                        " exceeded by group of order " + std::to_string(g.order()));
    enumerate();
    build_tables();
  }

  const Group& group() const { return group_; }
  size_t size() const { return members_.size(); }
  const Subgroup& member(uint32_t i) const { return members_[i]; }
  const std::vector<Subgroup>& members() const { return members_; }

  uint32_t trivial_index() const { return trivial_idx_; }
  uint32_t whole_index() const { return whole_idx_; }

  uint32_t index_of(const Subgroup& s) const {
    auto it = index_.find(s.indices());
    if (it == index_.end()) throw ValidationError("subgroup not in lattice");
    return it->second;
  }

  std::optional<uint32_t> try_index_of(const IndexSet& key) const {
    auto it = index_.find(key);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  bool leq(uint32_t a, uint32_t b) const { return leq_[a * members_.size() + b]; }
  uint32_t join_of(uint32_t a, uint32_t b) const { return join_[a * members_.size() + b]; }
  uint32_t meet_of(uint32_t a, uint32_t b) const { return meet_[a * members_.size() + b]; }

  /// Members contained in m, in lattice order.
  const std::vector<uint32_t>& subs_of(uint32_t m) const { return subs_of_[m]; }

  uint32_t normalizer_of(uint32_t m) const { return normalizer_[m]; }
  bool is_normal(uint32_t m) const { return normal_[m]; }
  bool is_normal_in(uint32_t m, uint32_t ambient) const {
    return leq(m, ambient) && leq(ambient, normalizer_[m]);
  }

  uint32_t conjugated(uint32_t m, uint32_t g) const {
    auto it = index_.find(members_[m].conjugated_by(g).indices());
    return it->second;  // conjugation permutes the lattice
  }

  /// Core of member m in ambient member a (largest subgroup of m normal in a).
  uint32_t core_in(uint32_t m, uint32_t ambient) const {
    uint32_t acc = m;
    std::vector<uint32_t> orbit{m};
    std::vector<char> seen(members_.size(), 0);
    seen[m] = 1;
    for (size_t i = 0; i < orbit.size(); ++i) {
      for (uint32_t g : members_[ambient].indices()) {
        uint32_t c = conjugated(orbit[i], g);
        if (!seen[c]) {
          seen[c] = 1;
          orbit.push_back(c);
          acc = meet_of(acc, c);
        }
      }
    }
    return acc;
  }

  uint32_t core(uint32_t m) const { return core_in(m, whole_idx_); }

  uint32_t normal_closure_of(uint32_t m) const {
    uint32_t acc = m;
    std::vector<uint32_t> orbit{m};
    std::vector<char> seen(members_.size(), 0);
    seen[m] = 1;
    for (size_t i = 0; i < orbit.size(); ++i) {
      for (const Perm& gp : group_.generators()) {
        uint32_t c = conjugated(orbit[i], group_.index_of(gp));
        if (!seen[c]) {
          seen[c] = 1;
          orbit.push_back(c);
          acc = join_of(acc, c);
        }
      }
    }
    return acc;
  }

  const std::vector<std::vector<uint32_t>>& conjugacy_classes() const {
    return classes_;
  }

  std::vector<uint32_t> normal_members() const {
    std::vector<uint32_t> out;
    for (uint32_t i = 0; i < members_.size(); ++i)
      if (normal_[i]) out.push_back(i);
    return out;
  }

  std::vector<uint32_t> minimal_normal_members() const {
    std::vector<uint32_t> normals = normal_members();
    std::vector<uint32_t> out;
    for (uint32_t n : normals) {
      if (n == trivial_idx_) continue;
      bool minimal = true;
      for (uint32_t m : normals)
        if (m != trivial_idx_ && m != n && leq(m, n)) {
          minimal = false;
          break;
        }
      if (minimal) out.push_back(n);
    }
    return out;
  }

  /// Subnormal members: downward fixpoint of "normal in something reachable".
  std::vector<uint32_t> subnormal_members() const {
    std::vector<char> reach(members_.size(), 0);
    reach[whole_idx_] = 1;
    bool changed = true;
    while (changed) {
      changed = false;
      for (uint32_t y = 0; y < members_.size(); ++y) {
        if (!reach[y]) continue;
        for (uint32_t x : subs_of_[y]) {
          if (!reach[x] && is_normal_in(x, y)) {
            reach[x] = 1;
            changed = true;
          }
        }
      }
    }
    std::vector<uint32_t> out;
    for (uint32_t i = 0; i < members_.size(); ++i)
      if (reach[i]) out.push_back(i);
    return out;
  }

  bool is_modular_member(uint32_t h,
                         ModularityWitness* witness = nullptr) const {
    if (h == trivial_idx_ || h == whole_idx_) return true;
    if (modular_cache_[h] != 0) return modular_cache_[h] > 0;
    const uint32_t L = static_cast<uint32_t>(members_.size());
    // identity 1: <X, H∧Z> = <X,H> ∧ Z for all X ≤ Z
    for (uint32_t z = 0; z < L; ++z) {
      for (uint32_t x : subs_of_[z]) {
        if (join_of(x, meet_of(h, z)) != meet_of(join_of(x, h), z)) {
          if (witness) *witness = {x, z, 1};
          modular_cache_[h] = -1;
          return false;
        }
      }
    }
    // identity 2: <H, Y∧Z> = <H,Y> ∧ Z for all Y and all Z ≥ H
    for (uint32_t z = 0; z < L; ++z) {
      if (!leq(h, z)) continue;
      for (uint32_t y = 0; y < L; ++y) {
        if (join_of(h, meet_of(y, z)) != meet_of(join_of(h, y), z)) {
          if (witness) *witness = {y, z, 2};
          modular_cache_[h] = -1;
          return false;
        }
      }
    }
    modular_cache_[h] = 1;
    return true;
  }

  std::vector<uint32_t> modular_members() const {
    std::vector<uint32_t> out;
    for (uint32_t i = 0; i < members_.size(); ++i)
      if (is_modular_member(i)) out.push_back(i);
    return out;
  }

private:
  Group group_;
  std::vector<Subgroup> members_;
  std::map<IndexSet, uint32_t> index_;
  std::vector<char> leq_;
  std::vector<uint32_t> join_;
  std::vector<uint32_t> meet_;
  std::vector<std::vector<uint32_t>> subs_of_;
  std::vector<uint32_t> normalizer_;
  std::vector<char> normal_;
  std::vector<std::vector<uint32_t>> classes_;
  mutable std::vector<int8_t> modular_cache_;
  uint32_t trivial_idx_ = 0;
  uint32_t whole_idx_ = 0;

  void add_member(Subgroup s) {
    if (index_.emplace(s.indices(), static_cast<uint32_t>(members_.size())).second)
      members_.push_back(std::move(s));
  }

  void enumerate() {
    // Seed with all cyclic subgroups, then close under pairwise join.
    add_member(Subgroup::trivial(group_));
    for (uint32_t e = 0; e < group_.order(); ++e)
      add_member(Subgroup::generated(group_, {e}));
    size_t frontier_start = 0;
    while (frontier_start < members_.size()) {
      size_t frontier_end = members_.size();
      for (size_t i = frontier_start; i < frontier_end; ++i)
        for (size_t j = 0; j < frontier_end; ++j) {
          if (i == j) continue;
          add_member(join(members_[i], members_[j]));
        }
      frontier_start = frontier_end;
    }
    // Canonical order: by (order, element key).
    std::sort(members_.begin(), members_.end());
    index_.clear();
    for (uint32_t i = 0; i < members_.size(); ++i)
      index_.emplace(members_[i].indices(), i);
  }

  void build_tables() {
    const uint32_t L = static_cast<uint32_t>(members_.size());
    trivial_idx_ = index_.at(Subgroup::trivial(group_).indices());
    whole_idx_ = index_.at(Subgroup::whole(group_).indices());
    leq_.assign(size_t(L) * L, 0);
    subs_of_.assign(L, {});
    for (uint32_t a = 0; a < L; ++a)
      for (uint32_t b = 0; b < L; ++b)
        if (members_[b].contains(members_[a])) {
          leq_[size_t(a) * L + b] = 1;
          subs_of_[b].push_back(a);
        }
    meet_.assign(size_t(L) * L, 0);
    join_.assign(size_t(L) * L, 0);
    for (uint32_t a = 0; a < L; ++a)
      for (uint32_t b = a; b < L; ++b) {
        uint32_t m = index_.at(intersect(members_[a].indices(), members_[b].indices()));
        uint32_t j = leq(a, b)   ? b
                     : leq(b, a) ? a
                                 : index_.at(join(members_[a], members_[b]).indices());
        meet_[size_t(a) * L + b] = meet_[size_t(b) * L + a] = m;
        join_[size_t(a) * L + b] = join_[size_t(b) * L + a] = j;
      }
    normalizer_.resize(L);
    normal_.resize(L);
    for (uint32_t a = 0; a < L; ++a) {
      normalizer_[a] = index_.at(normalizer(group_, members_[a]).indices());
      normal_[a] = normalizer_[a] == whole_idx_;
    }
    // conjugacy classes: orbits under conjugation by the group generators
    std::vector<char> placed(L, 0);
    for (uint32_t a = 0; a < L; ++a) {
      if (placed[a]) continue;
      std::vector<uint32_t> cls{a};
      placed[a] = 1;
      for (size_t i = 0; i < cls.size(); ++i)
        for (const Perm& g : group_.generators()) {
          uint32_t c = conjugated(cls[i], group_.index_of(g));
          if (!placed[c]) {
            placed[c] = 1;
            cls.push_back(c);
          }
        }
      std::sort(cls.begin(), cls.end());
      classes_.push_back(std::move(cls));
    }
    modular_cache_.assign(L, 0);
  }
};

}  // namespace sigmaembed

#endif
