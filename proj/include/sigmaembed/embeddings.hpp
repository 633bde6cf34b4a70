#ifndef SIGMAEMBED_EMBEDDINGS_HPP
#define SIGMAEMBED_EMBEDDINGS_HPP

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "series.hpp"
#include "sigma.hpp"

namespace sigmaembed {

/// Named subgroups proving a predicate; indices refer to the lattice of the
/// group the predicate was evaluated in.
struct EmbeddingWitness {
  std::string kind;
  std::vector<std::pair<std::string, uint32_t>> parts;
};

/// Per-group evaluation context. The lattice, the permutability matrix, the
/// modular set, and the per-(σ)/per-(ℋ) predicate sets are computed once and
/// reused across all subgroups; this is the performance-critical path.
class EmbeddingContext {
public:
  explicit EmbeddingContext(const Group& g,
                            uint64_t lattice_cap = kDefaultLatticeCap,
                            uint64_t modularity_cap = kDefaultModularityCap)
      : lat_(g, lattice_cap), modularity_cap_(modularity_cap) {
    const size_t L = lat_.size();
    permutes_.assign(L * L, 0);
    class_of_.assign(L, 0);
    const auto& classes = lat_.conjugacy_classes();
    for (uint32_t c = 0; c < classes.size(); ++c)
      for (uint32_t m : classes[c]) class_of_[m] = c;
  }

  const SubgroupLattice& lattice() const { return lat_; }
  const Group& group() const { return lat_.group(); }

  /// HK = KH, decided through the join/meet tables: HK is a subgroup iff
  /// |⟨H,K⟩|·|H∩K| = |H|·|K|.
  bool permutes(uint32_t a, uint32_t b) const {
    int8_t& slot = permutes_[size_t(a) * lat_.size() + b];
    if (slot == 0) {
      uint64_t lhs = lat_.member(lat_.join_of(a, b)).order() *
                     lat_.member(lat_.meet_of(a, b)).order();
      uint64_t rhs = lat_.member(a).order() * lat_.member(b).order();
      slot = lhs == rhs ? 1 : -1;
      permutes_[size_t(b) * lat_.size() + a] = slot;
    }
    return slot > 0;
  }

  bool is_modular(uint32_t h) const {
    if (group().order() > modularity_cap_)
      throw BudgetError("modularity cap " + std::to_string(modularity_cap_) +
                        " exceeded by group of order " +
                        std::to_string(group().order()));
    return lat_.is_modular_member(h);
  }

  std::vector<uint32_t> modular_members() const {
    std::vector<uint32_t> out;
    for (uint32_t i = 0; i < lat_.size(); ++i)
      if (is_modular(i)) out.push_back(i);
    return out;
  }

  const std::vector<HallSet>& hall_sets(const SigmaPartition& sigma) const {
    auto [it, fresh] = hall_sets_.try_emplace(sigma.to_string());
    if (fresh) it->second = complete_hall_sets(lat_, sigma);
    return it->second;
  }

  // ---- σ-subnormality ----

  /// Downward fixpoint from the ambient member: X joins when X ≤ Y for a
  /// reachable Y with X normal in Y or Y/core_Y(X) σ-primary.
  const std::vector<char>& sigma_subnormal_flags(const SigmaPartition& sigma,
                                                 uint32_t ambient) const {
    auto key = sigma.to_string() + "#" + std::to_string(ambient);
    auto [it, fresh] = subnormal_flags_.try_emplace(key);
    if (!fresh) return it->second.flags;
    SubnormalInfo& info = it->second;
    info.flags.assign(lat_.size(), 0);
    info.pred.assign(lat_.size(), UINT32_MAX);
    info.flags[ambient] = 1;
    bool changed = true;
    while (changed) {
      changed = false;
      for (uint32_t y = 0; y < lat_.size(); ++y) {
        if (!info.flags[y]) continue;
        for (uint32_t x : lat_.subs_of(y)) {
          if (info.flags[x]) continue;
          bool step = lat_.is_normal_in(x, y);
          if (!step) {
            uint64_t q = lat_.member(y).order() /
                         lat_.member(lat_.core_in(x, y)).order();
            step = sigma.is_primary(q);
          }
          if (step) {
            info.flags[x] = 1;
            info.pred[x] = y;
            changed = true;
          }
        }
      }
    }
    return info.flags;
  }

  bool is_sigma_subnormal(uint32_t a, const SigmaPartition& sigma,
                          uint32_t ambient, EmbeddingWitness* w = nullptr) const {
    const std::vector<char>& flags = sigma_subnormal_flags(sigma, ambient);
    if (!flags[a]) return false;
    if (w) {
      w->kind = "sigma-subnormal";
      const auto& pred =
          subnormal_flags_.at(sigma.to_string() + "#" + std::to_string(ambient)).pred;
      uint32_t cur = a;
      int i = 0;
      while (cur != UINT32_MAX) {
        w->parts.emplace_back("A" + std::to_string(i++), cur);
        cur = cur == ambient ? UINT32_MAX : pred[cur];
      }
    }
    return true;
  }

  bool is_sigma_subnormal(uint32_t a, const SigmaPartition& sigma,
                          EmbeddingWitness* w = nullptr) const {
    return is_sigma_subnormal(a, sigma, lat_.whole_index(), w);
  }

  std::vector<uint32_t> sigma_subnormal_members(const SigmaPartition& sigma) const {
    const auto& flags = sigma_subnormal_flags(sigma, lat_.whole_index());
    std::vector<uint32_t> out;
    for (uint32_t i = 0; i < lat_.size(); ++i)
      if (flags[i]) out.push_back(i);
    return out;
  }

  // ---- permutability predicates ----

  /// Some complete Hall σ-set ℋ has HA^x = A^xH for all A ∈ ℋ, x ∈ G.
  bool is_sigma_permutable(uint32_t h, const SigmaPartition& sigma) const {
    return sigma_permutable_flags(sigma)[h];
  }

  const std::vector<char>& sigma_permutable_flags(const SigmaPartition& sigma) const {
    auto [it, fresh] = sigma_perm_flags_.try_emplace(sigma.to_string());
    if (!fresh) return it->second;
    std::vector<char>& flags = it->second;
    flags.assign(lat_.size(), 0);
    const auto& sets = hall_sets(sigma);
    for (uint32_t h = 0; h < lat_.size(); ++h) {
      for (const HallSet& hs : sets) {
        bool ok = true;
        for (auto& [b, m] : hs.members) {
          for (uint32_t conj : lat_.conjugacy_classes()[class_of_[m]])
            if (!permutes(h, conj)) {
              ok = false;
              break;
            }
          if (!ok) break;
        }
        if (ok) {
          flags[h] = 1;
          break;
        }
      }
    }
    return flags;
  }

  bool is_h_permutable(uint32_t h, const HallSet& hs) const {
    for (auto& [b, m] : hs.members)
      if (!permutes(h, m)) return false;
    return true;
  }

  const std::vector<char>& h_permutable_flags(const HallSet& hs) const {
    auto [it, fresh] = h_perm_flags_.try_emplace(hs.key());
    if (!fresh) return it->second;
    std::vector<char>& flags = it->second;
    flags.assign(lat_.size(), 0);
    for (uint32_t h = 0; h < lat_.size(); ++h)
      flags[h] = is_h_permutable(h, hs);
    return flags;
  }

  /// H = ⟨A,B⟩ for a modular A and ℋ-permutable B.
  bool is_m_h_permutable(uint32_t h, const HallSet& hs,
                         EmbeddingWitness* w = nullptr) const {
    const auto& hperm = h_permutable_flags(hs);
    for (uint32_t a : modular_members()) {
      if (!lat_.leq(a, h)) continue;
      for (uint32_t b : lat_.subs_of(h)) {
        if (!hperm[b]) continue;
        if (lat_.join_of(a, b) == h) {
          if (w) {
            w->kind = "m-H-permutable";
            w->parts = {{"A", a}, {"B", b}};
          }
          return true;
        }
      }
    }
    return false;
  }

  const std::vector<char>& m_h_permutable_flags(const HallSet& hs) const {
    auto [it, fresh] = m_h_perm_flags_.try_emplace(hs.key());
    if (!fresh) return it->second;
    std::vector<char>& flags = it->second;
    flags.assign(lat_.size(), 0);
    for (uint32_t h = 0; h < lat_.size(); ++h)
      flags[h] = is_m_h_permutable(h, hs);
    return flags;
  }

  /// Some σ-subnormal T has G = HT and H∩T ≤ S ≤ H with S m-ℋ-permutable.
  /// T is searched ascending by order, S descending from H.
  bool is_weakly_m_h_permutable(uint32_t h, const HallSet& hs,
                                const SigmaPartition& sigma,
                                EmbeddingWitness* w = nullptr) const {
    const auto& mh = m_h_permutable_flags(hs);
    return weak_search(h, sigma, mh, "weakly-m-H-permutable", w);
  }

  /// H = ⟨A,B⟩ for a modular A and σ-permutable B.
  bool is_m_sigma_permutable(uint32_t h, const SigmaPartition& sigma,
                             EmbeddingWitness* w = nullptr) const {
    const auto& sperm = sigma_permutable_flags(sigma);
    for (uint32_t a : modular_members()) {
      if (!lat_.leq(a, h)) continue;
      for (uint32_t b : lat_.subs_of(h)) {
        if (!sperm[b]) continue;
        if (lat_.join_of(a, b) == h) {
          if (w) {
            w->kind = "m-sigma-permutable";
            w->parts = {{"A", a}, {"B", b}};
          }
          return true;
        }
      }
    }
    return false;
  }

  bool is_weakly_m_sigma_permutable(uint32_t h, const SigmaPartition& sigma,
                                    EmbeddingWitness* w = nullptr) const {
    auto [it, fresh] = m_sigma_perm_flags_.try_emplace(sigma.to_string());
    if (fresh) {
      it->second.assign(lat_.size(), 0);
      for (uint32_t s = 0; s < lat_.size(); ++s)
        it->second[s] = is_m_sigma_permutable(s, sigma);
    }
    return weak_search(h, sigma, it->second, "weakly-m-sigma-permutable", w);
  }

  /// G = HT for a normal T with H∩T ≤ H_G.
  bool is_c_normal(uint32_t h, EmbeddingWitness* w = nullptr) const {
    uint32_t hcore = lat_.core(h);
    uint64_t gorder = group().order();
    for (uint32_t t : lat_.normal_members()) {
      uint64_t prod = lat_.member(h).order() * lat_.member(t).order();
      uint32_t cap = lat_.meet_of(h, t);
      if (prod != gorder * lat_.member(cap).order()) continue;
      if (lat_.leq(cap, hcore)) {
        if (w) {
          w->kind = "c-normal";
          w->parts = {{"T", t}};
        }
        return true;
      }
    }
    return false;
  }

private:
  struct SubnormalInfo {
    std::vector<char> flags;
    std::vector<uint32_t> pred;
  };

  bool weak_search(uint32_t h, const SigmaPartition& sigma,
                   const std::vector<char>& s_ok, const std::string& kind,
                   EmbeddingWitness* w) const {
    const auto& subn = sigma_subnormal_flags(sigma, lat_.whole_index());
    uint64_t gorder = group().order();
    for (uint32_t t = 0; t < lat_.size(); ++t) {  // lattice order is ascending by order
      if (!subn[t]) continue;
      uint32_t cap = lat_.meet_of(h, t);
      if (lat_.member(h).order() * lat_.member(t).order() !=
          gorder * lat_.member(cap).order())
        continue;  // HT != G
      const auto& subs = lat_.subs_of(h);
      for (auto it = subs.rbegin(); it != subs.rend(); ++it) {
        uint32_t s = *it;
        if (!lat_.leq(cap, s)) continue;
        if (s_ok[s]) {
          if (w) {
            w->kind = kind;
            w->parts = {{"T", t}, {"S", s}};
          }
          return true;
        }
      }
    }
    return false;
  }

  SubgroupLattice lat_;
  uint64_t modularity_cap_;
  std::vector<uint32_t> class_of_;
  mutable std::vector<int8_t> permutes_;
  mutable std::map<std::string, std::vector<HallSet>> hall_sets_;
  mutable std::map<std::string, SubnormalInfo> subnormal_flags_;
  mutable std::map<std::string, std::vector<char>> sigma_perm_flags_;
  mutable std::map<std::string, std::vector<char>> h_perm_flags_;
  mutable std::map<std::string, std::vector<char>> m_h_perm_flags_;
  mutable std::map<std::string, std::vector<char>> m_sigma_perm_flags_;
};

}  // namespace sigmaembed

#endif
