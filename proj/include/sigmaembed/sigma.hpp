#ifndef SIGMAEMBED_SIGMA_HPP
#define SIGMAEMBED_SIGMA_HPP

#include <algorithm>
#include <cstdint>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "lattice.hpp"

namespace sigmaembed {

using BlockId = uint32_t;
constexpr BlockId kComplementBlock = UINT32_MAX;

inline std::vector<std::pair<uint64_t, unsigned>> factorize(uint64_t n) {
  std::vector<std::pair<uint64_t, unsigned>> out;
  for (uint64_t p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    unsigned e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.emplace_back(p, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

inline std::vector<uint64_t> primes_of(uint64_t n) {
  std::vector<uint64_t> out;
  for (auto [p, e] : factorize(n)) out.push_back(p);
  return out;
}

inline bool is_prime(uint64_t n) {
  if (n < 2) return false;
  for (uint64_t p = 2; p * p <= n; ++p)
    if (n % p == 0) return false;
  return true;
}

/// A partition of the primes into disjoint blocks. Only blocks listed
/// explicitly are stored; every prime not covered belongs to one implicit
/// complement block.
class SigmaPartition {
public:
  SigmaPartition() = default;

  explicit SigmaPartition(std::vector<std::vector<uint64_t>> blocks) {
    std::set<uint64_t> seen;
    for (auto& b : blocks) {
      std::sort(b.begin(), b.end());
      b.erase(std::unique(b.begin(), b.end()), b.end());
      if (b.empty()) continue;  // empty blocks carry no information
      for (uint64_t p : b) {
        if (!is_prime(p))
          throw ValidationError("not a prime: " + std::to_string(p));
        if (!seen.insert(p).second)
          throw ValidationError("prime in two blocks: " + std::to_string(p));
      }
      blocks_.push_back(std::move(b));
    }
    std::sort(blocks_.begin(), blocks_.end());
  }

  /// Classical partition {{2},{3},{5},...}: the empty explicit block list,
  /// read with singleton semantics, would be wrong, so it is modelled by a
  /// dedicated flag.
  static SigmaPartition classical() {
    SigmaPartition s;
    s.classical_ = true;
    return s;
  }

  /// Text syntax: blocks separated by '|', primes by ',', optional trailing
  /// "|*" for the explicit complement. "classical" selects {{2},{3},...}.
  static SigmaPartition parse(const std::string& text) {
    if (text == "classical" || text == "s") return classical();
    std::vector<std::vector<uint64_t>> blocks;
    std::stringstream ss(text);
    std::string blk;
    while (std::getline(ss, blk, '|')) {
      // strip whitespace
      std::string t;
      for (char c : blk)
        if (!std::isspace(static_cast<unsigned char>(c))) t += c;
      if (t == "*" || t.empty()) continue;  // explicit complement marker
      std::vector<uint64_t> primes;
      std::stringstream bs(t);
      std::string tok;
      while (std::getline(bs, tok, ',')) {
        if (tok.empty()) throw ValidationError("empty prime in sigma spec");
        primes.push_back(std::stoull(tok));
      }
      blocks.push_back(std::move(primes));
    }
    return SigmaPartition(std::move(blocks));
  }

  bool is_classical() const { return classical_; }
  const std::vector<std::vector<uint64_t>>& explicit_blocks() const { return blocks_; }

  BlockId block_of(uint64_t prime) const {
    if (classical_) return static_cast<BlockId>(prime);  // each prime its own block
    for (BlockId i = 0; i < blocks_.size(); ++i)
      if (std::binary_search(blocks_[i].begin(), blocks_[i].end(), prime)) return i;
    return kComplementBlock;
  }

  /// σ(n): blocks meeting π(n), in canonical order.
  std::vector<BlockId> sigma_of(uint64_t n) const {
    std::set<BlockId> s;
    for (uint64_t p : primes_of(n)) s.insert(block_of(p));
    return std::vector<BlockId>(s.begin(), s.end());
  }

  bool is_primary(uint64_t n) const { return sigma_of(n).size() <= 1; }

  /// π(n) ⊆ union of the blocks in pi.
  bool is_pi_number(uint64_t n, const std::vector<BlockId>& pi) const {
    for (uint64_t p : primes_of(n)) {
      BlockId b = block_of(p);
      if (std::find(pi.begin(), pi.end(), b) == pi.end()) return false;
    }
    return true;
  }

  bool is_block_number(uint64_t n, BlockId b) const {
    return is_pi_number(n, {b});
  }

  /// Full σ_b-part of n (product of p^e over primes of block b).
  uint64_t block_part(uint64_t n, BlockId b) const {
    uint64_t part = 1;
    for (auto [p, e] : factorize(n))
      if (block_of(p) == b)
        for (unsigned k = 0; k < e; ++k) part *= p;
    return part;
  }

  std::string to_string() const {
    if (classical_) return "classical";
    std::string out;
    for (size_t i = 0; i < blocks_.size(); ++i) {
      if (i) out += '|';
      for (size_t j = 0; j < blocks_[i].size(); ++j) {
        if (j) out += ',';
        out += std::to_string(blocks_[i][j]);
      }
    }
    out += out.empty() ? "*" : "|*";
    return out;
  }

  friend bool operator==(const SigmaPartition&, const SigmaPartition&) = default;
  friend auto operator<=>(const SigmaPartition&, const SigmaPartition&) = default;

private:
  std::vector<std::vector<uint64_t>> blocks_;
  bool classical_ = false;
};

/// One complete Hall σ-set: one Hall σ_i-subgroup (as a lattice index)
/// per block of σ(G). Blocks disjoint from π(G) are represented implicitly.
struct HallSet {
  std::vector<std::pair<BlockId, uint32_t>> members;  // (block, lattice index)

  std::vector<uint32_t> member_indices() const {
    std::vector<uint32_t> out;
    for (auto& [b, m] : members) out.push_back(m);
    return out;
  }

  std::string key() const {
    std::string k;
    for (auto& [b, m] : members) k += std::to_string(m) + ",";
    return k;
  }
};

inline bool is_sigma_primary(const Group& g, const SigmaPartition& sigma) {
  return sigma.is_primary(g.order());
}

/// All Hall σ_b-subgroups of the lattice's group for one block.
inline std::vector<uint32_t> hall_subgroup_members(const SubgroupLattice& lat,
                                                   const SigmaPartition& sigma,
                                                   BlockId b) {
  uint64_t part = sigma.block_part(lat.group().order(), b);
  std::vector<uint32_t> out;
  for (uint32_t i = 0; i < lat.size(); ++i)
    if (lat.member(i).order() == part) out.push_back(i);
  return out;
}

inline std::vector<HallSet> complete_hall_sets(const SubgroupLattice& lat,
                                               const SigmaPartition& sigma) {
  std::vector<BlockId> blocks = sigma.sigma_of(lat.group().order());
  std::vector<HallSet> sets{{}};
  for (BlockId b : blocks) {
    std::vector<uint32_t> halls = hall_subgroup_members(lat, sigma, b);
    if (halls.empty()) return {};  // not sigma-full
    std::vector<HallSet> next;
    for (const HallSet& hs : sets)
      for (uint32_t h : halls) {
        HallSet n = hs;
        n.members.emplace_back(b, h);
        next.push_back(std::move(n));
      }
    sets = std::move(next);
  }
  return sets;
}

inline bool is_sigma_full(const SubgroupLattice& lat, const SigmaPartition& sigma) {
  for (BlockId b : sigma.sigma_of(lat.group().order()))
    if (hall_subgroup_members(lat, sigma, b).empty()) return false;
  return true;
}

/// D_σi verification mode: full classical D_π (existence + conjugacy +
/// dominance) or the weaker EC reading (existence + conjugacy).
enum class DPropertyMode { Full, ExistenceConjugacy };

/// Every subgroup of G is a D_{σ_i}-group for every block meeting π(G).
inline bool is_sigma_full_of_sylow_type(
    const SubgroupLattice& lat, const SigmaPartition& sigma,
    DPropertyMode mode = DPropertyMode::Full) {
  std::vector<BlockId> blocks = sigma.sigma_of(lat.group().order());
  for (uint32_t k = 0; k < lat.size(); ++k) {
    const Subgroup& K = lat.member(k);
    for (BlockId b : blocks) {
      uint64_t part = sigma.block_part(K.order(), b);
      // Hall σ_b-subgroups of K
      std::vector<uint32_t> halls;
      for (uint32_t x : lat.subs_of(k))
        if (lat.member(x).order() == part) halls.push_back(x);
      if (halls.empty()) return false;  // existence
      // conjugacy under elements of K
      std::vector<char> reachable(lat.size(), 0);
      std::vector<uint32_t> orbit{halls[0]};
      reachable[halls[0]] = 1;
      for (size_t i = 0; i < orbit.size(); ++i)
        for (uint32_t g : K.indices()) {
          uint32_t c = lat.conjugated(orbit[i], g);
          if (!reachable[c]) {
            reachable[c] = 1;
            orbit.push_back(c);
          }
        }
      for (uint32_t h : halls)
        if (!reachable[h]) return false;
      if (mode == DPropertyMode::Full) {
        // dominance: every σ_b-subgroup of K lies in some Hall σ_b-subgroup
        for (uint32_t x : lat.subs_of(k)) {
          if (!sigma.is_block_number(lat.member(x).order(), b)) continue;
          bool covered = false;
          for (uint32_t h : halls)
            if (lat.leq(x, h)) {
              covered = true;
              break;
            }
          if (!covered) return false;
        }
      }
    }
  }
  return true;
}

/// O^Π(G): generated by all Π′-subgroups of G. More generally, computed
/// inside any ambient member.
inline uint32_t o_upper_pi_in(const SubgroupLattice& lat, const SigmaPartition& sigma,
                              const std::vector<BlockId>& pi, uint32_t ambient) {
  uint32_t acc = lat.trivial_index();
  for (uint32_t x : lat.subs_of(ambient)) {
    bool pi_prime = true;
    for (uint64_t p : primes_of(lat.member(x).order()))
      if (std::find(pi.begin(), pi.end(), sigma.block_of(p)) != pi.end()) {
        pi_prime = false;
        break;
      }
    if (pi_prime) acc = lat.join_of(acc, x);
  }
  return acc;
}

inline Subgroup o_upper_pi(const SubgroupLattice& lat, const SigmaPartition& sigma,
                           const std::vector<BlockId>& pi) {
  return lat.member(o_upper_pi_in(lat, sigma, pi, lat.whole_index()));
}

/// ℋ reduces into E: every member∩E is a Hall block-subgroup of E.
inline bool reduces_into(const SubgroupLattice& lat, const SigmaPartition& sigma,
                         const HallSet& hs, uint32_t e) {
  for (auto& [b, m] : hs.members) {
    uint64_t want = sigma.block_part(lat.member(e).order(), b);
    if (lat.member(lat.meet_of(m, e)).order() != want) return false;
  }
  return true;
}

}  // namespace sigmaembed

#endif
