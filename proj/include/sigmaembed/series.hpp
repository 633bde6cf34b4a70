#ifndef SIGMAEMBED_SERIES_HPP
#define SIGMAEMBED_SERIES_HPP

#include <cstdint>
#include <random>
#include <vector>

#include "sigma.hpp"

namespace sigmaembed {

struct ChiefFactor {
  uint64_t order;
  bool cyclic;
};

/// Ascending chief series of G from 1 up to a designated normal subgroup E,
/// as lattice indices.
struct ChiefSeries {
  std::vector<uint32_t> terms;  // starts at 1, ends at E; empty factors if E = 1
  std::vector<ChiefFactor> factors;
};

/// N/cur is cyclic iff some single coset representative generates it over cur.
inline bool factor_is_cyclic(const SubgroupLattice& lat, uint32_t cur, uint32_t next) {
  const Subgroup& n = lat.member(next);
  const Subgroup& c = lat.member(cur);
  for (uint32_t e : n.indices()) {
    if (c.contains_index(e)) continue;
    IndexSet gens = c.indices();
    gens.push_back(e);
    if (Subgroup::generated(lat.group(), gens).order() == n.order()) return true;
  }
  return false;
}

/// Greedy ascent by minimal normal steps from lo to hi (both normal in G).
/// A non-null rng picks a random minimal step instead of the first, for
/// series-independence checks.
inline ChiefSeries chief_series_between(const SubgroupLattice& lat, uint32_t lo,
                                        uint32_t e, std::mt19937* rng = nullptr) {
  if (!lat.is_normal(e) || !lat.is_normal(lo) || !lat.leq(lo, e))
    throw ValidationError("chief series endpoints must be normal and nested");
  std::vector<uint32_t> normals = lat.normal_members();
  ChiefSeries out;
  uint32_t cur = lo;
  out.terms.push_back(cur);
  while (cur != e) {
    // candidates: normal N with cur < N <= E, minimal among those
    std::vector<uint32_t> cands;
    for (uint32_t n : normals)
      if (n != cur && lat.leq(cur, n) && lat.leq(n, e)) cands.push_back(n);
    std::vector<uint32_t> minimal;
    for (uint32_t n : cands) {
      bool min = true;
      for (uint32_t m : cands)
        if (m != n && lat.leq(m, n)) {
          min = false;
          break;
        }
      if (min) minimal.push_back(n);
    }
    uint32_t next = minimal.front();
    if (rng && minimal.size() > 1)
      next = minimal[(*rng)() % minimal.size()];
    out.factors.push_back(
        {lat.member(next).order() / lat.member(cur).order(),
         factor_is_cyclic(lat, cur, next)});
    out.terms.push_back(next);
    cur = next;
  }
  return out;
}

inline ChiefSeries chief_series_through(const SubgroupLattice& lat, uint32_t e,
                                        std::mt19937* rng = nullptr) {
  return chief_series_between(lat, lat.trivial_index(), e, rng);
}

/// E ≤ Z_𝔘(G): every chief factor of G below E is cyclic. Chief factors are
/// cyclic exactly when they have prime order.
inline bool is_hypercyclically_embedded(const SubgroupLattice& lat, uint32_t e) {
  if (e == lat.trivial_index()) return true;
  for (const ChiefFactor& f : chief_series_through(lat, e).factors)
    if (!is_prime(f.order)) return false;
  return true;
}

inline bool is_supersoluble(const SubgroupLattice& lat) {
  return is_hypercyclically_embedded(lat, lat.whole_index());
}

/// Terminal member of the upper central series.
inline Subgroup hypercenter(const Group& g) {
  IndexSet cur{g.identity_index()};
  Subgroup z = Subgroup::from_sorted_indices(g, cur);
  for (;;) {
    // next = {x : [x,y] in z for all y in G}
    IndexSet next;
    for (uint32_t x = 0; x < g.order(); ++x) {
      bool in = true;
      for (uint32_t y = 0; y < g.order(); ++y) {
        uint32_t comm = g.mult(g.inv(x), g.conj(x, y));
        if (!z.contains_index(comm)) {
          in = false;
          break;
        }
      }
      if (in) next.push_back(x);
    }
    if (next.size() == z.order()) return z;
    z = Subgroup::from_sorted_indices(g, std::move(next));
  }
}

/// Normal Hall p′-subgroup test. A non-null vacuous flag reports the case
/// p ∤ |G|, where the answer is true by convention.
inline bool is_p_nilpotent(const SubgroupLattice& lat, uint64_t p,
                           bool* vacuous = nullptr) {
  uint64_t n = lat.group().order();
  if (vacuous) *vacuous = false;
  if (n % p != 0) {
    if (vacuous) *vacuous = true;
    return true;
  }
  uint64_t p_part = 1;
  while (n % p == 0) {
    n /= p;
    p_part *= p;
  }
  uint64_t target = lat.group().order() / p_part;
  for (uint32_t m : lat.normal_members())
    if (lat.member(m).order() == target) return true;
  return false;
}

inline Subgroup derived_subgroup(const Group& g) {
  IndexSet comms;
  std::vector<char> seen(g.order(), 0);
  for (uint32_t x = 0; x < g.order(); ++x)
    for (uint32_t y = 0; y < g.order(); ++y) {
      uint32_t c = g.mult(g.inv(x), g.conj(x, y));
      if (!seen[c]) {
        seen[c] = 1;
        comms.push_back(c);
      }
    }
  return Subgroup::generated(g, comms);
}

inline bool is_simple_group(const Group& g) {
  if (g.order() == 1) return false;
  for (uint32_t e = 0; e < g.order(); ++e) {
    if (e == g.identity_index()) continue;
    Subgroup cyc = Subgroup::generated(g, {e});
    if (normal_closure(g, cyc).order() != g.order()) return false;
  }
  return true;
}

/// F(E): product of the largest normal p-subgroups, computed in E's own
/// lattice; returned as a lattice index of latE.
inline uint32_t fitting_member(const SubgroupLattice& lat_e) {
  uint32_t acc = lat_e.trivial_index();
  for (uint64_t p : primes_of(lat_e.group().order())) {
    for (uint32_t m : lat_e.normal_members()) {
      uint64_t o = lat_e.member(m).order();
      bool p_group = true;
      uint64_t t = o;
      while (t % p == 0) t /= p;
      p_group = t == 1;
      if (p_group) acc = lat_e.join_of(acc, m);
    }
  }
  return acc;
}

/// Components of E: subnormal perfect L with L/Z(L) simple.
inline std::vector<uint32_t> component_members(const SubgroupLattice& lat_e) {
  std::vector<uint32_t> out;
  for (uint32_t m : lat_e.subnormal_members()) {
    const Subgroup& l = lat_e.member(m);
    if (l.order() == 1) continue;
    Group lg = l.as_group();
    if (derived_subgroup(lg).order() != lg.order()) continue;  // perfect
    Subgroup z = center(lg);
    Epimorphism ep = quotient(lg, z);
    if (is_simple_group(ep.quotient())) out.push_back(m);
  }
  return out;
}

/// F*(E) = F(E) · E(E), as a subgroup of the parent of E.
inline Subgroup generalized_fitting(const Group& parent, const Subgroup& e,
                                    uint64_t lattice_cap = kDefaultLatticeCap) {
  Group ge = e.as_group();
  SubgroupLattice lat_e(ge, lattice_cap);
  uint32_t acc = fitting_member(lat_e);
  for (uint32_t c : component_members(lat_e)) acc = lat_e.join_of(acc, c);
  // map back into the parent
  IndexSet out;
  for (uint32_t idx : lat_e.member(acc).indices())
    out.push_back(parent.index_of(ge.element(idx)));
  std::sort(out.begin(), out.end());
  return Subgroup::from_sorted_indices(parent, std::move(out));
}

inline Subgroup fitting_subgroup(const Group& parent, const Subgroup& e,
                                 uint64_t lattice_cap = kDefaultLatticeCap) {
  Group ge = e.as_group();
  SubgroupLattice lat_e(ge, lattice_cap);
  IndexSet out;
  for (uint32_t idx : lat_e.member(fitting_member(lat_e)).indices())
    out.push_back(parent.index_of(ge.element(idx)));
  std::sort(out.begin(), out.end());
  return Subgroup::from_sorted_indices(parent, std::move(out));
}

}  // namespace sigmaembed

#endif
