#ifndef SIGMAEMBED_EXAMPLES_HPP
#define SIGMAEMBED_EXAMPLES_HPP

#include "harness.hpp"

namespace sigmaembed {

struct ExampleCheck {
  std::string name;
  bool pass = true;
  std::vector<std::string> failures;
  double seconds = 0;

  void expect(bool cond, const std::string& what) {
    if (!cond) {
      pass = false;
      failures.push_back(what);
    }
  }
};

/// A4 with σ = {2,3 | rest}: the unique complete Hall σ-set is {A4} itself;
/// every subgroup is ℋ-permutable and weakly m-ℋ-permutable; the order-2
/// subgroups are not modular.
inline ExampleCheck check_example_a4() {
  harness_detail::Timer timer;
  ExampleCheck c{"A4 sigma={2,3|*}"};
  Group a4 = alternating_group(4);
  EmbeddingContext ctx(a4);
  SigmaPartition sigma = SigmaPartition::parse("2,3|*");
  const auto& sets = ctx.hall_sets(sigma);
  c.expect(sets.size() == 1, "expected a unique complete Hall sigma-set");
  c.expect(ctx.lattice().size() == 10, "expected 10 subgroups");
  if (!c.pass) {
    c.seconds = timer.seconds();
    return c;
  }
  const HallSet& hs = sets[0];
  c.expect(hs.members.size() == 1 &&
               ctx.lattice().member(hs.members[0].second).order() == 12,
           "expected the Hall set {A4}");
  for (uint32_t h = 0; h < ctx.lattice().size(); ++h) {
    c.expect(ctx.is_h_permutable(h, hs),
             "subgroup " + std::to_string(h) + " should be H-permutable");
    c.expect(ctx.is_weakly_m_h_permutable(h, hs, sigma),
             "subgroup " + std::to_string(h) +
                 " should be weakly m-H-permutable");
    if (ctx.lattice().member(h).order() == 2)
      c.expect(!ctx.is_modular(h),
               "order-2 subgroup " + std::to_string(h) + " should not be modular");
  }
  c.seconds = timer.seconds();
  return c;
}

/// A5 with σ = {2,3 | rest} and ℋ = {an A4-copy, a C5}: the σ-subnormal
/// subgroups are exactly 1 and A5; the chosen C5 is ℋ-permutable and weakly
/// m-ℋ-permutable but neither σ-permutable nor weakly m-σ-permutable.
inline ExampleCheck check_example_a5() {
  harness_detail::Timer timer;
  ExampleCheck c{"A5 sigma={2,3|*}"};
  Group a5 = alternating_group(5);
  EmbeddingContext ctx(a5);
  const SubgroupLattice& lat = ctx.lattice();
  SigmaPartition sigma = SigmaPartition::parse("2,3|*");
  c.expect(lat.size() == 59, "expected the full 59-subgroup lattice");
  std::vector<uint32_t> subn = ctx.sigma_subnormal_members(sigma);
  c.expect(subn.size() == 2 && subn.front() == lat.trivial_index() &&
               subn.back() == lat.whole_index(),
           "sigma-subnormal subgroups should be exactly {1, A5}");
  const auto& sets = ctx.hall_sets(sigma);
  c.expect(!sets.empty(), "A5 should be sigma-full for this sigma");
  if (!c.pass) {
    c.seconds = timer.seconds();
    return c;
  }
  const HallSet& hs = sets[0];
  uint32_t c5 = UINT32_MAX;
  for (auto& [b, m] : hs.members)
    if (lat.member(m).order() == 5) c5 = m;
  c.expect(c5 != UINT32_MAX, "Hall set should contain a C5");
  if (c5 == UINT32_MAX) {
    c.seconds = timer.seconds();
    return c;
  }
  c.expect(ctx.is_h_permutable(c5, hs), "C5 should be H-permutable");
  c.expect(ctx.is_weakly_m_h_permutable(c5, hs, sigma),
           "C5 should be weakly m-H-permutable");
  c.expect(!ctx.is_sigma_permutable(c5, sigma),
           "C5 should not be sigma-permutable");
  c.expect(!ctx.is_weakly_m_sigma_permutable(c5, sigma),
           "C5 should not be weakly m-sigma-permutable");
  c.seconds = timer.seconds();
  return c;
}

/// The order-1680 construction with (p,q,r,t) = (5,2,7,3): with
/// ℋ = {Q⋊C5, C7, T} (T a conjugate of A distinct from it), the order-2
/// subgroup B ≤ Q permutes with every member, while H = A×B does not.
/// Modularity is not scanned at this order; the separate corpus scan covers
/// the modularity implications.
inline ExampleCheck check_example_1680() {
  harness_detail::Timer timer;
  ExampleCheck c{"order-1680 construction (5,2,7,3)"};
  Example132 ex = build_example_132(5, 2, 7, 3);
  const Group& g = ex.group;
  c.expect(g.order() == 1680, "expected order 1680");
  c.expect(ex.module_dim == 4, "expected a 4-dimensional module");
  Subgroup v = ex.sub_V();    // Q ⋊ C5, order 80
  Subgroup c7 = ex.sub_Cr();  // C7
  Subgroup t = ex.sub_T();    // conjugate of A
  Subgroup a = ex.sub_A();
  Subgroup b = ex.sub_B();
  Subgroup h = ex.sub_H();  // A × B
  c.expect(v.order() == 80, "|Q:C5| member should have order 80");
  c.expect(c7.order() == 7 && t.order() == 3 && a.order() == 3,
           "C7 and the two C3s should have orders 7, 3, 3");
  c.expect(!(t == a), "T must differ from A");
  c.expect(b.order() == 2 && h.order() == 6, "B and H=A*B orders");
  std::vector<Subgroup> hall = {v, c7, t};
  for (const Subgroup& m : hall)
    c.expect(product_permutes(g, b, m),
             "B should permute with the Hall set member of order " +
                 std::to_string(m.order()));
  bool h_perm = true;
  for (const Subgroup& m : hall)
    if (!product_permutes(g, h, m)) h_perm = false;
  c.expect(!h_perm, "H = A*B must not be H-permutable");
  c.seconds = timer.seconds();
  return c;
}

/// Modularity scan delegated from the order-1680 example: on every corpus
/// group of order ≤ max_order, normal subgroups and quasinormal subgroups
/// (those permuting with every subgroup) must be modular.
inline ExampleCheck check_modularity_scan(uint64_t max_order = 200) {
  harness_detail::Timer timer;
  ExampleCheck c{"modularity scan (order <= " + std::to_string(max_order) + ")"};
  for (const NamedGroup& ng : default_corpus(max_order)) {
    if (ng.group.order() > max_order) continue;
    EmbeddingContext ctx(ng.group, kDefaultLatticeCap, max_order);
    const SubgroupLattice& lat = ctx.lattice();
    for (uint32_t h = 0; h < lat.size(); ++h) {
      bool quasinormal = true;
      for (uint32_t k = 0; k < lat.size() && quasinormal; ++k)
        if (!ctx.permutes(h, k)) quasinormal = false;
      if (lat.is_normal(h))
        c.expect(ctx.is_modular(h), ng.name + ": normal subgroup " +
                                        std::to_string(h) + " must be modular");
      if (quasinormal)
        c.expect(ctx.is_modular(h), ng.name + ": quasinormal subgroup " +
                                        std::to_string(h) + " must be modular");
    }
  }
  c.seconds = timer.seconds();
  return c;
}

}  // namespace sigmaembed

#endif
