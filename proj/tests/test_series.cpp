#include <catch2/catch_amalgamated.hpp>

#include <sigmaembed/corpus.hpp>
#include <sigmaembed/series.hpp>

using namespace sigmaembed;

TEST_CASE("chief series of S4") {
  Group s4 = symmetric_group(4);
  SubgroupLattice lat(s4);
  ChiefSeries cs = chief_series_through(lat, lat.whole_index());
  std::multiset<uint64_t> factors;
  for (const ChiefFactor& f : cs.factors) factors.insert(f.order);
  REQUIRE(factors == std::multiset<uint64_t>{2, 3, 4});  // V4/1, A4/V4, S4/A4
  REQUIRE(cs.terms.front() == lat.trivial_index());
  REQUIRE(cs.terms.back() == lat.whole_index());
}

TEST_CASE("chief factor multiset is invariant across random refinements") {
  for (const NamedGroup& ng : default_corpus(200)) {
    if (ng.group.order() > 200) continue;
    INFO(ng.name);
    SubgroupLattice lat(ng.group);
    ChiefSeries base = chief_series_through(lat, lat.whole_index());
    std::multiset<uint64_t> expected;
    for (const ChiefFactor& f : base.factors) expected.insert(f.order);
    for (uint32_t seed : {1u, 2u, 3u}) {
      std::mt19937 rng(seed);
      ChiefSeries alt = chief_series_through(lat, lat.whole_index(), &rng);
      std::multiset<uint64_t> got;
      for (const ChiefFactor& f : alt.factors) got.insert(f.order);
      REQUIRE(got == expected);
    }
  }
}

TEST_CASE("supersolubility on known groups") {
  auto super = [](const Group& g) {
    SubgroupLattice lat(g);
    return is_supersoluble(lat);
  };
  REQUIRE(super(symmetric_group(3)));
  REQUIRE(super(dihedral_group(8)));
  REQUIRE(super(cyclic_group(30)));
  REQUIRE(super(metacyclic_group(7, 3)));
  REQUIRE(!super(alternating_group(4)));
  REQUIRE(!super(symmetric_group(4)));
  REQUIRE(!super(alternating_group(5)));
}

TEST_CASE("supersolubility matches the recursive normal-cyclic oracle") {
  // oracle: G is supersoluble iff G = 1 or it has a normal prime-order
  // subgroup N with G/N supersoluble
  auto oracle = [](auto&& self, const Group& g) -> bool {
    if (g.order() == 1) return true;
    SubgroupLattice lat(g);
    for (uint32_t m : lat.normal_members()) {
      if (!is_prime(lat.member(m).order())) continue;
      Epimorphism ep = quotient(g, lat.member(m));
      if (self(self, ep.quotient())) return true;
    }
    return false;
  };
  for (const char* name :
       {"C12", "S3", "D16", "A4", "S4", "Q8", "C7:C3", "C5:C4", "D8xC3"}) {
    INFO(name);
    Group g = build_group_expr(name);
    SubgroupLattice lat(g);
    REQUIRE(is_supersoluble(lat) == oracle(oracle, g));
  }
}

TEST_CASE("hypercyclic embedding of normal subgroups") {
  Group s4 = symmetric_group(4);
  SubgroupLattice lat(s4);
  for (uint32_t e : lat.normal_members()) {
    uint64_t o = lat.member(e).order();
    bool expect = o == 1;  // V4 sits under a non-cyclic chief factor
    if (o == 1) expect = true;
    if (o == 4 || o == 12 || o == 24) expect = false;
    REQUIRE(is_hypercyclically_embedded(lat, e) == expect);
  }
  Group d8c3 = build_group_expr("D8xC3");
  SubgroupLattice lat2(d8c3);
  REQUIRE(is_hypercyclically_embedded(lat2, lat2.whole_index()));
}

TEST_CASE("hypercenter computations") {
  REQUIRE(hypercenter(symmetric_group(3)).order() == 1);
  REQUIRE(hypercenter(dihedral_group(8)).order() == 8);   // nilpotent
  REQUIRE(hypercenter(quaternion8_group()).order() == 8);  // nilpotent
  REQUIRE(hypercenter(symmetric_group(4)).order() == 1);
  REQUIRE(hypercenter(build_group_expr("D8xC3")).order() == 24);  // nilpotent
  Group d12 = dihedral_group(12);  // D12 = C2 x S3: Z = C2, Z2 = Z
  REQUIRE(hypercenter(d12).order() == 2);
}

TEST_CASE("p-nilpotency") {
  auto pn = [](const Group& g, uint64_t p) {
    SubgroupLattice lat(g);
    return is_p_nilpotent(lat, p);
  };
  REQUIRE(pn(symmetric_group(3), 2));   // normal C3
  REQUIRE(!pn(symmetric_group(3), 3));  // no normal C2
  REQUIRE(!pn(alternating_group(4), 2));
  REQUIRE(pn(alternating_group(4), 3));  // normal V4
  REQUIRE(!pn(symmetric_group(4), 2));
  REQUIRE(pn(cyclic_group(12), 2));
  bool vac = false;
  SubgroupLattice lat(cyclic_group(3));
  REQUIRE(is_p_nilpotent(lat, 5, &vac));
  REQUIRE(vac);
}

TEST_CASE("derived subgroup and simplicity") {
  REQUIRE(derived_subgroup(symmetric_group(4)).order() == 12);
  REQUIRE(derived_subgroup(alternating_group(4)).order() == 4);
  REQUIRE(derived_subgroup(alternating_group(5)).order() == 60);
  REQUIRE(derived_subgroup(cyclic_group(8)).order() == 1);
  REQUIRE(is_simple_group(alternating_group(5)));
  REQUIRE(is_simple_group(cyclic_group(7)));
  REQUIRE(!is_simple_group(cyclic_group(1)));
  REQUIRE(!is_simple_group(alternating_group(4)));
}

TEST_CASE("Fitting and generalized Fitting subgroups") {
  Group a4 = alternating_group(4);
  REQUIRE(fitting_subgroup(a4, Subgroup::whole(a4)).order() == 4);   // V4
  REQUIRE(generalized_fitting(a4, Subgroup::whole(a4)).order() == 4);
  Group s4 = symmetric_group(4);
  REQUIRE(fitting_subgroup(s4, Subgroup::whole(s4)).order() == 4);
  REQUIRE(generalized_fitting(s4, Subgroup::whole(s4)).order() == 4);
  Group a5 = alternating_group(5);
  REQUIRE(fitting_subgroup(a5, Subgroup::whole(a5)).order() == 1);
  REQUIRE(generalized_fitting(a5, Subgroup::whole(a5)).order() == 60);
  Group d8c3 = build_group_expr("D8xC3");
  REQUIRE(fitting_subgroup(d8c3, Subgroup::whole(d8c3)).order() == 24);
}

TEST_CASE("chief series between two normal subgroups") {
  Group s4 = symmetric_group(4);
  SubgroupLattice lat(s4);
  uint32_t v4 = UINT32_MAX, a4 = UINT32_MAX;
  for (uint32_t m : lat.normal_members()) {
    if (lat.member(m).order() == 4) v4 = m;
    if (lat.member(m).order() == 12) a4 = m;
  }
  ChiefSeries cs = chief_series_between(lat, v4, a4);
  REQUIRE(cs.factors.size() == 1);
  REQUIRE(cs.factors[0].order == 3);
  REQUIRE(cs.factors[0].cyclic);
  REQUIRE_THROWS_AS(chief_series_between(lat, a4, v4), ValidationError);
}
