#include <catch2/catch_amalgamated.hpp>

#include <set>

#include <sigmaembed/corpus.hpp>
#include <sigmaembed/group.hpp>

using namespace sigmaembed;

namespace {

// Independent closure oracle: BFS over a std::set of permutations, no index
// machinery.
std::set<Perm> closure_oracle(unsigned degree, const std::vector<Perm>& gens) {
  std::set<Perm> seen{Perm::identity(degree)};
  std::vector<Perm> frontier{Perm::identity(degree)};
  while (!frontier.empty()) {
    std::vector<Perm> next;
    for (const Perm& f : frontier)
      for (const Perm& g : gens) {
        Perm p = f * g;
        if (seen.insert(p).second) next.push_back(p);
      }
    frontier = std::move(next);
  }
  return seen;
}

}  // namespace

TEST_CASE("certificate order equals enumeration order on the corpus") {
  for (const NamedGroup& ng : default_corpus(200)) {
    INFO(ng.name);
    const Group& g = ng.group;
    std::set<Perm> oracle = closure_oracle(g.degree(), g.generators());
    REQUIRE(g.order() == oracle.size());
    Bsgs cert(g.degree(), g.generators());
    REQUIRE(cert.order() == oracle.size());
  }
}

TEST_CASE("membership certificate agrees with enumeration") {
  Group s4 = symmetric_group(4);
  REQUIRE(s4.order() == 24);
  Group a4 = alternating_group(4);
  for (uint32_t i = 0; i < s4.order(); ++i) {
    const Perm& p = s4.element(i);
    bool even = a4.contains(p);
    // parity oracle: count transpositions in the cycle decomposition
    std::vector<bool> seen(4, false);
    int transpositions = 0;
    for (uint32_t x = 0; x < 4; ++x) {
      if (seen[x]) continue;
      uint32_t y = x;
      int len = 0;
      do {
        seen[y] = true;
        y = p[y];
        ++len;
      } while (y != x);
      transpositions += len - 1;
    }
    REQUIRE(even == (transpositions % 2 == 0));
  }
}

TEST_CASE("multiplication and inverse tables agree with permutations") {
  Group g = symmetric_group(4);
  for (uint32_t i = 0; i < g.order(); ++i) {
    REQUIRE(g.element(g.inv(i)) == g.element(i).inverse());
    for (uint32_t j = 0; j < g.order(); ++j)
      REQUIRE(g.element(g.mult(i, j)) == g.element(i) * g.element(j));
  }
}

TEST_CASE("conj is right conjugation") {
  Group g = symmetric_group(3);
  for (uint32_t x = 0; x < g.order(); ++x)
    for (uint32_t h = 0; h < g.order(); ++h)
      REQUIRE(g.element(g.conj(x, h)) == g.element(x).conjugate_by(g.element(h)));
}

TEST_CASE("padding with fixed points does not change the group") {
  // same generators on a larger degree with trailing fixed points
  std::vector<Perm> small = {Perm::from_cycles(3, "(0 1 2)"),
                             Perm::from_cycles(3, "(0 1)")};
  std::vector<Perm> padded = {Perm::from_cycles(7, "(0 1 2)"),
                              Perm::from_cycles(7, "(0 1)")};
  Group g1 = Group::from_generators(3, small);
  Group g2 = Group::from_generators(7, padded);
  REQUIRE(g1.order() == g2.order());
  // element-wise: orders of elements match as multisets
  std::multiset<unsigned> o1, o2;
  for (uint32_t i = 0; i < g1.order(); ++i) o1.insert(g1.element(i).order());
  for (uint32_t i = 0; i < g2.order(); ++i) o2.insert(g2.element(i).order());
  REQUIRE(o1 == o2);
}

TEST_CASE("order cap is enforced") {
  std::vector<Perm> gens = {Perm::from_cycles(8, "(0 1 2 3 4 5 6 7)"),
                            Perm::from_cycles(8, "(0 1)")};
  REQUIRE_THROWS_AS(Group::from_generators(8, gens, 1000), BudgetError);
}

TEST_CASE("degree mismatch between generators is rejected") {
  REQUIRE_THROWS_AS(Group::from_generators(4, {Perm::from_cycles(5, "(0 4)")}),
                    ValidationError);
}

TEST_CASE("index_of round-trips elements") {
  Group g = alternating_group(5);
  for (uint32_t i = 0; i < g.order(); ++i)
    REQUIRE(g.index_of(g.element(i)) == i);
}
