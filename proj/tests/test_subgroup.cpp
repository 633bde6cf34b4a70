#include <catch2/catch_amalgamated.hpp>

#include <set>

#include <sigmaembed/corpus.hpp>
#include <sigmaembed/subgroup.hpp>

using namespace sigmaembed;

namespace {

Subgroup sub(const Group& g, const std::string& cycles) {
  std::vector<Perm> gens;
  std::stringstream ss(cycles);
  std::string tok;
  while (std::getline(ss, tok, ';'))
    gens.push_back(Perm::from_cycles(g.degree(), tok));
  return Subgroup::generated_by_perms(g, gens);
}

// brute-force normalizer: all g with H^g = H
IndexSet normalizer_oracle(const Group& g, const Subgroup& h) {
  IndexSet out;
  for (uint32_t e = 0; e < g.order(); ++e)
    if (h.conjugated_by(e) == h) out.push_back(e);
  return out;
}

}  // namespace

TEST_CASE("generated subgroup is closed and minimal") {
  Group s4 = symmetric_group(4);
  Subgroup v4 = sub(s4, "(0 1)(2 3); (0 2)(1 3)");
  REQUIRE(v4.order() == 4);
  for (uint32_t a : v4.indices())
    for (uint32_t b : v4.indices())
      REQUIRE(v4.contains_index(s4.mult(a, b)));
}

TEST_CASE("join and intersection against element sets") {
  Group s4 = symmetric_group(4);
  Subgroup a = sub(s4, "(0 1)");
  Subgroup b = sub(s4, "(2 3)");
  Subgroup j = join(s4, {a, b});
  REQUIRE(j.order() == 4);
  REQUIRE(intersect(a, b).order() == 1);
  Subgroup s3 = sub(s4, "(0 1 2); (0 1)");
  Subgroup a4 = sub(s4, "(0 1 2); (0 1)(2 3)");
  Subgroup meet = intersect(s3, a4);
  REQUIRE(meet.order() == 3);  // S3 ∩ A4 = C3
}

TEST_CASE("normalizer, centralizer, center on S4") {
  Group s4 = symmetric_group(4);
  Subgroup v4 = sub(s4, "(0 1)(2 3); (0 2)(1 3)");
  REQUIRE(normalizer(s4, v4).order() == 24);  // V4 normal in S4
  Subgroup c2 = sub(s4, "(0 1)");
  REQUIRE(normalizer(s4, c2).indices() == normalizer_oracle(s4, c2));
  REQUIRE(centralizer(s4, c2).order() == 4);  // <(0 1)> x <(2 3)>
  REQUIRE(center(s4).order() == 1);
  Group d8 = dihedral_group(8);
  REQUIRE(center(d8).order() == 2);
}

TEST_CASE("normal closure and core") {
  Group s4 = symmetric_group(4);
  Subgroup c2 = sub(s4, "(0 1)(2 3)");
  REQUIRE(normal_closure(s4, c2).order() == 4);  // closure of a double 2-cycle is V4
  Subgroup s3 = sub(s4, "(0 1 2); (0 1)");
  REQUIRE(core(s4, s3).order() == 1);
  Subgroup a4 = sub(s4, "(0 1 2); (0 1)(2 3)");
  REQUIRE(core(s4, a4).order() == 12);
}

TEST_CASE("product sets and permuting products") {
  Group s4 = symmetric_group(4);
  Subgroup s3 = sub(s4, "(0 1 2); (0 1)");
  Subgroup c4 = sub(s4, "(0 1 2 3)");
  // |S3 C4| = 6*4/|∩| = 24 → product is all of S4, hence HK = KH
  REQUIRE(product_set(s3, c4).size() == 24);
  REQUIRE(product_permutes(s4, s3, c4));
  Subgroup a = sub(s4, "(0 1)");
  Subgroup b = sub(s4, "(1 2)");
  REQUIRE(!product_permutes(s4, a, b));  // product has 4 elements, not a group
  REQUIRE(product_set(a, b).size() == 4);
}

TEST_CASE("quotient by a normal subgroup") {
  Group s4 = symmetric_group(4);
  Subgroup v4 = sub(s4, "(0 1)(2 3); (0 2)(1 3)");
  Epimorphism ep = quotient(s4, v4);
  REQUIRE(ep.quotient().order() == 6);
  REQUIRE(ep.kernel() == v4);
  // homomorphism property
  for (uint32_t i = 0; i < s4.order(); ++i)
    for (uint32_t j = 0; j < s4.order(); ++j)
      REQUIRE(ep.image(s4.element(i) * s4.element(j)) ==
              ep.image(s4.element(i)) * ep.image(s4.element(j)));
  // kernel = exactly the elements mapping to the identity
  for (uint32_t i = 0; i < s4.order(); ++i)
    REQUIRE(ep.image(s4.element(i)).is_identity() == v4.contains_index(i));
  // image and preimage round-trip
  Subgroup a4 = sub(s4, "(0 1 2); (0 1)(2 3)");
  Subgroup img = ep.image_subgroup(a4);
  REQUIRE(img.order() == 3);
  REQUIRE(ep.preimage_subgroup(img) == a4);
}

TEST_CASE("quotient rejects non-normal subgroups") {
  Group s4 = symmetric_group(4);
  REQUIRE_THROWS_AS(quotient(s4, sub(s4, "(0 1)")), ValidationError);
}

TEST_CASE("quotient of A4 by V4 is C3") {
  Group a4 = alternating_group(4);
  Subgroup v4 = sub(a4, "(0 1)(2 3); (0 2)(1 3)");
  Epimorphism ep = quotient(a4, v4);
  REQUIRE(ep.quotient().order() == 3);
}

TEST_CASE("conjugation and normality") {
  Group s4 = symmetric_group(4);
  Subgroup s3 = sub(s4, "(0 1 2); (0 1)");
  REQUIRE(!s3.is_normal_in_parent());
  std::set<IndexSet> conjugates;
  for (uint32_t g = 0; g < s4.order(); ++g)
    conjugates.insert(s3.conjugated_by(g).indices());
  REQUIRE(conjugates.size() == 4);  // the four point stabilizers
}
