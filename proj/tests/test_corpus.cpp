#include <catch2/catch_amalgamated.hpp>

#include <sstream>

#include <sigmaembed/corpus.hpp>

using namespace sigmaembed;

TEST_CASE("family constructors have the right orders") {
  for (unsigned n : {1u, 2u, 7u, 12u, 100u}) REQUIRE(cyclic_group(n).order() == n);
  for (unsigned m : {2u, 4u, 6u, 8u, 12u, 48u})
    REQUIRE(dihedral_group(m).order() == m);
  REQUIRE(symmetric_group(4).order() == 24);
  REQUIRE(symmetric_group(5).order() == 120);
  REQUIRE(alternating_group(4).order() == 12);
  REQUIRE(alternating_group(5).order() == 60);
  REQUIRE(alternating_group(6).order() == 360);
  REQUIRE(elementary_abelian_group(2, 3).order() == 8);
  REQUIRE(elementary_abelian_group(3, 2).order() == 9);
  REQUIRE(metacyclic_group(7, 3).order() == 21);
  REQUIRE(metacyclic_group(13, 3).order() == 39);
  REQUIRE(direct_product(symmetric_group(3), cyclic_group(5)).order() == 30);
}

TEST_CASE("Q8 is the quaternion group") {
  Group q8 = quaternion8_group();
  REQUIRE(q8.order() == 8);
  // nonabelian
  bool abelian = true;
  for (uint32_t i = 0; i < 8; ++i)
    for (uint32_t j = 0; j < 8; ++j)
      if (q8.mult(i, j) != q8.mult(j, i)) abelian = false;
  REQUIRE(!abelian);
  // unique involution (distinguishes Q8 from D8)
  int involutions = 0;
  for (uint32_t i = 0; i < 8; ++i)
    if (q8.element(i).order() == 2) ++involutions;
  REQUIRE(involutions == 1);
}

TEST_CASE("cyclic and elementary abelian structure") {
  Group c12 = cyclic_group(12);
  bool has12 = false;
  for (uint32_t i = 0; i < c12.order(); ++i)
    if (c12.element(i).order() == 12) has12 = true;
  REQUIRE(has12);
  Group e9 = elementary_abelian_group(3, 2);
  for (uint32_t i = 0; i < e9.order(); ++i)
    REQUIRE(e9.element(i).order() <= 3);
}

TEST_CASE("metacyclic group is nonabelian with normal C_r") {
  Group g = metacyclic_group(7, 3);
  Subgroup c7 = Subgroup::generated_by_perms(g, {g.generators()[0]});
  REQUIRE(c7.order() == 7);
  REQUIRE(c7.is_normal_in_parent());
  Subgroup c3 = Subgroup::generated_by_perms(g, {g.generators()[1]});
  REQUIRE(c3.order() == 3);
  REQUIRE(!c3.is_normal_in_parent());
}

TEST_CASE("example-132 construction validates its inputs") {
  REQUIRE_THROWS_AS(build_example_132(4, 2, 7, 3), ValidationError);   // 4 not prime
  REQUIRE_THROWS_AS(build_example_132(5, 5, 7, 3), ValidationError);   // repeated
  REQUIRE_THROWS_AS(build_example_132(7, 2, 5, 3), ValidationError);   // 2 does not divide 6... it does; t=3 | r-1=4 fails
  REQUIRE_THROWS_AS(build_example_132(11, 3, 7, 5), ValidationError);  // 5 ∤ 6
}

TEST_CASE("example-132 structural facts") {
  Example132 ex = build_example_132(5, 2, 7, 3);
  REQUIRE(ex.group.order() == 1680);
  REQUIRE(ex.module_dim == 4);
  REQUIRE(ex.group.degree() == 16 + 7);
  REQUIRE(ex.sub_Q().order() == 16);
  REQUIRE(ex.sub_V().order() == 80);
  REQUIRE(ex.sub_Q().is_normal_in_parent());
  REQUIRE(ex.sub_V().is_normal_in_parent());
  // the C_p-action is irreducible: no proper nontrivial subgroup of Q is
  // normalized by the order-5 generator
  Group g = ex.group;
  uint32_t pg = g.index_of(ex.p_gen);
  Subgroup q = ex.sub_Q();
  int invariant = 0;
  for (uint32_t e : q.indices()) {
    if (e == g.identity_index()) continue;
    Subgroup s = Subgroup::generated(g, {e});
    // grow to the smallest p_gen-invariant subgroup containing s
    Subgroup closure = s;
    for (;;) {
      Subgroup conj = closure.conjugated_by(pg);
      if (closure.contains(conj)) break;
      IndexSet gens = closure.indices();
      gens.insert(gens.end(), conj.indices().begin(), conj.indices().end());
      closure = Subgroup::generated(g, gens);
    }
    if (closure.order() < 16) ++invariant;
  }
  REQUIRE(invariant == 0);
}

TEST_CASE("catalog serialization round-trips") {
  CatalogEntry e;
  e.name = "V4";
  e.degree = 4;
  e.generator_words = {"(0 1)(2 3)", "(0 2)(1 3)"};
  e.expected_order = 4;
  std::string line = serialize_catalog_entry(e);
  std::stringstream in(line + "\n# comment\n\n");
  auto parsed = parse_catalog(in);
  REQUIRE(parsed.size() == 1);
  REQUIRE(parsed[0].first.name == "V4");
  REQUIRE(parsed[0].second.order() == 4);
}

TEST_CASE("catalog errors carry line numbers") {
  std::stringstream bad("ok; 3; (0 1 2); 3\nbroken-line-without-fields\n");
  try {
    parse_catalog(bad);
    FAIL("expected a parse error");
  } catch (const ValidationError& err) {
    REQUIRE(std::string(err.what()).find("line 2") != std::string::npos);
  }
  std::stringstream mismatch("C3; 3; (0 1 2); 7\n");
  REQUIRE_THROWS_AS(parse_catalog(mismatch), ValidationError);
}

TEST_CASE("default corpus is well-formed and respects the order bound") {
  auto corpus = default_corpus(100);
  REQUIRE(!corpus.empty());
  std::set<std::string> names;
  for (const NamedGroup& ng : corpus) {
    REQUIRE(ng.group.order() <= 100);
    REQUIRE(names.insert(ng.name).second);  // unique names
  }
  REQUIRE(names.count("A4") == 1);
  REQUIRE(names.count("A5") == 1);
  REQUIRE(names.count("D8xC3") == 1);
  REQUIRE(names.count("S3xC5") == 1);
}

TEST_CASE("group expression resolver") {
  REQUIRE(build_group_expr("A5").order() == 60);
  REQUIRE(build_group_expr("C15").order() == 15);
  REQUIRE(build_group_expr("D10").order() == 10);
  REQUIRE(build_group_expr("S3xC5").order() == 30);
  REQUIRE(build_group_expr("ex132(5,2,7,3)").order() == 1680);
  REQUIRE_THROWS_AS(build_group_expr("nonsense"), ValidationError);
}

TEST_CASE("serialize_group emits a loadable catalog line") {
  Group a4 = alternating_group(4);
  std::string line = serialize_catalog_entry(serialize_group("A4", a4));
  std::stringstream in(line);
  auto parsed = parse_catalog(in);
  REQUIRE(parsed.size() == 1);
  REQUIRE(parsed[0].second.order() == 12);
}
