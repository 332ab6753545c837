#include <doctest.h>

#include "linkne/error.hpp"
#include "linkne/serialize.hpp"

using namespace linkne;

TEST_SUITE("instances") {
  TEST_CASE("generation is deterministic in the seed") {
    for (const char* family : {"qn", "group", "polyquot", "small"}) {
      GenSpec g;
      g.family = family;
      CAPTURE(family);
      for (std::uint64_t s = 0; s < 10; ++s) {
        Json a = to_json(generate_instance(g, s));
        Json b = to_json(generate_instance(g, s));
        CHECK(a.dump() == b.dump());
      }
      CHECK(to_json(generate_instance(g, 1)).dump() != to_json(generate_instance(g, 2)).dump());
    }
  }

  TEST_CASE("generated subspaces meet the units") {
    for (const char* family : {"qn", "group", "polyquot", "fixture"}) {
      GenSpec g;
      g.family = family;
      g.fixture = std::string(family) == "fixture" ? "QT3" : "";
      g.dims = {1, 2, 3};
      for (std::uint64_t s = 0; s < 10; ++s) {
        Instance inst = generate_instance(g, s);
        REQUIRE(inst.subspaces.size() == 3);
        CHECK(inst.subspaces[0].first == "A");
        CHECK(inst.subspaces[2].first == "C");
        for (const auto& [name, sp] : inst.subspaces) {
          CHECK(contains_invertible(sp, SymbolicLine{}).verdict == InvertibleVerdict::Yes);
        }
      }
    }
  }

  TEST_CASE("polyquot algebras are finite") {
    GenSpec g;
    g.family = "polyquot";
    g.n = 3;
    for (std::uint64_t s = 0; s < 10; ++s) {
      Instance inst = generate_instance(g, s);
      CHECK(finite_subalgebras_verdict(inst.algebra, 64, s).kind == VerdictKind::Finite);
    }
  }

  TEST_CASE("bad specs and budgets") {
    GenSpec g;
    g.family = "nope";
    CHECK_THROWS_AS(generate_instance(g, 0), Error);
    GenSpec z;
    z.family = "qn";
    z.n = 4;
    z.dims = {0};
    CHECK_THROWS_AS(generate_instance(z, 0), Error);

    AlgebraPtr qt2 = fixture_algebra("QT2");
    Rng rng(0);
    try {
      random_unit_subspace(qt2, 1, rng, 0);
      FAIL("expected RetryBudgetExhausted");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::RetryBudgetExhausted);
      CHECK(is_budget_error(e.kind()));
    }
  }

  TEST_CASE("algebra descriptions round trip through JSON") {
    for (const auto& f : fixture_catalog()) {
      CAPTURE(f.name);
      AlgebraDesc d = fixture_algebra_desc(f.name);
      Json j = to_json(d);
      AlgebraDesc back = algebra_desc_from_json(Json::parse(j.dump()));
      CHECK(to_json(back).dump() == j.dump());
      AlgebraPtr a = build_algebra(d), b = build_algebra(back);
      CHECK(a->structure_constants() == b->structure_constants());
      CHECK(a->unit() == b->unit());
    }
  }

  TEST_CASE("instances round trip through JSON") {
    for (const char* family : {"qn", "group", "polyquot"}) {
      GenSpec g;
      g.family = family;
      Instance inst = generate_instance(g, 7);
      Json j = Json::parse(to_json(inst).dump());
      InstanceFile f = instance_from_json(j);
      REQUIRE(f.subspaces.size() == inst.subspaces.size());
      for (std::size_t i = 0; i < f.subspaces.size(); ++i) {
        CHECK(f.subspaces[i].first == inst.subspaces[i].first);
        CHECK(f.subspaces[i].second.basis() == inst.subspaces[i].second.basis());
      }
      CHECK(f.subsets.size() == inst.subsets.size());
    }
  }

  TEST_CASE("JSON parsing") {
    CHECK(rat_from_json(Json("-3/6")) == Rat(-1, 2));
    CHECK(rat_from_json(Json(4)) == 4);
    CHECK_THROWS_AS(rat_from_json(Json(0.5)), Error);
    Poly p = poly_from_json(Json::parse(R"(["1", 0, "1/2"])"));
    CHECK(p.degree() == 2);
    CHECK(to_json(p).dump() == R"(["1","0","1/2"])");
    CHECK_THROWS_AS(algebra_desc_from_json(Json::parse(R"({"kind": "mystery"})")), Error);
    const char* golden_ratio = R"({"kind": "structure_constants", "dim": 2,
        "unit": [UNIT], "table": [[[1, 0], [0, 1]], [[0, 1], [1, 1]]]})";
    auto with_unit = [&](const std::string& u) {
      std::string s = golden_ratio;
      s.replace(s.find("UNIT"), 4, u);
      return algebra_desc_from_json(Json::parse(s));
    };
    CHECK(build_algebra(with_unit("1, 0"))->dim() == 2);
    CHECK_THROWS_AS(build_algebra(with_unit("0, 1")), Error);
  }

  TEST_CASE("instance files accept labels and indices") {
    Json j = Json::parse(R"({
      "algebra": {"kind": "monoid_table", "size": 2, "unit": 0, "labels": ["1", "z"],
                  "table": [[0, 1], [1, 1]]},
      "subsets": {"A": ["1", "z"], "B": [0]},
      "parameters": {"lambda": "1/2"}
    })");
    InstanceFile f = instance_from_json(j);
    REQUIRE(f.subsets.size() == 2);
    CHECK(f.subsets[0].second.count() == 2);
    CHECK(f.subsets[1].second.count() == 1);
    CHECK(f.parameters["lambda"] == "1/2");
  }
}
