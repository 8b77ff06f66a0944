#include <gtest/gtest.h>

#include <fstream>

#include "mgl/json_io.hpp"

using namespace mgl;
using io::json;

TEST(JsonIo, GroundSetForms) {
  EXPECT_EQ(io::ground_from_json(json{{"n", 3}}), GroundSet(3));
  EXPECT_EQ(io::ground_from_json(json{{"elements", {0, 2, 5}}}), GroundSet::from_elements({0, 2, 5}));
  EXPECT_THROW(io::ground_from_json(json::object()), io::InputError);
  EXPECT_THROW(io::ground_from_json(json{{"elements", {2, 2}}}), io::InputError);
}

TEST(JsonIo, TropicalValues) {
  EXPECT_TRUE(io::tropical_value_from_json("inf").is_infinite());
  EXPECT_EQ(io::tropical_value_from_json("3/2"), TropicalValue(Rational(3, 2)));
  EXPECT_EQ(io::tropical_value_from_json(-4), TropicalValue(-4));
  auto v = io::tropical_value_from_json("1-log2(3)");
  EXPECT_EQ(v, TropicalValue(LogRational::from_parts(1, 3)));
  EXPECT_EQ(io::tropical_value_from_json(io::tropical_value_to_json(v)), v);
  EXPECT_THROW(io::tropical_value_from_json("x"), io::InputError);
  EXPECT_THROW(io::tropical_value_from_json(json::array()), io::InputError);
}

TEST(JsonIo, MatroidAndTropicalRoundTrip) {
  auto m = Matroid(io::matroid_from_json(json::parse(R"({"d": 2, "n": 4, "support": [[0,1],[0,2],[1,2]]})")));
  EXPECT_EQ(Matroid(io::matroid_from_json(io::matroid_to_json(m))), m);
  EXPECT_THROW(io::matroid_from_json(json::parse(R"({"d": 2, "n": 4, "support": [[0,5]]})")), io::InputError);

  auto phi = io::tropical_from_json(json::parse(R"({"d": 2, "n": 4, "values": [0, "1/2", "inf", 0, 0, 1]})"));
  EXPECT_TRUE((phi[{0, 3}].is_infinite()));
  EXPECT_EQ(io::tropical_from_json(io::tropical_to_json(phi)), phi);
  EXPECT_THROW(io::tropical_from_json(json::parse(R"({"d": 2, "n": 4, "values": [0, 1]})")), io::InputError);
}

TEST(JsonIo, ChirotopeEntriesWithUnsortedBases) {
  auto chi = io::chirotope_from_json(json::parse(R"({"d": 2, "n": 3, "entries": [{"basis": [1,0], "sign": 1}]})"));
  EXPECT_EQ((chi[{0, 1}]), -1);
  EXPECT_EQ(io::chirotope_from_json(io::chirotope_to_json(chi)), chi);
  EXPECT_THROW(io::chirotope_from_json(json::parse(R"({"d": 2, "n": 3, "signs": [1, 2, 0]})")), io::InputError);
  EXPECT_THROW(io::chirotope_from_json(json::parse(R"({"d": 2, "n": 3, "entries": [{"basis": [1,1], "sign": 1}]})")),
               io::InputError);
}

TEST(JsonIo, OrientedVectorCoordinates) {
  auto Phi = io::orval_from_json(json::parse(
      R"j({"d": 1, "n": 3, "entries": [{"basis": [0], "q": "-7/4"}, {"basis": [2], "sign": 1, "val": "2-log2(3)"}]})j"));
  EXPECT_EQ(Phi[{0}].to_rational(), Rational(-7, 4));
  EXPECT_EQ(Phi[{2}], SignedTropical(1, TropicalValue(LogRational::from_parts(2, 3))));
  EXPECT_TRUE(Phi[{1}].is_zero());
  EXPECT_EQ(io::orval_from_json(io::orval_to_json(Phi)), Phi);
  EXPECT_THROW(io::orval_coordinate_from_json(json::parse(R"({"sign": 1, "q": "-1"})")), io::InputError);
  EXPECT_THROW(io::orval_coordinate_from_json(json::parse(R"({"sign": 1, "val": "inf"})")), io::InputError);
  EXPECT_TRUE(io::orval_coordinate_from_json(0).is_zero());
  EXPECT_NO_THROW(io::orval_coordinate_from_json(json::parse(R"({"sign": -1, "q": "-1"})")));
}

TEST(JsonIo, PosetAndComplexRoundTrip) {
  // The relation is read as given, so a missing transitive pair is an error.
  EXPECT_THROW(io::poset_from_json(json::parse(R"({"size": 3, "leq": [[0,1],[1,2]]})")), Error);
  auto P = io::poset_from_json(json::parse(R"({"size": 3, "leq": [[0,1],[1,2],[0,2]]})"));
  EXPECT_TRUE(P.leq(0, 2));
  EXPECT_EQ(io::poset_from_json(io::poset_to_json(P)).relation(), P.relation());
  EXPECT_THROW(io::poset_from_json(json::parse(R"({"size": 2, "leq": [[0,1],[1,0]]})")), Error);
  EXPECT_THROW(io::poset_from_json(json::parse(R"({"size": 2, "leq": [[0,5]]})")), io::InputError);

  auto K = SimplicialComplex::from_facets(3, {{0, 1}, {1, 2}});
  auto j = io::complex_to_json(K);
  EXPECT_EQ(j.at("euler_characteristic"), 1);
  EXPECT_EQ(io::complex_from_json(j).faces(), K.faces());
}

TEST(JsonIo, FamiliesAndOperadPoints) {
  auto fam = io::family_from_json(json::parse(R"([{"map": {"0": 5}}, {"map": {"0": 9}}])"));
  EXPECT_EQ(fam, (std::vector<Injection>{{{0, 5}}, {{0, 9}}}));
  EXPECT_THROW(io::family_from_json(json::parse(R"({"map": 1})")), io::InputError);

  auto p = io::operad_point_from_json(json::parse(
      R"({"arity": 2, "window": 1, "terms": [{"weight": "1/2", "vertex": [[2],[4]]}, {"weight": "1/2", "vertex": [[3],[9]]}]})"));
  EXPECT_EQ(p.terms().size(), 2u);
  EXPECT_EQ(io::operad_point_from_json(io::operad_point_to_json(p)), p);
  EXPECT_FALSE(io::operad_point_to_json(p).contains("consistent"));
  EXPECT_TRUE(io::operad_point_from_json(json{{"unit", true}}).is_unit());
  // Images meeting two pieces are rejected unless the point is marked as a composite.
  auto mixed = json::parse(R"({"arity": 2, "window": 1, "terms": [{"weight": 1, "vertex": [[2],[3]]}]})");
  EXPECT_THROW(io::operad_point_from_json(mixed), Error);
  mixed["consistent"] = true;
  auto q = io::operad_point_from_json(mixed);
  EXPECT_TRUE(io::operad_point_to_json(q).value("consistent", false));
  EXPECT_THROW(io::operad_point_from_json(json::parse(R"({"arity": 1, "window": 2, "terms": [{"weight": 1, "vertex": [[2]]}]})")),
               io::InputError);
}

TEST(JsonIo, MissingFileAndMalformedJson) {
  EXPECT_THROW(io::read_json_file("/nonexistent/file.json"), io::InputError);
  auto path = testing::TempDir() + "bad.json";
  {
    std::ofstream out(path);
    out << "{ not json";
  }
  EXPECT_THROW(io::read_json_file(path), io::InputError);
}
