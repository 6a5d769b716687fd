#include <gtest/gtest.h>

#include "dfixed/dfixed.hpp"
#include "dfixed/serialize.hpp"
#include "support.hpp"

using namespace dfx;
using nlohmann::json;
using testing_support::ideal;
using testing_support::mono;

namespace {

const DSequence kD = DSequence::from({1, 2, 4, 12});

template <class T>
T round_trip(const T& value) {
  json j = value;
  return json::parse(j.dump()).get<T>();
}

}  // namespace

TEST(Serialize, DSequence) {
  json j = kD;
  EXPECT_EQ(j, json("1,2,4,12"));
  DSequence back = DSequence::from({1});
  from_json(json::parse(j.dump()), back);
  EXPECT_EQ(back, kD);
  EXPECT_THROW(from_json(json("1,3,4"), back), DomainError);
}

TEST(Serialize, Ideal) {
  auto I = ideal(3, {"x1^2", "x2*x3", "x3^4"});
  json j = I;
  EXPECT_EQ(j["n"], 3);
  EXPECT_EQ(j["generators"].size(), 3u);
  EXPECT_EQ(round_trip(I), I);
  EXPECT_EQ(round_trip(MonomialIdeal::zero(2)), MonomialIdeal::zero(2));
  EXPECT_EQ(round_trip(MonomialIdeal::unit(2)), MonomialIdeal::unit(2));
}

TEST(Serialize, SocleReport) {
  auto rep = socle_formula(PrincipalInput::from_monomial(mono("x2^9*x3^16", 3), kD));
  auto back = round_trip(rep);
  ASSERT_EQ(back.components.size(), rep.components.size());
  for (std::size_t k = 0; k < rep.components.size(); ++k) {
    EXPECT_EQ(back.components[k].key, rep.components[k].key);
    EXPECT_EQ(back.components[k].ideal, rep.components[k].ideal);
    EXPECT_EQ(back.components[k].predicted_degree, rep.components[k].predicted_degree);
    EXPECT_EQ(back.components[k].redundant, rep.components[k].redundant);
  }
  EXPECT_EQ(back.degrees, rep.degrees);
  EXPECT_EQ(back.max_degree, rep.max_degree);
  json pair = IndexPair{{1, 2}, {0, 3}};
  EXPECT_EQ(pair, json::parse(R"({"lambda":[1,2],"t":[0,3]})"));
}

TEST(Serialize, RegularityReport) {
  auto in = PrincipalInput::from_monomial(mono("x1^2*x2^16*x3^9", 3), kD);
  auto rep = reg_formula(in);
  rep.corners = corners(in);
  auto back = round_trip(rep);
  EXPECT_EQ(back.value, rep.value);
  EXPECT_EQ(back.method, rep.method);
  EXPECT_EQ(back.block_regularities, rep.block_regularities);
  EXPECT_EQ(back.x1_shift, rep.x1_shift);
  EXPECT_EQ(back.corners, rep.corners);
  EXPECT_EQ(back.upper_bound_only, rep.upper_bound_only);
}

TEST(Serialize, BettiTable) {
  auto t = betti_table(ideal(3, {"x1^2", "x1*x2", "x2^3", "x3"}));
  EXPECT_EQ(round_trip(t), t);
  BettiOptions o;
  o.max_degree = 3;
  o.regularity_bound = 3;
  auto cut = betti_table(ideal(3, {"x1^2", "x1*x2", "x2^3"}), o);
  json j = cut;
  EXPECT_FALSE(j["complete"].get<bool>());
  EXPECT_EQ(j["regularity_bound"], 3);
  EXPECT_EQ(round_trip(cut), cut);
  json e = ExtremalEntry{3, 33, 5};
  EXPECT_EQ(e, json::parse("[3,33,5]"));
}
