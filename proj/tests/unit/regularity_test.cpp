#include <gtest/gtest.h>

#include "dfixed/dfixed.hpp"
#include "dfixed/regularity.hpp"
#include "support.hpp"

using namespace dfx;
using testing_support::ideal;
using testing_support::mono;

namespace {

const DSequence kD = DSequence::from({1, 2, 4, 12});

PrincipalInput input(const std::string& u) { return PrincipalInput::from_monomial(mono(u, 3), kD); }

}  // namespace

TEST(RegFormula, Examples) {
  EXPECT_EQ(reg_formula(input("x3^21")).value, 34);
  auto two = reg_formula(input("x2^9*x3^16"));
  EXPECT_EQ(two.value, 34);
  EXPECT_EQ(two.block_regularities, (std::vector<std::int64_t>{11, 34}));
  EXPECT_EQ(reg_formula(input("x2^16*x3^9")).value, 30);
  EXPECT_EQ(reg_formula(input("x2^5*x3^5")).value, 14);

  auto shifted = reg_formula(input("x1^2*x2^16*x3^9"));
  EXPECT_EQ(shifted.value, 32);
  EXPECT_EQ(shifted.x1_shift, 2);
  EXPECT_EQ(shifted.block_regularities, (std::vector<std::int64_t>{23, 30}));
}

TEST(RegFormula, EdgeCases) {
  auto one = DSequence::from({1});
  for (std::int64_t a = 1; a <= 6; ++a) EXPECT_EQ(reg_formula(PrincipalInput(one, 3, {{3, a}})).value, a);
  EXPECT_EQ(reg_formula(PrincipalInput(kD, 1, {{1, 7}})).value, 7);
  EXPECT_THROW(reg_formula(input("x2^3")), DomainError);
}

TEST(RegBound, Examples) {
  EXPECT_EQ(reg_bound(input("x3^21")), 63);
  EXPECT_EQ(reg_bound(input("x1^2*x2^16*x3^9")), 81);
  EXPECT_EQ(reg_bound(PrincipalInput(DSequence::from({1}), 5, {{5, 1}})), 5);
}

TEST(Corners, TwoBlocks) {
  auto cs = corners(input("x2^9*x3^16"));
  ASSERT_EQ(cs.size(), 2u);
  EXPECT_EQ(cs[0].position, 3u);
  EXPECT_EQ(cs[0].row, 33);
  EXPECT_EQ(cs[0].betti, 5);
  EXPECT_TRUE(cs[0].survives);
  EXPECT_EQ(cs[1].position, 2u);
  EXPECT_EQ(cs[1].row, 10);
  EXPECT_EQ(cs[1].betti, 2);
  EXPECT_FALSE(cs[1].survives);
  for (const auto& c : cs) EXPECT_EQ(c.row, c.predicted_row);
}

TEST(Corners, WithFirstVariableBlock) {
  auto cs = corners(input("x1^2*x2^16*x3^9"));
  ASSERT_EQ(cs.size(), 3u);
  EXPECT_EQ(cs[0], (Corner{3, 31, 10, 31, true}));
  EXPECT_EQ(cs[1], (Corner{2, 24, 1, 24, false}));
  EXPECT_EQ(cs[2], (Corner{1, 1, 1, 1, false}));
}

TEST(Corners, SingleBlock) {
  auto cs = corners(input("x3^21"));
  ASSERT_EQ(cs.size(), 1u);
  EXPECT_EQ(cs[0], (Corner{3, 33, 1, 33, true}));
}

TEST(TopOfQuotient, Examples) {
  auto J = ideal(2, {"x1^2", "x1*x2", "x2^3"});
  auto top = top_of_quotient(MonomialIdeal::unit(2), J);
  EXPECT_EQ(top.degree, 2);
  EXPECT_EQ(top.dimension, 1);
  auto none = top_of_quotient(J, J);
  EXPECT_EQ(none.degree, -1);
  EXPECT_EQ(none.dimension, 0);
}

TEST(RegSequential, MatchesFormula) {
  for (const auto& u : {"x3^21", "x2^9*x3^16", "x2^16*x3^9", "x2^5*x3^5", "x1^2*x2^16*x3^9"}) {
    auto in = input(u);
    EXPECT_EQ(reg_sequential(principal_ideal(in)).value, reg_formula(in).value) << u;
  }
  EXPECT_EQ(reg_sequential(power(maximal_ideal(4), 3)).value, 3);
  EXPECT_THROW(reg_sequential(ideal(2, {"x2^2"})), DomainError);
}

TEST(RegStability, Examples) {
  auto single = reg_stability(input("x3^21"));
  EXPECT_EQ(single.value, 34);
  EXPECT_FALSE(single.upper_bound_only);
  auto multi = reg_stability(input("x2^9*x3^16"));
  EXPECT_TRUE(multi.upper_bound_only);
  EXPECT_GE(multi.value, 34);
  EXPECT_TRUE(reg_stability(power(maximal_ideal(2), 2)).upper_bound_only);
}

TEST(RegularityMethod, Names) {
  for (auto m : {RegularityMethod::formula, RegularityMethod::sequential, RegularityMethod::stability,
                 RegularityMethod::betti})
    EXPECT_EQ(parse_regularity_method(to_string(m)), m);
  EXPECT_THROW(parse_regularity_method("guess"), DomainError);
}
