#include <gtest/gtest.h>

#include "dfixed/text_format.hpp"

using namespace dfx;

TEST(MonomialText, Parse) {
  EXPECT_EQ(parse_monomial("x1^2*x2^9*x3^16", 3), (Monomial{2, 9, 16}));
  EXPECT_EQ(parse_monomial("x2", 3), (Monomial{0, 1, 0}));
  EXPECT_EQ(parse_monomial(" x1 * x1^2 ", 2), (Monomial{3, 0}));
  EXPECT_EQ(parse_monomial("1", 2), Monomial::unit(2));
  EXPECT_EQ(max_variable_index("x1^2*x7"), 7u);
  EXPECT_EQ(max_variable_index("1"), 0u);
}

TEST(MonomialText, Errors) {
  EXPECT_THROW(parse_monomial("x4", 3), DomainError);
  EXPECT_THROW(parse_monomial("x0", 3), DomainError);
  EXPECT_THROW(parse_monomial("y1", 3), DomainError);
  EXPECT_THROW(parse_monomial("x1^", 3), DomainError);
  EXPECT_THROW(parse_monomial("x1^-2", 3), DomainError);
  EXPECT_THROW(parse_monomial("x1**x2", 3), DomainError);
  EXPECT_THROW(parse_monomial("", 3), DomainError);
}

TEST(MonomialText, FormatRoundTrip) {
  for (const auto& text : {"x1^2*x2^9*x3^16", "x3", "1", "x1*x2*x3^11"})
    EXPECT_EQ(format_monomial(parse_monomial(text, 3)), text);
}

TEST(GeneratorFile, Parse) {
  auto file = parse_generator_file("# comment\n\nn=3\nx1^2\n# another\nx2*x3\n");
  EXPECT_EQ(file.n, 3u);
  ASSERT_EQ(file.monomials.size(), 2u);
  EXPECT_EQ(file.monomials[1], (Monomial{0, 1, 1}));
  EXPECT_THROW(parse_generator_file("x1\n"), DomainError);
  EXPECT_THROW(parse_generator_file("# only comments\n"), DomainError);
  EXPECT_THROW(parse_generator_file("n=2\nx3\n"), DomainError);
  EXPECT_THROW(parse_generator_file("n=0\n"), DomainError);
}

TEST(GeneratorFile, FormatRoundTrip) {
  auto ideal = MonomialIdeal::minimalize(3, {Monomial{2, 0, 0}, Monomial{0, 1, 1}});
  auto again = parse_generator_file(format_generator_file(ideal));
  EXPECT_EQ(MonomialIdeal::minimalize(again.n, again.monomials), ideal);
  EXPECT_EQ(format_ideal(ideal), "(x1^2, x2*x3)");
  EXPECT_EQ(format_ideal(MonomialIdeal::zero(2)), "(0)");
  EXPECT_EQ(format_ideal(MonomialIdeal::unit(2)), "(1)");
}
