#include <random>

#include "gtest/gtest.h"

#include "pfusion/error.hpp"
#include "pfusion/perm.hpp"

using namespace pfusion;

TEST(PermTest, ParsesAndPrintsCycleNotation)
{
  Perm p = parse_perm(5, "(1 2 3)(4 5)");
  EXPECT_EQ("(1 2 3)(4 5)", p.str());
  EXPECT_EQ(6u, p.order());

  EXPECT_TRUE(parse_perm(4, "()").is_identity());
  EXPECT_EQ("()", Perm(4).str());

  EXPECT_EQ(parse_perm(4, "(1,2,3)"), parse_perm(4, " ( 1 2 3 ) "));
}

TEST(PermTest, RejectsMalformedInput)
{
  auto code_of = [](auto f) {
    try { f(); } catch (Error const &e) { return e.code(); }
    return ErrorCode::InvalidArgument;
  };

  EXPECT_EQ(ErrorCode::InvalidCycle, code_of([] { parse_perm(4, "(1 2 5)"); }));
  EXPECT_EQ(ErrorCode::InvalidCycle, code_of([] { parse_perm(4, "(1 2 1)"); }));
  EXPECT_EQ(ErrorCode::InvalidCycle, code_of([] { parse_perm(4, "(1 2)(2 3)"); }));
  EXPECT_EQ(ErrorCode::InvalidCycle, code_of([] { parse_perm(4, "(0 1)"); }));
  EXPECT_EQ(ErrorCode::ParseError, code_of([] { parse_perm(4, "(1 2"); }));
  EXPECT_EQ(ErrorCode::ParseError, code_of([] { parse_perm(4, "1 2)"); }));
  EXPECT_EQ(ErrorCode::ParseError, code_of([] { parse_perm(4, "(1 x)"); }));
}

TEST(PermTest, ProductActsLeftToRight)
{
  // 1^(a b) = (1^a)^b: a sends 1 -> 2, b sends 2 -> 3.
  Perm a = parse_perm(3, "(1 2)");
  Perm b = parse_perm(3, "(2 3)");
  EXPECT_EQ(2u, (a * b)[0]);
  EXPECT_EQ(parse_perm(3, "(1 3 2)"), a * b);
}

TEST(PermTest, ConjugationAndCommutatorConventions)
{
  Perm x = parse_perm(4, "(1 2 3)");
  Perm g = parse_perm(4, "(3 4)");
  EXPECT_EQ(parse_perm(4, "(1 2 4)"), conjugate(x, g));

  Perm a = parse_perm(4, "(1 2)");
  Perm b = parse_perm(4, "(1 2 3)");
  EXPECT_EQ(a.inverse() * b.inverse() * a * b, commutator(a, b));
  EXPECT_TRUE(commutator(a, a).is_identity());
}

TEST(PermTest, GroupAxiomsOnRandomPermutations)
{
  std::mt19937 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    unsigned n = 1u + rng() % 12u;
    auto random_perm = [&] {
      std::vector<Point> im(n);
      for (unsigned i = 0; i < n; ++i)
        im[i] = static_cast<Point>(i);
      std::shuffle(im.begin(), im.end(), rng);
      return Perm::from_images(im);
    };

    Perm a = random_perm(), b = random_perm(), c = random_perm();
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_TRUE((a * a.inverse()).is_identity());
    EXPECT_TRUE((a.inverse() * a).is_identity());
    EXPECT_TRUE(a.pow(static_cast<long long>(a.order())).is_identity());
    EXPECT_EQ(a.inverse(), a.pow(-1));
    EXPECT_EQ(a, parse_perm(n, a.str()));
  }
}

TEST(PermTest, DegreeMismatchIsAnError)
{
  EXPECT_THROW(Perm(3) * Perm(4), Error);
  EXPECT_THROW(Perm::from_images({0, 0, 1}), Error);
}
