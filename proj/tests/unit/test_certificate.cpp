#include <random>

#include <gtest/gtest.h>

#include "sclgap/certificate.hpp"
#include "sclgap/oracle.hpp"
#include "test_support.hpp"

using namespace sclgap;
using sclgap::test::S;
using sclgap::test::W;
using sclgap::test::c2c3;
using sclgap::test::f2;

TEST(Normalize, Examples) {
  auto const& f = f2();
  auto const& g = c2c3();
  EXPECT_TRUE(normalize_chain(f, parse_chain("[x y x^-1] - [y]", f)).empty());
  EXPECT_EQ(normalize_chain(f, parse_chain("[x y x y]", f)), parse_chain("2[x y]", f));
  EXPECT_TRUE(normalize_chain(f, parse_chain("[x y] + [y^-1 x^-1]", f)).empty());
  EXPECT_TRUE(normalize_chain(g, parse_chain("[b^2]", g)).empty());
}

TEST(Homology, Examples) {
  auto const& f = f2();
  auto const& g = c2c3();
  auto const  h = homology_class(f, parse_chain("[x y]", f));
  EXPECT_EQ(h.free_part, (std::vector<Rational>{1, 1}));
  EXPECT_FALSE(h.is_zero());
  EXPECT_TRUE(homology_class(g, parse_chain("[a b]", g)).free_part.empty());
  EXPECT_TRUE(is_null_homologous(g, parse_chain("[a b]", g)));
  EXPECT_TRUE(is_null_homologous(f, parse_chain("[x y x^-1 y^-1]", f)));
}

TEST(ChainGap, Examples) {
  auto const& f = f2();
  auto const& g = c2c3();

  auto c = chain_gap_certificate(g, parse_chain("[a b]", g));
  EXPECT_EQ(c.status, GapStatus::LowerBound);
  EXPECT_EQ(c.bound, Rational(1, 12));
  EXPECT_TRUE(verify(c));

  c = chain_gap_certificate(f, parse_chain("[x y x^-1 y^-1]", f));
  EXPECT_EQ(c.status, GapStatus::LowerBound);
  EXPECT_EQ(c.bound, Rational(1, 12));
  EXPECT_TRUE(verify(c));

  c = chain_gap_certificate(f, parse_chain("[x y] + [y^-1 x^-1]", f));
  EXPECT_EQ(c.status, GapStatus::Zero);
  EXPECT_EQ(c.reason, VanishingReason::EquivalentToZeroChain);

  c = chain_gap_certificate(f, parse_chain("[x]", f));
  EXPECT_EQ(c.status, GapStatus::Infinite);
}

TEST(ElementGap, Examples) {
  auto const& f = f2();
  auto const& g = c2c3();
  auto        c = element_gap(g, W(g, "a b"));
  EXPECT_EQ(c.status, GapStatus::LowerBound);
  EXPECT_EQ(c.bound, Rational(1, 12));

  c = element_gap(g, W(g, "b"));
  EXPECT_EQ(c.status, GapStatus::Zero);
  EXPECT_EQ(c.reason, VanishingReason::FiniteOrder);

  // Exponent sums (2, 0): not null-homologous.
  EXPECT_EQ(element_gap(f, W(f, "x y x y^-1")).status, GapStatus::Infinite);

  c = element_gap(f, W(f, "x y x^-1 y^-1"));
  EXPECT_EQ(c.status, GapStatus::LowerBound);
  EXPECT_EQ(c.bound, Rational(1, 12));

  c = element_gap(g, W(g, "y1 y2 y1 y2^2"));
  EXPECT_EQ(c.status, GapStatus::Zero);
  EXPECT_EQ(c.reason, VanishingReason::ConjugateToInverse);
}

TEST(Certificate, TamperedWitnessFailsVerification) {
  auto const& g = c2c3();
  auto        c = element_gap(g, W(g, "a b"));
  ASSERT_TRUE(verify(c));
  c.bound = Rational(1, 6);
  EXPECT_FALSE(verify(c));
}

// Every null-homologous, nonzero-in-B1H chain gets a verified bound of at
// least 1/12; integral chains that are not null-homologous are Infinite.
TEST(Properties, RandomIntegralChains) {
  std::mt19937_64 rng(7);
  for (GroupSpec const& g : {c2c3(), f2(), parse_group("F1 * C3")}) {
    auto const words = oracle::enumerate_words({g, 5, oracle::WordFilter::All});
    std::uniform_int_distribution<std::size_t> pick(1, words.size() - 1);
    std::uniform_int_distribution<int>         coef(-3, 3);
    for (int trial = 0; trial < 300; ++trial) {
      Chain c;
      for (int t = 0; t < 3; ++t) {
        if (int k = coef(rng); k != 0) {
          c.add(k, words[pick(rng)]);
        }
      }
      auto const cert = chain_gap_certificate(g, c);
      ASSERT_TRUE(verify(cert)) << to_string(g, c);
      bool const null = is_null_homologous(g, c);
      if (!null) {
        EXPECT_EQ(cert.status, GapStatus::Infinite) << to_string(g, c);
      } else if (normalize_chain(g, c).empty()) {
        EXPECT_EQ(cert.status, GapStatus::Zero) << to_string(g, c);
      } else {
        EXPECT_EQ(cert.status, GapStatus::LowerBound) << to_string(g, c);
        EXPECT_GE(cert.bound, Rational(1, 12)) << to_string(g, c);
      }
    }
  }
}
