#include <gtest/gtest.h>

#include "sclgap/certificate.hpp"
#include "sclgap/oracle.hpp"
#include "sclgap/quasimorphism.hpp"
#include "test_support.hpp"

using namespace sclgap;
using sclgap::test::S;
using sclgap::test::W;
using sclgap::test::c2c3;
using sclgap::test::f2;

TEST(Counting, Occurrences) {
  auto const& g = c2c3();
  auto const& f = f2();
  EXPECT_EQ(count_occurrences(W(g, "a b"), W(g, "a b a b")), 2);
  EXPECT_EQ(count_occurrences(W(g, "a b"), W(g, "b^2 a")), 0);
  EXPECT_EQ(count_occurrences(W(f, "x y"), W(f, "x y x y^-1")), 1);
}

TEST(Counting, Phi) {
  auto const& g = c2c3();
  auto const& f = f2();
  EXPECT_EQ(phi(g, W(g, "a b"), W(g, "a b a b")), 2);
  EXPECT_EQ(phi(f, W(f, "x y"), W(f, "y^-1 x^-1")), -1);
  EXPECT_EQ(phi(f, W(f, "x y"), W(f, "x")), 0);
}

TEST(Homogenized, Examples) {
  auto const&      g = c2c3();
  auto const&      f = f2();
  CountingQM const ab(g, W(g, "a b"));
  EXPECT_EQ(ab(g, W(g, "a b")), 1);
  EXPECT_EQ(ab(g, W(g, "b")), 0);
  EXPECT_EQ(ab(g, W(g, "(a b)^3")), 3);
  CountingQM const xxy(f, W(f, "x x y"));
  EXPECT_EQ(xxy(f, W(f, "y x x")), 1);
}

TEST(Homogenized, RejectsInadmissibleBases) {
  auto const& f = f2();
  EXPECT_FALSE(counting_qm_obstruction(f, W(f, "x y x")).empty());
  EXPECT_FALSE(counting_qm_obstruction(f, W(f, "x")).empty());
  EXPECT_FALSE(counting_qm_obstruction(f, W(f, "x y x^-1")).empty());
  EXPECT_TRUE(counting_qm_obstruction(f, W(f, "x y")).empty());
}

TEST(Combination, DefectBounds) {
  auto const&      g = c2c3();
  CountingQM const ab(g, W(g, "a b"));
  EXPECT_EQ(QMCombination::single(ab).defect_bound(), Rational(6));
  EXPECT_EQ(QMCombination::single(ab, Rational(1, 2)).defect_bound(), Rational(3));

  GroupSpec const     h = parse_group("C2 * C3 * C7");
  QMCombination const q({{1, CountingQM(h, W(h, "y1 y2"))}, {-1, CountingQM(h, W(h, "y1 y2 y3"))}});
  EXPECT_EQ(q.defect_bound(), Rational(12));
  EXPECT_EQ(evaluate_on_chain(h, q, parse_chain("[y1 y2 y3]", h)), Rational(0));
}

TEST(Combination, OnChains) {
  auto const&         g = c2c3();
  QMCombination const q = QMCombination::single(CountingQM(g, W(g, "a b")));
  EXPECT_EQ(evaluate_on_chain(g, q, parse_chain("[a b]", g)), Rational(1));
  EXPECT_EQ(evaluate_on_chain(g, q, parse_chain("2[a b] - [b]", g)), Rational(2));
}

// phi(h^n) is affine in n once h^n is longer than the base, so the
// successive difference is the homogenization exactly.
TEST(Homogenized, AgreesWithLimitOracle) {
  for (GroupSpec const& g : {c2c3(), f2()}) {
    std::vector<Word> bases;
    oracle::for_each_word({g, 4, oracle::WordFilter::All}, [&](Word const& w) {
      if (counting_qm_obstruction(g, w).empty()) {
        bases.push_back(w);
      }
      return true;
    });
    auto const hs = oracle::enumerate_words({g, 4, oracle::WordFilter::All});
    for (auto const& b : bases) {
      CountingQM const qm(g, b);
      for (auto const& h : hs) {
        if (has_finite_order(g, h)) {
          continue;
        }
        std::int64_t const p2 = phi(g, b, power(g, h, 10));
        std::int64_t const p1 = phi(g, b, power(g, h, 9));
        EXPECT_EQ(qm(g, h), p2 - p1) << S(g, b) << " on " << S(g, h);
      }
    }
  }
}

TEST(Homogenized, ConjugationInvarianceAndInverseOddness) {
  auto const&      g = parse_group("F1 * C3");
  CountingQM const qm(g, W(g, "x1 y1 x1 y1^2"));
  auto const       hs = oracle::enumerate_words({g, 4, oracle::WordFilter::All});
  for (auto const& h : hs) {
    std::int64_t const v = qm(g, h);
    EXPECT_EQ(qm(g, invert(g, h)), -v);
    EXPECT_EQ(qm(g, power(g, h, 3)), 3 * v);
    for (auto const& u : {W(g, "x1"), W(g, "y1"), W(g, "x1^-1 y1^2")}) {
      EXPECT_EQ(qm(g, conjugate(g, u, h)), v) << S(g, h);
    }
  }
}
