#include <gtest/gtest.h>

#include "sclgap/error.hpp"
#include "sclgap/oracle.hpp"
#include "sclgap/splitting.hpp"
#include "test_support.hpp"

using namespace sclgap;
using sclgap::test::S;
using sclgap::test::W;

namespace {
  SplittingSpec split(std::string const& text) {
    return closed_splitting(parse_orbifold(text));
  }

  auto const* const torus_cone2   = "orb(orientable=true, genus=1, boundary=0, cones=[2])";
  auto const* const sphere_2223   = "orb(orientable=true, genus=0, boundary=0, cones=[2,2,2,3])";
  auto const* const proj_33       = "orb(orientable=false, genus=1, boundary=0, cones=[3,3])";
  auto const* const genus2        = "orb(orientable=true, genus=2, boundary=0, cones=[])";
  auto const* const klein_cone2   = "orb(orientable=false, genus=2, boundary=0, cones=[2])";
}  // namespace

TEST(CFL, Arithmetic) {
  EXPECT_EQ(cfl_n(1), 2);
  EXPECT_EQ(cfl_n(2), 3);
  EXPECT_EQ(cfl_n(3), 3);
  EXPECT_EQ(cfl_n(4), 4);
  EXPECT_EQ(cfl_gap(1), Rational(1, 24));
  EXPECT_EQ(cfl_gap(2), Rational(1, 36));
  EXPECT_EQ(cfl_gap(3), Rational(1, 36));
  EXPECT_EQ(cfl_gap(4), Rational(1, 48));
}

TEST(ClosedSplitting, OrientableHNN) {
  auto const s = split(torus_cone2);
  EXPECT_EQ(s.kind, SplittingKind::HNN);
  EXPECT_EQ(s.provenance, SplittingCase::OrientableHNN);
  auto const& h = s.vertices.at(0).group;
  EXPECT_EQ(s.edge_images.first, W(h, "x2^-1"));
  EXPECT_EQ(s.edge_images.second, W(h, "x2^-1 y1"));
  auto const r = acylindricity_report(s);
  EXPECT_EQ(r.K, 1);
  EXPECT_EQ(r.N, 2);
  EXPECT_EQ(r.gap, Rational(1, 24));
}

TEST(ClosedSplitting, SphereAmalgam) {
  auto const s = split(sphere_2223);
  EXPECT_EQ(s.kind, SplittingKind::Amalgam);
  EXPECT_EQ(s.provenance, SplittingCase::SphereAmalgam);
  auto const& l = s.vertices.at(0).group;
  auto const& r = s.vertices.at(1).group;
  EXPECT_EQ(to_ambient_word(s, {Piece{0, s.edge_images.first, 0}}), W(s.ambient, "(y1 y2)^-1"));
  EXPECT_EQ(to_ambient_word(s, {Piece{1, s.edge_images.second, 0}}), W(s.ambient, "y3 y4"));
  EXPECT_EQ(l, GroupSpec(0, {2, 2}));
  EXPECT_EQ(r, GroupSpec(0, {2, 3}));
  auto const rep = acylindricity_report(s);
  EXPECT_EQ(rep.K, 2);
  EXPECT_EQ(rep.N, 3);
  EXPECT_EQ(rep.gap, Rational(1, 36));
}

TEST(ClosedSplitting, NonorientableAmalgam) {
  auto const s = split(proj_33);
  EXPECT_EQ(s.kind, SplittingKind::Amalgam);
  EXPECT_EQ(s.provenance, SplittingCase::NonorientableAmalgam);
  EXPECT_EQ(to_ambient_word(s, {Piece{0, s.edge_images.first, 0}}), W(s.ambient, "x1^-2"));
  EXPECT_EQ(to_ambient_word(s, {Piece{1, s.edge_images.second, 0}}), W(s.ambient, "y1 y2"));
  EXPECT_EQ(acylindricity_report(s).gap, Rational(1, 36));
}

TEST(ClosedSplitting, Rejections) {
  EXPECT_THROW(split("orb(orientable=true, genus=1, boundary=0, cones=[])"), DomainError);
  EXPECT_THROW(split("orb(orientable=true, genus=0, boundary=0, cones=[2,3,7])"), DomainError);
  EXPECT_THROW(split("orb(orientable=true, genus=1, boundary=1, cones=[])"), DomainError);
}

TEST(Classify, Examples) {
  auto const s = split(sphere_2223);
  auto       c = classify_element(s, W(s.ambient, "y1 y2"));
  EXPECT_TRUE(c.elliptic);
  EXPECT_EQ(c.vertex, 0);
  EXPECT_FALSE(classify_element(s, W(s.ambient, "y1 y3")).elliptic);
  EXPECT_EQ(classify_element(s, W(s.ambient, "y1 y3")).normal_form_length, 2);

  auto const h = split(torus_cone2);
  EXPECT_FALSE(classify_element(h, W(h.ambient, "x1")).elliptic);
  EXPECT_TRUE(classify_element(h, W(h.ambient, "x1 x2 x1^-1")).elliptic);
}

TEST(ClosedGap, Examples) {
  auto g2   = split(genus2);
  auto cert = closed_gap_certificate(g2, W(g2.ambient, "x1 x3"));
  EXPECT_EQ(cert.certificate.status, GapStatus::LowerBound);
  EXPECT_EQ(cert.certificate.bound, Rational(1, 24));
  EXPECT_EQ(cert.certificate.method, BoundMethod::Acylindrical);

  auto sp = split(sphere_2223);
  cert    = closed_gap_certificate(sp, W(sp.ambient, "y1 y2 y4^2 y1 y4 y3"));
  EXPECT_FALSE(cert.classification.elliptic);
  EXPECT_EQ(cert.certificate.status, GapStatus::LowerBound);
  EXPECT_EQ(cert.certificate.bound, Rational(1, 36));

  // Conjugated to its inverse by y1 y2 y1.
  cert = closed_gap_certificate(sp, W(sp.ambient, "y1 y4"));
  EXPECT_EQ(cert.certificate.status, GapStatus::Zero);

  // Product of two involutions: y1 (y1 y3) y1 = y3 y1 = (y1 y3)^-1.
  cert = closed_gap_certificate(sp, W(sp.ambient, "y1 y3"));
  EXPECT_EQ(cert.certificate.status, GapStatus::Zero);
  EXPECT_EQ(cert.certificate.reason, VanishingReason::ConjugateToInverse);

  // y1 (y1 y2) y1^-1 = (y1 y2)^-1 in <y1, y2>: the edge element is
  // conjugate to its inverse, so scl vanishes.
  cert = closed_gap_certificate(sp, W(sp.ambient, "y1 y2"));
  EXPECT_EQ(cert.certificate.status, GapStatus::Zero);
  EXPECT_EQ(cert.certificate.reason, VanishingReason::ConjugateToInverse);

  cert = closed_gap_certificate(sp, W(sp.ambient, "y4"));
  EXPECT_EQ(cert.certificate.reason, VanishingReason::FiniteOrder);
}

TEST(ClosedGap, ConjugatorsAreGenuine) {
  auto const s = split(sphere_2223);
  for (auto const& text : {"y1 y3", "y1 y3 y2 y3", "y1 y4 y2 y4^2", "y1 y2 y4^2 y1 y4 y3"}) {
    auto const g = W(s.ambient, text);
    if (auto u = find_inverse_conjugator(s, g, 8)) {
      auto const x = to_split_word(s, to_ambient_word(s, *u));
      auto const h = to_split_word(s, g);
      EXPECT_TRUE(is_trivial(s, multiply(s, multiply(s, multiply(s, x, h), invert(s, x)), h)))
          << text;
    }
  }
  EXPECT_TRUE(find_inverse_conjugator(s, W(s.ambient, "y1 y3"), 8).has_value());
}

TEST(SplitWord, ReduceMultiplyInvert) {
  for (auto const* text : {torus_cone2, sphere_2223, proj_33, genus2, klein_cone2}) {
    auto const s = split(text);
    oracle::for_each_word({s.ambient, 4, oracle::WordFilter::All}, [&](Word const& w) {
      auto const sw = to_split_word(s, w);
      EXPECT_TRUE(is_trivial(s, multiply(s, sw, invert(s, sw)))) << text << " " << S(s.ambient, w);
      auto const nf = normal_form(s, w);
      auto const cl = classify_element(s, w);
      if (!cl.elliptic) {
        // The cyclic form is a conjugate, hence still hyperbolic of the same length.
        auto const cw = to_ambient_word(s, cl.cyclic_form);
        EXPECT_FALSE(classify_element(s, cw).elliptic);
        EXPECT_EQ(classify_element(s, cw).normal_form_length, cl.normal_form_length);
      }
      (void)nf;
      return true;
    });
  }
}

TEST(NormalForm, SameElementSameForm) {
  auto const s = split(sphere_2223);
  auto const a = normal_form(s, W(s.ambient, "y1 y3"));
  // Both differ from y1 y3 by an insertion of the relator y1 y2 y3 y4.
  auto const b = normal_form(s, W(s.ambient, "y2 y3 y4 y3"));
  auto const c = normal_form(s, W(s.ambient, "y1 y3 y1 y2 y3 y4"));
  EXPECT_EQ(a.edge_power, b.edge_power);
  EXPECT_EQ(a.representatives, b.representatives);
  EXPECT_EQ(a.edge_power, c.edge_power);
  EXPECT_EQ(a.representatives, c.representatives);
}

TEST(ClosedGap, SweepOutcomes) {
  for (auto const* text : {torus_cone2, sphere_2223, proj_33, genus2, klein_cone2}) {
    auto const s   = split(text);
    auto const gap = acylindricity_report(s).gap;
    oracle::for_each_word({s.ambient, 3, oracle::WordFilter::All}, [&](Word const& w) {
      auto const c = closed_gap_certificate(s, w, 4).certificate;
      EXPECT_TRUE(verify(c)) << text << " " << S(s.ambient, w);
      if (c.status == GapStatus::LowerBound) {
        EXPECT_GE(c.bound, gap) << text << " " << S(s.ambient, w);
      }
      return true;
    });
  }
}

TEST(NormalForm, HNNCarriesThroughStableLetters) {
  // t x2^-1 t^-1 = x2^-1 y1 with t = x1.
  auto const s = split(torus_cone2);
  auto const nf = [&](char const* w) { return normal_form(s, W(s.ambient, w)); };
  EXPECT_EQ(nf("x1 x2^-1 x1^-1").representatives, nf("x2^-1 y1").representatives);
  EXPECT_EQ(nf("x1 x2^-1").representatives, nf("x2^-1 y1 x1").representatives);
  EXPECT_EQ(nf("x1 x2^-3 x1^-1 x1").representatives, nf("(x2^-1 y1)^3 x1").representatives);
  EXPECT_NE(nf("x1 x2").representatives, nf("x2 x1").representatives);
  EXPECT_EQ(nf("x1").edge_power, 0);
}
