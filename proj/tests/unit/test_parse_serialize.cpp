#include <gtest/gtest.h>

#include "sclgap/error.hpp"
#include "sclgap/oracle.hpp"
#include "sclgap/serialize.hpp"
#include "test_support.hpp"

using namespace sclgap;
using sclgap::test::S;
using sclgap::test::W;
using sclgap::test::c2c3;
using sclgap::test::f2;

TEST(Parse, Groups) {
  auto const g = parse_group("F2 * C3");
  EXPECT_EQ(g.free_rank, 2);
  EXPECT_EQ(g.torsion_orders, std::vector<int>{3});
  EXPECT_EQ(parse_group("Z * Z/2 * C5"), GroupSpec(1, {2, 5}));
  EXPECT_EQ(to_string(parse_group("F1(x) * C3(b)")), "F1(x) * C3(b)");
  EXPECT_THROW(parse_group("F2 * D3"), ParseError);
  EXPECT_THROW(parse_group("C1"), ParseError);
  EXPECT_THROW(parse_group("F1(x) * C2(x)"), ParseError);
}

TEST(Parse, Orbifolds) {
  auto const o = parse_orbifold("orb(orientable=true, genus=0, boundary=1, cones=[2,3])");
  EXPECT_TRUE(o.orientable);
  EXPECT_EQ(o.genus, 0);
  EXPECT_EQ(o.boundary_components, 1);
  EXPECT_EQ(o.cone_orders, (std::vector<int>{2, 3}));
  EXPECT_EQ(parse_orbifold(to_string(o)), o);
  EXPECT_THROW(parse_orbifold("orb(orientable=maybe, genus=0, boundary=1, cones=[])"), ParseError);
  EXPECT_THROW(parse_orbifold("orb(orientable=false, genus=0, boundary=1, cones=[])"), std::exception);
}

TEST(Parse, WordsAndErrors) {
  auto const& g = c2c3();
  EXPECT_EQ(W(g, "1"), Word{});
  EXPECT_EQ(W(g, ""), Word{});
  EXPECT_EQ(W(g, "(a b)^2"), W(g, "a b a b"));
  EXPECT_EQ(W(f2(), "x^3"), W(f2(), "x x x"));
  EXPECT_THROW(W(g, "b^3"), ParseError);
  EXPECT_THROW(W(g, "q"), ParseError);
  EXPECT_THROW(W(g, "a^"), ParseError);
  try {
    W(g, "a b c");
    FAIL();
  } catch (ParseError const& e) {
    EXPECT_EQ(e.position(), 4u);
  }
}

TEST(Parse, Chains) {
  GroupSpec const g = parse_group("F1 * C3");
  auto const      c = parse_chain("3[x1 y1] - 1/2[y1^2]", g);
  ASSERT_EQ(c.size(), 2u);
  EXPECT_EQ(c.terms[0].coefficient, Rational(3));
  EXPECT_EQ(c.terms[1].coefficient, Rational(-1, 2));
  EXPECT_TRUE(parse_chain("0", g).empty());
  EXPECT_THROW(parse_chain("3[x1", g), ParseError);
  EXPECT_THROW(parse_chain("1/0[x1]", g), ParseError);
}

TEST(Parse, PrintParseIsIdempotent) {
  GroupSpec const g = parse_group("F1 * C2 * C3");
  oracle::for_each_word({g, 4, oracle::WordFilter::All}, [&](Word const& w) {
    EXPECT_EQ(W(g, S(g, w)), w);
    Chain c;
    c.add(Rational(-3, 2), w);
    EXPECT_EQ(parse_chain(to_string(g, c), g), c);
    return true;
  });
}

TEST(Json, RationalRecords) {
  EXPECT_EQ(json::rational(Rational(-1, 12)).dump(), R"({"den":"12","num":"-1"})");
  EXPECT_EQ(json::rational_from(json::rational(Rational(7, 3))), Rational(7, 3));
  EXPECT_THROW(json::rational_from(json::Json{{"num", "x"}}), ParseError);
}

TEST(Json, CertificateRoundTripReverifies) {
  auto const& g = c2c3();
  for (auto const& text : {"[a b]", "2[a b] - [a b^2]", "[b]", "[a b] + [b^2 a]"}) {
    auto const cert = chain_gap_certificate(g, parse_chain(text, g));
    auto const j    = json::certificate(cert);
    auto const back = json::certificate_from(json::Json::parse(j.dump()));
    EXPECT_TRUE(verify(back)) << text;
    EXPECT_EQ(back.status, cert.status);
    EXPECT_EQ(back.bound, cert.bound);
    EXPECT_EQ(json::certificate(back).dump(), j.dump()) << text;
  }
}

TEST(Json, TamperedRecordFailsVerification) {
  auto const& g = c2c3();
  auto        j = json::certificate(element_gap(g, W(g, "a b")));
  j["bound"]    = json::rational(Rational(1, 6));
  EXPECT_FALSE(verify(json::certificate_from(j)));
}

TEST(Json, DocumentKeysAreSorted) {
  auto const d = json::document("gap element", {{"word", "a b"}, {"group", "C2 * C3"}}, json::Json::object());
  EXPECT_EQ(d.dump(),
            R"({"command":"gap element","inputs":{"group":"C2 * C3","word":"a b"},"result":{},"schema_version":"1"})");
}
