#include <gtest/gtest.h>

#include <set>

#include "oracles.hpp"
#include "spectra/curves.hpp"
#include "spectra/groebner/field.hpp"
#include "spectra/groebner/groebner.hpp"

using namespace spectra;

namespace {

FinSuppSeq seq(std::vector<std::int64_t> v) { return FinSuppSeq(0, std::move(v)); }

FinSuppSeq from_window(const oracle::Vec& v) { return FinSuppSeq(0, v); }

// Every instance of every kind with all parameters <= n that check_family accepts.
std::vector<CurveFamily> all_families(std::int64_t n) {
  std::vector<CurveFamily> out;
  auto keep = [&](CurveFamily f) {
    try {
      check_family(f);
      out.push_back(std::move(f));
    } catch (const InvalidFamily&) {
    }
  };
  for (std::int64_t a = 0; a <= n; ++a)
    for (std::int64_t b = 0; b <= n; ++b) keep(QuadricDivisor{a, b});
  for (std::int64_t d = 0; d <= n; ++d) keep(ConeCurve{d});
  for (std::int64_t d0 = 0; d0 <= n; ++d0)
    for (std::int64_t d1 = 0; d1 <= n; ++d1)
      for (std::int64_t r = 0; r <= n; ++r) keep(TwoPlanesNoLine{d0, d1, r});
  for (std::int64_t r0 = 0; r0 <= n; ++r0)
    for (std::int64_t d0 = 0; d0 <= n; ++d0)
      for (std::int64_t r1 = 0; r1 <= n; ++r1)
        for (std::int64_t d1 = 0; d1 <= n; ++d1) {
          keep(TwoPlanesWithLine{r0, d0, r1, d1, Xpp{}});
          for (std::int64_t mneg = 0; mneg <= n; ++mneg) keep(TwoPlanesWithLine{r0, d0, r1, d1, XprimePlusLine{mneg}});
        }
  for (std::int64_t r0 = 1; r0 <= n; ++r0)
    for (std::int64_t r = 1; r <= n; ++r)
      for (std::int64_t sigma = 1; sigma <= r0; ++sigma)
        for (auto& lam : oracle::increasing_sequences(sigma, n + 1)) keep(DoublePlane{sigma, lam, r0, r});
  return out;
}

std::vector<DoublePlane> double_planes(std::int64_t n) {
  std::vector<DoublePlane> out;
  for (std::int64_t r0 = 2; r0 <= n; ++r0)
    for (std::int64_t r = r0; r <= n; ++r)
      for (std::int64_t sigma = 1; sigma < r0; ++sigma)
        for (auto& lam : oracle::increasing_sequences(sigma, r0)) out.push_back(DoublePlane{sigma, lam, r0, r});
  return out;
}

}  // namespace

TEST(Delta2H0, Examples) {
  EXPECT_EQ(delta2_h0(QuadricDivisor{2, 3}), seq({1, 2, 2}));
  EXPECT_EQ(delta2_h0(TwoPlanesNoLine{1, 1, 1}), seq({1, 1}));
  EXPECT_EQ(delta2_h0(DoublePlane{1, {1}, 2, 2}), seq({1, 3}));
  EXPECT_EQ(delta2_h0(ConeCurve{1}), seq({1}));
  EXPECT_EQ(delta2_h0(ConeCurve{4}), delta2_h0(QuadricDivisor{2, 2}));
  EXPECT_EQ(delta2_h0(ConeCurve{5}), delta2_h0(QuadricDivisor{2, 3}));
  EXPECT_EQ(delta2_h0(TwoPlanesWithLine{1, 1, 1, 2, Xpp{}}), seq({1, 2, 2, 1}));
  EXPECT_EQ(delta2_h0(TwoPlanesWithLine{1, 1, 1, 2, XprimePlusLine{1}}), seq({1, 3, 1}));
}

TEST(Delta2H0, RejectsOutsideDomain) {
  EXPECT_THROW(delta2_h0(QuadricDivisor{0, 2}), InvalidFamily);
  EXPECT_THROW(delta2_h0(QuadricDivisor{3, 2}), InvalidFamily);
  EXPECT_THROW(delta2_h0(ConeCurve{0}), InvalidFamily);
  EXPECT_THROW(delta2_h0(TwoPlanesNoLine{2, 3, 3}), InvalidFamily);
  EXPECT_THROW(delta2_h0(DoublePlane{1, {2}, 2, 2}), InvalidFamily);  // r0 = d_sigma
  EXPECT_THROW(delta2_h0(DoublePlane{1, {1}, 3, 2}), InvalidFamily);  // r < r0
  EXPECT_THROW(delta2_h0(DoublePlane{2, {2, 1}, 5, 5}), InvalidFamily);
  EXPECT_THROW(delta2_h0(TwoPlanesWithLine{1, 1, 1, 2, XprimePlusLine{0}}), InvalidFamily);
  EXPECT_THROW(delta2_h0(TwoPlanesWithLine{0, 1, 1, 2, XprimePlusLine{1}}), InvalidFamily);
  // between r0 + d0 and r1 + d1, exclusive
  EXPECT_THROW(delta2_h0(TwoPlanesWithLine{1, 1, 1, 3, XprimePlusLine{3}}), InvalidFamily);
  EXPECT_NO_THROW(delta2_h0(TwoPlanesWithLine{1, 1, 1, 3, XprimePlusLine{4}}));
}

TEST(Degree, Examples) {
  EXPECT_EQ(degree(QuadricDivisor{2, 3}), 5);
  EXPECT_EQ(degree(DoublePlane{1, {1}, 2, 2}), 4);
  EXPECT_EQ(degree(ConeCurve{1}), 1);
  EXPECT_EQ(degree(TwoPlanesNoLine{2, 3, 1}), 5);
  EXPECT_EQ(degree(TwoPlanesWithLine{1, 1, 1, 2, Xpp{}}), 6);
  EXPECT_EQ(degree(TwoPlanesWithLine{1, 1, 1, 2, XprimePlusLine{1}}), 5);
}

TEST(Delta2H0, MassLawAndShape) {
  std::size_t count = 0;
  for (auto& f : all_families(12)) {
    FinSuppSeq d2 = delta2_h0(f);
    EXPECT_EQ(mass(d2), degree(f)) << family_json(f).dump();
    EXPECT_EQ(d2.first(), 0);
    EXPECT_EQ(d2(0), 1);
    for (auto v : d2.values()) EXPECT_GE(v, 0);
    ++count;
  }
  EXPECT_GT(count, 10000u);
}

TEST(Delta2H0, QuadricMatchesRestrictionSequence) {
  // (1, 4, 9, 14, 19) for type (2, 3)
  oracle::Vec h;
  for (std::int64_t i = 0; i <= 4; ++i) h.push_back(oracle::quadric_h0(2, 3, i));
  EXPECT_EQ(h, (oracle::Vec{1, 4, 9, 14, 19}));
  for (std::int64_t a = 1; a <= 12; ++a)
    for (std::int64_t b = a; b <= 12; ++b) {
      auto w = oracle::second_difference([&](std::int64_t i) { return oracle::quadric_h0(a, b, i); }, 0, a + b + 3);
      EXPECT_EQ(from_window(w), delta2_h0(QuadricDivisor{a, b})) << a << "," << b;
    }
}

TEST(Delta2H0, ConeAgreesWithQuadricAndLinkage) {
  for (std::int64_t m = 1; m <= 10; ++m) {
    EXPECT_EQ(delta2_h0(ConeCurve{2 * m}), delta2_h0(QuadricDivisor{m, m}));
    EXPECT_EQ(delta2_h0(ConeCurve{2 * m}), delta2_from_acm({2, m}, {m + 2})) << m;
    // odd degree: linked to a line by (2, m), resolution S(-2) + 2 S(-m) <- 2 S(-m-1)
    EXPECT_EQ(delta2_h0(ConeCurve{2 * m - 1}), delta2_from_acm({2, m, m}, {m + 1, m + 1})) << m;
  }
}

TEST(Delta2FromAcm, Examples) {
  EXPECT_EQ(delta2_from_acm({1, 1}, {2}), seq({1}));
  EXPECT_EQ(delta2_from_acm({2, 2, 2}, {3, 3}), seq({1, 2}));  // twisted cubic
  EXPECT_THROW(delta2_from_acm({1, 1}, {2, 2}), std::invalid_argument);
  EXPECT_THROW(delta2_from_acm({1, 1}, {3}), std::invalid_argument);
}

TEST(Delta2H0, TwoPlaneProfilesMatchResolutions) {
  for (std::int64_t r0 = 0; r0 <= 6; ++r0)
    for (std::int64_t d0 = 1; d0 <= 6; ++d0)
      for (std::int64_t r1 = 0; r1 <= 6; ++r1)
        for (std::int64_t d1 = 1; d1 <= 6; ++d1) {
          if (r0 + d0 > r1 + d1) continue;
          const std::int64_t p = r0 + d0, q = r1 + d1;
          EXPECT_EQ(delta2_h0(TwoPlanesWithLine{r0, d0, r1, d1, Xpp{}}), delta2_from_acm({p + 1, 2, q + 1}, {p + 2, q + 2}));
          if (r0 < 1 || r1 < 1) continue;
          // X' has the same shape of resolution with r_i lowered by one
          FinSuppSeq xprime = delta2_from_acm({p, 2, q}, {p + 1, q + 1});
          for (std::int64_t mneg = 1; mneg <= q; ++mneg) {
            if (mneg != q && mneg > p) continue;
            EXPECT_EQ(delta2_h0(TwoPlanesWithLine{r0, d0, r1, d1, XprimePlusLine{mneg}}), add(xprime, indicator(mneg)));
          }
        }
}

TEST(Delta2H0, TwoPlanesNoLineIsGluedPlaneCurves) {
  auto plane_curve = [](std::int64_t d) {
    auto w = oracle::second_difference([&](std::int64_t i) { return oracle::hP2(i) - oracle::hP2(i - d); }, 0, d + 2);
    return from_window(w);
  };
  EXPECT_EQ(plane_curve(1), seq({1}));
  for (std::int64_t d0 = 1; d0 <= 10; ++d0)
    for (std::int64_t d1 = d0; d1 <= 10; ++d1)
      for (std::int64_t r = 1; r <= d0; ++r)
        EXPECT_EQ(delta2_h0(TwoPlanesNoLine{d0, d1, r}), glue(plane_curve(d0), plane_curve(d1), r));
}

TEST(Glue, Examples) {
  EXPECT_EQ(glue(seq({1}), seq({1}), 1), seq({1, 1}));
  EXPECT_EQ(glue(seq({1}), seq({1}), 5), FinSuppSeq(0, {1, 0, 0, 0, 0, 1}));
  EXPECT_THROW(glue(seq({1}), seq({1}), 0), std::invalid_argument);
}

TEST(Delta2H0, DoublePlaneMatchesBinomialSum) {
  std::size_t count = 0;
  for (auto& x : double_planes(12)) {
    auto w = oracle::second_difference(
        [&](std::int64_t i) { return oracle::double_plane_h0(x.sigma, x.lambdas, x.r0, x.r, i); }, 0, x.r + x.r0 + 3);
    EXPECT_EQ(from_window(w), delta2_h0(x)) << family_json(x).dump();
    ++count;
  }
  EXPECT_GT(count, 1000u);
}

TEST(Delta2H0, DoublePlaneExcessAndOnes) {
  for (auto& x : double_planes(12)) {
    if (x.r0 - 2 <= x.d().back()) continue;
    FinSuppSeq d2 = delta2_h0(x);
    std::int64_t excess = 0, ones = 0;
    for (std::int64_t i = 1; i <= d2.last(); ++i) {
      excess += std::max<std::int64_t>(d2(i) - 2, 0);
      ones += d2(i) == 1;
    }
    EXPECT_EQ(excess, x.sigma);
    EXPECT_EQ(ones, (x.r - 1) - (x.r0 - x.sigma));
  }
}

TEST(SpectrumFromCurve, Examples) {
  FinSuppSeq dp = delta2_h0(DoublePlane{1, {1}, 2, 2});
  EXPECT_EQ(spectrum_from_curve(1, dp).value().tail(), dp);
  EXPECT_EQ(spectrum_from_curve(2, seq({1, 3, 2})).value().tail(), seq({3, 2}));
  EXPECT_EQ(spectrum_from_curve(1, seq({1})).value().c2(), 1);
  // (1, 1, 2) breaks the ones rule: reported, not dropped
  EXPECT_FALSE(spectrum_from_curve(1, seq({1, 1, 2})).ok());
  EXPECT_FALSE(spectrum_from_curve(3, seq({1})).ok());
  EXPECT_THROW(spectrum_from_curve(1, FinSuppSeq(-1, {1})), std::invalid_argument);
}

TEST(SpectrumFromXprime, Examples) {
  EXPECT_EQ(spectrum_from_xprime(seq({1, 2, 2})).value().tail(), seq({2, 2, 2}));
  EXPECT_EQ(spectrum_from_xprime(seq({1})).value().tail(), seq({2}));
  EXPECT_EQ(spectrum_from_xprime(seq({1, 3, 1})).value().tail(), seq({2, 3, 1}));
  EXPECT_FALSE(spectrum_from_xprime(seq({1, 1, 2})).ok());
}

TEST(TailSearch, Examples) {
  EXPECT_TRUE(tail_search(seq({1, 2, 2, 4, 2}), 21).empty());
  EXPECT_TRUE(tail_search(seq({1, 2, 2, 4, 2}), 30).empty());

  auto hits = tail_search(seq({1, 2, 2}), 21);
  bool quadric = false;
  for (auto& h : hits)
    quadric = quadric || (h.family == CurveFamily{QuadricDivisor{2, 3}} && h.route == TailRoute::Twist1);
  EXPECT_TRUE(quadric);

  std::vector<std::string> got;
  for (auto& h : tail_search(seq({1}), 5)) got.push_back(family_json(h.family).dump() + " " + route_name(h.route));
  EXPECT_EQ(got, (std::vector<std::string>{
                     R"({"a":1,"b":1,"kind":"quadric"} c=2)",
                     R"({"d":1,"kind":"cone"} c=1)",
                     R"({"d":2,"kind":"cone"} c=2)",
                     R"({"d0":1,"d1":1,"kind":"twoplanes","r":1} c=2)",
                 }));

  EXPECT_THROW(tail_search(seq({3}), 5), std::invalid_argument);
}

TEST(TailSearch, MatchesNaiveSearch) {
  const std::int64_t N = 9;
  const auto families = all_families(N);
  for (std::int64_t c2 = 1; c2 <= N; ++c2)
    for (auto& s : enumerate(c2)) {
      if (s(0) > 2) continue;
      std::multiset<std::string> expected, got;
      for (auto& f : families) {
        if (degree(f) > N) continue;
        FinSuppSeq d2 = delta2_h0(f);
        auto add_if = [&](const Validation& v, const char* route) {
          if (v.ok() && v.value().tail() == s.tail()) expected.insert(family_json(f).dump() + route);
        };
        add_if(spectrum_from_curve(1, d2), "c=1");
        add_if(spectrum_from_curve(2, d2), "c=2");
        add_if(spectrum_from_xprime(d2), "xprime");
      }
      auto hits = tail_search(s.tail(), N);
      for (std::size_t k = 0; k < hits.size(); ++k) {
        got.insert(family_json(hits[k].family).dump() + route_name(hits[k].route));
        if (k) {
          EXPECT_LE(hits[k - 1].family.index(), hits[k].family.index());
        }
      }
      EXPECT_EQ(got, expected) << s.to_string();
    }
}

// For arithmetically Cohen-Macaulay curves, h0(O_X(i)) is the Hilbert function
// of S/I, so its second difference can be read off a Groebner-free rank count.
TEST(Delta2H0, AcmProfilesMatchIdealRanks) {
  using Q = mpq_class;
  using P = gb::Poly<Q>;
  auto mono = [](int a, int b, int c, int d) { return P::monomial(4, gb::Monomial{a, b, c, d}); };
  auto profile = [](const std::vector<P>& gens, int top) {
    auto hf = [&](std::int64_t i) -> std::int64_t { return i < 0 ? 0 : gb::hilbert_by_rank(gens, 4, static_cast<int>(i)); };
    return from_window(oracle::second_difference(hf, 0, top));
  };
  for (int r0 = 0; r0 <= 1; ++r0)
    for (int d0 = 1; d0 <= 2; ++d0)
      for (int r1 = 0; r1 <= 1; ++r1)
        for (int d1 = d0; d1 <= 2; ++d1) {
          if (r0 + d0 > r1 + d1) continue;
          P f0 = mono(0, 0, d0, 0) + mono(0, 0, 0, d0);
          P f1 = mono(0, 0, d1, 0) + Q(3) * mono(0, 0, 1, d1 - 1) + mono(0, 0, 0, d1);
          std::vector<P> gens{mono(0, r0 + 1, 0, 0) * f0, mono(1, 1, 0, 0), mono(r1 + 1, 0, 0, 0) * f1};
          EXPECT_EQ(profile(gens, r1 + d1 + 3), delta2_h0(TwoPlanesWithLine{r0, d0, r1, d1, Xpp{}}))
              << r0 << d0 << r1 << d1;
        }
  for (int m = 1; m <= 4; ++m) {
    // quadric cone T0 T2 - T1^2 cut by a general-ish form of degree m
    P cone = mono(1, 0, 1, 0) - mono(0, 2, 0, 0);
    P g = mono(0, 0, 0, m) + mono(m, 0, 0, 0) + mono(0, 0, m, 0);
    EXPECT_EQ(profile({cone, g}, 2 * m + 2), delta2_h0(ConeCurve{2 * m})) << m;
  }
}
