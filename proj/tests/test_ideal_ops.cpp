#include <gtest/gtest.h>

#include <random>
#include <sstream>

#include "oracles.hpp"

using namespace cubicmrc;
using oracle::P;

namespace {

const Ring R4{};

Ideal ideal_of(const Ring& ring, std::initializer_list<const char*> texts) {
  std::vector<Polynomial> gens;
  for (const char* t : texts) gens.push_back(P(ring, t));
  return Ideal(ring, gens);
}

const SurfaceSpec& fermat() {
  static const SurfaceSpec X = fermat_cubic(32003);
  return X;
}

}  // namespace

TEST(Intersect, WithUnitIdeal) {
  const Ideal I = ideal_of(R4, {"x0^2 + x1*x2", "x3^3"});
  EXPECT_TRUE(same_ideal(intersect(I, Ideal::unit(R4)), I));
}

TEST(Intersect, TwoCoordinatePoints) {
  const Ideal I = intersect(ideal_of(R4, {"x1", "x2", "x3"}), ideal_of(R4, {"x0", "x2", "x3"}));
  EXPECT_TRUE(same_ideal(I, ideal_of(R4, {"x2", "x3", "x0*x1"})));
  // Degreewise oracle: forms vanishing at both points.
  const std::vector pts{ProjectivePoint(R4.field(), {1, 0, 0, 0}), ProjectivePoint(R4.field(), {0, 1, 0, 0})};
  for (int d = 0; d <= 4; ++d) EXPECT_EQ(hilbert_function(I, d), oracle::hf_by_evaluation(R4.field(), pts, d));
}

TEST(Intersect, Idempotent) {
  const Ideal I = ideal_of(R4, {"x0*x1 - x2^2", "x1*x3 + x0^2"});
  EXPECT_EQ(intersect(I, I).groebner_basis().generators, I.groebner_basis().generators);
}

TEST(Colon, HandComputed) {
  EXPECT_TRUE(same_ideal(colon(ideal_of(R4, {"x0^2", "x0*x1"}), ideal_of(R4, {"x0"})), ideal_of(R4, {"x0", "x1"})));
}

TEST(Colon, SelfIsWholeRing) {
  const Ideal I = ideal_of(R4, {"x0^2 + x1*x2", "x3^3"});
  EXPECT_TRUE(colon(I, I).is_unit());
}

TEST(Colon, ZeroIdealIsAnError) {
  EXPECT_THROW(colon(ideal_of(R4, {"x0"}), Ideal(R4)), std::invalid_argument);
}

TEST(Colon, RemovesDisjointPointSet) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 3; ++trial) {
    const std::size_t nz = 4 + trial, nw = 4 + (trial + 1) % 3;
    const auto all = oracle::random_points(R4.field(), nz + nw, rng);
    const std::vector<ProjectivePoint> Z(all.begin(), all.begin() + nz), W(all.begin() + nz, all.end());
    const Ideal I_ZW = oracle::ideal_by_intersection(R4, all);
    const Ideal I_W = oracle::ideal_by_intersection(R4, W);
    const Ideal I_Z = oracle::ideal_by_intersection(R4, Z);
    EXPECT_EQ(colon(I_ZW, I_W).groebner_basis().generators, I_Z.groebner_basis().generators);
  }
}

TEST(Colon, DualityProperties) {
  const Ideal I = ideal_of(R4, {"x0^2*x1", "x1^2*x2", "x2^3 - x0*x1*x3"});
  const Ideal J = ideal_of(R4, {"x1", "x0 + x2"});
  const Ideal IJ = colon(I, J);
  for (const auto& f : IJ.generators()) {
    for (const auto& g : J.generators()) EXPECT_TRUE(I.contains(f * g));
  }
  const Ideal big = colon(intersect(I, J), J);
  for (const auto& f : IJ.generators()) EXPECT_TRUE(big.contains(f));
}

TEST(Saturate, SaturatedIdealIsFixed) {
  std::mt19937_64 rng(37);
  const auto pts = oracle::random_points(R4.field(), 6, rng);
  const Ideal I = vanishing_ideal(R4, pts, 4);
  EXPECT_TRUE(same_ideal(saturate(I, P(R4, "x3")), I));
}

TEST(Saturate, HandComputed) {
  EXPECT_TRUE(saturate(ideal_of(R4, {"x0^2", "x0*x1"}), P(R4, "x0")).is_unit());
  EXPECT_THROW(saturate(ideal_of(R4, {"x0"}), Polynomial(R4)), std::invalid_argument);
}

TEST(Saturate, RecoversTruncatedVanishingIdeal) {
  std::mt19937_64 rng(41);
  const auto pts = oracle::random_points(R4.field(), 5, rng);
  const Ideal I = vanishing_ideal(R4, pts, 4);
  // Generators of I in degree ≥ 3 only: x^α·g for every g and |α| = 3 − deg g.
  std::vector<Polynomial> trunc;
  for (const auto& g : I.generators()) {
    for (const auto& m : monomials_of_degree(4, 3 - g.degree())) trunc.push_back(g.times_term(1, m));
  }
  const Ideal T(R4, trunc);
  EXPECT_EQ(hilbert_function(T, 2), 10);
  // A linear form avoiding all points.
  Polynomial ell = P(R4, "x0 + 2*x1 + 3*x2 + 5*x3");
  for (const auto& pt : pts) {
    const std::array<std::uint32_t, 4> c{pt[0], pt[1], pt[2], pt[3]};
    ASSERT_NE(ell.evaluate(c), 0u);
  }
  EXPECT_TRUE(same_ideal(saturate(T, ell), I));
}

TEST(HilbertFunction, ZeroIdeal) {
  const Ideal I(R4);
  EXPECT_EQ(hilbert_function(I, 3), 20);
  for (int d = 0; d < 8; ++d) EXPECT_EQ(hilbert_function(I, d), binom(d + 3, 3));
}

TEST(HilbertFunction, Cubic) {
  const Ideal I(R4, {fermat().f});
  EXPECT_EQ(hilbert_function(I, 3), 19);
  EXPECT_EQ(hilbert_function(I, 4), 31);
  for (int d = 0; d <= 8; ++d) EXPECT_EQ(hilbert_function(I, d), p_cubic(d));
}

TEST(HilbertFunction, TwentyTwoPointsAgainstEvaluationRank) {
  const auto pts = sample_points(fermat(), 22, 2024);
  const Ideal I = vanishing_ideal(R4, pts, 6);
  EXPECT_EQ(hilbert_function(I, 4), 22);
  EXPECT_EQ(hilbert_function(I, 5), 22);
  for (int d = 0; d <= 7; ++d) EXPECT_EQ(hilbert_function(I, d), oracle::hf_by_evaluation(R4.field(), pts, d)) << d;
}

TEST(HilbertSeries, Examples) {
  EXPECT_EQ(hilbert_series_numerator(ideal_of(R4, {"x0"})), (IntPoly{1, -1}));
  EXPECT_EQ(hilbert_series_numerator(Ideal(R4, {fermat().f})), (IntPoly{1, 0, 0, -1}));
  EXPECT_EQ(hilbert_series_numerator(Ideal(R4)), IntPoly{1});
}

TEST(HilbertSeries, TwentyTwoPoints) {
  const Ideal I = vanishing_ideal(R4, sample_points(fermat(), 22, 7), 6);
  EXPECT_EQ(hilbert_series_numerator(I), (IntPoly{1, 0, 0, -1, -9, 12, 0, -3}));
}

TEST(HilbertSeries, OrderIndependent) {
  const std::vector<Ideal> ideals = {
      ideal_of(R4, {"x0^2 + x1*x2", "x0*x1 + x2*x3", "x1^3 - x3^3"}),
      ideal_of(R4, {"x0*x3 - x1*x2", "x1^2 - x0*x2", "x2^2 - x1*x3"}),
      Ideal(R4, {fermat().f}),
  };
  for (const auto& I : ideals) {
    EXPECT_EQ(hilbert_series_numerator(I, MonomialOrder::grevlex()), hilbert_series_numerator(I, MonomialOrder::lex()));
  }
}

TEST(HilbertSeries, MonomialRecursionMatchesCounting) {
  // N(T)/(1−T)^4 expanded must reproduce HF counted from standard monomials.
  const Ideal I = ideal_of(R4, {"x0^3", "x0*x1^2", "x1^2*x2^2", "x2^4", "x0*x2*x3^2"});
  const IntPoly N = hilbert_series_numerator(I);
  for (int d = 0; d <= 10; ++d) {
    std::int64_t v = 0;
    for (int k = 0; k <= std::min(d, N.degree()); ++k) v += N[k] * binom(d - k + 3, 3);
    EXPECT_EQ(v, hilbert_function(I, d)) << d;
  }
}

TEST(DegreeOfPoints, Examples) {
  EXPECT_EQ(degree_of_points(ideal_of(R4, {"x1", "x2", "x3"})), 1);
  EXPECT_EQ(degree_of_points(IntPoly{1, 0, 0, -1, -9, 12, 0, -3}), 22);
  EXPECT_THROW(degree_of_points(IntPoly{1, -1}), std::domain_error);
}

TEST(DegreeOfPoints, DisjointUnion) {
  std::mt19937_64 rng(43);
  const auto pts = oracle::random_points(R4.field(), 12, rng);
  const std::vector<ProjectivePoint> Z(pts.begin(), pts.begin() + 5), W(pts.begin() + 5, pts.end());
  const Ideal U = intersect(vanishing_ideal(R4, Z, 4), vanishing_ideal(R4, W, 5));
  EXPECT_EQ(degree_of_points(U), 12);
  for (int d = 4; d <= 6; ++d) EXPECT_EQ(hilbert_function(U, d), 12);
}

TEST(PointIdeal, Examples) {
  const PrimeField& F = R4.field();
  EXPECT_TRUE(same_ideal(point_ideal(R4, ProjectivePoint(F, {1, 0, 0, 0})), ideal_of(R4, {"x1", "x2", "x3"})));
  EXPECT_TRUE(same_ideal(point_ideal(R4, ProjectivePoint(F, {1, 1, 1, 1})),
                         ideal_of(R4, {"x0 - x1", "x0 - x2", "x0 - x3"})));
  std::mt19937_64 rng(47);
  for (const auto& pt : oracle::random_points(F, 10, rng)) {
    const Ideal I = point_ideal(R4, pt);
    ASSERT_EQ(I.generators().size(), 3u);
    FpMatrix M(F, 3, 4);
    for (std::size_t r = 0; r < 3; ++r) {
      const std::array<std::uint32_t, 4> c{pt[0], pt[1], pt[2], pt[3]};
      EXPECT_EQ(I.generators()[r].evaluate(c), 0u);
      for (const auto& t : I.generators()[r].terms()) {
        for (int v = 0; v < 4; ++v) {
          if (t.mono[v] == 1) M(r, v) = t.coef;
        }
      }
    }
    EXPECT_EQ(M.rank(), 3u);
  }
}

TEST(ProjectivePoint, Normalisation) {
  const PrimeField F(101);
  const ProjectivePoint a(F, {0, 2, 4, 6}), b(F, {0, 1, 2, 3}), c(F, {0, -99, -97, -95});
  EXPECT_EQ(a, b);
  EXPECT_EQ(a, c);
  EXPECT_EQ(a.to_string(), "0,1,2,3");
  EXPECT_THROW(ProjectivePoint(F, {0, 0, 0, 0}), std::invalid_argument);
}

TEST(VanishingIdeal, OnePoint) {
  const Ideal I = vanishing_ideal(R4, std::vector{ProjectivePoint(R4.field(), {1, 0, 0, 0})}, 1);
  EXPECT_TRUE(same_ideal(I, ideal_of(R4, {"x1", "x2", "x3"})));
}

TEST(VanishingIdeal, FivePointsHaveFiveQuadrics) {
  const Ideal I = vanishing_ideal(R4, sample_points(fermat(), 5, 3), 3);
  ASSERT_EQ(I.generators().size(), 5u);
  for (const auto& g : I.generators()) EXPECT_EQ(g.degree(), 2);
}

TEST(VanishingIdeal, DuplicatePointsAreAnError) {
  const ProjectivePoint p(R4.field(), {1, 2, 3, 4});
  EXPECT_THROW(vanishing_ideal(R4, std::vector{p, p}, 2), std::invalid_argument);
}

TEST(VanishingIdeal, MatchesIntersectionRouteOverF101) {
  const Ring R(PrimeField(101));
  std::mt19937_64 rng(53);
  for (int trial = 0; trial < 10; ++trial) {
    const std::size_t n = 1 + static_cast<std::size_t>(rng() % 8);
    const auto pts = oracle::random_points(R.field(), n, rng);
    const Ideal A = vanishing_ideal(R, pts, 5);
    const Ideal B = oracle::ideal_by_intersection(R, pts);
    EXPECT_EQ(A.groebner_basis().generators, B.groebner_basis().generators) << n << " points";
  }
}

TEST(VanishingIdeal, IsSaturated) {
  std::mt19937_64 rng(59);
  const auto pts = sample_points(fermat(), 9, 11);
  const Ideal I = vanishing_ideal(R4, pts, 5);
  const Polynomial ell = oracle::random_form(R4, 1, rng);
  for (const auto& pt : pts) {
    const std::array<std::uint32_t, 4> c{pt[0], pt[1], pt[2], pt[3]};
    ASSERT_NE(ell.evaluate(c), 0u);
  }
  EXPECT_TRUE(same_ideal(saturate(I, ell), I));
}

TEST(VanishingIdeal, GeneralitySignatureOnCubic) {
  for (std::size_t z : {12u, 19u, 22u, 30u}) {
    const auto pts = sample_points(fermat(), z, 100 + z);
    const Ideal I = vanishing_ideal(R4, pts, 7);
    for (int d = 0; d <= 8; ++d) {
      EXPECT_EQ(hilbert_function(I, d), std::min<std::int64_t>(p_cubic(d), static_cast<std::int64_t>(z))) << z << " " << d;
    }
  }
}

TEST(PointFile, RoundTripAndComments) {
  const PrimeField F(101);
  std::istringstream in("# header\n1,2,3,4\n\n0, 0, 1, 100  # trailing\n");
  const auto pts = read_points(in, F);
  ASSERT_EQ(pts.size(), 2u);
  EXPECT_EQ(pts[1].to_string(), "0,0,1,100");
  std::ostringstream out;
  write_points(out, pts);
  std::istringstream back(out.str());
  EXPECT_EQ(read_points(back, F), pts);
  std::istringstream bad("1,2,3\n");
  EXPECT_THROW(read_points(bad, F), std::invalid_argument);
}
