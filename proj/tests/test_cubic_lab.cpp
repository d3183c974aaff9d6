#include <gtest/gtest.h>

#include <set>
#include <sstream>

#include "cubicmrc/json_io.hpp"
#include "oracles.hpp"

using namespace cubicmrc;
using oracle::P;

namespace {

std::vector<std::uint32_t> coords(const ProjectivePoint& p) {
  return {p.coordinates().begin(), p.coordinates().end()};
}

}  // namespace

TEST(Seeds, DeriveSeedIsDeterministicAndSpreads) {
  EXPECT_EQ(derive_seed(7, 3), derive_seed(7, 3));
  std::set<std::uint64_t> seen;
  for (std::uint64_t i = 0; i < 100; ++i) seen.insert(derive_seed(42, i));
  EXPECT_EQ(seen.size(), 100u);
  EXPECT_NE(splitmix64(0), splitmix64(1));
}

TEST(FermatCubic, SmoothExceptInCharacteristicThree) {
  EXPECT_TRUE(fermat_cubic(7).smoothness_checked);
  EXPECT_TRUE(is_smooth(fermat_cubic(32003).f));
  EXPECT_THROW(fermat_cubic(3), std::domain_error);
}

TEST(IsSmooth, Examples) {
  const Ring R4{};
  EXPECT_FALSE(is_smooth(P(R4, "x0^3")));
  EXPECT_FALSE(is_smooth(P(R4, "x0*x1*x2")));  // reducible: three planes
  EXPECT_FALSE(is_smooth(P(R4, "x0^3 + x1^3 + x2^3")));  // cone over a plane cubic
  EXPECT_TRUE(is_smooth(P(R4, "x0^3 + x1^3 + x2^3 + x3^3 + x0*x1*x2")));
  EXPECT_THROW(is_smooth(P(R4, "x0^2")), std::invalid_argument);
}

TEST(RandomCubic, SmoothAndSeeded) {
  const SurfaceSpec a = random_cubic(32003, 5);
  EXPECT_TRUE(is_smooth(a.f));
  EXPECT_EQ(a.f, random_cubic(32003, 5).f);
  EXPECT_NE(a.f, random_cubic(32003, 6).f);
  EXPECT_EQ(a.provenance, "random(5)");
}

TEST(SamplePoints, OnSurfaceDistinctAndDeterministic) {
  const SurfaceSpec X = fermat_cubic(32003);
  const auto pts = sample_points(X, 40, 11);
  ASSERT_EQ(pts.size(), 40u);
  EXPECT_EQ(std::set<ProjectivePoint>(pts.begin(), pts.end()).size(), 40u);
  for (const auto& p : pts) EXPECT_EQ(X.f.evaluate(coords(p)), 0u);
  EXPECT_EQ(pts, sample_points(X, 40, 11));
  EXPECT_NE(pts, sample_points(X, 40, 12));
}

TEST(SamplePoints, TwentyTwoPointsAreGeneral) {
  const SurfaceSpec X = fermat_cubic(32003);
  const auto pts = sample_points(X, 22, 3);
  const Ideal I = vanishing_ideal(X.f.ring(), pts, 6);
  EXPECT_TRUE(generality_signature(I, 22, 7));
  for (int d = 0; d <= 7; ++d) EXPECT_EQ(hilbert_function(I, d), std::min<std::int64_t>(p_cubic(d), 22)) << d;
  EXPECT_EQ(minimal_betti(I), predicted_diagram(22).diagram);
}

TEST(RandomElement, LiesInIdealWithRequestedDegree) {
  const SurfaceSpec X = fermat_cubic(32003);
  const Ideal I = vanishing_ideal(X.f.ring(), sample_points(X, 12, 4), 5);
  std::mt19937_64 rng(8);
  for (int d = 3; d <= 5; ++d) {
    const Polynomial g = random_element_of_degree(I, d, rng);
    EXPECT_TRUE(g.is_homogeneous());
    EXPECT_EQ(g.degree(), d);
    EXPECT_TRUE(I.contains(g));
  }
}

TEST(RunExperiment, FamilyMAtA4) {
  ExperimentConfig cfg;
  cfg.family = FamilyTag::m;
  cfg.a = 4;
  cfg.trials = 3;
  cfg.seed = 21;
  const RunReport r = run_experiment(cfg);
  EXPECT_EQ(r.z, 22);
  EXPECT_EQ(r.d_max, 6);
  ASSERT_EQ(r.trials.size(), 3u);
  for (const auto& t : r.trials) {
    EXPECT_TRUE(t.pass) << t.note;
    EXPECT_TRUE(t.generality_ok);
    EXPECT_EQ(t.computed, predicted_diagram(22).diagram);
    ASSERT_TRUE(t.mrc.has_value());
    EXPECT_TRUE(t.mrc->pass);
  }
  EXPECT_TRUE(r.pass);
}

TEST(RunExperiment, FamilyPAtA3OutsideQWindow) {
  ExperimentConfig cfg;
  cfg.family = FamilyTag::p;
  cfg.a = 3;
  cfg.trials = 2;
  const RunReport r = run_experiment(cfg);
  EXPECT_EQ(r.z, 16);
  ASSERT_TRUE(r.theorem_diagram.has_value());
  EXPECT_EQ(r.prediction.source.kind, PredictionSource::Kind::theorem_family);
  for (const auto& t : r.trials) {
    EXPECT_TRUE(t.diagram_match);
    EXPECT_FALSE(t.mrc.has_value());
  }
  EXPECT_TRUE(r.pass);
}

TEST(RunExperiment, ArbitraryZInWindow) {
  ExperimentConfig cfg;
  cfg.z = 30;
  cfg.trials = 1;
  const RunReport r = run_experiment(cfg);
  EXPECT_EQ(r.prediction.r, 4);
  EXPECT_TRUE(r.pass);
  EXPECT_TRUE(r.trials[0].mrc->pass);
}

TEST(RunExperiment, RandomSurface) {
  ExperimentConfig cfg;
  cfg.family = FamilyTag::o;
  cfg.a = 4;
  cfg.surface = SurfaceKind::random;
  cfg.seed = 3;
  const RunReport r = run_experiment(cfg);
  EXPECT_EQ(r.surface.rfind("random(", 0), 0u);
  EXPECT_TRUE(r.pass);
}

TEST(RunExperiment, DeterministicJson) {
  ExperimentConfig cfg;
  cfg.family = FamilyTag::n;
  cfg.a = 4;
  cfg.trials = 2;
  cfg.seed = 99;
  EXPECT_EQ(to_json(run_experiment(cfg), false).dump(), to_json(run_experiment(cfg), false).dump());
}

TEST(RunExperiment, FixedPointSet) {
  const SurfaceSpec X = fermat_cubic(32003);
  ExperimentConfig cfg;
  cfg.points = sample_points(X, 22, 17);
  cfg.trials = 5;
  const RunReport r = run_experiment(cfg);
  ASSERT_EQ(r.trials.size(), 1u);
  EXPECT_EQ(r.trials[0].points, *cfg.points);
  EXPECT_TRUE(r.pass);

  // Points off the surface are rejected.
  cfg.points->back() = ProjectivePoint(X.f.ring().field(), {1, 0, 0, 0});
  EXPECT_THROW(run_experiment(cfg), std::invalid_argument);
}

TEST(RunExperiment, InvalidConfigs) {
  ExperimentConfig cfg;
  EXPECT_THROW(run_experiment(cfg), std::invalid_argument);
  cfg.z = 12;
  EXPECT_THROW(run_experiment(cfg), std::invalid_argument);
  cfg.z = 22;
  cfg.trials = 0;
  EXPECT_THROW(run_experiment(cfg), std::invalid_argument);
  cfg.trials = 1;
  cfg.family = FamilyTag::m;
  cfg.a = 4;
  EXPECT_THROW(run_experiment(cfg), std::invalid_argument);
  cfg.z.reset();
  cfg.a = 2;
  EXPECT_THROW(run_experiment(cfg), std::invalid_argument);
  cfg.a = 3;
  cfg.prime = 3;
  EXPECT_THROW(run_experiment(cfg), std::invalid_argument);
}

TEST(FirstLink, A3TwelveToFifteen) {
  const FirstLinkReport r = run_first_link_experiment(3, 7, 32003, SurfaceKind::fermat);
  EXPECT_EQ(r.n, 12);
  EXPECT_EQ(r.deg_ci, 27);
  EXPECT_EQ(r.deg_residual, 15);
  EXPECT_EQ(r.n + r.deg_residual, r.deg_ci);
  EXPECT_EQ(r.residual_diagram, betti_of_shape(quotient_shape(expected_resolution(FamilyTag::n, 3))));
  EXPECT_EQ(r.start_diagram, betti_of_shape(quotient_shape(expected_resolution(FamilyTag::m, 3))));
  EXPECT_TRUE(r.degree_ok);
  EXPECT_TRUE(r.diagram_match);
  EXPECT_TRUE(r.involution_ok);
  EXPECT_TRUE(r.pass);
  ASSERT_EQ(r.forms.size(), 3u);
  EXPECT_EQ(r.forms[0], fermat_cubic(32003).f);
  EXPECT_EQ(r.forms[1].degree(), 3);
  EXPECT_EQ(r.forms[2].degree(), 3);
}

TEST(FirstLink, A4OnRandomSurface) {
  const FirstLinkReport r = run_first_link_experiment(4, 2, 32003, SurfaceKind::random);
  EXPECT_EQ(r.n, 22);
  EXPECT_EQ(r.deg_ci, 48);
  EXPECT_EQ(r.deg_residual, 26);
  EXPECT_TRUE(r.pass);
}
