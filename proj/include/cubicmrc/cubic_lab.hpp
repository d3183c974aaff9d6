/*
   Copyright 2026 The cubicmrc Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef CUBICMRC_CUBIC_LAB_HPP
#define CUBICMRC_CUBIC_LAB_HPP

#include <chrono>
#include <cstdint>
#include <optional>
#include <random>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "ideal_ops.hpp"
#include "liaison.hpp"
#include "linalg.hpp"
#include "mrc.hpp"
#include "resolution.hpp"

namespace cubicmrc {

/// Deterministic 64-bit mixing (splitmix64 finalizer).
constexpr std::uint64_t splitmix64(std::uint64_t x) noexcept {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// Seed of stream `index` derived from `master`.
constexpr std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) noexcept {
  return splitmix64(splitmix64(master) ^ (index + 1) * 0xd1342543de82ef95ULL);
}

/// Cubic surface: a homogeneous cubic form plus its provenance.
struct SurfaceSpec {
  Polynomial f;
  std::string provenance;  // "fermat" or "random(<seed>)"
  bool smoothness_checked = false;
};

/// Jacobian criterion: (∂f/∂x0, …, ∂f/∂x3, f) defines the empty projective
/// set, i.e. its quotient has Hilbert function eventually zero. f is
/// included so that the criterion also holds when p divides 3.
inline bool is_smooth(const Polynomial& f) {
  if (f.is_zero() || !f.is_homogeneous() || f.degree() != 3 || f.ring().nvars() != 4) {
    throw std::invalid_argument("is_smooth: expected a homogeneous cubic in x0..x3");
  }
  std::vector<Polynomial> gens;
  for (int i = 0; i < 4; ++i) gens.push_back(f.derivative(i));
  gens.push_back(f);
  const Ideal J(f.ring(), gens);
  const auto leads = J.groebner_basis().leading_monomials();
  for (int v = 0; v < 4; ++v) {
    bool pure = std::any_of(leads.begin(), leads.end(),
                            [&](const Monomial& m) { return m.degree() > 0 && m[v] == m.degree(); });
    if (!pure) return false;
  }
  return true;
}

inline SurfaceSpec fermat_cubic(std::uint32_t p) {
  const Ring ring(PrimeField{p});
  Polynomial f(ring);
  for (int i = 0; i < 4; ++i) f += Polynomial::monomial(ring, Monomial::variable(i, 3));
  if (!is_smooth(f)) throw std::domain_error("fermat_cubic: not smooth over F_" + std::to_string(p));
  return {f, "fermat", true};
}

/// Random cubic with uniform coefficients, redrawn until smooth.
inline SurfaceSpec random_cubic(std::uint32_t p, std::uint64_t seed, int max_tries = 10) {
  const Ring ring(PrimeField{p});
  std::mt19937_64 rng(seed);
  for (int attempt = 0; attempt < max_tries; ++attempt) {
    std::vector<Term> terms;
    for (const auto& m : monomials_of_degree(4, 3)) terms.push_back({static_cast<std::uint32_t>(rng() % p), m});
    Polynomial f = Polynomial::from_terms(ring, std::move(terms));
    if (f.degree() == 3 && is_smooth(f)) return {f, "random(" + std::to_string(seed) + ")", true};
  }
  throw std::runtime_error("random_cubic: no smooth cubic found");
}

/// Distinct random points of {f = 0}: draw (x1, x2, x3), collect the roots
/// x0 in F_p of the resulting cubic, keep one at random.
inline std::vector<ProjectivePoint> sample_points(const SurfaceSpec& s, std::size_t count, std::uint64_t seed) {
  if (count < 1) throw std::invalid_argument("sample_points: count must be positive");
  const Ring& ring = s.f.ring();
  const PrimeField& F = ring.field();
  const std::uint32_t p = F.characteristic();
  std::mt19937_64 rng(seed);
  std::set<ProjectivePoint> seen;
  std::vector<ProjectivePoint> out;
  const std::size_t max_draws = 1000 * count;
  std::vector<std::uint32_t> roots;
  for (std::size_t draw = 0; draw < max_draws && out.size() < count; ++draw) {
    std::array<std::uint32_t, 4> x{0, static_cast<std::uint32_t>(rng() % p),
                                   static_cast<std::uint32_t>(rng() % p),
                                   static_cast<std::uint32_t>(rng() % p)};
    // coefficients of f(x0, x1, x2, x3) as a polynomial in x0
    std::array<std::uint32_t, 4> c{0, 0, 0, 0};
    for (const auto& t : s.f.terms()) {
      std::uint32_t v = t.coef;
      for (int i = 1; i < 4; ++i) v = F.mul(v, F.pow(x[i], t.mono[i]));
      c[t.mono[0]] = F.add(c[t.mono[0]], v);
    }
    roots.clear();
    for (std::uint32_t r = 0; r < p; ++r) {
      std::uint32_t v = F.add(F.mul(F.add(F.mul(F.add(F.mul(c[3], r), c[2]), r), c[1]), r), c[0]);
      if (v == 0) roots.push_back(r);
    }
    if (roots.empty()) continue;
    x[0] = roots[rng() % roots.size()];
    if (x[0] == 0 && x[1] == 0 && x[2] == 0 && x[3] == 0) continue;
    ProjectivePoint pt(F, {x[0], x[1], x[2], x[3]});
    if (seen.insert(pt).second) out.push_back(pt);
  }
  if (out.size() < count) {
    throw std::runtime_error("sample_points: only " + std::to_string(out.size()) + " of " + std::to_string(count) +
                             " points found in " + std::to_string(max_draws) + " draws");
  }
  return out;
}

/// HF_{R/I_Z}(d) = min(P_X(d), z) for d = 0..max_degree.
inline bool generality_signature(const Ideal& I_Z, std::int64_t z, int max_degree) {
  for (int d = 0; d <= max_degree; ++d) {
    if (hilbert_function(I_Z, d) != std::min(p_cubic(d), z)) return false;
  }
  return true;
}

/// Minimal Betti diagram of R/I.
inline BettiDiagram minimal_betti(const Ideal& I) { return betti(minimize(free_resolution(I))); }

enum class SurfaceKind { fermat, random };

struct ExperimentConfig {
  std::uint32_t prime = PrimeField::kDefaultPrime;
  std::uint64_t seed = 1;
  std::optional<FamilyTag> family;
  int a = 0;
  std::optional<std::int64_t> z;
  int trials = 1;
  SurfaceKind surface = SurfaceKind::fermat;
  std::optional<std::vector<ProjectivePoint>> points;  // fixed point set; one trial
};

struct TrialReport {
  int index = 0;
  std::vector<std::uint64_t> seeds;  // one per attempt; two after a resample
  std::vector<ProjectivePoint> points;
  BettiDiagram computed;
  bool generality_ok = false;
  bool diagram_match = false;
  bool hilbert_ok = false;
  std::optional<MrcVerdict> mrc;
  bool resampled = false;
  double seconds = 0;
  bool pass = false;
  std::string note;
};

struct RunReport {
  ExperimentConfig config;
  std::string surface;
  std::int64_t z = 0;
  int d_max = 0;
  Prediction prediction;
  std::optional<BettiDiagram> theorem_diagram;  // families with a ≥ 3
  std::vector<TrialReport> trials;
  bool pass = false;
};

namespace detail {

struct Attempt {
  std::vector<ProjectivePoint> points;
  BettiDiagram computed;
  bool generality_ok = false;
  bool diagram_match = false;
  bool hilbert_ok = false;
  std::optional<MrcVerdict> mrc;
  bool ok() const { return generality_ok && diagram_match && hilbert_ok && (!mrc || mrc->pass); }
};

inline Attempt run_attempt(const Ring& ring, std::vector<ProjectivePoint> points, int d_max,
                           const BettiDiagram& expected, bool in_window) {
  Attempt at;
  const std::int64_t z = static_cast<std::int64_t>(points.size());
  const Ideal I = vanishing_ideal(ring, points, d_max);
  at.points = std::move(points);
  at.generality_ok = generality_signature(I, z, d_max + 1);
  at.computed = minimal_betti(I);
  at.hilbert_ok = hilbert_series_from_betti(at.computed) == hilbert_series_numerator(I);
  at.diagram_match = at.computed == expected;
  if (in_window) at.mrc = check_mrc(at.computed, z);
  return at;
}

}  // namespace detail

inline void validate(const ExperimentConfig& cfg) {
  if (cfg.trials < 1) throw std::invalid_argument("config: trials must be at least 1");
  if (cfg.prime == 2 || cfg.prime == 3) throw std::invalid_argument("config: the prime must not be 2 or 3");
  PrimeField{cfg.prime};
  if (cfg.family && cfg.z) throw std::invalid_argument("config: give either a family or z, not both");
  if (cfg.family && cfg.a < 3) throw std::invalid_argument("config: family runs need a >= 3");
  if (!cfg.family && !cfg.z && !cfg.points) throw std::invalid_argument("config: one of family, z or a point file is required");
}

/// Samples points, computes minimal Betti diagrams and compares them with
/// the prediction; a mismatching trial is resampled once with a derived seed.
inline RunReport run_experiment(const ExperimentConfig& cfg) {
  validate(cfg);
  RunReport rep;
  rep.config = cfg;
  const SurfaceSpec surface = cfg.surface == SurfaceKind::fermat ? fermat_cubic(cfg.prime)
                                                                 : random_cubic(cfg.prime, derive_seed(cfg.seed, 0xC0B1C));
  rep.surface = surface.provenance + ": " + surface.f.to_string();
  const Ring ring = surface.f.ring();

  if (cfg.family) {
    rep.z = family_size(*cfg.family, cfg.a);
  } else if (cfg.z) {
    rep.z = *cfg.z;
  } else {
    rep.z = static_cast<std::int64_t>(cfg.points->size());
  }
  if (cfg.points && static_cast<std::int64_t>(cfg.points->size()) != rep.z) {
    throw std::invalid_argument("config: point file has " + std::to_string(cfg.points->size()) + " points, expected " +
                                std::to_string(rep.z));
  }
  const RSelection sel = select_r(rep.z);
  BettiDiagram expected;
  if (cfg.family) {
    rep.theorem_diagram = family_prediction(*cfg.family, cfg.a).diagram;
    rep.d_max = cfg.a + 2;
    if (sel.in_window) {
      rep.prediction = predicted_diagram(rep.z);
      rep.prediction.source = {PredictionSource::Kind::theorem_family, *cfg.family, cfg.a};
      if (!(rep.prediction.diagram == *rep.theorem_diagram)) {
        throw std::logic_error("run_experiment: Q-formula and theorem diagrams disagree");
      }
    } else {
      rep.prediction = family_prediction(*cfg.family, cfg.a);
    }
    expected = *rep.theorem_diagram;
  } else {
    if (!sel.in_window) {
      throw std::invalid_argument("config: z=" + std::to_string(rep.z) + " gives r=" + std::to_string(sel.r) +
                                  " < 4; no prediction available");
    }
    rep.prediction = predicted_diagram(rep.z);
    rep.d_max = sel.r + 2;
    expected = rep.prediction.diagram;
  }
  for (const auto& pt : cfg.points.value_or(std::vector<ProjectivePoint>{})) {
    if (surface.f.evaluate(std::vector<std::uint32_t>(pt.coordinates().begin(), pt.coordinates().end())) != 0) {
      throw std::invalid_argument("config: point " + pt.to_string() + " is not on the surface");
    }
  }

  const int trials = cfg.points ? 1 : cfg.trials;
  rep.pass = true;
  for (int t = 0; t < trials; ++t) {
    TrialReport tr;
    tr.index = t;
    const auto start = std::chrono::steady_clock::now();
    detail::Attempt at;
    if (cfg.points) {
      at = detail::run_attempt(ring, *cfg.points, rep.d_max, expected, sel.in_window);
    } else {
      const std::uint64_t s0 = derive_seed(cfg.seed, static_cast<std::uint64_t>(t));
      tr.seeds.push_back(s0);
      at = detail::run_attempt(ring, sample_points(surface, rep.z, s0), rep.d_max, expected, sel.in_window);
      if (!at.ok()) {
        const std::uint64_t s1 = derive_seed(s0, 1);
        tr.seeds.push_back(s1);
        tr.resampled = true;
        tr.note = "first sample failed (generality=" + std::string(at.generality_ok ? "ok" : "fail") +
                  ", diagram=" + (at.diagram_match ? "match" : "mismatch") + "); resampled";
        at = detail::run_attempt(ring, sample_points(surface, rep.z, s1), rep.d_max, expected, sel.in_window);
      }
    }
    tr.points = std::move(at.points);
    tr.computed = at.computed;
    tr.generality_ok = at.generality_ok;
    tr.diagram_match = at.diagram_match;
    tr.hilbert_ok = at.hilbert_ok;
    tr.mrc = at.mrc;
    tr.pass = at.ok();
    tr.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    rep.pass = rep.pass && tr.pass;
    rep.trials.push_back(std::move(tr));
  }
  return rep;
}

/// Random element of (I)_d: Σ c_g·g over generators with random forms c_g.
inline Polynomial random_element_of_degree(const Ideal& I, int d, std::mt19937_64& rng) {
  const Ring& ring = I.ring();
  const std::uint32_t p = ring.characteristic();
  Polynomial out(ring);
  for (const auto& g : I.generators()) {
    const int e = d - g.degree();
    if (e < 0) continue;
    std::vector<Term> terms;
    for (const auto& m : monomials_of_degree(4, e)) terms.push_back({static_cast<std::uint32_t>(rng() % p), m});
    out += Polynomial::from_terms(ring, std::move(terms)) * g;
  }
  return out;
}

struct FirstLinkReport {
  int a = 0;
  std::uint32_t prime = 0;
  std::uint64_t seed = 0;
  std::int64_t n = 0;
  std::int64_t n_prime_expected = 0;
  std::int64_t deg_ci = 0;
  std::int64_t deg_residual = 0;
  int form_retries = 0;
  std::vector<Polynomial> forms;
  BettiDiagram start_diagram;
  BettiDiagram residual_diagram;
  BettiDiagram expected_residual;
  bool degree_ok = false;
  bool diagram_match = false;
  bool involution_ok = false;
  double seconds = 0;
  bool pass = false;
};

/// Links m(a) sampled points through CI(f, g, h) with g, h random of degree
/// a in I_Z, then checks the residual and the double link.
inline FirstLinkReport run_first_link_experiment(int a, std::uint64_t seed, std::uint32_t p,
                                                 SurfaceKind kind = SurfaceKind::fermat) {
  if (a < 3) throw std::invalid_argument("first link: a must be at least 3");
  const auto start = std::chrono::steady_clock::now();
  FirstLinkReport rep;
  rep.a = a;
  rep.prime = p;
  rep.seed = seed;
  const SurfaceSpec surface = kind == SurfaceKind::fermat ? fermat_cubic(p) : random_cubic(p, derive_seed(seed, 0xC0B1C));
  const Ring ring = surface.f.ring();
  rep.n = family_size(FamilyTag::m, a);
  rep.n_prime_expected = family_size(FamilyTag::n, a);
  const auto points = sample_points(surface, rep.n, derive_seed(seed, 0));
  const Ideal I_Z = vanishing_ideal(ring, points, a + 2);
  rep.start_diagram = minimal_betti(I_Z);

  std::mt19937_64 rng(derive_seed(seed, 1));
  std::optional<CiResidual> res;
  for (int attempt = 0; attempt < 10 && !res; ++attempt) {
    std::vector<Polynomial> forms{surface.f, random_element_of_degree(I_Z, a, rng),
                                  random_element_of_degree(I_Z, a, rng)};
    try {
      res = ci_residual(I_Z, forms);
      rep.forms = forms;
    } catch (const std::invalid_argument&) {
      ++rep.form_retries;
    }
  }
  if (!res) throw std::runtime_error("first link: no regular sequence found in 10 attempts");
  rep.deg_ci = res->degree_ci;
  rep.deg_residual = res->degree_residual;
  rep.degree_ok = rep.deg_residual == rep.n_prime_expected && rep.deg_ci == rep.n + rep.deg_residual;
  rep.residual_diagram = minimal_betti(res->residual);
  rep.expected_residual = betti_of_shape(quotient_shape(expected_resolution(FamilyTag::n, a)));
  rep.diagram_match = rep.residual_diagram == rep.expected_residual;
  rep.involution_ok = same_ideal(ci_residual(res->residual, rep.forms).residual, I_Z);
  rep.pass = rep.degree_ok && rep.diagram_match && rep.involution_ok;
  rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

}  // namespace cubicmrc

#endif  // CUBICMRC_CUBIC_LAB_HPP
