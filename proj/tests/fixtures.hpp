// Ideals shared by the exactness suite and the acceptance binary.

#ifndef CUBICMRC_TESTS_FIXTURES_HPP
#define CUBICMRC_TESTS_FIXTURES_HPP

#include <random>
#include <string>
#include <utility>
#include <vector>

#include "oracles.hpp"

namespace fixtures {

using namespace cubicmrc;

inline const Ring R4{};

inline Ideal ideal_of(std::initializer_list<const char*> texts) {
  std::vector<Polynomial> gens;
  for (const char* t : texts) gens.push_back(oracle::P(R4, t));
  return Ideal(R4, gens);
}

inline const SurfaceSpec& fermat() {
  static const SurfaceSpec X = fermat_cubic(32003);
  return X;
}

inline Ideal points_on_cubic(std::size_t z, std::uint64_t seed, int d_max) {
  return vanishing_ideal(R4, sample_points(fermat(), z, seed), d_max);
}

/// Test ideals for the exactness/consistency suite.
inline std::vector<std::pair<std::string, Ideal>> test_ideals() {
  std::vector<std::pair<std::string, Ideal>> out;
  out.emplace_back("principal linear", ideal_of({"x0"}));
  out.emplace_back("point", ideal_of({"x1", "x2", "x3"}));
  out.emplace_back("maximal", ideal_of({"x0", "x1", "x2", "x3"}));
  out.emplace_back("cubic", Ideal(R4, {fermat().f}));
  out.emplace_back("two points", ideal_of({"x2", "x3", "x0*x1"}));
  out.emplace_back("hand GB", ideal_of({"x0^2", "x0*x1 + x2^2"}));
  out.emplace_back("twisted cubic", ideal_of({"x0*x3 - x1*x2", "x1^2 - x0*x2", "x2^2 - x1*x3"}));
  out.emplace_back("CI(2,2,2)", ideal_of({"x0^2 + x1*x2", "x1^2 + x2*x3", "x2^2 + x0*x3"}));
  out.emplace_back("CI(3,3,3)", ideal_of({"x0^3 + x1^3 + x2^3 + x3^3", "x0*x1*x2 - x3^3", "x0^2*x3 + x1^2*x2"}));
  out.emplace_back("monomial", ideal_of({"x0^3", "x0*x1^2", "x1^2*x2^2", "x2^4", "x0*x2*x3^2"}));
  out.emplace_back("m-primary monomial", ideal_of({"x0^2", "x1^2", "x2^2", "x3^2", "x0*x1*x2"}));
  out.emplace_back("mixed degrees", ideal_of({"x0^2*x1", "x1^2*x2", "x2^3 - x0*x1*x3"}));
  out.emplace_back("Z_3", points_on_cubic(3, 1, 3));
  out.emplace_back("Z_5", points_on_cubic(5, 2, 3));
  out.emplace_back("Z_8", points_on_cubic(8, 3, 4));
  out.emplace_back("Z_12 = m(3)", points_on_cubic(12, 4, 5));
  out.emplace_back("Z_13 = o(3)", points_on_cubic(13, 5, 5));
  out.emplace_back("Z_15 = n(3)", points_on_cubic(15, 6, 5));
  out.emplace_back("Z_16 = p(3)", points_on_cubic(16, 7, 5));
  out.emplace_back("Z_19", points_on_cubic(19, 8, 6));
  out.emplace_back("Z_22 = m(4)", points_on_cubic(22, 9, 6));
  std::mt19937_64 rng(61);
  out.emplace_back("7 points in P3", vanishing_ideal(R4, oracle::random_points(R4.field(), 7, rng), 4));
  out.emplace_back("11 points in P3", vanishing_ideal(R4, oracle::random_points(R4.field(), 11, rng), 5));
  return out;
}

}  // namespace fixtures

#endif  // CUBICMRC_TESTS_FIXTURES_HPP
