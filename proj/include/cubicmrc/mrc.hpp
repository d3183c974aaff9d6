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

#ifndef CUBICMRC_MRC_HPP
#define CUBICMRC_MRC_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "resolution.hpp"

namespace cubicmrc {

/// Hilbert polynomial of a cubic surface: 3t(t+1)/2 + 1.
constexpr std::int64_t p_cubic(std::int64_t t) noexcept { return 3 * t * (t + 1) / 2 + 1; }

/// Binomial coefficient; zero outside 0 ≤ k ≤ n.
constexpr std::int64_t binom(std::int64_t n, std::int64_t k) noexcept {
  if (n < 0 || k < 0 || k > n) return 0;
  std::int64_t r = 1;
  for (std::int64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

/// Smallest twist at which the Q-formula prediction applies (reg X + 1).
inline constexpr int kMinPredictionR = 4;

struct RSelection {
  int r;
  bool in_window;  // r ≥ 4
};

/// The unique r with P_X(r−1) ≤ z < P_X(r).
inline RSelection select_r(std::int64_t z) {
  if (z < 1) throw std::invalid_argument("select_r: point count must be positive");
  int r = 1;
  while (!(p_cubic(r - 1) <= z && z < p_cubic(r))) ++r;
  return {r, r >= kMinPredictionR};
}

/// Q_{i,r}(z) = C(2,i)ΔP(r) − C(1,i−1)Δ²P(r+1) − C(3,i)(z − P(r−1)), with
/// backward differences.
inline std::int64_t q_value(int i, int r, std::int64_t z) {
  if (r < kMinPredictionR) throw std::invalid_argument("q_value: r must be at least 4");
  if (i < 0 || i > 3) throw std::invalid_argument("q_value: i must be in 0..3");
  auto dP = [](std::int64_t t) { return p_cubic(t) - p_cubic(t - 1); };
  auto d2P = [&](std::int64_t t) { return dP(t) - dP(t - 1); };
  return binom(2, i) * dP(r) - binom(1, i - 1) * d2P(r + 1) - binom(3, i) * (z - p_cubic(r - 1));
}

enum class FamilyTag { m, n, o, p };

inline char family_char(FamilyTag tag) {
  switch (tag) {
    case FamilyTag::m: return 'm';
    case FamilyTag::n: return 'n';
    case FamilyTag::o: return 'o';
    case FamilyTag::p: return 'p';
  }
  return '?';
}

inline FamilyTag parse_family(const std::string& s) {
  if (s == "m") return FamilyTag::m;
  if (s == "n") return FamilyTag::n;
  if (s == "o") return FamilyTag::o;
  if (s == "p") return FamilyTag::p;
  throw std::invalid_argument("unknown family '" + s + "' (expected m, n, o or p)");
}

/// m(a) = 3a(a−1)/2 + a, n(a) = … + 2a, o(a) = … + a + 1, p(a) = … + 2a + 1.
inline std::int64_t family_size(FamilyTag tag, std::int64_t a) {
  if (a < 1) throw std::invalid_argument("family_size: a must be positive");
  const std::int64_t base = 3 * a * (a - 1) / 2;
  switch (tag) {
    case FamilyTag::m: return base + a;
    case FamilyTag::n: return base + 2 * a;
    case FamilyTag::o: return base + a + 1;
    case FamilyTag::p: return base + 2 * a + 1;
  }
  return 0;
}

namespace detail {

inline std::vector<int> repeat(int twist, int count) { return std::vector<int>(count, twist); }

inline std::vector<int> concat(std::vector<int> a, const std::vector<int>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

}  // namespace detail

/// Resolution of I_{Z,X} (the ideal of the points in the coordinate ring of
/// the surface) as R-modules, ideal presentation; valid for a ≥ 2.
inline ResolutionShape surface_resolution(FamilyTag tag, int a) {
  if (a < 2) throw std::invalid_argument("surface_resolution: a must be at least 2");
  using detail::concat;
  using detail::repeat;
  switch (tag) {
    case FamilyTag::m:
      return ResolutionShape({repeat(a, 2 * a + 1), repeat(a + 1, 3 * a), repeat(a + 3, a - 1)});
    case FamilyTag::n:
      return ResolutionShape({repeat(a, a + 1), repeat(a + 2, 3 * a), repeat(a + 3, 2 * a - 1)});
    case FamilyTag::o:
      return ResolutionShape(
          {repeat(a, 2 * a), concat(repeat(a + 1, 3 * a - 3), repeat(a + 2, 3)), repeat(a + 3, a)});
    case FamilyTag::p:
      return ResolutionShape(
          {concat(repeat(a, a), repeat(a + 1, 3)), repeat(a + 2, 3 * a + 3), repeat(a + 3, 2 * a)});
  }
  throw std::logic_error("surface_resolution: bad tag");
}

/// Minimal resolution of I_Z for the family, ideal presentation (the
/// cubic contributes the extra R(−3) generator); valid for a ≥ 3.
inline ResolutionShape expected_resolution(FamilyTag tag, int a) {
  if (a < 3) throw std::invalid_argument("expected_resolution: a must be at least 3");
  ResolutionShape s = surface_resolution(tag, a);
  s.modules[0].push_back(3);
  return ResolutionShape(s.modules);
}

struct PredictionSource {
  enum class Kind { theorem_family, q_formula } kind = Kind::q_formula;
  FamilyTag family = FamilyTag::m;
  int a = 0;

  friend bool operator==(const PredictionSource&, const PredictionSource&) = default;
};

struct Prediction {
  std::int64_t z;
  int r;
  BettiDiagram diagram;
  PredictionSource source;
};

/// Betti diagram predicted by the Q-formula and the MRC.
inline Prediction predicted_diagram(std::int64_t z) {
  const RSelection sel = select_r(z);
  if (!sel.in_window) {
    throw std::invalid_argument("predicted_diagram: z=" + std::to_string(z) + " gives r=" +
                                std::to_string(sel.r) + " < 4");
  }
  const int r = sel.r;
  BettiDiagram B;
  B.set(0, 0, 1);
  B.set(1, 2, 1);
  for (int i = 0; i <= 3; ++i) {
    const std::int64_t q = q_value(i, r, z);
    if (q > 0) B.add(i + 1, r - 1, static_cast<int>(q));
    if (q < 0) B.add(i, r, static_cast<int>(-q));
  }
  return {z, r, B, {}};
}

/// Diagram of Theorem MRC's resolution for the family.
inline Prediction family_prediction(FamilyTag tag, int a) {
  const std::int64_t z = family_size(tag, a);
  return {z, select_r(z).r, betti_of_shape(quotient_shape(expected_resolution(tag, a))),
          {PredictionSource::Kind::theorem_family, tag, a}};
}

struct MrcVerdict {
  bool pass = true;
  std::optional<int> witness;  // offending i
  std::string reason;
};

/// MRC check: no ghost pair b_{i+1,r−1}·b_{i,r} ≠ 0, and every difference
/// equals Q_{i,r}(z).
inline MrcVerdict check_mrc(const BettiDiagram& B, std::int64_t z) {
  const RSelection sel = select_r(z);
  if (!sel.in_window) throw std::invalid_argument("check_mrc: r < 4 is outside the prediction window");
  const int r = sel.r;
  for (int i = 0; i <= 3; ++i) {
    const int upper = B(i + 1, r - 1);
    const int lower = B(i, r);
    if (upper > 0 && lower > 0) {
      return {false, i,
              "ghost pair b_{" + std::to_string(i + 1) + "," + std::to_string(r - 1) + "}=" +
                  std::to_string(upper) + ", b_{" + std::to_string(i) + "," + std::to_string(r) +
                  "}=" + std::to_string(lower)};
    }
    const std::int64_t q = q_value(i, r, z);
    if (upper - lower != q) {
      return {false, i,
              "difference " + std::to_string(upper - lower) + " != Q_{" + std::to_string(i) + "," +
                  std::to_string(r) + "}=" + std::to_string(q)};
    }
  }
  return {true, std::nullopt, ""};
}

}  // namespace cubicmrc

#endif  // CUBICMRC_MRC_HPP
