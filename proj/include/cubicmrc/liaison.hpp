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

#ifndef CUBICMRC_LIAISON_HPP
#define CUBICMRC_LIAISON_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "ideal_ops.hpp"
#include "mrc.hpp"
#include "resolution.hpp"

namespace cubicmrc {

/// ACM curve classes on the cubic surface: L+(a−1)H, C0+(a−1)H, Γ+(a−1)H, aH.
struct CurveClass {
  enum class Kind { L, C0, Gamma, aH } kind;
  int a;

  friend bool operator==(const CurveClass&, const CurveClass&) = default;

  std::string to_string() const {
    auto plus_h = [](const std::string& base, int k) {
      if (k == 0) return base;
      return base + "+" + (k == 1 ? std::string("H") : std::to_string(k) + "H");
    };
    switch (kind) {
      case Kind::L: return plus_h("L", a - 1);
      case Kind::C0: return plus_h("C0", a - 1);
      case Kind::Gamma: return plus_h("Gamma", a - 1);
      case Kind::aH: return a == 1 ? "H" : std::to_string(a) + "H";
    }
    return "?";
  }
};

struct CurveInvariants {
  std::int64_t degree;
  std::int64_t genus;
  std::int64_t linear_system_dim;  // d + g − 1

  friend bool operator==(const CurveInvariants&, const CurveInvariants&) = default;
};

inline CurveInvariants curve_invariants(const CurveClass& c) {
  if (c.a < 1) throw std::invalid_argument("curve_invariants: a must be positive");
  const std::int64_t a = c.a;
  std::int64_t d = 0, twice_g = 0;
  switch (c.kind) {
    case CurveClass::Kind::L: d = 3 * a - 2; twice_g = 3 * a * a - 7 * a + 4; break;
    case CurveClass::Kind::C0: d = 3 * a - 1; twice_g = 3 * a * a - 5 * a + 2; break;
    case CurveClass::Kind::Gamma: d = 3 * a; twice_g = 3 * a * a - 3 * a; break;
    case CurveClass::Kind::aH: d = 3 * a; twice_g = 3 * a * a - 3 * a + 2; break;
  }
  return {d, twice_g / 2, d + twice_g / 2 - 1};
}

/// Resolution of I_{C,X} as an R-module, ideal presentation.
inline ResolutionShape curve_resolution_on_surface(const CurveClass& c) {
  const int s = c.a - 1;
  switch (c.kind) {
    case CurveClass::Kind::L: return ResolutionShape({{1 + s, 1 + s}, {2 + s, 3 + s}});
    case CurveClass::Kind::C0: return ResolutionShape({{1 + s, 2 + s}, {3 + s, 3 + s}});
    case CurveClass::Kind::Gamma: return ResolutionShape({{2 + s, 2 + s, 2 + s}, {3 + s, 3 + s, 3 + s}});
    case CurveClass::Kind::aH: return ResolutionShape({{c.a}, {c.a + 3}});
  }
  throw std::logic_error("curve_resolution_on_surface: bad kind");
}

/// Resolution of R/I_C: the cubic's R(−3) joins the generators of I_{C,X}.
inline ResolutionShape curve_quotient_resolution(const CurveClass& c) {
  ResolutionShape on_x = curve_resolution_on_surface(c);
  on_x.modules[0].push_back(3);
  return quotient_shape(ResolutionShape(on_x.modules));
}

/// Linking divisor on C: aH_C, or mH_C − K_C.
struct LinkDivisor {
  bool hyperplane_multiple;  // aH_C
  int m;

  std::string to_string() const {
    return hyperplane_multiple ? std::to_string(m) + "H_C" : std::to_string(m) + "H_C-K_C";
  }
};

struct LinkSpec {
  int index;
  int a;
  CurveClass curve;
  LinkDivisor divisor;
  FamilyTag from_family;
  int from_a;
  FamilyTag to_family;
  int to_a;
  std::int64_t n;
  std::int64_t n_prime;
  std::int64_t deg_G;
  int socle_twist;
};

/// Parameters of link `index` at level a: 1: m(a)→n(a) on aH; 2: n(a−1)→o(a)
/// on C0+(a−1)H; 3: o(a)→p(a) on Γ+(a−1)H; 4: p(a)→m(a+1) on C0+aH.
inline LinkSpec link_parameters(int index, int a) {
  if (index < 1 || index > 4) throw std::invalid_argument("link_parameters: index must be 1..4");
  if (a < 2) throw std::invalid_argument("link_parameters: a must be at least 2");
  LinkSpec s{};
  s.index = index;
  s.a = a;
  using K = CurveClass::Kind;
  switch (index) {
    case 1:
      s.curve = {K::aH, a};
      s.divisor = {true, a};
      s.from_family = FamilyTag::m, s.from_a = a, s.to_family = FamilyTag::n, s.to_a = a;
      s.socle_twist = 2 * a + 3;
      break;
    case 2:
      s.curve = {K::C0, a};
      s.divisor = {false, 2 * a - 2};
      s.from_family = FamilyTag::n, s.from_a = a - 1, s.to_family = FamilyTag::o, s.to_a = a;
      s.socle_twist = 2 * a + 2;
      break;
    case 3:
      s.curve = {K::Gamma, a};
      s.divisor = {false, 2 * a - 1};
      s.from_family = FamilyTag::o, s.from_a = a, s.to_family = FamilyTag::p, s.to_a = a;
      s.socle_twist = 2 * a + 3;
      break;
    case 4:
      s.curve = {K::C0, a + 1};
      s.divisor = {false, 2 * a};
      s.from_family = FamilyTag::p, s.from_a = a, s.to_family = FamilyTag::m, s.to_a = a + 1;
      s.socle_twist = 2 * a + 4;
      break;
  }
  const CurveInvariants inv = curve_invariants(s.curve);
  s.n = family_size(s.from_family, s.from_a);
  s.n_prime = family_size(s.to_family, s.to_a);
  s.deg_G = s.divisor.hyperplane_multiple ? s.divisor.m * inv.degree
                                          : s.divisor.m * inv.degree - (2 * inv.genus - 2);
  if (s.n + s.n_prime != s.deg_G) {
    throw std::logic_error("link_parameters: n + n' != deg G for link " + std::to_string(index));
  }
  for (std::int64_t k : {s.n, s.n_prime}) {
    if (k < inv.genus || k > inv.linear_system_dim) {
      throw std::domain_error("link_parameters: size " + std::to_string(k) + " outside [g, d+g-1] = [" +
                              std::to_string(inv.genus) + ", " + std::to_string(inv.linear_system_dim) +
                              "] for link " + std::to_string(index) + " at a=" + std::to_string(a));
    }
  }
  return s;
}

/// Removes R(−twist)^count from two consecutive modules of an ideal
/// presentation: F_lower and F_{lower+1} (1-based).
struct Cancellation {
  int twist;
  int count;
  int lower;
  std::string stage;  // "curve" or "link"

  friend bool operator==(const Cancellation&, const Cancellation&) = default;

  std::string to_string() const {
    return "R(" + std::to_string(-twist) + ")" + (count > 1 ? "^" + std::to_string(count) : "") + " between F" +
           std::to_string(lower) + " and F" + std::to_string(lower + 1) + " (" + stage + ")";
  }
};

inline ResolutionShape cancel(const ResolutionShape& shape, const Cancellation& c) {
  if (c.lower < 1 || c.lower >= static_cast<int>(shape.size())) {
    throw std::invalid_argument("cancel: position out of range");
  }
  std::vector<std::vector<int>> mods = shape.modules;
  for (int k : {c.lower - 1, c.lower}) {
    auto& m = mods[k];
    for (int rep = 0; rep < c.count; ++rep) {
      auto it = std::find(m.begin(), m.end(), c.twist);
      if (it == m.end()) throw std::invalid_argument("cancel: " + c.to_string() + " is not present");
      m.erase(it);
    }
  }
  return ResolutionShape(std::move(mods));
}

/// Mapping cone of I_{C,X} → I_{Z,X}: a resolution of I_{Z,C}.
inline ResolutionShape mapping_cone(const ResolutionShape& points_on_x, const ResolutionShape& curve_on_x) {
  if (points_on_x.size() != 3 || curve_on_x.size() != 2) {
    throw std::invalid_argument("mapping_cone: expected lengths 3 and 2");
  }
  auto join = [](std::vector<int> a, const std::vector<int>& b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
  };
  return ResolutionShape({points_on_x.modules[0], join(points_on_x.modules[1], curve_on_x.modules[0]),
                          join(points_on_x.modules[2], curve_on_x.modules[1])});
}

/// Position k of the result: F_{4−k}^∨(−t) ⊕ G_{3−k}^∨(−t), both inputs in
/// ideal presentation of length 3; the G part is absent at k = 3.
inline ResolutionShape residual_betti_nonminimal(const ResolutionShape& F, const ResolutionShape& G, int t) {
  if (F.size() != 3 || G.size() != 3) throw std::invalid_argument("residual_betti_nonminimal: shapes must have length 3");
  std::vector<std::vector<int>> out(3);
  for (int k = 1; k <= 3; ++k) {
    for (int d : F.modules[3 - k]) out[k - 1].push_back(t - d);
    if (k < 3) {
      for (int d : G.modules[2 - k]) out[k - 1].push_back(t - d);
    }
  }
  return ResolutionShape(std::move(out));
}

struct GorensteinFixture {
  ResolutionShape shape;  // ideal presentation of I_{G,C}
  int socle_twist;
};

/// Resolution of I_{G,C} for G ~ mH_C − K_C: Hom(R/I_C resolution, R(−m−4)).
inline GorensteinFixture gorenstein_on_curve(const CurveClass& c, int m) {
  const int t = m + 4;
  ResolutionShape dual = dualize_twist(curve_quotient_resolution(c), t);
  return {dual, t};
}

/// Named fixtures: "resGor" (G on C0+aH, t = 2a+4), "secondlink_G" (G on
/// C0+(a−1)H, t = 2a+2), "thirdlink_G" (G on Γ+(a−1)H, t = 2a+3).
inline GorensteinFixture gorenstein_fixture(const std::string& name, int a) {
  if (a < 2) throw std::invalid_argument("gorenstein_fixture: a must be at least 2");
  using K = CurveClass::Kind;
  if (name == "resGor") return gorenstein_on_curve({K::C0, a + 1}, 2 * a);
  if (name == "secondlink_G") return gorenstein_on_curve({K::C0, a}, 2 * a - 2);
  if (name == "thirdlink_G") return gorenstein_on_curve({K::Gamma, a}, 2 * a - 1);
  throw std::invalid_argument("gorenstein_fixture: unknown fixture '" + name + "'");
}

/// Hilbert numerator of a module from its ideal-presentation resolution.
inline IntPoly module_numerator(const ResolutionShape& ideal_presentation) {
  IntPoly n;
  for (std::size_t k = 0; k < ideal_presentation.size(); ++k) {
    for (int d : ideal_presentation.modules[k]) n = n + IntPoly::monomial(d, k % 2 == 0 ? 1 : -1);
  }
  return n;
}

/// Number of points of G on C: from N(R/I_C) − N(I_{G,C}).
inline std::int64_t gorenstein_degree(const CurveClass& c, const GorensteinFixture& g) {
  const ResolutionShape q = curve_quotient_resolution(c);
  IntPoly nc;
  for (std::size_t k = 0; k < q.size(); ++k) {
    for (int d : q.modules[k]) nc = nc + IntPoly::monomial(d, k % 2 == 0 ? 1 : -1);
  }
  return degree_of_points(nc - module_numerator(g.shape));
}

struct LinkResult {
  LinkSpec spec;
  ResolutionShape input;       // I_Z (link 1) or I_{Z,X} (links 2–4)
  ResolutionShape on_curve;    // I_{Z,C} after curve-level cancellations (links 2–4)
  ResolutionShape gorenstein;  // I_G (link 1) or I_{G,C}
  ResolutionShape nonminimal;  // residual before link-level cancellations
  std::vector<Cancellation> cancellations;
  ResolutionShape output;      // I_{Z'}
  ResolutionShape expected;
  bool matches;
};

/// Shape calculus of one link; the output is compared with Theorem MRC.
inline LinkResult apply_link_prop(int index, int a) {
  if (a < 3) throw std::invalid_argument("apply_link_prop: a must be at least 3");
  LinkResult res{};
  res.spec = link_parameters(index, a);
  const LinkSpec& s = res.spec;
  const int t = s.socle_twist;
  ResolutionShape F;
  if (index == 1) {
    // CI(3, a, a) in R linked directly with I_Z.
    res.input = expected_resolution(FamilyTag::m, a);
    res.gorenstein = ResolutionShape({{3, a, a}, {a + 3, a + 3, 2 * a}, {2 * a + 3}});
    F = res.input;
    res.cancellations = {{a + 3, 2, 2, "link"}, {2 * a, 1, 2, "link"}};
  } else {
    res.input = surface_resolution(s.from_family, s.from_a);
    ResolutionShape cone = mapping_cone(res.input, curve_resolution_on_surface(s.curve));
    std::vector<Cancellation> curve_level;
    if (index == 3) curve_level = {{a + 2, 3, 2, "curve"}};
    if (index == 4) curve_level = {{a + 1, 1, 1, "curve"}};
    for (const auto& c : curve_level) cone = cancel(cone, c);
    res.on_curve = cone;
    res.gorenstein = gorenstein_on_curve(s.curve, s.divisor.m).shape;
    F = cone;
    res.cancellations = curve_level;
    if (index == 2) res.cancellations.push_back({a + 1, 1, 1, "link"});
    if (index == 4) {
      res.cancellations.push_back({a + 2, 1, 1, "link"});
      res.cancellations.push_back({a + 3, 2, 2, "link"});
    }
  }
  res.nonminimal = residual_betti_nonminimal(F, res.gorenstein, t);
  ResolutionShape out = res.nonminimal;
  for (const auto& c : res.cancellations) {
    if (c.stage == "link") out = cancel(out, c);
  }
  res.output = out;
  res.expected = expected_resolution(s.to_family, s.to_a);
  res.matches = res.output == res.expected;
  return res;
}

/// Rounds m(b) → n(b) → o(b+1) → p(b+1) → m(b+2) for each base b in
/// [a_from, max(a_from, a_to − 2)], so that both parities up to m(a_to) are
/// reached; empty when a_from == a_to.
inline std::vector<LinkResult> link_chain(int a_from, int a_to) {
  if (a_from < 3 || a_to < a_from) throw std::invalid_argument("link_chain: need 3 <= a_from <= a_to");
  std::vector<LinkResult> steps;
  if (a_to == a_from) return steps;
  for (int b = a_from; b <= std::max(a_from, a_to - 2); ++b) {
    steps.push_back(apply_link_prop(1, b));
    steps.push_back(apply_link_prop(2, b + 1));
    steps.push_back(apply_link_prop(3, b + 1));
    steps.push_back(apply_link_prop(4, b + 1));
  }
  return steps;
}

struct CiResidual {
  Ideal residual;
  std::int64_t degree_ci;
  std::int64_t degree_z;
  std::int64_t degree_residual;
};

/// Residual of I_Z in the complete intersection of `forms`: (forms) : I_Z.
inline CiResidual ci_residual(const Ideal& I_Z, const std::vector<Polynomial>& forms) {
  if (forms.size() != 3) throw std::invalid_argument("ci_residual: need exactly three forms");
  IntPoly koszul{1};
  std::int64_t deg_ci = 1;
  for (const auto& g : forms) {
    if (g.is_zero() || !g.is_homogeneous()) throw std::invalid_argument("ci_residual: forms must be nonzero and homogeneous");
    if (!I_Z.contains(g)) throw std::invalid_argument("ci_residual: form " + g.to_string() + " is not in I_Z");
    koszul = koszul * (IntPoly{1} - IntPoly::monomial(g.degree()));
    deg_ci *= g.degree();
  }
  const Ideal ci(I_Z.ring(), forms);
  if (hilbert_series_numerator(ci) != koszul) throw std::invalid_argument("ci_residual: forms are not a regular sequence");
  CiResidual out{colon(ci, I_Z), deg_ci, degree_of_points(I_Z), 0};
  out.degree_residual = degree_of_points(out.residual);
  if (out.degree_residual + out.degree_z != out.degree_ci) {
    throw std::logic_error("ci_residual: degree bookkeeping failed");
  }
  return out;
}

}  // namespace cubicmrc

#endif  // CUBICMRC_LIAISON_HPP
