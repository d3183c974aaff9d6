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

#ifndef CUBICMRC_IDEAL_OPS_HPP
#define CUBICMRC_IDEAL_OPS_HPP

#include <array>
#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "groebner.hpp"
#include "int_poly.hpp"
#include "linalg.hpp"
#include "polyring.hpp"

namespace cubicmrc {

/// Homogeneous ideal of R = k[x0..x3] given by generators, with a lazily
/// filled reduced Groebner basis per monomial order. The cache makes const
/// access non-thread-safe; share copies across threads instead.
class Ideal {
 public:
  explicit Ideal(Ring ring = Ring{}) : ring_(ring.with_order(MonomialOrder::grevlex())) {}
  Ideal(Ring ring, std::vector<Polynomial> gens) : Ideal(ring) {
    for (auto& g : gens) {
      if (!(g.ring().with_order(ring_.order()) == ring_)) {
        throw std::invalid_argument("Ideal: generator ring mismatch");
      }
      if (!g.is_zero()) gens_.push_back(g.with_order(ring_.order()));
    }
  }
  Ideal(Ring ring, std::initializer_list<Polynomial> gens)
      : Ideal(ring, std::vector<Polynomial>(gens)) {}

  /// Ideal whose generators are a known reduced Groebner basis.
  static Ideal from_groebner_basis(const Ring& ring, GroebnerBasis gb) {
    Ideal I(ring, gb.generators);
    I.cache_.emplace(gb.order(), std::move(gb));
    return I;
  }
  static Ideal unit(const Ring& ring) { return Ideal(ring, {Polynomial::constant(ring, 1)}); }

  const Ring& ring() const noexcept { return ring_; }
  std::span<const Polynomial> generators() const noexcept { return gens_; }
  bool is_zero() const noexcept { return gens_.empty(); }
  bool is_homogeneous() const {
    return std::all_of(gens_.begin(), gens_.end(),
                       [](const Polynomial& g) { return g.is_homogeneous(); });
  }

  const GroebnerBasis& groebner_basis(MonomialOrder ord = MonomialOrder::grevlex()) const {
    auto it = cache_.find(ord);
    if (it == cache_.end()) it = cache_.emplace(ord, buchberger(ring_, gens_, ord)).first;
    return it->second;
  }
  bool is_unit() const { return groebner_basis().is_unit_ideal(); }
  bool contains(const Polynomial& f) const { return ideal_member(f, groebner_basis()); }

 private:
  Ring ring_;
  std::vector<Polynomial> gens_;
  mutable std::map<MonomialOrder, GroebnerBasis> cache_;
};

/// Equality of ideals via their reduced grevlex Groebner bases.
inline bool same_ideal(const Ideal& I, const Ideal& J) {
  return I.groebner_basis() == J.groebner_basis();
}

/// Point of P^3 normalized so that its first nonzero coordinate is 1.
class ProjectivePoint {
 public:
  using Coordinates = std::array<std::uint32_t, 4>;

  ProjectivePoint(const PrimeField& field, std::array<std::int64_t, 4> values) {
    std::size_t lead = 4;
    for (std::size_t i = 0; i < 4; ++i) {
      c_[i] = field.reduce(values[i]);
      if (lead == 4 && c_[i] != 0) lead = i;
    }
    if (lead == 4) throw std::invalid_argument("ProjectivePoint: all coordinates are zero");
    std::uint32_t inv = field.inv(c_[lead]);
    for (auto& v : c_) v = field.mul(v, inv);
  }

  const Coordinates& coordinates() const noexcept { return c_; }
  std::uint32_t operator[](std::size_t i) const noexcept { return c_[i]; }

  friend auto operator<=>(const ProjectivePoint&, const ProjectivePoint&) = default;

  std::string to_string() const {
    return std::to_string(c_[0]) + "," + std::to_string(c_[1]) + "," + std::to_string(c_[2]) +
           "," + std::to_string(c_[3]);
  }

 private:
  Coordinates c_{};
};

namespace detail {

inline Ring elimination_ring(const Ring& base) {
  return Ring(base.field(), base.nvars() + 1, MonomialOrder::elimination(1));
}

/// Embeds k[x0..x3] into k[t, x0..x3] (slot i moves to slot i+1).
inline Polynomial lift(const Polynomial& f, const Ring& big) {
  std::vector<Term> terms;
  terms.reserve(f.size());
  for (const auto& t : f.terms()) {
    Monomial m;
    for (int i = 0; i < f.ring().nvars(); ++i) m.set(i + 1, t.mono[i]);
    terms.push_back({t.coef, m});
  }
  return Polynomial::from_terms(big, std::move(terms));
}

/// Inverse of `lift` on t-free polynomials.
inline Polynomial drop(const Polynomial& f, const Ring& small) {
  std::vector<Term> terms;
  terms.reserve(f.size());
  for (const auto& t : f.terms()) {
    if (t.mono[0] != 0) throw std::logic_error("drop: polynomial involves the auxiliary variable");
    Monomial m;
    for (int i = 0; i < small.nvars(); ++i) m.set(i, t.mono[i + 1]);
    terms.push_back({t.coef, m});
  }
  return Polynomial::from_terms(small, std::move(terms));
}

/// Exact quotient f / g; throws if g does not divide f.
inline Polynomial divide_exact(const Polynomial& f, const Polynomial& g) {
  const auto& F = f.ring().field();
  Polynomial rest = f;
  std::vector<Term> q;
  const std::uint32_t inv = F.inv(g.leading_coefficient());
  while (!rest.is_zero()) {
    const Term& lt = rest.leading_term();
    if (!g.leading_monomial().divides(lt.mono)) {
      throw std::logic_error("divide_exact: divisor does not divide");
    }
    Term qt{F.mul(lt.coef, inv), lt.mono / g.leading_monomial()};
    rest = rest.add_multiple(F.neg(qt.coef), qt.mono, g);
    q.push_back(qt);
  }
  return Polynomial::from_terms(f.ring(), std::move(q));
}

}  // namespace detail

/// I ∩ J by eliminating t from t·I + (1 − t)·J.
inline Ideal intersect(const Ideal& I, const Ideal& J) {
  if (!(I.ring() == J.ring())) throw std::invalid_argument("intersect: ring mismatch");
  const Ring& ring = I.ring();
  if (I.is_zero() || J.is_zero()) return Ideal(ring);
  if (I.is_unit()) return J;
  if (J.is_unit()) return I;

  const Ring big = detail::elimination_ring(ring);
  const Polynomial t = Polynomial::variable(big, 0);
  const Polynomial one_minus_t = Polynomial::constant(big, 1) - t;
  std::vector<Polynomial> gens;
  for (const auto& f : I.generators()) gens.push_back(t * detail::lift(f, big));
  for (const auto& g : J.generators()) gens.push_back(one_minus_t * detail::lift(g, big));
  GroebnerBasis gb = buchberger(big, gens, big.order());

  GroebnerBasis out{ring, {}};
  for (const auto& g : gb.generators) {
    if (g.leading_monomial()[0] == 0) out.generators.push_back(detail::drop(g, ring));
  }
  return Ideal::from_groebner_basis(ring, std::move(out));
}

/// I : J = ∩_j (I ∩ (g_j)) / g_j over the generators g_j of J.
inline Ideal colon(const Ideal& I, const Ideal& J) {
  if (!(I.ring() == J.ring())) throw std::invalid_argument("colon: ring mismatch");
  if (J.is_zero()) throw std::invalid_argument("colon: quotient by the zero ideal");
  const Ring& ring = I.ring();
  std::optional<Ideal> acc;
  for (const auto& g : J.generators()) {
    if (I.contains(g)) continue;
    Ideal K = intersect(I, Ideal(ring, {g}));
    std::vector<Polynomial> q;
    for (const auto& h : K.groebner_basis().generators) q.push_back(detail::divide_exact(h, g));
    Ideal part(ring, std::move(q));
    acc = acc ? intersect(*acc, part) : part;
  }
  return acc ? *acc : Ideal::unit(ring);
}

/// I : f^∞, iterating I ↦ I : (f) until the reduced basis is stable.
inline Ideal saturate(const Ideal& I, const Polynomial& f, int max_rounds = 10) {
  if (f.is_zero()) throw std::invalid_argument("saturate: zero polynomial");
  Ideal cur = I;
  const Ideal F(I.ring(), {f});
  for (int round = 0; round < max_rounds; ++round) {
    Ideal next = colon(cur, F);
    if (same_ideal(next, cur)) return next;
    cur = std::move(next);
  }
  throw std::runtime_error("saturate: no stabilization within " + std::to_string(max_rounds) +
                           " rounds");
}

namespace detail {

inline std::vector<Monomial> minimal_monomials(std::vector<Monomial> gens) {
  std::sort(gens.begin(), gens.end(),
            [](const Monomial& a, const Monomial& b) { return a.degree() < b.degree(); });
  std::vector<Monomial> out;
  for (const auto& m : gens) {
    bool redundant = std::any_of(out.begin(), out.end(), [&](const Monomial& g) { return g.divides(m); });
    if (!redundant) out.push_back(m);
  }
  return out;
}

/// Numerator of the Hilbert series of R/(gens), by pivoting on a variable
/// power: N(I) = N(I + (p)) + T^{deg p} N(I : p).
inline IntPoly monomial_numerator(std::vector<Monomial> gens, int nvars) {
  gens = minimal_monomials(std::move(gens));
  if (gens.empty()) return IntPoly{1};
  int var = -1;
  std::size_t best = 1;
  for (int v = 0; v < nvars; ++v) {
    std::size_t count = std::count_if(gens.begin(), gens.end(), [&](const Monomial& m) { return m[v] > 0; });
    if (count > best) {
      best = count;
      var = v;
    }
  }
  if (var < 0) {
    // pairwise coprime generators
    IntPoly r{1};
    for (const auto& m : gens) r = r * (IntPoly{1} - IntPoly::monomial(m.degree()));
    return r;
  }
  // x_var^e with e taken from a generator that is not a pure power of x_var:
  // it is a proper divisor of that generator, hence not in the ideal.
  std::vector<int> exps;
  for (const auto& m : gens) {
    if (m[var] > 0 && m[var] != m.degree()) exps.push_back(m[var]);
  }
  std::nth_element(exps.begin(), exps.begin() + exps.size() / 2, exps.end());
  const Monomial pivot = Monomial::variable(var, exps[exps.size() / 2]);

  std::vector<Monomial> sum = gens;
  sum.push_back(pivot);
  std::vector<Monomial> quotient;
  quotient.reserve(gens.size());
  for (const auto& m : gens) quotient.push_back(m / gcd(m, pivot));
  return monomial_numerator(std::move(sum), nvars) +
         IntPoly::monomial(pivot.degree()) * monomial_numerator(std::move(quotient), nvars);
}

}  // namespace detail

/// dim_k (R/I)_d, counted as standard monomials of the grevlex leading ideal.
inline std::int64_t hilbert_function(const Ideal& I, int d) {
  if (d < 0) return 0;
  const auto leads = I.groebner_basis().leading_monomials();
  std::int64_t count = 0;
  for (const auto& m : monomials_of_degree(I.ring().nvars(), d)) {
    if (std::none_of(leads.begin(), leads.end(), [&](const Monomial& g) { return g.divides(m); })) {
      ++count;
    }
  }
  return count;
}

/// N(T) with HS_{R/I}(T) = N(T) / (1 − T)^4, from the leading-term ideal.
inline IntPoly hilbert_series_numerator(const Ideal& I,
                                        MonomialOrder ord = MonomialOrder::grevlex()) {
  return detail::monomial_numerator(I.groebner_basis(ord).leading_monomials(), I.ring().nvars());
}

/// N(T)/(1 − T)^3 at T = 1 for a Hilbert numerator of a one-dimensional cone.
inline std::int64_t degree_of_points(const IntPoly& numerator) {
  IntPoly q = numerator;
  for (int k = 0; k < 3; ++k) q = q.divided_by_one_minus_t();
  std::int64_t deg = q.evaluate(1);
  if (deg < 0) throw std::domain_error("degree_of_points: negative degree");
  return deg;
}

inline std::int64_t degree_of_points(const Ideal& I) {
  return degree_of_points(hilbert_series_numerator(I));
}

/// Ideal of one point: x_j − c_j x_k for the normalizing coordinate k.
inline Ideal point_ideal(const Ring& ring, const ProjectivePoint& pt) {
  const auto& F = ring.field();
  int lead = 0;
  while (pt[lead] == 0) ++lead;
  std::vector<Polynomial> gens;
  for (int j = 0; j < 4; ++j) {
    if (j == lead) continue;
    gens.push_back(Polynomial::from_terms(
        ring, {{1, Monomial::variable(j)}, {F.neg(pt[j]), Monomial::variable(lead)}}));
  }
  return Ideal(ring, std::move(gens));
}

/// Evaluation matrix: one row per point, one column per monomial.
inline FpMatrix evaluation_matrix(const PrimeField& field, std::span<const ProjectivePoint> points,
                                  std::span<const Monomial> monos) {
  FpMatrix M(field, points.size(), monos.size());
  for (std::size_t r = 0; r < points.size(); ++r) {
    for (std::size_t c = 0; c < monos.size(); ++c) {
      std::uint32_t v = 1;
      for (int i = 0; i < 4; ++i) v = field.mul(v, field.pow(points[r][i], monos[c][i]));
      M(r, c) = v;
    }
  }
  return M;
}

/// Minimal generators of I_Z in degrees ≤ d_max, from kernels of the
/// degreewise evaluation matrices.
inline Ideal vanishing_ideal(const Ring& base, std::span<const ProjectivePoint> points, int d_max) {
  const Ring ring = base.with_order(MonomialOrder::grevlex());
  std::set<ProjectivePoint> seen(points.begin(), points.end());
  if (seen.size() != points.size()) throw std::invalid_argument("vanishing_ideal: duplicate points");
  if (points.empty()) return Ideal::unit(ring);
  const auto& F = ring.field();
  const MonomialOrder ord = ring.order();

  std::vector<Polynomial> mingens;
  std::vector<Polynomial> prev_basis;  // basis of (I_Z)_{d-1}
  for (int d = 1; d <= d_max; ++d) {
    const auto monos = monomials_of_degree(4, d, ord);
    std::map<Monomial::Exponents, std::size_t> column;
    for (std::size_t c = 0; c < monos.size(); ++c) column.emplace(monos[c].exponents(), c);

    auto to_vector = [&](const Polynomial& f) {
      std::vector<std::uint32_t> v(monos.size(), 0);
      for (const auto& t : f.terms()) v[column.at(t.mono.exponents())] = t.coef;
      return v;
    };

    EchelonSpace span_lower(F, monos.size());
    for (const auto& g : prev_basis) {
      for (int i = 0; i < 4; ++i) span_lower.insert(to_vector(g * Polynomial::variable(ring, i)));
    }

    std::vector<Polynomial> basis;
    const auto kernel = evaluation_matrix(F, points, monos).nullspace();
    for (auto it = kernel.rbegin(); it != kernel.rend(); ++it) {
      std::vector<Term> terms;
      for (std::size_t c = 0; c < monos.size(); ++c) {
        if ((*it)[c] != 0) terms.push_back({(*it)[c], monos[c]});
      }
      Polynomial f = Polynomial::from_terms(ring, std::move(terms));
      if (span_lower.insert(*it)) mingens.push_back(f);
      basis.push_back(std::move(f));
    }
    prev_basis = std::move(basis);
  }
  return Ideal(ring, std::move(mingens));
}

/// Point-set files: one point per line as four comma-separated integers;
/// `#` starts a comment.
inline std::vector<ProjectivePoint> read_points(std::istream& in, const PrimeField& field) {
  std::vector<ProjectivePoint> out;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::array<std::int64_t, 4> v{};
    std::size_t pos = 0;
    for (int k = 0; k < 4; ++k) {
      std::size_t used = 0;
      try {
        v[k] = std::stoll(line.substr(pos), &used);
      } catch (const std::exception&) {
        throw std::invalid_argument("read_points: bad integer on line " + std::to_string(lineno));
      }
      pos += used;
      while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t')) ++pos;
      if (k < 3) {
        if (pos >= line.size() || line[pos] != ',') {
          throw std::invalid_argument("read_points: expected ',' on line " + std::to_string(lineno));
        }
        ++pos;
      }
    }
    if (line.find_first_not_of(" \t\r", pos) != std::string::npos) {
      throw std::invalid_argument("read_points: trailing text on line " + std::to_string(lineno));
    }
    out.emplace_back(field, v);
  }
  return out;
}

inline void write_points(std::ostream& out, std::span<const ProjectivePoint> points) {
  for (const auto& p : points) out << p.to_string() << '\n';
}

}  // namespace cubicmrc

#endif  // CUBICMRC_IDEAL_OPS_HPP
