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

#ifndef CUBICMRC_GROEBNER_HPP
#define CUBICMRC_GROEBNER_HPP

#include <algorithm>
#include <span>
#include <tuple>
#include <vector>

#include "polyring.hpp"

namespace cubicmrc {

/// Reduced Groebner basis: monic, sorted descending by leading monomial.
struct GroebnerBasis {
  Ring ring;
  std::vector<Polynomial> generators;

  MonomialOrder order() const noexcept { return ring.order(); }
  bool is_unit_ideal() const {
    return generators.size() == 1 && generators.front().is_constant() &&
           !generators.front().is_zero();
  }
  std::vector<Monomial> leading_monomials() const {
    std::vector<Monomial> out;
    out.reserve(generators.size());
    for (const auto& g : generators) out.push_back(g.leading_monomial());
    return out;
  }

  friend bool operator==(const GroebnerBasis&, const GroebnerBasis&) = default;
};

namespace detail {

inline std::vector<Polynomial> in_order(std::span<const Polynomial> polys, MonomialOrder ord) {
  std::vector<Polynomial> out;
  out.reserve(polys.size());
  for (const auto& p : polys) {
    if (!p.is_zero()) out.push_back(p.with_order(ord));
  }
  return out;
}

}  // namespace detail

/// Full reduction of `f` modulo `basis`. `pick` chooses among the basis
/// indices whose leading monomial divides the current term; it lets tests
/// vary the reduction path.
template <class Pick>
Polynomial normal_form_with(const Polynomial& f, std::span<const Polynomial> basis,
                            MonomialOrder ord, Pick&& pick) {
  Polynomial p = f.with_order(ord);
  auto reducers = detail::in_order(basis, ord);
  for (auto& g : reducers) g = g.monic();
  const Ring ring = p.ring();
  std::vector<Term> remainder;
  std::vector<std::size_t> candidates;
  while (!p.is_zero()) {
    const Term lt = p.leading_term();
    candidates.clear();
    for (std::size_t i = 0; i < reducers.size(); ++i) {
      if (reducers[i].leading_monomial().divides(lt.mono)) candidates.push_back(i);
    }
    if (candidates.empty()) {
      remainder.push_back(lt);
      p = p.add_multiple(ring.field().neg(lt.coef), Monomial{}, Polynomial::monomial(ring, lt.mono));
      continue;
    }
    const auto& g = reducers[candidates[pick(candidates)]];
    p = p.add_multiple(ring.field().neg(lt.coef), lt.mono / g.leading_monomial(), g);
  }
  return Polynomial::from_terms(ring, std::move(remainder));
}

/// Normal form: no monomial of the result is divisible by a leading
/// monomial of `basis`.
inline Polynomial normal_form(const Polynomial& f, std::span<const Polynomial> basis,
                              MonomialOrder ord) {
  return normal_form_with(f, basis, ord, [](const std::vector<std::size_t>&) { return 0; });
}

inline Polynomial normal_form(const Polynomial& f, const GroebnerBasis& gb) {
  return normal_form(f, gb.generators, gb.order());
}

namespace detail {

inline Polynomial s_polynomial(const Polynomial& f, const Polynomial& g) {
  Monomial l = lcm(f.leading_monomial(), g.leading_monomial());
  const auto& F = f.ring().field();
  Polynomial a = f.times_term(F.inv(f.leading_coefficient()), l / f.leading_monomial());
  return a.add_multiple(F.neg(F.inv(g.leading_coefficient())), l / g.leading_monomial(), g);
}

struct Pair {
  std::size_t i;
  std::size_t j;
  Monomial lcm;
};

/// Interreduces a set whose leading monomials are pairwise non-dividing.
inline std::vector<Polynomial> interreduce(std::vector<Polynomial> basis, MonomialOrder ord) {
  std::vector<Polynomial> out;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    std::vector<Polynomial> others;
    for (std::size_t j = 0; j < basis.size(); ++j) {
      if (j != i) others.push_back(basis[j]);
    }
    Polynomial lead = Polynomial::monomial(basis[i].ring(), basis[i].leading_monomial(),
                                           basis[i].leading_coefficient());
    Polynomial tail = basis[i] - lead;
    out.push_back((lead + normal_form(tail, others, ord)).monic());
  }
  return out;
}

}  // namespace detail

/// Reduced Groebner basis of the ideal generated by `gens`. Pairs are
/// processed by smallest lcm degree first, with the Gebauer-Moeller
/// installation of the coprime and chain criteria.
inline GroebnerBasis buchberger(const Ring& ambient, std::span<const Polynomial> gens,
                                MonomialOrder ord) {
  const Ring ring = ambient.with_order(ord);
  for (const auto& g : gens) {
    if (!(g.ring().with_order(ord) == ring)) throw std::invalid_argument("buchberger: ring mismatch");
  }

  std::vector<Polynomial> polys;
  std::vector<bool> active;
  std::vector<detail::Pair> pairs;

  auto lm = [&](std::size_t k) -> const Monomial& { return polys[k].leading_monomial(); };

  auto install = [&](Polynomial h) {
    const std::size_t hi = polys.size();
    polys.push_back(std::move(h));
    active.push_back(true);
    const Monomial& lh = lm(hi);

    std::vector<detail::Pair> cands;
    for (std::size_t g = 0; g < hi; ++g) {
      if (active[g]) cands.push_back({g, hi, lcm(lm(g), lh)});
    }
    // chain criterion among the new pairs
    std::vector<detail::Pair> kept;
    for (std::size_t a = 0; a < cands.size(); ++a) {
      const auto& p = cands[a];
      bool keep = coprime(lm(p.i), lh);
      if (!keep) {
        keep = true;
        for (std::size_t b = a + 1; b < cands.size() && keep; ++b) {
          if (cands[b].lcm.divides(p.lcm)) keep = false;
        }
        for (std::size_t b = 0; b < kept.size() && keep; ++b) {
          if (kept[b].lcm.divides(p.lcm)) keep = false;
        }
      }
      if (keep) kept.push_back(p);
    }
    // prune old pairs made redundant by h
    std::vector<detail::Pair> next;
    for (const auto& p : pairs) {
      bool drop = lh.divides(p.lcm) && !(lcm(lm(p.i), lh) == p.lcm) &&
                  !(lcm(lm(p.j), lh) == p.lcm);
      if (!drop) next.push_back(p);
    }
    for (const auto& p : kept) {
      if (!coprime(lm(p.i), lh)) next.push_back(p);
    }
    pairs = std::move(next);
    for (std::size_t g = 0; g < hi; ++g) {
      if (active[g] && lh.divides(lm(g))) active[g] = false;
    }
  };

  auto current_basis = [&] {
    std::vector<Polynomial> out;
    for (std::size_t k = 0; k < polys.size(); ++k) {
      if (active[k]) out.push_back(polys[k]);
    }
    return out;
  };

  for (auto& g : detail::in_order(gens, ord)) {
    Polynomial h = normal_form(g, current_basis(), ord);
    if (h.is_zero()) continue;
    if (h.is_constant()) return GroebnerBasis{ring, {Polynomial::constant(ring, 1)}};
    install(h.monic());
  }

  while (!pairs.empty()) {
    auto best = std::min_element(pairs.begin(), pairs.end(), [&](const auto& a, const auto& b) {
      if (a.lcm.degree() != b.lcm.degree()) return a.lcm.degree() < b.lcm.degree();
      auto c = ring.compare(a.lcm, b.lcm);
      if (c != 0) return c < 0;
      return std::tie(a.j, a.i) < std::tie(b.j, b.i);
    });
    detail::Pair p = *best;
    pairs.erase(best);
    Polynomial h = normal_form(detail::s_polynomial(polys[p.i], polys[p.j]), current_basis(), ord);
    if (h.is_zero()) continue;
    if (h.is_constant()) return GroebnerBasis{ring, {Polynomial::constant(ring, 1)}};
    install(h.monic());
  }

  auto reduced = detail::interreduce(current_basis(), ord);
  std::sort(reduced.begin(), reduced.end(), [&](const Polynomial& a, const Polynomial& b) {
    return ring.compare(a.leading_monomial(), b.leading_monomial()) > 0;
  });
  return GroebnerBasis{ring, std::move(reduced)};
}

/// Ring taken from the first generator; use the overload with an explicit
/// ring for a possibly empty generator list.
inline GroebnerBasis buchberger(std::span<const Polynomial> gens, MonomialOrder ord = MonomialOrder::grevlex()) {
  if (gens.empty()) return GroebnerBasis{Ring{}.with_order(ord), {}};
  return buchberger(gens.front().ring(), gens, ord);
}

inline GroebnerBasis buchberger(std::initializer_list<Polynomial> gens,
                                MonomialOrder ord = MonomialOrder::grevlex()) {
  return buchberger(std::span<const Polynomial>(gens.begin(), gens.size()), ord);
}

inline bool ideal_member(const Polynomial& f, const GroebnerBasis& gb) {
  if (!(f.ring().with_order(gb.order()) == gb.ring)) {
    throw std::invalid_argument("ideal_member: ring mismatch");
  }
  return normal_form(f, gb).is_zero();
}

}  // namespace cubicmrc

#endif  // CUBICMRC_GROEBNER_HPP
