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

#ifndef CUBICMRC_RESOLUTION_HPP
#define CUBICMRC_RESOLUTION_HPP

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "groebner.hpp"
#include "ideal_ops.hpp"
#include "int_poly.hpp"
#include "polyring.hpp"

namespace cubicmrc {

/// ⊕_d R(−d), stored as the list of twists d in basis order.
struct GradedFreeModule {
  std::vector<int> twists;

  std::size_t rank() const noexcept { return twists.size(); }
  friend bool operator==(const GradedFreeModule&, const GradedFreeModule&) = default;
};

/// Homogeneous map source → target; entry (i, j) has degree
/// source.twists[j] − target.twists[i] or is zero.
class GradedMatrix {
 public:
  GradedMatrix(Ring ring, GradedFreeModule source, GradedFreeModule target)
      : ring_(ring),
        source_(std::move(source)),
        target_(std::move(target)),
        entries_(source_.rank() * target_.rank(), Polynomial(ring)) {}

  const Ring& ring() const noexcept { return ring_; }
  const GradedFreeModule& source() const noexcept { return source_; }
  const GradedFreeModule& target() const noexcept { return target_; }
  std::size_t rows() const noexcept { return target_.rank(); }
  std::size_t cols() const noexcept { return source_.rank(); }

  const Polynomial& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols() + c]; }
  Polynomial& operator()(std::size_t r, std::size_t c) { return entries_[r * cols() + c]; }

  bool is_zero() const {
    return std::all_of(entries_.begin(), entries_.end(), [](const Polynomial& p) { return p.is_zero(); });
  }
  /// Every entry is zero or homogeneous of the degree dictated by the twists.
  bool is_homogeneous() const {
    for (std::size_t r = 0; r < rows(); ++r) {
      for (std::size_t c = 0; c < cols(); ++c) {
        const auto& e = (*this)(r, c);
        if (e.is_zero()) continue;
        if (!e.is_homogeneous() || e.degree() != source_.twists[c] - target_.twists[r]) return false;
      }
    }
    return true;
  }
  /// Position of a nonzero constant entry, if any.
  std::optional<std::pair<std::size_t, std::size_t>> find_unit() const {
    for (std::size_t r = 0; r < rows(); ++r) {
      for (std::size_t c = 0; c < cols(); ++c) {
        const auto& e = (*this)(r, c);
        if (!e.is_zero() && e.is_constant()) return std::pair{r, c};
      }
    }
    return std::nullopt;
  }

  GradedMatrix transposed(const GradedFreeModule& new_source, const GradedFreeModule& new_target) const {
    GradedMatrix t(ring_, new_source, new_target);
    for (std::size_t r = 0; r < rows(); ++r) {
      for (std::size_t c = 0; c < cols(); ++c) t(c, r) = (*this)(r, c);
    }
    return t;
  }

  /// Composition this ∘ rhs; requires rhs.target() == this->source().
  GradedMatrix operator*(const GradedMatrix& rhs) const {
    if (!(rhs.target_ == source_)) throw std::invalid_argument("GradedMatrix: incompatible composition");
    GradedMatrix out(ring_, rhs.source_, target_);
    for (std::size_t r = 0; r < rows(); ++r) {
      for (std::size_t c = 0; c < rhs.cols(); ++c) {
        Polynomial acc(ring_);
        for (std::size_t k = 0; k < cols(); ++k) {
          const auto& a = (*this)(r, k);
          const auto& b = rhs(k, c);
          if (!a.is_zero() && !b.is_zero()) acc += a * b;
        }
        out(r, c) = std::move(acc);
      }
    }
    return out;
  }

  /// Submatrix without row `r` and column `c` (either may be npos).
  GradedMatrix without(std::size_t r, std::size_t c) const {
    auto drop = [](const GradedFreeModule& m, std::size_t k) {
      GradedFreeModule out;
      for (std::size_t i = 0; i < m.rank(); ++i) {
        if (i != k) out.twists.push_back(m.twists[i]);
      }
      return out;
    };
    GradedMatrix out(ring_, drop(source_, c), drop(target_, r));
    std::size_t rr = 0;
    for (std::size_t i = 0; i < rows(); ++i) {
      if (i == r) continue;
      std::size_t cc = 0;
      for (std::size_t j = 0; j < cols(); ++j) {
        if (j == c) continue;
        out(rr, cc++) = (*this)(i, j);
      }
      ++rr;
    }
    return out;
  }

  /// Reorders rows and columns: new row k is old row row_perm[k].
  GradedMatrix permuted(const std::vector<std::size_t>& row_perm,
                        const std::vector<std::size_t>& col_perm) const {
    GradedFreeModule src, tgt;
    for (auto c : col_perm) src.twists.push_back(source_.twists[c]);
    for (auto r : row_perm) tgt.twists.push_back(target_.twists[r]);
    GradedMatrix out(ring_, src, tgt);
    for (std::size_t i = 0; i < row_perm.size(); ++i) {
      for (std::size_t j = 0; j < col_perm.size(); ++j) out(i, j) = (*this)(row_perm[i], col_perm[j]);
    }
    return out;
  }

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

 private:
  Ring ring_;
  GradedFreeModule source_;
  GradedFreeModule target_;
  std::vector<Polynomial> entries_;
};

/// Complex 0 ← F_0 ← F_1 ← … ← F_ℓ ← 0 with maps[k−1] = d_k : F_k → F_{k−1}.
/// Resolutions of R/I have F_0 = R; the ideal presentation drops F_0.
struct FreeResolution {
  Ring ring;
  std::vector<GradedFreeModule> modules;
  std::vector<GradedMatrix> maps;

  int length() const noexcept { return static_cast<int>(modules.size()) - 1; }

  /// d_k ∘ d_{k+1} = 0 for all k.
  bool is_complex() const {
    for (std::size_t k = 0; k + 1 < maps.size(); ++k) {
      if (!(maps[k] * maps[k + 1]).is_zero()) return false;
    }
    return true;
  }
  bool is_minimal() const {
    return std::none_of(maps.begin(), maps.end(), [](const GradedMatrix& m) { return m.find_unit().has_value(); });
  }
};

namespace detail {

struct VecTerm {
  std::uint32_t coef;
  Monomial mono;
  std::size_t comp;
};

/// Schreyer order on ⊕ R e_i: m e_i > n e_j iff m·S_i > n·S_j, ties broken
/// towards the smaller index. Returns the leading term of `v`.
inline VecTerm schreyer_lead(const Ring& ring, const std::vector<Polynomial>& v,
                             const std::vector<Monomial>& schreyer) {
  std::optional<VecTerm> best;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i].is_zero()) continue;
    const Term& lt = v[i].leading_term();
    if (!best || ring.compare(lt.mono * schreyer[i], best->mono * schreyer[best->comp]) > 0) {
      best = VecTerm{lt.coef, lt.mono, i};
    }
  }
  if (!best) throw std::logic_error("schreyer_lead: zero vector");
  return *best;
}

inline bool lex_greater(const Monomial& a, const Monomial& b) {
  return compare(a, b, MonomialOrder::lex(), kMaxVars) > 0;
}

/// Syzygies of `elems` (vectors in a module ordered by `schreyer`), which
/// must form a Groebner basis of their span. `elems` are reordered by lead
/// component, then lex-descending lead monomial, which bounds the length of
/// the iterated construction by the number of variables. Returns the
/// Schreyer monomials of the reordered elements and the syzygy vectors.
inline std::pair<std::vector<Monomial>, std::vector<std::vector<Polynomial>>> schreyer_step(
    const Ring& ring, std::vector<std::vector<Polynomial>>& elems, const std::vector<Monomial>& schreyer,
    bool reorder) {
  const auto& F = ring.field();
  std::vector<VecTerm> lead;
  for (const auto& e : elems) lead.push_back(schreyer_lead(ring, e, schreyer));
  if (reorder) {
    std::vector<std::size_t> perm(elems.size());
    std::iota(perm.begin(), perm.end(), 0);
    std::stable_sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) {
      if (lead[a].comp != lead[b].comp) return lead[a].comp < lead[b].comp;
      return lex_greater(lead[a].mono, lead[b].mono);
    });
    std::vector<std::vector<Polynomial>> e2;
    std::vector<VecTerm> l2;
    for (auto p : perm) {
      e2.push_back(std::move(elems[p]));
      l2.push_back(lead[p]);
    }
    elems = std::move(e2);
    lead = std::move(l2);
  }
  const std::size_t n = elems.size();
  std::vector<Monomial> next_schreyer;
  for (const auto& l : lead) next_schreyer.push_back(l.mono * schreyer[l.comp]);

  std::map<std::size_t, std::vector<std::size_t>> by_comp;
  for (std::size_t k = 0; k < n; ++k) by_comp[lead[k].comp].push_back(k);

  std::vector<std::vector<Polynomial>> syz;
  for (std::size_t k = 0; k < n; ++k) {
    // minimal generators of (lcm(m_k, m_l) / m_k : l > k, same component)
    std::vector<std::pair<Monomial, std::size_t>> cands;
    for (std::size_t l : by_comp[lead[k].comp]) {
      if (l <= k) continue;
      cands.push_back({lead[l].mono / gcd(lead[k].mono, lead[l].mono), l});
    }
    std::stable_sort(cands.begin(), cands.end(),
                     [](const auto& a, const auto& b) { return a.first.degree() < b.first.degree(); });
    std::vector<std::pair<Monomial, std::size_t>> kept;
    for (const auto& c : cands) {
      if (std::none_of(kept.begin(), kept.end(), [&](const auto& g) { return g.first.divides(c.first); })) {
        kept.push_back(c);
      }
    }
    for (const auto& [qk, l] : kept) {
      const Monomial L = lcm(lead[k].mono, lead[l].mono);
      std::vector<Polynomial> sigma(n, Polynomial(ring));
      const std::uint32_t ck = F.inv(lead[k].coef);
      const std::uint32_t cl = F.neg(F.inv(lead[l].coef));
      sigma[k] = Polynomial::monomial(ring, qk, ck);
      sigma[l] = Polynomial::monomial(ring, L / lead[l].mono, cl);
      std::vector<Polynomial> s(elems[k].size(), Polynomial(ring));
      for (std::size_t i = 0; i < s.size(); ++i) {
        s[i] = elems[k][i].times_term(ck, qk).add_multiple(cl, L / lead[l].mono, elems[l][i]);
      }
      // top-reduce to zero, recording quotients
      while (std::any_of(s.begin(), s.end(), [](const Polynomial& p) { return !p.is_zero(); })) {
        VecTerm lt = schreyer_lead(ring, s, schreyer);
        std::optional<std::size_t> red;
        for (std::size_t j : by_comp[lt.comp]) {
          if (lead[j].mono.divides(lt.mono)) {
            red = j;
            break;
          }
        }
        if (!red) throw std::logic_error("schreyer_step: input is not a Groebner basis");
        const std::uint32_t c = F.neg(F.div(lt.coef, lead[*red].coef));
        const Monomial q = lt.mono / lead[*red].mono;
        for (std::size_t i = 0; i < s.size(); ++i) {
          if (!elems[*red][i].is_zero()) s[i] = s[i].add_multiple(c, q, elems[*red][i]);
        }
        sigma[*red] = sigma[*red].add_multiple(c, q, Polynomial::constant(ring, 1));
      }
      syz.push_back(std::move(sigma));
    }
  }
  return {std::move(next_schreyer), std::move(syz)};
}

inline GradedMatrix matrix_from_columns(const Ring& ring, const std::vector<std::vector<Polynomial>>& cols,
                                        const GradedFreeModule& target, const GradedFreeModule& source) {
  GradedMatrix M(ring, source, target);
  for (std::size_t c = 0; c < cols.size(); ++c) {
    for (std::size_t r = 0; r < target.rank(); ++r) M(r, c) = cols[c][r];
  }
  return M;
}

inline GradedFreeModule module_of(const std::vector<Monomial>& schreyer) {
  GradedFreeModule m;
  for (const auto& s : schreyer) m.twists.push_back(s.degree());
  return m;
}

/// Sorts the basis of each module by twist (stable), permuting the maps.
inline void sort_by_twist(FreeResolution& res) {
  std::vector<std::vector<std::size_t>> perms;
  for (const auto& mod : res.modules) {
    std::vector<std::size_t> p(mod.rank());
    std::iota(p.begin(), p.end(), 0);
    std::stable_sort(p.begin(), p.end(), [&](std::size_t a, std::size_t b) { return mod.twists[a] < mod.twists[b]; });
    perms.push_back(std::move(p));
  }
  for (std::size_t k = 0; k < res.maps.size(); ++k) res.maps[k] = res.maps[k].permuted(perms[k], perms[k + 1]);
  for (std::size_t k = 0; k < res.modules.size(); ++k) {
    GradedFreeModule m;
    for (auto i : perms[k]) m.twists.push_back(res.modules[k].twists[i]);
    res.modules[k] = std::move(m);
  }
}

}  // namespace detail

/// First syzygies of the Groebner basis elements, in their given order:
/// columns generate the kernel of (g_1 … g_s).
inline GradedMatrix syzygies(const GroebnerBasis& gb) {
  const Ring& ring = gb.ring;
  for (const auto& g : gb.generators) {
    if (!g.is_homogeneous()) throw std::invalid_argument("syzygies: inhomogeneous basis");
  }
  std::vector<std::vector<Polynomial>> elems;
  for (const auto& g : gb.generators) elems.push_back({g});
  auto [schreyer, syz] = detail::schreyer_step(ring, elems, {Monomial{}}, false);
  GradedFreeModule target = detail::module_of(schreyer);
  GradedFreeModule source;
  for (const auto& s : syz) {
    int deg = -1;
    for (std::size_t i = 0; i < s.size() && deg < 0; ++i) {
      if (!s[i].is_zero()) deg = s[i].degree() + target.twists[i];
    }
    source.twists.push_back(deg);
  }
  return detail::matrix_from_columns(ring, syz, target, source);
}

/// Free resolution of R/I by iterated Schreyer syzygies; not minimal in
/// general. Module bases are sorted by twist.
inline FreeResolution free_resolution(const Ideal& I, MonomialOrder ord = MonomialOrder::grevlex()) {
  if (!I.is_homogeneous()) throw std::invalid_argument("free_resolution: inhomogeneous ideal");
  const GroebnerBasis& gb = I.groebner_basis(ord);
  const Ring& ring = gb.ring;
  FreeResolution res{I.ring(), {GradedFreeModule{{0}}}, {}};
  if (gb.generators.empty()) return res;

  std::vector<std::vector<Polynomial>> elems;
  for (const auto& g : gb.generators) elems.push_back({g});
  std::vector<Monomial> schreyer{Monomial{}};
  while (!elems.empty()) {
    if (res.length() >= ring.nvars()) throw std::logic_error("free_resolution: length bound exceeded");
    auto [next, syz] = detail::schreyer_step(ring, elems, schreyer, true);
    GradedFreeModule src = detail::module_of(next);
    GradedMatrix d = detail::matrix_from_columns(ring, elems, res.modules.back(), src);
    res.modules.push_back(src);
    res.maps.push_back(std::move(d));
    schreyer = std::move(next);
    elems = std::move(syz);
  }
  for (auto& m : res.maps) {
    GradedMatrix g(I.ring(), m.source(), m.target());
    for (std::size_t r = 0; r < m.rows(); ++r) {
      for (std::size_t c = 0; c < m.cols(); ++c) g(r, c) = m(r, c).with_order(I.ring().order());
    }
    m = std::move(g);
  }
  detail::sort_by_twist(res);
  return res;
}

/// Splits off trivial summands R(−d) → R(−d) until no map has a nonzero
/// scalar entry. With a seed, the unit used at each step is chosen at random
/// among all candidates.
inline FreeResolution minimize(FreeResolution res, std::optional<std::uint64_t> seed = std::nullopt) {
  std::mt19937_64 rng(seed.value_or(0));
  const auto& F = res.ring.field();
  while (true) {
    std::vector<std::tuple<std::size_t, std::size_t, std::size_t>> units;
    for (std::size_t k = 0; k < res.maps.size(); ++k) {
      const auto& d = res.maps[k];
      for (std::size_t r = 0; r < d.rows(); ++r) {
        for (std::size_t c = 0; c < d.cols(); ++c) {
          const auto& e = d(r, c);
          if (!e.is_zero() && e.is_constant()) {
            units.emplace_back(k, r, c);
            if (!seed) break;
          }
        }
        if (!seed && !units.empty()) break;
      }
      if (!seed && !units.empty()) break;
    }
    if (units.empty()) break;
    const auto [k, r, c] = seed ? units[std::uniform_int_distribution<std::size_t>(0, units.size() - 1)(rng)]
                                : units.front();
    const GradedMatrix& d = res.maps[k];
    const std::uint32_t inv_u = F.inv(d(r, c).leading_coefficient());
    // Schur complement: d'(i,j) = d(i,j) − d(i,c)·d(r,j)/u
    GradedMatrix nd = d.without(r, c);
    std::size_t ii = 0;
    for (std::size_t i = 0; i < d.rows(); ++i) {
      if (i == r) continue;
      if (!d(i, c).is_zero()) {
        const Polynomial factor = d(i, c).scaled(F.neg(inv_u));
        std::size_t jj = 0;
        for (std::size_t j = 0; j < d.cols(); ++j) {
          if (j == c) continue;
          if (!d(r, j).is_zero()) nd(ii, jj) += factor * d(r, j);
          ++jj;
        }
      }
      ++ii;
    }
    if (k + 1 < res.maps.size()) res.maps[k + 1] = res.maps[k + 1].without(c, GradedMatrix::npos);
    if (k > 0) res.maps[k - 1] = res.maps[k - 1].without(GradedMatrix::npos, r);
    res.maps[k] = std::move(nd);
    res.modules[k] = res.maps[k].target();
    res.modules[k + 1] = res.maps[k].source();
  }
  while (!res.maps.empty() && res.modules.back().rank() == 0) {
    res.maps.pop_back();
    res.modules.pop_back();
  }
  detail::sort_by_twist(res);
  return res;
}

/// Graded Betti numbers b_{i,j}: the multiplicity of R(−i−j) in F_i.
class BettiDiagram {
 public:
  using Key = std::pair<int, int>;  // (i, j)

  BettiDiagram() = default;
  explicit BettiDiagram(std::map<Key, int> entries) : entries_(std::move(entries)) { prune(); }

  int operator()(int i, int j) const {
    auto it = entries_.find({i, j});
    return it == entries_.end() ? 0 : it->second;
  }
  void set(int i, int j, int b) {
    if (b < 0) throw std::invalid_argument("BettiDiagram: negative count");
    if (b == 0) {
      entries_.erase({i, j});
    } else {
      entries_[{i, j}] = b;
    }
  }
  void add(int i, int j, int b) { set(i, j, (*this)(i, j) + b); }

  const std::map<Key, int>& entries() const noexcept { return entries_; }
  bool empty() const noexcept { return entries_.empty(); }
  int max_i() const {
    int m = -1;
    for (const auto& [k, v] : entries_) m = std::max(m, k.first);
    return m;
  }
  /// Last nontrivial row (regularity − 1 of the points).
  int max_row() const {
    int m = -1;
    for (const auto& [k, v] : entries_) m = std::max(m, k.second);
    return m;
  }
  int min_row() const {
    int m = entries_.empty() ? 0 : entries_.begin()->first.second;
    for (const auto& [k, v] : entries_) m = std::min(m, k.second);
    return m;
  }
  int total(int i) const {
    int s = 0;
    for (const auto& [k, v] : entries_) {
      if (k.first == i) s += v;
    }
    return s;
  }

  friend bool operator==(const BettiDiagram&, const BettiDiagram&) = default;

  /// Macaulay2-style table: columns i, rows j, "." for zero.
  std::string to_string() const {
    std::ostringstream out;
    if (entries_.empty()) return "(empty)\n";
    const int cols = max_i() + 1;
    std::vector<std::string> header{""};
    std::vector<std::vector<std::string>> rows;
    for (int i = 0; i < cols; ++i) header.push_back(std::to_string(i));
    std::vector<std::string> totals{"total:"};
    for (int i = 0; i < cols; ++i) totals.push_back(std::to_string(total(i)));
    rows.push_back(totals);
    for (int j = min_row(); j <= max_row(); ++j) {
      std::vector<std::string> row{std::to_string(j) + ":"};
      for (int i = 0; i < cols; ++i) {
        int b = (*this)(i, j);
        row.push_back(b == 0 ? "." : std::to_string(b));
      }
      rows.push_back(row);
    }
    std::size_t w0 = 6, w = 1;
    for (const auto& r : rows) {
      w0 = std::max(w0, r[0].size());
      for (std::size_t k = 1; k < r.size(); ++k) w = std::max(w, r[k].size());
    }
    auto emit = [&](const std::vector<std::string>& r) {
      out << std::string(w0 - r[0].size(), ' ') << r[0];
      for (std::size_t k = 1; k < r.size(); ++k) out << ' ' << std::string(w - r[k].size(), ' ') << r[k];
      out << '\n';
    };
    emit(header);
    for (const auto& r : rows) emit(r);
    return out.str();
  }

 private:
  void prune() {
    for (auto it = entries_.begin(); it != entries_.end();) {
      if (it->second < 0) throw std::invalid_argument("BettiDiagram: negative count");
      it = it->second == 0 ? entries_.erase(it) : std::next(it);
    }
  }

  std::map<Key, int> entries_;
};

/// Betti diagram of a minimal resolution of R/I.
inline BettiDiagram betti(const FreeResolution& res) {
  if (!res.is_minimal()) throw std::invalid_argument("betti: resolution is not minimal");
  BettiDiagram B;
  for (std::size_t i = 0; i < res.modules.size(); ++i) {
    for (int d : res.modules[i].twists) B.add(static_cast<int>(i), d - static_cast<int>(i), 1);
  }
  return B;
}

/// N(T) = Σ (−1)^i b_{i,j} T^{i+j}.
inline IntPoly hilbert_series_from_betti(const BettiDiagram& B) {
  IntPoly n;
  for (const auto& [k, b] : B.entries()) {
    n = n + IntPoly::monomial(k.first + k.second, (k.first % 2 == 0 ? 1 : -1) * b);
  }
  return n;
}

/// Twist multisets of a resolution, one sorted list per module, in complex
/// order. Used both for R/I presentations (first module {0}) and for ideal
/// presentations (first module = generators).
struct ResolutionShape {
  std::vector<std::vector<int>> modules;

  ResolutionShape() = default;
  explicit ResolutionShape(std::vector<std::vector<int>> mods) : modules(std::move(mods)) {
    for (auto& m : modules) std::sort(m.begin(), m.end());
  }

  std::size_t size() const noexcept { return modules.size(); }
  friend bool operator==(const ResolutionShape&, const ResolutionShape&) = default;

  /// "0 → R(-7)^3 → R(-5)^12 → R(-3) ⊕ R(-4)^9" (last module on the right).
  std::string to_string() const {
    std::string s = "0";
    for (auto it = modules.rbegin(); it != modules.rend(); ++it) s += " → " + module_string(*it);
    return s;
  }

  static std::string module_string(const std::vector<int>& twists) {
    if (twists.empty()) return "0";
    std::map<int, int> counts;
    for (int d : twists) ++counts[d];
    std::string s;
    for (const auto& [d, c] : counts) {
      if (!s.empty()) s += " ⊕ ";
      s += d == 0 ? "R" : "R(" + std::to_string(-d) + ")";
      if (c > 1) s += "^" + std::to_string(c);
    }
    return s;
  }
};

/// Shape of a resolution in its own presentation.
inline ResolutionShape shape_of(const FreeResolution& res) {
  std::vector<std::vector<int>> mods;
  for (const auto& m : res.modules) mods.push_back(m.twists);
  return ResolutionShape(std::move(mods));
}

/// R/I presentation → I presentation (drops F_0 = R).
inline ResolutionShape ideal_shape(const ResolutionShape& quotient) {
  if (quotient.modules.empty() || quotient.modules.front() != std::vector<int>{0}) {
    throw std::invalid_argument("ideal_shape: first module is not R");
  }
  return ResolutionShape(std::vector<std::vector<int>>(quotient.modules.begin() + 1, quotient.modules.end()));
}

/// I presentation → R/I presentation (prepends F_0 = R).
inline ResolutionShape quotient_shape(const ResolutionShape& ideal) {
  std::vector<std::vector<int>> mods{{0}};
  mods.insert(mods.end(), ideal.modules.begin(), ideal.modules.end());
  return ResolutionShape(std::move(mods));
}

/// Betti diagram of an R/I-presentation shape.
inline BettiDiagram betti_of_shape(const ResolutionShape& quotient) {
  BettiDiagram B;
  for (std::size_t i = 0; i < quotient.modules.size(); ++i) {
    for (int d : quotient.modules[i]) B.add(static_cast<int>(i), d - static_cast<int>(i), 1);
  }
  return B;
}

/// R/I-presentation shape of a Betti diagram.
inline ResolutionShape shape_of_betti(const BettiDiagram& B) {
  std::vector<std::vector<int>> mods(B.max_i() + 1);
  for (const auto& [k, b] : B.entries()) {
    for (int c = 0; c < b; ++c) mods[k.first].push_back(k.first + k.second);
  }
  return ResolutionShape(std::move(mods));
}

/// Hom(·, R(−t)): reverses the complex and sends each twist d to t − d.
inline ResolutionShape dualize_twist(const ResolutionShape& shape, int t) {
  if (shape.size() > static_cast<std::size_t>(kMaxVars)) {
    throw std::invalid_argument("dualize_twist: complex longer than 4 steps");
  }
  std::vector<std::vector<int>> mods;
  for (auto it = shape.modules.rbegin(); it != shape.modules.rend(); ++it) {
    std::vector<int> m;
    for (int d : *it) m.push_back(t - d);
    mods.push_back(std::move(m));
  }
  return ResolutionShape(std::move(mods));
}

/// Matrix-level dualize-and-twist: the maps are transposed.
inline FreeResolution dualize_twist(const FreeResolution& res, int t) {
  if (res.length() > 4) throw std::invalid_argument("dualize_twist: complex longer than 4 steps");
  auto dual = [t](const GradedFreeModule& m) {
    GradedFreeModule out;
    for (int d : m.twists) out.twists.push_back(t - d);
    return out;
  };
  FreeResolution out{res.ring, {}, {}};
  for (auto it = res.modules.rbegin(); it != res.modules.rend(); ++it) out.modules.push_back(dual(*it));
  const int l = res.length();
  for (int k = 1; k <= l; ++k) {
    // new d_k : G_k = F_{l−k}^∨ → G_{k−1} = F_{l−k+1}^∨ is d_{l−k+1}^T
    out.maps.push_back(res.maps[l - k].transposed(out.modules[k], out.modules[k - 1]));
  }
  return out;
}

}  // namespace cubicmrc

#endif  // CUBICMRC_RESOLUTION_HPP
