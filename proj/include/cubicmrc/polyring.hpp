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

#ifndef CUBICMRC_POLYRING_HPP
#define CUBICMRC_POLYRING_HPP

#include <algorithm>
#include <array>
#include <cctype>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace cubicmrc {

/// Arithmetic in F_p for a prime p < 2^31.
class PrimeField {
 public:
  static constexpr std::uint32_t kDefaultPrime = 32003;

  explicit PrimeField(std::uint32_t p = kDefaultPrime) : p_(p) {
    if (!is_prime(p)) {
      throw std::invalid_argument("PrimeField: modulus " + std::to_string(p) +
                                  " is not prime");
    }
    if (p >= (1u << 31)) {
      throw std::invalid_argument("PrimeField: modulus must be below 2^31");
    }
  }

  static constexpr bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
      if (n % d == 0) return false;
    }
    return true;
  }

  std::uint32_t characteristic() const noexcept { return p_; }

  std::uint32_t reduce(std::int64_t v) const noexcept {
    std::int64_t r = v % static_cast<std::int64_t>(p_);
    return static_cast<std::uint32_t>(r < 0 ? r + p_ : r);
  }
  std::uint32_t add(std::uint32_t a, std::uint32_t b) const noexcept {
    std::uint32_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const noexcept {
    return a >= b ? a - b : a + p_ - b;
  }
  std::uint32_t neg(std::uint32_t a) const noexcept { return a == 0 ? 0 : p_ - a; }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const noexcept {
    return static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * b % p_);
  }
  std::uint32_t pow(std::uint32_t a, std::uint64_t e) const noexcept {
    std::uint32_t r = 1 % p_;
    while (e > 0) {
      if (e & 1) r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }
  std::uint32_t inv(std::uint32_t a) const {
    if (a % p_ == 0) throw std::domain_error("PrimeField: inverse of zero");
    // extended Euclid
    std::int64_t t = 0, new_t = 1, r = p_, new_r = a;
    while (new_r != 0) {
      std::int64_t q = r / new_r;
      t = std::exchange(new_t, t - q * new_t);
      r = std::exchange(new_r, r - q * new_r);
    }
    return reduce(t);
  }
  std::uint32_t div(std::uint32_t a, std::uint32_t b) const { return mul(a, inv(b)); }

  friend bool operator==(const PrimeField&, const PrimeField&) = default;

 private:
  std::uint32_t p_;
};

inline constexpr int kMaxVars = 5;

/// Exponent vector with cached total degree. Unused slots stay zero.
class Monomial {
 public:
  using Exponents = std::array<std::uint16_t, kMaxVars>;

  constexpr Monomial() = default;
  Monomial(std::initializer_list<int> exps) {
    if (exps.size() > kMaxVars) throw std::invalid_argument("Monomial: too many variables");
    int i = 0;
    for (int e : exps) {
      if (e < 0) throw std::invalid_argument("Monomial: negative exponent");
      exps_[i++] = static_cast<std::uint16_t>(e);
      degree_ += e;
    }
  }
  static Monomial variable(int index, int power = 1) {
    Monomial m;
    m.exps_.at(index) = static_cast<std::uint16_t>(power);
    m.degree_ = power;
    return m;
  }

  int operator[](int i) const noexcept { return exps_[i]; }
  int degree() const noexcept { return degree_; }
  const Exponents& exponents() const noexcept { return exps_; }
  bool is_one() const noexcept { return degree_ == 0; }

  void set(int i, int e) {
    degree_ += e - exps_[i];
    exps_[i] = static_cast<std::uint16_t>(e);
  }

  Monomial operator*(const Monomial& o) const noexcept {
    Monomial r;
    for (int i = 0; i < kMaxVars; ++i) r.exps_[i] = exps_[i] + o.exps_[i];
    r.degree_ = degree_ + o.degree_;
    return r;
  }
  /// True when this monomial divides `o`.
  bool divides(const Monomial& o) const noexcept {
    if (degree_ > o.degree_) return false;
    for (int i = 0; i < kMaxVars; ++i) {
      if (exps_[i] > o.exps_[i]) return false;
    }
    return true;
  }
  /// Exact quotient; precondition: `d.divides(*this)`.
  Monomial operator/(const Monomial& d) const noexcept {
    Monomial r;
    for (int i = 0; i < kMaxVars; ++i) r.exps_[i] = exps_[i] - d.exps_[i];
    r.degree_ = degree_ - d.degree_;
    return r;
  }
  friend Monomial lcm(const Monomial& a, const Monomial& b) noexcept {
    Monomial r;
    for (int i = 0; i < kMaxVars; ++i) {
      r.exps_[i] = std::max(a.exps_[i], b.exps_[i]);
      r.degree_ += r.exps_[i];
    }
    return r;
  }
  friend Monomial gcd(const Monomial& a, const Monomial& b) noexcept {
    Monomial r;
    for (int i = 0; i < kMaxVars; ++i) {
      r.exps_[i] = std::min(a.exps_[i], b.exps_[i]);
      r.degree_ += r.exps_[i];
    }
    return r;
  }
  friend bool coprime(const Monomial& a, const Monomial& b) noexcept {
    for (int i = 0; i < kMaxVars; ++i) {
      if (a.exps_[i] != 0 && b.exps_[i] != 0) return false;
    }
    return true;
  }

  friend bool operator==(const Monomial& a, const Monomial& b) noexcept {
    return a.exps_ == b.exps_;
  }

 private:
  Exponents exps_{};
  int degree_ = 0;
};

/// grevlex, lex, or elimination(k): lex on the first k variables, grevlex on the rest.
struct MonomialOrder {
  enum class Kind : std::uint8_t { grevlex, lex, elimination };

  Kind kind = Kind::grevlex;
  int block = 0;

  static constexpr MonomialOrder grevlex() { return {Kind::grevlex, 0}; }
  static constexpr MonomialOrder lex() { return {Kind::lex, 0}; }
  static constexpr MonomialOrder elimination(int k) { return {Kind::elimination, k}; }

  friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;
  friend auto operator<=>(const MonomialOrder&, const MonomialOrder&) = default;

  std::string name() const {
    switch (kind) {
      case Kind::grevlex: return "grevlex";
      case Kind::lex: return "lex";
      case Kind::elimination: return "elimination(" + std::to_string(block) + ")";
    }
    return "?";
  }
};

namespace detail {

inline std::strong_ordering grevlex_range(const Monomial& a, const Monomial& b, int lo,
                                          int hi) noexcept {
  int da = 0, db = 0;
  for (int i = lo; i < hi; ++i) {
    da += a[i];
    db += b[i];
  }
  if (da != db) return da <=> db;
  for (int i = hi - 1; i >= lo; --i) {
    if (a[i] != b[i]) return b[i] <=> a[i];
  }
  return std::strong_ordering::equal;
}

}  // namespace detail

/// Total multiplicative order on monomials in `nvars` variables.
inline std::strong_ordering compare(const Monomial& a, const Monomial& b, MonomialOrder ord,
                                    int nvars = 4) noexcept {
  switch (ord.kind) {
    case MonomialOrder::Kind::grevlex:
      return detail::grevlex_range(a, b, 0, nvars);
    case MonomialOrder::Kind::lex:
      for (int i = 0; i < nvars; ++i) {
        if (a[i] != b[i]) return a[i] <=> b[i];
      }
      return std::strong_ordering::equal;
    case MonomialOrder::Kind::elimination:
      for (int i = 0; i < ord.block && i < nvars; ++i) {
        if (a[i] != b[i]) return a[i] <=> b[i];
      }
      return detail::grevlex_range(a, b, std::min(ord.block, nvars), nvars);
  }
  return std::strong_ordering::equal;
}

/// Coefficient field, number of variables and the monomial order used to
/// keep terms sorted.
class Ring {
 public:
  explicit Ring(PrimeField field = PrimeField{}, int nvars = 4,
                MonomialOrder order = MonomialOrder::grevlex())
      : field_(field), nvars_(nvars), order_(order) {
    if (nvars < 1 || nvars > kMaxVars) {
      throw std::invalid_argument("Ring: variable count must be in 1..5");
    }
  }

  const PrimeField& field() const noexcept { return field_; }
  std::uint32_t characteristic() const noexcept { return field_.characteristic(); }
  int nvars() const noexcept { return nvars_; }
  MonomialOrder order() const noexcept { return order_; }

  Ring with_order(MonomialOrder ord) const { return Ring(field_, nvars_, ord); }

  std::strong_ordering compare(const Monomial& a, const Monomial& b) const noexcept {
    return cubicmrc::compare(a, b, order_, nvars_);
  }

  /// Variable names: x0..x3, and t for the leading slot of a five-variable ring.
  std::string variable_name(int i) const {
    if (nvars_ == 5) return i == 0 ? "t" : "x" + std::to_string(i - 1);
    return "x" + std::to_string(i);
  }

  friend bool operator==(const Ring&, const Ring&) = default;

 private:
  PrimeField field_;
  int nvars_;
  MonomialOrder order_;
};

struct Term {
  std::uint32_t coef = 0;
  Monomial mono;

  friend bool operator==(const Term&, const Term&) = default;
};

/// Sparse polynomial; terms are nonzero, distinct and sorted strictly
/// descending by the ring's order.
class Polynomial {
 public:
  explicit Polynomial(Ring ring = Ring{}) : ring_(ring) {}

  /// Builds a canonical polynomial from arbitrary terms (combines duplicates,
  /// drops zeros, sorts).
  static Polynomial from_terms(Ring ring, std::vector<Term> terms) {
    Polynomial f(ring);
    const auto& F = ring.field();
    for (auto& t : terms) t.coef %= F.characteristic();
    std::sort(terms.begin(), terms.end(), [&](const Term& a, const Term& b) {
      return ring.compare(a.mono, b.mono) > 0;
    });
    for (const auto& t : terms) {
      if (!f.terms_.empty() && f.terms_.back().mono == t.mono) {
        f.terms_.back().coef = F.add(f.terms_.back().coef, t.coef);
        if (f.terms_.back().coef == 0) f.terms_.pop_back();
      } else if (t.coef != 0) {
        f.terms_.push_back(t);
      }
    }
    return f;
  }
  static Polynomial constant(Ring ring, std::int64_t c) {
    return from_terms(ring, {{ring.field().reduce(c), Monomial{}}});
  }
  static Polynomial monomial(Ring ring, const Monomial& m, std::uint32_t c = 1) {
    return from_terms(ring, {{c, m}});
  }
  static Polynomial variable(Ring ring, int i) {
    return monomial(ring, Monomial::variable(i));
  }

  const Ring& ring() const noexcept { return ring_; }
  std::span<const Term> terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const noexcept {
    return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one());
  }

  /// Leading term under the ring order.
  const Term& leading_term() const {
    if (terms_.empty()) throw std::domain_error("leading_term: zero polynomial");
    return terms_.front();
  }
  const Monomial& leading_monomial() const { return leading_term().mono; }
  std::uint32_t leading_coefficient() const { return leading_term().coef; }

  /// Maximal total degree; -1 for the zero polynomial.
  int degree() const noexcept {
    int d = -1;
    for (const auto& t : terms_) d = std::max(d, t.mono.degree());
    return d;
  }
  bool is_homogeneous() const noexcept {
    return std::all_of(terms_.begin(), terms_.end(), [&](const Term& t) {
      return t.mono.degree() == terms_.front().mono.degree();
    });
  }

  Polynomial with_order(MonomialOrder ord) const {
    if (ord == ring_.order()) return *this;
    return from_terms(ring_.with_order(ord), terms_);
  }
  Polynomial monic() const {
    if (is_zero()) return *this;
    return scaled(ring_.field().inv(leading_coefficient()));
  }

  Polynomial scaled(std::uint32_t c) const {
    Polynomial r(ring_);
    c %= ring_.characteristic();
    if (c == 0) return r;
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) r.terms_.push_back({ring_.field().mul(t.coef, c), t.mono});
    return r;
  }
  /// c * m * this
  Polynomial times_term(std::uint32_t c, const Monomial& m) const {
    Polynomial r(ring_);
    c %= ring_.characteristic();
    if (c == 0) return r;
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) r.terms_.push_back({ring_.field().mul(t.coef, c), t.mono * m});
    return r;
  }

  /// this + c * m * g, in a single merge.
  Polynomial add_multiple(std::uint32_t c, const Monomial& m, const Polynomial& g) const {
    check_ring(g);
    const auto& F = ring_.field();
    Polynomial r(ring_);
    r.terms_.reserve(terms_.size() + g.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < terms_.size() || j < g.terms_.size()) {
      if (j == g.terms_.size()) {
        r.terms_.push_back(terms_[i++]);
        continue;
      }
      Term gt{F.mul(c, g.terms_[j].coef), g.terms_[j].mono * m};
      if (i == terms_.size()) {
        r.terms_.push_back(gt);
        ++j;
        continue;
      }
      auto cmp = ring_.compare(terms_[i].mono, gt.mono);
      if (cmp > 0) {
        r.terms_.push_back(terms_[i++]);
      } else if (cmp < 0) {
        r.terms_.push_back(gt);
        ++j;
      } else {
        std::uint32_t s = F.add(terms_[i].coef, gt.coef);
        if (s != 0) r.terms_.push_back({s, gt.mono});
        ++i;
        ++j;
      }
    }
    return r;
  }

  Polynomial operator-() const { return scaled(ring_.field().neg(1)); }
  Polynomial operator+(const Polynomial& g) const { return add_multiple(1, Monomial{}, g); }
  Polynomial operator-(const Polynomial& g) const {
    return add_multiple(ring_.field().neg(1), Monomial{}, g);
  }
  Polynomial operator*(const Polynomial& g) const {
    check_ring(g);
    if (is_zero() || g.is_zero()) return Polynomial(ring_);
    std::vector<Term> prod;
    prod.reserve(terms_.size() * g.terms_.size());
    const auto& F = ring_.field();
    for (const auto& a : terms_) {
      for (const auto& b : g.terms_) prod.push_back({F.mul(a.coef, b.coef), a.mono * b.mono});
    }
    return from_terms(ring_, std::move(prod));
  }
  Polynomial& operator+=(const Polynomial& g) { return *this = *this + g; }
  Polynomial& operator-=(const Polynomial& g) { return *this = *this - g; }
  Polynomial& operator*=(const Polynomial& g) { return *this = *this * g; }

  std::uint32_t evaluate(std::span<const std::uint32_t> point) const {
    if (static_cast<int>(point.size()) != ring_.nvars()) {
      throw std::invalid_argument("evaluate: point has wrong number of coordinates");
    }
    const auto& F = ring_.field();
    std::uint32_t acc = 0;
    for (const auto& t : terms_) {
      std::uint32_t v = t.coef;
      for (int i = 0; i < ring_.nvars(); ++i) v = F.mul(v, F.pow(point[i], t.mono[i]));
      acc = F.add(acc, v);
    }
    return acc;
  }

  /// Formal partial derivative with respect to variable `i`.
  Polynomial derivative(int i) const {
    std::vector<Term> out;
    for (const auto& t : terms_) {
      if (t.mono[i] == 0) continue;
      Monomial m = t.mono;
      m.set(i, t.mono[i] - 1);
      out.push_back({ring_.field().mul(t.coef, ring_.field().reduce(t.mono[i])), m});
    }
    return from_terms(ring_, std::move(out));
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.ring_ == b.ring_ && a.terms_ == b.terms_;
  }

  std::string to_string() const;

 private:
  void check_ring(const Polynomial& g) const {
    if (!(ring_ == g.ring_)) throw std::invalid_argument("polynomial ring mismatch");
  }

  Ring ring_;
  std::vector<Term> terms_;
};

/// Leading term of `f` under an arbitrary order (no re-sort of `f`).
inline Term leading_term(const Polynomial& f, MonomialOrder ord) {
  if (f.is_zero()) throw std::domain_error("leading_term: zero polynomial");
  if (ord == f.ring().order()) return f.terms().front();
  const Term* best = &f.terms().front();
  for (const auto& t : f.terms()) {
    if (compare(t.mono, best->mono, ord, f.ring().nvars()) > 0) best = &t;
  }
  return *best;
}

inline std::string monomial_to_string(const Ring& ring, const Monomial& m) {
  std::string s;
  for (int i = 0; i < ring.nvars(); ++i) {
    if (m[i] == 0) continue;
    if (!s.empty()) s += '*';
    s += ring.variable_name(i);
    if (m[i] > 1) s += '^' + std::to_string(m[i]);
  }
  return s.empty() ? "1" : s;
}

inline std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& t : terms_) {
    if (!s.empty()) s += " + ";
    if (t.mono.is_one()) {
      s += std::to_string(t.coef);
    } else {
      if (t.coef != 1) s += std::to_string(t.coef) + '*';
      s += monomial_to_string(ring_, t.mono);
    }
  }
  return s;
}

/// Parses the textual format: `x0^2*x1 + 3*x2^3 - x3`, `*` optional between
/// factors, integer coefficients reduced mod p. In a five-variable ring the
/// leading variable is named `t`.
inline Polynomial parse_polynomial(const Ring& ring, std::string_view text) {
  std::size_t pos = 0;
  auto skip = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto fail = [&](const std::string& what) -> Polynomial {
    throw std::invalid_argument("parse_polynomial: " + what + " at offset " +
                                std::to_string(pos) + " in \"" + std::string(text) + "\"");
  };
  auto read_int = [&](std::int64_t modulus) -> std::int64_t {
    std::int64_t v = 0;
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      v = (v * 10 + (text[pos] - '0')) % modulus;
      ++pos;
    }
    if (pos == start) fail("expected integer");
    return v;
  };
  auto read_var = [&]() -> int {
    if (text[pos] == 't' && ring.nvars() == 5) {
      ++pos;
      return 0;
    }
    if (text[pos] != 'x') fail("expected variable");
    ++pos;
    std::size_t start = pos;
    int idx = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      idx = idx * 10 + (text[pos] - '0');
      ++pos;
    }
    if (pos == start) fail("expected variable index");
    int slot = ring.nvars() == 5 ? idx + 1 : idx;
    if (slot >= ring.nvars()) fail("variable index out of range");
    return slot;
  };

  const auto& F = ring.field();
  std::vector<Term> terms;
  skip();
  if (pos == text.size()) fail("empty input");
  bool first = true;
  while (true) {
    skip();
    if (pos == text.size()) break;
    bool negative = false;
    if (text[pos] == '+' || text[pos] == '-') {
      negative = text[pos] == '-';
      ++pos;
      skip();
    } else if (!first) {
      fail("expected '+' or '-'");
    }
    first = false;
    std::uint32_t coef = 1;
    Monomial mono;
    bool have_factor = false;
    while (pos < text.size()) {
      skip();
      if (pos == text.size()) break;
      char c = text[pos];
      if (std::isdigit(static_cast<unsigned char>(c))) {
        coef = F.mul(coef, F.reduce(read_int(F.characteristic())));
      } else if (c == 'x' || c == 't') {
        int v = read_var();
        int e = 1;
        skip();
        if (pos < text.size() && text[pos] == '^') {
          ++pos;
          skip();
          e = static_cast<int>(read_int(1 << 15));
        }
        mono = mono * Monomial::variable(v, e);
      } else {
        break;
      }
      have_factor = true;
      skip();
      if (pos < text.size() && text[pos] == '*') {
        ++pos;
        have_factor = false;
      }
    }
    if (!have_factor) fail("dangling operator");
    terms.push_back({negative ? F.neg(coef) : coef, mono});
  }
  return Polynomial::from_terms(ring, std::move(terms));
}

}  // namespace cubicmrc

#endif  // CUBICMRC_POLYRING_HPP
