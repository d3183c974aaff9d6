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

#ifndef CUBICMRC_INT_POLY_HPP
#define CUBICMRC_INT_POLY_HPP

#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace cubicmrc {

/// Univariate polynomial in T with integer coefficients; used for Hilbert
/// series numerators. Trailing zero coefficients are trimmed.
class IntPoly {
 public:
  IntPoly() = default;
  IntPoly(std::initializer_list<std::int64_t> coeffs) : c_(coeffs) { trim(); }
  explicit IntPoly(std::vector<std::int64_t> coeffs) : c_(std::move(coeffs)) { trim(); }

  static IntPoly monomial(int power, std::int64_t coef = 1) {
    std::vector<std::int64_t> c(power + 1, 0);
    c[power] = coef;
    return IntPoly(std::move(c));
  }
  /// (1 - T)^k
  static IntPoly one_minus_t_pow(int k) {
    IntPoly r{1};
    for (int i = 0; i < k; ++i) r = r * IntPoly{1, -1};
    return r;
  }

  int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const noexcept { return c_.empty(); }
  std::int64_t operator[](int i) const noexcept {
    return i >= 0 && i < static_cast<int>(c_.size()) ? c_[i] : 0;
  }
  const std::vector<std::int64_t>& coefficients() const noexcept { return c_; }

  std::int64_t evaluate(std::int64_t t) const noexcept {
    std::int64_t acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * t + *it;
    return acc;
  }

  IntPoly operator+(const IntPoly& o) const {
    std::vector<std::int64_t> r(std::max(c_.size(), o.c_.size()), 0);
    for (std::size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
    return IntPoly(std::move(r));
  }
  IntPoly operator-() const {
    IntPoly r = *this;
    for (auto& v : r.c_) v = -v;
    return r;
  }
  IntPoly operator-(const IntPoly& o) const { return *this + (-o); }
  IntPoly operator*(const IntPoly& o) const {
    if (is_zero() || o.is_zero()) return {};
    std::vector<std::int64_t> r(c_.size() + o.c_.size() - 1, 0);
    for (std::size_t i = 0; i < c_.size(); ++i) {
      for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
    }
    return IntPoly(std::move(r));
  }

  /// Exact division by (1 - T); throws if T = 1 is not a root.
  IntPoly divided_by_one_minus_t() const {
    if (evaluate(1) != 0) {
      throw std::domain_error("IntPoly: division by (1-T) leaves a remainder");
    }
    // q(T) (1 - T) = p(T)  =>  q_i = sum_{k<=i} p_k
    std::vector<std::int64_t> q(c_.empty() ? 0 : c_.size() - 1, 0);
    std::int64_t acc = 0;
    for (std::size_t i = 0; i < q.size(); ++i) {
      acc += c_[i];
      q[i] = acc;
    }
    return IntPoly(std::move(q));
  }

  friend bool operator==(const IntPoly&, const IntPoly&) = default;

  std::string to_string() const {
    if (c_.empty()) return "0";
    std::string s;
    for (std::size_t i = 0; i < c_.size(); ++i) {
      if (c_[i] == 0) continue;
      std::int64_t a = c_[i] < 0 ? -c_[i] : c_[i];
      if (s.empty()) {
        if (c_[i] < 0) s += "-";
      } else {
        s += c_[i] < 0 ? " - " : " + ";
      }
      if (i == 0 || a != 1) s += std::to_string(a);
      if (i >= 1) s += "T";
      if (i >= 2) s += "^" + std::to_string(i);
    }
    return s;
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }

  std::vector<std::int64_t> c_;
};

}  // namespace cubicmrc

#endif  // CUBICMRC_INT_POLY_HPP
