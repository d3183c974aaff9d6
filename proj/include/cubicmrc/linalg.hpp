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

#ifndef CUBICMRC_LINALG_HPP
#define CUBICMRC_LINALG_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "polyring.hpp"

namespace cubicmrc {

/// Dense row-major matrix over a prime field.
class FpMatrix {
 public:
  FpMatrix(PrimeField field, std::size_t rows, std::size_t cols)
      : field_(field), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  const PrimeField& field() const noexcept { return field_; }

  std::uint32_t& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  std::uint32_t operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  std::span<const std::uint32_t> row(std::size_t r) const {
    return {data_.data() + r * cols_, cols_};
  }

  void append_row(std::span<const std::uint32_t> values) {
    if (values.size() != cols_) throw std::invalid_argument("FpMatrix: row length mismatch");
    data_.insert(data_.end(), values.begin(), values.end());
    ++rows_;
  }

  /// In-place reduced row echelon form; returns the pivot column of each
  /// nonzero row, in order.
  std::vector<std::size_t> row_reduce() {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
      std::size_t sel = r;
      while (sel < rows_ && (*this)(sel, c) == 0) ++sel;
      if (sel == rows_) continue;
      swap_rows(sel, r);
      std::uint32_t inv = field_.inv((*this)(r, c));
      for (std::size_t k = c; k < cols_; ++k) (*this)(r, k) = field_.mul((*this)(r, k), inv);
      for (std::size_t i = 0; i < rows_; ++i) {
        if (i == r) continue;
        std::uint32_t f = (*this)(i, c);
        if (f == 0) continue;
        std::uint32_t nf = field_.neg(f);
        for (std::size_t k = c; k < cols_; ++k) {
          (*this)(i, k) = field_.add((*this)(i, k), field_.mul(nf, (*this)(r, k)));
        }
      }
      pivots.push_back(c);
      ++r;
    }
    return pivots;
  }

  std::size_t rank() const {
    FpMatrix copy = *this;
    return copy.row_reduce().size();
  }

  /// Basis of {v : M v = 0}. Each basis vector has a 1 in its free column
  /// and zeros in all other free columns.
  std::vector<std::vector<std::uint32_t>> nullspace() const {
    FpMatrix m = *this;
    auto pivots = m.row_reduce();
    std::vector<bool> is_pivot(cols_, false);
    for (auto c : pivots) is_pivot[c] = true;
    std::vector<std::vector<std::uint32_t>> basis;
    for (std::size_t f = 0; f < cols_; ++f) {
      if (is_pivot[f]) continue;
      std::vector<std::uint32_t> v(cols_, 0);
      v[f] = 1;
      for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = field_.neg(m(i, f));
      basis.push_back(std::move(v));
    }
    return basis;
  }

 private:
  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t k = 0; k < cols_; ++k) std::swap((*this)(a, k), (*this)(b, k));
  }

  PrimeField field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<std::uint32_t> data_;
};

/// Incrementally built row space. Each stored row is monic at its pivot and
/// zero at the pivots of all earlier rows.
class EchelonSpace {
 public:
  EchelonSpace(PrimeField field, std::size_t dim) : field_(field), dim_(dim) {}

  std::size_t rank() const noexcept { return rows_.size(); }

  /// Reduces `v` against the stored rows; the result is zero iff `v` lies
  /// in the span.
  std::vector<std::uint32_t> reduce(std::vector<std::uint32_t> v) const {
    if (v.size() != dim_) throw std::invalid_argument("EchelonSpace: dimension mismatch");
    for (std::size_t k = 0; k < rows_.size(); ++k) {
      std::uint32_t c = v[pivots_[k]];
      if (c == 0) continue;
      std::uint32_t nc = field_.neg(c);
      const auto& row = rows_[k];
      for (std::size_t i = pivots_[k]; i < dim_; ++i) {
        if (row[i] != 0) v[i] = field_.add(v[i], field_.mul(nc, row[i]));
      }
    }
    return v;
  }

  /// Adds `v` to the space; returns false if it was already contained.
  bool insert(std::vector<std::uint32_t> v) {
    v = reduce(std::move(v));
    std::size_t p = 0;
    while (p < dim_ && v[p] == 0) ++p;
    if (p == dim_) return false;
    std::uint32_t inv = field_.inv(v[p]);
    for (auto& x : v) x = field_.mul(x, inv);
    rows_.push_back(std::move(v));
    pivots_.push_back(p);
    return true;
  }

 private:
  PrimeField field_;
  std::size_t dim_;
  std::vector<std::vector<std::uint32_t>> rows_;
  std::vector<std::size_t> pivots_;
};

/// All monomials of total degree `d` in `nvars` variables, sorted ascending
/// under `ord`.
inline std::vector<Monomial> monomials_of_degree(int nvars, int d,
                                                 MonomialOrder ord = MonomialOrder::grevlex()) {
  std::vector<Monomial> out;
  Monomial m;
  auto rec = [&](auto&& self, int var, int remaining) -> void {
    if (var == nvars - 1) {
      m.set(var, remaining);
      out.push_back(m);
      m.set(var, 0);
      return;
    }
    for (int e = remaining; e >= 0; --e) {
      m.set(var, e);
      self(self, var + 1, remaining - e);
    }
    m.set(var, 0);
  };
  if (d >= 0) rec(rec, 0, d);
  std::sort(out.begin(), out.end(), [&](const Monomial& a, const Monomial& b) {
    return compare(a, b, ord, nvars) < 0;
  });
  return out;
}

}  // namespace cubicmrc

#endif  // CUBICMRC_LINALG_HPP
