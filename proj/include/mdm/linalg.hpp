#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "mdm/numbers.hpp"

namespace mdm {

// Dense row-major integer matrix. Zero-row and zero-column shapes are legal;
// they show up as quotients to the trivial lattice.
struct IntMatrix {
  std::size_t rows = 0, cols = 0;
  std::vector<Int> data;

  IntMatrix() = default;
  IntMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c, Int(0)) {}

  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(const std::vector<ZVec>& rs, std::size_t ncols);
  static IntMatrix from_cols(const std::vector<ZVec>& cs, std::size_t nrows);

  Int& at(std::size_t i, std::size_t j) { return data[i * cols + j]; }
  const Int& at(std::size_t i, std::size_t j) const { return data[i * cols + j]; }
  ZVec row(std::size_t i) const;
  ZVec col(std::size_t j) const;
  std::vector<ZVec> row_list() const;
  IntMatrix transposed() const;

  bool operator==(const IntMatrix&) const = default;
};

IntMatrix mul(const IntMatrix& a, const IntMatrix& b);
ZVec mul(const IntMatrix& a, const ZVec& x);
QVec mul(const IntMatrix& a, const QVec& x);

// Row Hermite normal form H = U * A with U unimodular. Canonical form:
// echelon row layout, positive pivots, entries above a pivot reduced into
// [0, pivot). Rank is the number of nonzero rows of H.
struct HnfResult {
  IntMatrix h, u;
};
HnfResult hermite_normal_form(const IntMatrix& a);  // EmptyInput on 0x0

bool is_row_hnf(const IntMatrix& h);
std::size_t rank(const IntMatrix& a);
Rat det(const IntMatrix& a);  // square input

// Rows form the canonical (HNF-normalized) basis of the saturated lattice
// {v in Z^n : a v = 0}; row count is n - rank(a). The public form insists on
// full row rank (RankDeficient otherwise); span_kernel accepts any input and
// is what internal callers use on spanning sets.
IntMatrix integer_kernel_basis(const IntMatrix& a);
IntMatrix span_kernel(const IntMatrix& a);

// Canonical (HNF) basis of the saturation of the row span; accepts any rank.
IntMatrix span_basis(const IntMatrix& a);

// Some rational solution of a x = b (free variables pinned to 0), or nullopt
// when the system is inconsistent. DimensionMismatch if sizes disagree.
std::optional<QVec> rational_solve(const IntMatrix& a, const QVec& b);

// Integral solution of a x = c, or nullopt when none exists (covers both
// rational inconsistency and lattice obstructions).
std::optional<ZVec> integral_solve(const IntMatrix& a, const ZVec& c);

}  // namespace mdm
