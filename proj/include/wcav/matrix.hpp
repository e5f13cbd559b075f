#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "wcav/integer.hpp"

namespace wcav {

/// Dense square matrix over Z, row-major.
class IntMatrix {
 public:
  IntMatrix() = default;
  explicit IntMatrix(std::size_t size) : size_(size), data_(size * size) {}

  static IntMatrix identity(std::size_t size);

  /// Companion matrix of the monic polynomial with low-order coefficients
  /// c_0..c_{k-1} (the leading 1 is implicit): ones on the subdiagonal and
  /// -c_i down the last column.
  static IntMatrix companion(std::span<const Int> low_coeffs);

  std::size_t size() const { return size_; }
  Int& operator()(std::size_t r, std::size_t c) { return data_[r * size_ + c]; }
  const Int& operator()(std::size_t r, std::size_t c) const { return data_[r * size_ + c]; }

  Int trace() const;
  bool operator==(const IntMatrix&) const = default;

  friend IntMatrix operator*(const IntMatrix& lhs, const IntMatrix& rhs);

 private:
  std::size_t size_ = 0;
  std::vector<Int> data_;
};

/// trace(lhs * rhs) without forming the product.
Int trace_of_product(const IntMatrix& lhs, const IntMatrix& rhs);

/// m * C for C = IntMatrix::companion(low_coeffs), in O(k^2).
IntMatrix times_companion(const IntMatrix& m, std::span<const Int> low_coeffs);

/// C^n by binary powering, multiplications by C done in companion form.
IntMatrix companion_power(std::span<const Int> low_coeffs, unsigned long n);

}  // namespace wcav
