#include "wcav/matrix.hpp"

#include <bit>

namespace wcav {

IntMatrix IntMatrix::identity(std::size_t size) {
  IntMatrix m(size);
  for (std::size_t i = 0; i < size; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::companion(std::span<const Int> low_coeffs) {
  const std::size_t k = low_coeffs.size();
  IntMatrix m(k);
  for (std::size_t i = 0; i + 1 < k; ++i) m(i + 1, i) = 1;
  for (std::size_t i = 0; i < k; ++i) m(i, k - 1) = -low_coeffs[i];
  return m;
}

Int IntMatrix::trace() const {
  Int t = 0;
  for (std::size_t i = 0; i < size_; ++i) t += (*this)(i, i);
  return t;
}

IntMatrix operator*(const IntMatrix& lhs, const IntMatrix& rhs) {
  const std::size_t k = lhs.size();
  if (rhs.size() != k) throw InternalError("matrix size mismatch");
  IntMatrix out(k);
  for (std::size_t r = 0; r < k; ++r) {
    for (std::size_t s = 0; s < k; ++s) {
      const Int& a = lhs(r, s);
      if (a == 0) continue;
      for (std::size_t c = 0; c < k; ++c) {
        mpz_addmul(out(r, c).get_mpz_t(), a.get_mpz_t(), rhs(s, c).get_mpz_t());
      }
    }
  }
  return out;
}

Int trace_of_product(const IntMatrix& lhs, const IntMatrix& rhs) {
  const std::size_t k = lhs.size();
  Int t = 0;
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      mpz_addmul(t.get_mpz_t(), lhs(i, j).get_mpz_t(), rhs(j, i).get_mpz_t());
    }
  }
  return t;
}

IntMatrix times_companion(const IntMatrix& m, std::span<const Int> low_coeffs) {
  const std::size_t k = m.size();
  IntMatrix out(k);
  for (std::size_t r = 0; r < k; ++r) {
    for (std::size_t c = 0; c + 1 < k; ++c) out(r, c) = m(r, c + 1);
    Int& last = out(r, k - 1);
    for (std::size_t s = 0; s < k; ++s) {
      mpz_submul(last.get_mpz_t(), m(r, s).get_mpz_t(), low_coeffs[s].get_mpz_t());
    }
  }
  return out;
}

IntMatrix companion_power(std::span<const Int> low_coeffs, unsigned long n) {
  const std::size_t k = low_coeffs.size();
  IntMatrix result = IntMatrix::identity(k);
  if (n == 0) return result;
  for (int bit = std::bit_width(n) - 1; bit >= 0; --bit) {
    result = result * result;
    if ((n >> bit) & 1UL) result = times_companion(result, low_coeffs);
  }
  return result;
}

}  // namespace wcav
