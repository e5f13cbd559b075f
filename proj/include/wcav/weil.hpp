#pragma once

// Weil-central isogeny classes (a, q)_g with Weil polynomial t^{2g} + a t^g + q^g,
// general Weil polynomials, and their behaviour under base-field extension.

#include <mutex>
#include <span>
#include <string>
#include <vector>

#include "wcav/integer.hpp"

namespace wcav {

/// The isogeny class (a, q)_g. Immutable once built by new_class().
struct WeilCentralClass {
  Int a;
  Int q;
  unsigned long g = 1;
  Int p;               // characteristic
  unsigned long r = 1;  // q = p^r
  bool ordinary = false;  // gcd(a, p) = 1
  Int q_to_g;            // q^g, cached

  std::string label() const;  // "(a,q)_g"
  bool operator==(const WeilCentralClass&) const = default;
};

/// Validates the Weil bound a^2 <= 4 q^g, that q is a prime power and g >= 1.
WeilCentralClass new_class(const Int& a, const Int& q, unsigned long g);

/// Monic degree-2g polynomial with coefficients coeffs[i] of t^i over a base
/// field of size `base`.
class WeilPolynomial {
 public:
  /// Throws ValidationError unless monic, c_0 = base^g and
  /// c_i = base^{g-i} c_{2g-i} for 0 <= i <= g.
  WeilPolynomial(unsigned long g, Int base, std::vector<Int> coeffs);

  static WeilPolynomial of(const WeilCentralClass& cls);

  unsigned long g() const { return g_; }
  const Int& base() const { return base_; }
  const std::vector<Int>& coeffs() const { return coeffs_; }
  std::size_t degree() const { return coeffs_.size() - 1; }

  Int at(const Int& x) const;
  Int derivative_at(const Int& x) const;
  Int at_one() const;             // point count
  Int derivative_at_one() const;  // f'(1)

  /// True when the polynomial is t^{2g} + c t^g + base^g.
  bool is_central() const;
  /// Middle coefficient c_g.
  const Int& middle() const { return coeffs_[g_]; }

  std::string to_string() const;
  bool operator==(const WeilPolynomial&) const = default;

 private:
  unsigned long g_;
  Int base_;
  std::vector<Int> coeffs_;
};

/// p_n = x^n + y^n for the roots x, y of u^2 + a u + q^g, memoized. Thread safe.
class PowerSumSequence {
 public:
  explicit PowerSumSequence(WeilCentralClass cls);
  const WeilCentralClass& cls() const { return cls_; }
  Int operator()(unsigned long n) const;

 private:
  WeilCentralClass cls_;
  mutable std::mutex mutex_;
  mutable std::vector<Int> values_;
};

/// x^n + y^n by the two-term recurrence p_n = -a p_{n-1} - q^g p_{n-2}.
Int power_sum(const WeilCentralClass& cls, unsigned long n);

/// a_n from the binomial recursion
///   a_n = (-1)^{n+1} a^n - sum_{i=1}^{floor(n/2)} C(n,i) a_{n-2i} q^{gi},  a_0 = -1.
/// Requires an ordinary class and n >= 1.
Int a_n_paper(const WeilCentralClass& cls, unsigned long n);
/// a_0..a_{n_max} from the same recursion, sharing one memo table.
std::vector<Int> a_n_paper_table(const WeilCentralClass& cls, unsigned long n_max);

/// gcd(n, g) = 1, the condition under which the extension stays Weil-central.
bool is_central_extension(const WeilCentralClass& cls, unsigned long n);

/// Characteristic polynomial of F^n: companion-matrix power, traces of
/// (C^n)^m for m = 1..2g, then Newton's identities.
WeilPolynomial extension_weil_poly(const WeilPolynomial& f, unsigned long n);
WeilPolynomial extension_weil_poly(const WeilCentralClass& cls, unsigned long n);

/// Coefficients from power sums t_1..t_k of the roots (Newton's identities).
/// Throws InternalError if a division is inexact.
std::vector<Int> coefficients_from_power_sums(std::span<const Int> power_sums);

/// All extensions f_{A_1}, ..., f_{A_{n_max}} at once. Traces trace(C^k) for
/// k <= 2g n_max come from successive companion multiplications.
class ExtensionTower {
 public:
  ExtensionTower(WeilPolynomial base, unsigned long n_max);

  unsigned long n_max() const { return n_max_; }
  const WeilPolynomial& extension(unsigned long n) const;  // 1 <= n <= n_max
  Int point_count(unsigned long n) const { return extension(n).at_one(); }

 private:
  unsigned long n_max_;
  std::vector<WeilPolynomial> extensions_;
};

/// N_n = f_{A_n}(1). For central extensions of ordinary classes this is
/// cross-checked against q^{gn} + a_n + 1.
Int point_count(const WeilCentralClass& cls, unsigned long n);

/// 1 + x + ... + x^{n-1}.
Int eval_P_direct(const Int& x, unsigned long n);

/// P_n(x) for odd n through
///   P_n = (x+1)^{n-1} - sum_{i=1}^{(n-1)/2} [C(n,i) - 2 C(n-1,i-1)] x^i P_{n-2i}.
Int eval_P_recursive(const Int& x, unsigned long n);

}  // namespace wcav
