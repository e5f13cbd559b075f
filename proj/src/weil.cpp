#include "wcav/weil.hpp"

#include <numeric>
#include <sstream>

#include "wcav/matrix.hpp"

namespace wcav {

std::string WeilCentralClass::label() const {
  return "(" + to_string(a) + "," + to_string(q) + ")_" + std::to_string(g);
}

WeilCentralClass new_class(const Int& a, const Int& q, unsigned long g) {
  if (g == 0) throw ValidationError("dimension g must be positive");
  auto [p, r] = prime_power_decompose(q);
  WeilCentralClass cls;
  cls.a = a;
  cls.q = q;
  cls.g = g;
  cls.p = p;
  cls.r = r;
  cls.q_to_g = pow(q, g);
  if (a * a > 4 * cls.q_to_g) {
    throw ValidationError("Weil bound violated: a^2 = " + to_string(Int(a * a)) + " > 4 q^g = " +
                          to_string(Int(4 * cls.q_to_g)));
  }
  cls.ordinary = gcd(a, p) == 1;
  return cls;
}

// ---------------------------------------------------------------------------
// WeilPolynomial

WeilPolynomial::WeilPolynomial(unsigned long g, Int base, std::vector<Int> coeffs)
    : g_(g), base_(std::move(base)), coeffs_(std::move(coeffs)) {
  if (g_ == 0) throw ValidationError("Weil polynomial needs g >= 1");
  if (coeffs_.size() != 2 * g_ + 1) {
    throw ValidationError("expected " + std::to_string(2 * g_ + 1) + " coefficients, got " +
                          std::to_string(coeffs_.size()));
  }
  if (base_ < 2) throw ValidationError("base field size must be at least 2");
  if (coeffs_.back() != 1) throw ValidationError("Weil polynomial must be monic");
  for (unsigned long i = 0; i <= g_; ++i) {
    if (coeffs_[i] != pow(base_, g_ - i) * coeffs_[2 * g_ - i]) {
      throw ValidationError("q-symmetry fails at coefficient " + std::to_string(i) + " of " +
                            to_string());
    }
  }
}

WeilPolynomial WeilPolynomial::of(const WeilCentralClass& cls) {
  std::vector<Int> c(2 * cls.g + 1, Int(0));
  c[0] = cls.q_to_g;
  c[cls.g] = cls.a;
  c[2 * cls.g] = 1;
  return {cls.g, cls.q, std::move(c)};
}

Int WeilPolynomial::at(const Int& x) const {
  Int v = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) v = v * x + *it;
  return v;
}

Int WeilPolynomial::derivative_at(const Int& x) const {
  Int v = 0;
  for (std::size_t i = coeffs_.size() - 1; i >= 1; --i) v = v * x + coeffs_[i] * i;
  return v;
}

Int WeilPolynomial::at_one() const {
  return std::accumulate(coeffs_.begin(), coeffs_.end(), Int(0));
}

Int WeilPolynomial::derivative_at_one() const {
  Int v = 0;
  for (std::size_t i = 1; i < coeffs_.size(); ++i) v += coeffs_[i] * i;
  return v;
}

bool WeilPolynomial::is_central() const {
  for (std::size_t i = 1; i < coeffs_.size() - 1; ++i) {
    if (i != g_ && coeffs_[i] != 0) return false;
  }
  return true;
}

std::string WeilPolynomial::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    const Int& c = coeffs_[i];
    if (c == 0) continue;
    const Int mag = abs(c);
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (mag != 1 || i == 0) os << wcav::to_string(mag);
    if (i >= 1) os << 't';
    if (i >= 2) os << '^' << i;
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// Power sums and the a_n recursion

PowerSumSequence::PowerSumSequence(WeilCentralClass cls) : cls_(std::move(cls)) {
  values_.push_back(2);
  values_.push_back(-cls_.a);
}

Int PowerSumSequence::operator()(unsigned long n) const {
  std::lock_guard lock(mutex_);
  while (values_.size() <= n) {
    const std::size_t m = values_.size();
    values_.push_back(-cls_.a * values_[m - 1] - cls_.q_to_g * values_[m - 2]);
  }
  return values_[n];
}

Int power_sum(const WeilCentralClass& cls, unsigned long n) {
  Int prev = 2, cur = -cls.a;
  if (n == 0) return prev;
  for (unsigned long m = 2; m <= n; ++m) {
    Int next = -cls.a * cur - cls.q_to_g * prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

std::vector<Int> a_n_paper_table(const WeilCentralClass& cls, unsigned long n_max) {
  if (!cls.ordinary) {
    throw DomainError("a_n recursion requires an ordinary class; " + cls.label() +
                      " has p | a");
  }
  std::vector<Int> a(n_max + 1);
  a[0] = -1;
  std::vector<Int> q_powers{1};
  Int a1_power = 1;
  for (unsigned long n = 1; n <= n_max; ++n) {
    a1_power *= cls.a;
    q_powers.push_back(q_powers.back() * cls.q_to_g);
    Int v = (n % 2 == 1) ? a1_power : Int(-a1_power);
    for (unsigned long i = 1; i <= n / 2; ++i) v -= binomial(n, i) * a[n - 2 * i] * q_powers[i];
    a[n] = std::move(v);
  }
  return a;
}

Int a_n_paper(const WeilCentralClass& cls, unsigned long n) {
  if (n == 0) throw DomainError("a_n is defined for n >= 1");
  return a_n_paper_table(cls, n)[n];
}

bool is_central_extension(const WeilCentralClass& cls, unsigned long n) {
  if (!cls.ordinary) throw DomainError("central-extension test requires an ordinary class");
  if (n == 0) throw DomainError("extension degree must be positive");
  return std::gcd(n, cls.g) == 1;
}

// ---------------------------------------------------------------------------
// Extensions

std::vector<Int> coefficients_from_power_sums(std::span<const Int> power_sums) {
  const std::size_t k = power_sums.size();
  std::vector<Int> e(k + 1);
  e[0] = 1;
  for (std::size_t m = 1; m <= k; ++m) {
    Int s = 0;
    for (std::size_t i = 1; i <= m; ++i) {
      if (i % 2 == 1) {
        s += e[m - i] * power_sums[i - 1];
      } else {
        s -= e[m - i] * power_sums[i - 1];
      }
    }
    if (!mpz_divisible_ui_p(s.get_mpz_t(), m)) {
      throw InternalError("inexact division by " + std::to_string(m) + " in Newton's identities");
    }
    mpz_divexact_ui(e[m].get_mpz_t(), s.get_mpz_t(), m);
  }
  std::vector<Int> coeffs(k + 1);
  for (std::size_t m = 0; m <= k; ++m) coeffs[k - m] = (m % 2 == 0) ? e[m] : Int(-e[m]);
  return coeffs;
}

namespace {

WeilPolynomial checked_polynomial(unsigned long g, Int base, std::vector<Int> coeffs) {
  try {
    return WeilPolynomial(g, std::move(base), std::move(coeffs));
  } catch (const ValidationError& e) {
    throw InternalError(std::string("extension polynomial failed validation: ") + e.what());
  }
}

}  // namespace

WeilPolynomial extension_weil_poly(const WeilPolynomial& f, unsigned long n) {
  if (n == 0) throw DomainError("extension degree must be positive");
  const unsigned long g = f.g();
  const std::span<const Int> low(f.coeffs().data(), 2 * g);
  const IntMatrix frob_n = companion_power(low, n);

  // D^1..D^g in full; trace(D^m) for m > g as trace(D^g D^{m-g}).
  std::vector<IntMatrix> powers{frob_n};
  for (unsigned long m = 2; m <= g; ++m) powers.push_back(powers.back() * frob_n);
  std::vector<Int> traces(2 * g);
  for (unsigned long m = 1; m <= 2 * g; ++m) {
    traces[m - 1] = m <= g ? powers[m - 1].trace() : trace_of_product(powers[g - 1], powers[m - g - 1]);
  }
  return checked_polynomial(g, pow(f.base(), n), coefficients_from_power_sums(traces));
}

WeilPolynomial extension_weil_poly(const WeilCentralClass& cls, unsigned long n) {
  return extension_weil_poly(WeilPolynomial::of(cls), n);
}

ExtensionTower::ExtensionTower(WeilPolynomial base, unsigned long n_max) : n_max_(n_max) {
  const unsigned long g = base.g();
  const std::span<const Int> low(base.coeffs().data(), 2 * g);
  const unsigned long k_max = 2 * g * n_max;
  std::vector<Int> trace_of_power(k_max + 1);
  IntMatrix power = IntMatrix::identity(2 * g);
  for (unsigned long k = 1; k <= k_max; ++k) {
    power = times_companion(power, low);
    trace_of_power[k] = power.trace();
  }
  extensions_.reserve(n_max);
  Int field = 1;
  for (unsigned long n = 1; n <= n_max; ++n) {
    field *= base.base();
    std::vector<Int> traces(2 * g);
    for (unsigned long m = 1; m <= 2 * g; ++m) traces[m - 1] = trace_of_power[n * m];
    extensions_.push_back(checked_polynomial(g, field, coefficients_from_power_sums(traces)));
  }
}

const WeilPolynomial& ExtensionTower::extension(unsigned long n) const {
  if (n == 0 || n > n_max_) {
    throw DomainError("extension degree " + std::to_string(n) + " outside [1, " +
                      std::to_string(n_max_) + "]");
  }
  return extensions_[n - 1];
}

Int point_count(const WeilCentralClass& cls, unsigned long n) {
  const WeilPolynomial fn = extension_weil_poly(cls, n);
  Int count = fn.at_one();
  if (cls.ordinary && std::gcd(n, cls.g) == 1) {
    const Int a_n = -power_sum(cls, n);
    if (!fn.is_central() || fn.middle() != a_n || count != pow(cls.q_to_g, n) + a_n + 1) {
      throw InternalError("central extension mismatch for " + cls.label() + " at n = " +
                          std::to_string(n));
    }
  }
  return count;
}

// ---------------------------------------------------------------------------
// P_n

Int eval_P_direct(const Int& x, unsigned long n) {
  if (n == 0) throw DomainError("P_n is defined for n >= 1");
  Int sum = 0, term = 1;
  for (unsigned long i = 0; i < n; ++i) {
    sum += term;
    term *= x;
  }
  return sum;
}

Int eval_P_recursive(const Int& x, unsigned long n) {
  if (n == 0 || n % 2 == 0) throw DomainError("recursive P_n requires odd n, got " + std::to_string(n));
  // memo[j] = P_{2j+1}(x)
  std::vector<Int> memo{Int(1)};
  for (unsigned long m = 3; m <= n; m += 2) {
    Int v = pow(Int(x + 1), m - 1);
    Int x_power = 1;
    for (unsigned long i = 1; i <= (m - 1) / 2; ++i) {
      x_power *= x;
      const Int weight = binomial(m, i) - 2 * binomial(m - 1, i - 1);
      v -= weight * x_power * memo[(m - 2 * i - 1) / 2];
    }
    memo.push_back(std::move(v));
  }
  return memo.back();
}

}  // namespace wcav
