#include "wcav/cyclicity.hpp"

#include <algorithm>
#include <numeric>

namespace wcav {

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::no: return "no";
    case Verdict::yes: return "yes";
    case Verdict::unknown: return "unknown";
  }
  return "unknown";
}

std::string_view to_string(LocalCase c) {
  switch (c) {
    case LocalCase::l_not_dividing_g_and_not_qg1: return "l_not_dividing_g_and_not_qg1";
    case LocalCase::l_not_dividing_g_but_qg1: return "l_not_dividing_g_but_qg1";
    case LocalCase::l_dividing_g: return "l_dividing_g";
    case LocalCase::trivial_component: return "trivial_component";
  }
  return "trivial_component";
}

Verdict is_cyclic_class(const WeilPolynomial& f, const FactorOptions& options) {
  const Int n = f.at_one();
  const std::optional<Int> h = hat(n, options);
  if (!h) return Verdict::unknown;
  return gcd(f.derivative_at_one(), *h) == 1 ? Verdict::yes : Verdict::no;
}

bool is_l_cyclic(const WeilPolynomial& f, const Int& l) {
  const unsigned long v = valuation(l, f.at_one());
  // The l-part of hat(f(1)) is l^{max(v-1, 0)}.
  if (v <= 1) return true;
  return !mpz_divisible_p(f.derivative_at_one().get_mpz_t(), l.get_mpz_t());
}

LocalReport classify_local(const WeilCentralClass& cls, const Int& l) {
  const WeilPolynomial f = WeilPolynomial::of(cls);
  LocalReport report;
  report.l = l;
  report.v_n1 = valuation(l, f.at_one());
  if (cls.p != l) report.omega = mult_order(cls.q_to_g, l);

  const bool l_divides_g = Int(cls.g) % l == 0;
  const bool l_divides_qg1 = Int(cls.q_to_g - 1) % l == 0;
  if (report.v_n1 == 0) {
    report.local_case = LocalCase::trivial_component;
    report.l_cyclic = true;
  } else if (l_divides_g) {
    report.local_case = LocalCase::l_dividing_g;
    report.l_cyclic = report.v_n1 <= 1;
  } else if (l_divides_qg1) {
    report.local_case = LocalCase::l_not_dividing_g_but_qg1;
    report.l_cyclic = report.v_n1 <= 1;
  } else {
    report.local_case = LocalCase::l_not_dividing_g_and_not_qg1;
    report.l_cyclic = true;
  }
  if (report.l_cyclic != is_l_cyclic(f, l)) {
    throw InternalError("local classification disagrees with the cyclicity criterion for " +
                        cls.label() + " at l = " + to_string(l));
  }
  return report;
}

GrowthSets growth_sets(const WeilCentralClass& cls, const Int& l, unsigned long n_max) {
  if (!is_prime(l)) throw DomainError("l = " + to_string(l) + " is not prime");
  if (n_max == 0) throw DomainError("n_max must be positive");
  const ExtensionTower tower(WeilPolynomial::of(cls), n_max);
  GrowthSets sets;
  sets.l = l;
  sets.n_max = n_max;
  const unsigned long base_v = valuation(l, tower.point_count(1));
  sets.baseline_trivial = base_v == 0;
  sets.g_members.push_back(1);
  sets.c_members.push_back(1);
  for (unsigned long n = 2; n <= n_max; ++n) {
    const WeilPolynomial& fn = tower.extension(n);
    if (valuation(l, fn.at_one()) <= base_v) continue;
    sets.g_members.push_back(n);
    if (is_l_cyclic(fn, l)) sets.c_members.push_back(n);
  }
  return sets;
}

std::vector<unsigned long> growth_set(const WeilCentralClass& cls, const Int& l, unsigned long n_max) {
  return growth_sets(cls, l, n_max).g_members;
}

std::vector<unsigned long> cyclic_growth_set(const WeilCentralClass& cls, const Int& l,
                                             unsigned long n_max) {
  return growth_sets(cls, l, n_max).c_members;
}

std::string NotApplicable::reason() const {
  std::string out = "hypotheses not met: ";
  for (std::size_t i = 0; i < failed.size(); ++i) {
    if (i > 0) out += "; ";
    out += failed[i];
  }
  return out;
}

std::vector<Hypothesis> theorem_hypotheses(const WeilCentralClass& cls, const Int& l) {
  std::vector<Hypothesis> hs;
  const bool prime = is_prime(l);
  hs.push_back({"l is prime", prime});
  hs.push_back({"class is ordinary", cls.ordinary});
  if (!prime) return hs;
  hs.push_back({"l does not divide g", Int(cls.g) % l != 0});
  hs.push_back({"l does not divide q^g - 1", Int(cls.q_to_g - 1) % l != 0});
  hs.push_back({"v_l(N_1) >= 1", valuation(l, Int(cls.q_to_g + cls.a + 1)) >= 1});
  return hs;
}

namespace {

std::optional<NotApplicable> check_hypotheses(const WeilCentralClass& cls, const Int& l) {
  NotApplicable na;
  for (const auto& h : theorem_hypotheses(cls, l)) {
    if (!h.holds) na.failed.push_back(h.name);
  }
  if (na.failed.empty()) return std::nullopt;
  return na;
}

std::vector<unsigned long> missing_from(const std::vector<unsigned long>& subset,
                                        const std::vector<unsigned long>& members) {
  std::vector<unsigned long> out;
  std::set_difference(subset.begin(), subset.end(), members.begin(), members.end(),
                      std::back_inserter(out));
  return out;
}

}  // namespace

std::variant<TheoremSubsets, NotApplicable> theorem_subsets(const WeilCentralClass& cls,
                                                            const Int& l, unsigned long n_max) {
  if (auto na = check_hypotheses(cls, l)) return *na;
  TheoremSubsets t;
  if (cls.p != l) t.omega = mult_order(cls.q_to_g, l);

  const unsigned long ell = l.fits_ulong_p() ? l.get_ui() : 0;
  for (unsigned long n = 1; ell != 0 && n <= n_max; ++n) {
    if (n % ell != 0 || n % 2 == 0 || std::gcd(n, cls.g) != 1) continue;
    t.g_subset.push_back(n);
    if (t.omega && Int(n) % *t.omega == 0) continue;
    t.c_subset.push_back(n);
  }

  // Symbolic form: lN - 2N, then one term per odd prime of g (every dN with
  // d | g, d > 1 lies in one of them).
  t.g_expression = to_string(l) + "N - 2N";
  for (const auto& [prime, e] : factorize(Int(cls.g)).factors) {
    if (prime != 2) t.g_expression += " - " + to_string(prime) + "N";
  }
  t.c_expression = t.g_expression;
  if (t.omega && mpz_popcount(t.omega->get_mpz_t()) != 1) {
    t.c_expression += " - " + to_string(*t.omega) + "N";
  }
  return t;
}

std::variant<SetReport, NotApplicable> verify_main_theorem(const WeilCentralClass& cls,
                                                           const Int& l, unsigned long n_max) {
  auto subsets = theorem_subsets(cls, l, n_max);
  if (auto* na = std::get_if<NotApplicable>(&subsets)) return *na;
  SetReport report;
  report.l = l;
  report.n_max = n_max;
  report.theorem = std::move(std::get<TheoremSubsets>(subsets));
  GrowthSets sets = growth_sets(cls, l, n_max);
  report.g_members = std::move(sets.g_members);
  report.c_members = std::move(sets.c_members);
  report.g_violations = missing_from(report.theorem.g_subset, report.g_members);
  report.c_violations = missing_from(report.theorem.c_subset, report.c_members);
  report.g_containment_ok = report.g_violations.empty();
  report.c_containment_ok = report.c_violations.empty();
  return report;
}

GrowthLemmaCheck growth_lemma_check(const WeilCentralClass& cls, const Int& l, unsigned long n) {
  if (n == 0 || n % 2 == 0) throw DomainError("growth inequality check requires odd n, got " + std::to_string(n));
  if (!cls.ordinary) throw DomainError("growth inequality check requires an ordinary class");
  const Int n1 = cls.q_to_g + cls.a + 1;
  const unsigned long v1 = valuation(l, n1);
  if (v1 == 0) throw DomainError("growth inequality check requires l | N_1");
  GrowthLemmaCheck check;
  check.lhs = valuation(l, point_count(cls, n));
  check.rhs = v1 + valuation(l, Int(n * eval_P_direct(cls.q_to_g, n)));
  check.holds = check.lhs >= check.rhs;
  return check;
}

}  // namespace wcav
