#pragma once

// Cyclicity of isogeny classes from their Weil polynomials, the local
// classification for Weil-central classes, and the growth / cyclic-growth sets.

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "wcav/integer.hpp"
#include "wcav/weil.hpp"

namespace wcav {

enum class Verdict { no, yes, unknown };
std::string_view to_string(Verdict v);

/// Cyclic iff gcd(f'(1), hat(f(1))) = 1, with gcd(m, 0) = |m|. Unknown when
/// f(1) cannot be fully factored.
Verdict is_cyclic_class(const WeilPolynomial& f, const FactorOptions& options = {});

/// l-cyclic iff l does not divide gcd(hat(f(1)), f'(1)). Only v_l(f(1)) is
/// needed, so this never factors anything.
bool is_l_cyclic(const WeilPolynomial& f, const Int& l);

enum class LocalCase {
  l_not_dividing_g_and_not_qg1,  // l ∤ g, l ∤ q^g - 1
  l_not_dividing_g_but_qg1,      // l ∤ g, l | q^g - 1
  l_dividing_g,                  // l | g
  trivial_component,             // l ∤ f(1)
};
std::string_view to_string(LocalCase c);

struct LocalReport {
  Int l;
  unsigned long v_n1 = 0;
  LocalCase local_case = LocalCase::trivial_component;
  bool l_cyclic = true;
  std::optional<Int> omega;  // ω_l(q^g), present when l ∤ q
};

LocalReport classify_local(const WeilCentralClass& cls, const Int& l);

/// Truncated growth set {1} ∪ {n <= n_max : v_l(N_n) > v_l(N_1)}.
struct GrowthSets {
  Int l;
  unsigned long n_max = 0;
  bool baseline_trivial = false;  // l ∤ N_1
  std::vector<unsigned long> g_members;
  std::vector<unsigned long> c_members;
};

std::vector<unsigned long> growth_set(const WeilCentralClass& cls, const Int& l, unsigned long n_max);
std::vector<unsigned long> cyclic_growth_set(const WeilCentralClass& cls, const Int& l,
                                             unsigned long n_max);
/// Both sets from one pass over the extension tower.
GrowthSets growth_sets(const WeilCentralClass& cls, const Int& l, unsigned long n_max);

/// Hypotheses of the containment theorem that failed, by name.
struct NotApplicable {
  std::vector<std::string> failed;
  std::string reason() const;
};

struct Hypothesis {
  std::string name;
  bool holds = false;
};
/// l prime, ordinary, l ∤ g, l ∤ q^g - 1, v_l(N_1) >= 1, in that order.
std::vector<Hypothesis> theorem_hypotheses(const WeilCentralClass& cls, const Int& l);

struct TheoremSubsets {
  std::vector<unsigned long> g_subset;  // lN - 2N - ∪_{1<d|g} dN
  std::vector<unsigned long> c_subset;  // the above minus ωN
  std::optional<Int> omega;
  std::string g_expression;  // e.g. "5N - 2N - 3N"
  std::string c_expression;
};

std::variant<TheoremSubsets, NotApplicable> theorem_subsets(const WeilCentralClass& cls,
                                                            const Int& l, unsigned long n_max);

struct SetReport {
  Int l;
  unsigned long n_max = 0;
  std::vector<unsigned long> g_members;
  std::vector<unsigned long> c_members;
  TheoremSubsets theorem;
  bool g_containment_ok = false;
  bool c_containment_ok = false;
  std::vector<unsigned long> g_violations;  // theorem members missing from g_members
  std::vector<unsigned long> c_violations;
};

std::variant<SetReport, NotApplicable> verify_main_theorem(const WeilCentralClass& cls,
                                                           const Int& l, unsigned long n_max);

struct GrowthLemmaCheck {
  unsigned long lhs = 0;  // v_l(N_n)
  unsigned long rhs = 0;  // v_l(N_1) + v_l(n P_n(q^g))
  bool holds = false;
};

/// Requires n odd, l | N_1 and an ordinary class.
GrowthLemmaCheck growth_lemma_check(const WeilCentralClass& cls, const Int& l, unsigned long n);

}  // namespace wcav
