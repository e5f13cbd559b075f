#include "wcav/commands.hpp"

#include <algorithm>
#include <numeric>

#include "wcav/cyclicity.hpp"
#include "wcav/ec_oracle.hpp"
#include "wcav/weil.hpp"

namespace wcav {

namespace {

Json class_json(const WeilCentralClass& cls) {
  return {{"label", cls.label()},
          {"a", to_string(cls.a)},
          {"q", to_string(cls.q)},
          {"g", cls.g},
          {"p", to_string(cls.p)},
          {"r", cls.r},
          {"ordinary", cls.ordinary}};
}

Json factorization_json(const Factorization& f) {
  Json factors = Json::array();
  for (const auto& [p, e] : f.factors) factors.push_back({{"prime", to_string(p)}, {"exponent", e}});
  return {{"text", f.to_string()},
          {"complete", f.complete},
          {"factors", std::move(factors)},
          {"cofactor", to_string(f.cofactor)}};
}

Json optional_int(const std::optional<Int>& v) { return v ? Json(to_string(*v)) : Json(nullptr); }

Json local_json(const LocalReport& r) {
  return {{"l", to_string(r.l)},
          {"v_N1", r.v_n1},
          {"case", std::string(to_string(r.local_case))},
          {"l_cyclic", r.l_cyclic},
          {"omega", optional_int(r.omega)}};
}

Json class_inputs(const ClassArgs& args) { return {{"a", args.a}, {"q", args.q}, {"g", args.g}}; }

ReportEnvelope failed(ReportEnvelope env, Status status, std::string reason) {
  env.status = status;
  env.reason = std::move(reason);
  return env;
}

WeilCentralClass parse_class(const ClassArgs& args) {
  return new_class(parse_int(args.a), parse_int(args.q), args.g);
}

Int parse_prime(const std::string& text) {
  Int l = parse_int(text);
  if (!is_prime(l)) throw ValidationError("l = " + text + " is not prime");
  return l;
}

void check_n_max(unsigned long n_max, const CommandOptions& options) {
  if (n_max == 0) throw ValidationError("--nmax must be positive");
  if (n_max > options.n_max_cap) {
    throw ValidationError("--nmax " + std::to_string(n_max) + " exceeds the cap " +
                          std::to_string(options.n_max_cap));
  }
}

}  // namespace

const std::vector<TableRow>& table_rows() {
  static const std::vector<TableRow> rows = {
      {1, 73, 1, 5}, {11, 17, 3, 5}, {17, 19, 3, 23}, {20, 7, 6, 41}};
  return rows;
}

ReportEnvelope cmd_analyze(const ClassArgs& args, const std::vector<std::string>& primes,
                           const CommandOptions& options) {
  ReportEnvelope env;
  env.command = "analyze";
  env.inputs = class_inputs(args);
  env.inputs["l"] = primes;
  try {
    const WeilCentralClass cls = parse_class(args);
    const WeilPolynomial f = WeilPolynomial::of(cls);
    const Int n1 = f.at_one();
    const Factorization fact = factorize(n1, options.factor);
    const Verdict cyclic = is_cyclic_class(f, options.factor);

    std::vector<Int> ls;
    for (const auto& text : primes) ls.push_back(parse_prime(text));
    if (primes.empty()) {
      for (const auto& pe : fact.factors) ls.push_back(pe.prime);
    }
    Json locals = Json::array();
    for (const Int& l : ls) locals.push_back(local_json(classify_local(cls, l)));

    env.results = {{"class", class_json(cls)},
                   {"weil_polynomial", f.to_string()},
                   {"point_count", to_string(n1)},
                   {"factorization", factorization_json(fact)},
                   {"derivative_at_one", to_string(f.derivative_at_one())},
                   {"cyclic", std::string(to_string(cyclic))},
                   {"local", std::move(locals)}};
    if (cyclic == Verdict::unknown) {
      return failed(std::move(env), Status::unknown,
                    "N_1 could not be fully factored within the rho budget; global cyclicity unknown");
    }
  } catch (const std::exception& e) {
    return failed(std::move(env), Status::error, e.what());
  }
  return env;
}

ReportEnvelope cmd_extend(const ClassArgs& args, unsigned long n, const CommandOptions&) {
  ReportEnvelope env;
  env.command = "extend";
  env.inputs = class_inputs(args);
  env.inputs["n"] = n;
  try {
    if (n == 0) throw ValidationError("--n must be positive");
    const WeilCentralClass cls = parse_class(args);
    const WeilPolynomial fn = extension_weil_poly(cls, n);
    Json coeffs = Json::array();
    for (const auto& c : fn.coeffs()) coeffs.push_back(to_string(c));

    Json a_n = nullptr;
    Json recursion_agrees = nullptr;
    const bool central = fn.is_central();
    if (central) a_n = to_string(fn.middle());
    if (cls.ordinary && std::gcd(n, cls.g) == 1) {
      const Int by_recursion = a_n_paper(cls, n);
      recursion_agrees = by_recursion == -power_sum(cls, n) && central && by_recursion == fn.middle();
    }
    env.results = {{"class", class_json(cls)},
                   {"n", n},
                   {"base", to_string(fn.base())},
                   {"coefficients", std::move(coeffs)},
                   {"polynomial", fn.to_string()},
                   {"point_count", to_string(fn.at_one())},
                   {"central", central},
                   {"a_n", std::move(a_n)},
                   {"recursion_agrees", std::move(recursion_agrees)}};
    if (recursion_agrees.is_boolean() && !recursion_agrees.get<bool>()) {
      return failed(std::move(env), Status::error,
                    "a_n recursion disagrees with the companion-matrix extension");
    }
  } catch (const std::exception& e) {
    return failed(std::move(env), Status::error, e.what());
  }
  return env;
}

ReportEnvelope cmd_sets(const ClassArgs& args, const std::string& l_text, const CommandOptions& options) {
  ReportEnvelope env;
  env.command = "sets";
  env.inputs = class_inputs(args);
  env.inputs["l"] = l_text;
  env.inputs["n_max"] = options.n_max;
  try {
    check_n_max(options.n_max, options);
    const WeilCentralClass cls = parse_class(args);
    const Int l = parse_prime(l_text);

    Json hypotheses = Json::array();
    for (const auto& h : theorem_hypotheses(cls, l)) {
      hypotheses.push_back({{"name", h.name}, {"holds", h.holds}});
    }
    const GrowthSets sets = growth_sets(cls, l, options.n_max);
    env.results = {{"class", class_json(cls)},
                   {"l", to_string(l)},
                   {"n_max", options.n_max},
                   {"hypotheses", std::move(hypotheses)},
                   {"baseline_trivial", sets.baseline_trivial},
                   {"g_members", sets.g_members},
                   {"c_members", sets.c_members},
                   {"theorem", nullptr},
                   {"g_containment_ok", nullptr},
                   {"c_containment_ok", nullptr},
                   {"g_violations", Json::array()},
                   {"c_violations", Json::array()}};

    const auto verdict = verify_main_theorem(cls, l, options.n_max);
    if (const auto* na = std::get_if<NotApplicable>(&verdict)) {
      return failed(std::move(env), Status::not_applicable, na->reason());
    }
    const SetReport& report = std::get<SetReport>(verdict);
    env.results["theorem"] = {{"omega", optional_int(report.theorem.omega)},
                              {"g_expression", report.theorem.g_expression},
                              {"c_expression", report.theorem.c_expression},
                              {"g_subset", report.theorem.g_subset},
                              {"c_subset", report.theorem.c_subset}};
    env.results["g_containment_ok"] = report.g_containment_ok;
    env.results["c_containment_ok"] = report.c_containment_ok;
    env.results["g_violations"] = report.g_violations;
    env.results["c_violations"] = report.c_violations;
    if (!report.g_containment_ok || !report.c_containment_ok) {
      return failed(std::move(env), Status::error, "containment violated; see g_violations / c_violations");
    }
  } catch (const std::exception& e) {
    return failed(std::move(env), Status::error, e.what());
  }
  return env;
}

ReportEnvelope cmd_table(const CommandOptions& options) {
  ReportEnvelope env;
  env.command = "table";
  env.inputs = {{"n_max", options.n_max}};
  try {
    check_n_max(options.n_max, options);
    Json rows = Json::array();
    bool all_ok = true;
    for (const TableRow& row : table_rows()) {
      const WeilCentralClass cls = new_class(Int(row.a), Int(row.q), row.g);
      const Int n1 = WeilPolynomial::of(cls).at_one();
      const Int l(row.l);
      const auto verdict = verify_main_theorem(cls, l, options.n_max);
      const auto* report = std::get_if<SetReport>(&verdict);
      if (report == nullptr) {
        throw InternalError(cls.label() + ": " + std::get<NotApplicable>(verdict).reason());
      }
      all_ok = all_ok && report->g_containment_ok && report->c_containment_ok;
      rows.push_back({{"class", class_json(cls)},
                      {"point_count", to_string(n1)},
                      {"factorization", factorization_json(factorize(n1, options.factor))},
                      {"l", to_string(l)},
                      {"omega", optional_int(report->theorem.omega)},
                      {"g_expression", report->theorem.g_expression},
                      {"c_expression", report->theorem.c_expression},
                      {"g_subset", report->theorem.g_subset},
                      {"c_subset", report->theorem.c_subset},
                      {"g_members", report->g_members},
                      {"c_members", report->c_members},
                      {"g_containment_ok", report->g_containment_ok},
                      {"c_containment_ok", report->c_containment_ok}});
    }
    env.results = {{"n_max", options.n_max}, {"rows", std::move(rows)}};
    if (!all_ok) return failed(std::move(env), Status::error, "a containment check failed");
  } catch (const std::exception& e) {
    return failed(std::move(env), Status::error, e.what());
  }
  return env;
}

ReportEnvelope cmd_ec_verify(std::uint32_t p_max, const CommandOptions& options) {
  ReportEnvelope env;
  env.command = "ec-verify";
  env.inputs = {{"p_max", p_max}};
  try {
    if (p_max < 5) {
      throw ValidationError("--pmax " + std::to_string(p_max) + " is below the minimum field size 5");
    }
    if (p_max > options.ec_cap) {
      throw ValidationError("--pmax " + std::to_string(p_max) + " exceeds the cap " +
                            std::to_string(options.ec_cap));
    }
    ec::OracleOptions oracle{options.ec_cap, options.threads, options.seed};
    Json per_prime = Json::array();
    std::uint64_t total = 0;
    bool all_agree = true;
    for (unsigned long p : primes_below(p_max + 1)) {
      if (p < 5) continue;
      const ec::Census census = ec::class_census(static_cast<std::uint32_t>(p), oracle);
      Json buckets = Json::array();
      for (const auto& b : census.buckets) {
        const auto cyclic_curves =
            std::count_if(b.curves.begin(), b.curves.end(), [](const ec::CurveRecord& c) { return c.cyclic(); });
        buckets.push_back({{"a", b.a},
                           {"point_count", static_cast<std::int64_t>(p) + 1 + b.a},
                           {"curves", b.curves.size()},
                           {"cyclic_curves", cyclic_curves},
                           {"all_cyclic", b.all_cyclic},
                           {"criterion_cyclic", std::string(to_string(b.criterion_cyclic))},
                           {"agrees", b.agrees()}});
      }
      total += census.curves;
      all_agree = all_agree && census.all_agree();
      per_prime.push_back({{"p", p},
                           {"curves", census.curves},
                           {"singular", census.singular},
                           {"all_agree", census.all_agree()},
                           {"buckets", std::move(buckets)}});
    }
    env.results = {{"p_max", p_max}, {"total_curves", total}, {"all_agree", all_agree},
                   {"primes", std::move(per_prime)}};
    if (!all_agree) {
      return failed(std::move(env), Status::error, "cyclicity criterion disagrees with the curve census");
    }
  } catch (const std::exception& e) {
    return failed(std::move(env), Status::error, e.what());
  }
  return env;
}

}  // namespace wcav
