#include "wcav/report.hpp"

#include <iomanip>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace wcav {

std::string_view to_string(Status s) {
  switch (s) {
    case Status::ok: return "ok";
    case Status::not_applicable: return "not_applicable";
    case Status::unknown: return "unknown";
    case Status::error: return "error";
  }
  return "error";
}

Status status_from_string(std::string_view s) {
  if (s == "ok") return Status::ok;
  if (s == "not_applicable") return Status::not_applicable;
  if (s == "unknown") return Status::unknown;
  if (s == "error") return Status::error;
  throw std::invalid_argument("unknown status '" + std::string(s) + "'");
}

int exit_code(Status s) {
  switch (s) {
    case Status::ok: return 0;
    case Status::not_applicable:
    case Status::unknown: return 2;
    case Status::error: return 1;
  }
  return 1;
}

Json to_json(const ReportEnvelope& env) {
  Json j = {{"command", env.command},
            {"status", std::string(to_string(env.status))},
            {"inputs", env.inputs},
            {"results", env.results}};
  if (env.status != Status::ok || !env.reason.empty()) j["reason"] = env.reason;
  return j;
}

ReportEnvelope envelope_from_json(const Json& j) {
  if (!j.is_object()) throw std::invalid_argument("envelope must be a JSON object");
  ReportEnvelope env;
  try {
    env.command = j.at("command").get<std::string>();
    env.status = status_from_string(j.at("status").get<std::string>());
    env.inputs = j.at("inputs");
    env.results = j.at("results");
    if (j.contains("reason")) env.reason = j.at("reason").get<std::string>();
  } catch (const Json::exception& e) {
    throw std::invalid_argument(std::string("malformed envelope: ") + e.what());
  }
  if (env.status != Status::ok && env.reason.empty()) {
    throw std::invalid_argument("envelope with status " + std::string(to_string(env.status)) +
                                " lacks a reason");
  }
  return env;
}

std::string render_json(const ReportEnvelope& env) { return to_json(env).dump(2) + "\n"; }

ReportEnvelope parse_json(std::string_view text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw std::invalid_argument(std::string("invalid JSON: ") + e.what());
  }
  return envelope_from_json(j);
}

Format format_from_string(std::string_view s) {
  if (s == "text") return Format::text;
  if (s == "json") return Format::json;
  if (s == "csv") return Format::csv;
  throw std::invalid_argument("unknown format '" + std::string(s) + "'");
}

namespace {

std::string scalar(const Json& v) {
  if (v.is_null()) return "";
  if (v.is_string()) return v.get<std::string>();
  if (v.is_boolean()) return v.get<bool>() ? "yes" : "no";
  return v.dump();
}

std::string joined(const Json& list, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < list.size(); ++i) {
    if (i > 0) out += sep;
    out += scalar(list[i]);
  }
  return out;
}

std::string braces(const Json& list) { return "{" + joined(list, ", ") + "}"; }

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

void csv_row(std::ostringstream& os, const std::vector<std::string>& fields) {
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i > 0) os << ',';
    os << csv_field(fields[i]);
  }
  os << '\n';
}

std::string class_line(const Json& cls) {
  return scalar(cls["label"]) + "  [p = " + scalar(cls["p"]) + ", r = " + scalar(cls["r"]) + ", " +
         (cls["ordinary"].get<bool>() ? "ordinary" : "non-ordinary") + "]";
}

void text_analyze(std::ostringstream& os, const Json& r) {
  os << "class         " << class_line(r["class"]) << '\n'
     << "f(t)          " << scalar(r["weil_polynomial"]) << '\n'
     << "N_1 = f(1)    " << scalar(r["point_count"]) << " = " << scalar(r["factorization"]["text"]) << '\n'
     << "f'(1)         " << scalar(r["derivative_at_one"]) << '\n'
     << "cyclic        " << scalar(r["cyclic"]) << '\n';
  if (r["local"].empty()) return;
  os << '\n' << std::left << std::setw(8) << "l" << std::setw(10) << "v_l(N_1)" << std::setw(32) << "case"
     << std::setw(10) << "l-cyclic" << "omega_l(q^g)\n";
  for (const auto& loc : r["local"]) {
    os << std::setw(8) << scalar(loc["l"]) << std::setw(10) << scalar(loc["v_N1"]) << std::setw(32)
       << scalar(loc["case"]) << std::setw(10) << scalar(loc["l_cyclic"])
       << (loc["omega"].is_null() ? "-" : scalar(loc["omega"])) << '\n';
  }
}

void text_extend(std::ostringstream& os, const Json& r) {
  os << "class         " << class_line(r["class"]) << '\n'
     << "n             " << scalar(r["n"]) << "  (field size " << scalar(r["base"]) << ")\n"
     << "f_n(t)        " << scalar(r["polynomial"]) << '\n'
     << "coefficients  (" << joined(r["coefficients"], ", ") << ")  [c_0 .. c_2g]\n"
     << "N_n           " << scalar(r["point_count"]) << '\n'
     << "central       " << scalar(r["central"]) << '\n';
  if (!r["a_n"].is_null()) os << "a_n           " << scalar(r["a_n"]) << '\n';
  if (!r["recursion_agrees"].is_null()) {
    os << "recursion     " << (r["recursion_agrees"].get<bool>() ? "agrees with power sums and matrix" : "DISAGREES")
       << '\n';
  }
}

void text_sets(std::ostringstream& os, const Json& r) {
  os << "class         " << class_line(r["class"]) << '\n'
     << "l             " << scalar(r["l"]) << "   n <= " << scalar(r["n_max"]) << '\n';
  for (const auto& h : r["hypotheses"]) {
    os << "  [" << (h["holds"].get<bool>() ? "x" : " ") << "] " << scalar(h["name"]) << '\n';
  }
  if (r["baseline_trivial"].get<bool>()) os << "note          l does not divide N_1 (baseline-trivial)\n";
  os << "g_l members   " << braces(r["g_members"]) << '\n' << "c_l members   " << braces(r["c_members"]) << '\n';
  const Json& t = r["theorem"];
  if (t.is_null()) return;
  os << "omega_l(q^g)  " << (t["omega"].is_null() ? "-" : scalar(t["omega"])) << '\n'
     << "g_l contains  " << scalar(t["g_expression"]) << " = " << braces(t["g_subset"]) << "  ["
     << (r["g_containment_ok"].get<bool>() ? "verified" : "VIOLATED") << "]\n"
     << "c_l contains  " << scalar(t["c_expression"]) << " = " << braces(t["c_subset"]) << "  ["
     << (r["c_containment_ok"].get<bool>() ? "verified" : "VIOLATED") << "]\n";
}

void text_table(std::ostringstream& os, const Json& r) {
  os << std::left << std::setw(12) << "(a,q)_g" << std::setw(20) << "N = f(1)" << std::setw(6) << "l"
     << std::setw(8) << "omega" << std::setw(26) << "in g_l" << std::setw(32) << "in c_l" << "verified n <= "
     << scalar(r["n_max"]) << '\n';
  for (const auto& row : r["rows"]) {
    os << std::setw(12) << scalar(row["class"]["label"]) << std::setw(20) << scalar(row["factorization"]["text"])
       << std::setw(6) << scalar(row["l"]) << std::setw(8) << scalar(row["omega"]) << std::setw(26)
       << scalar(row["g_expression"]) << std::setw(32) << scalar(row["c_expression"])
       << (row["g_containment_ok"].get<bool>() && row["c_containment_ok"].get<bool>() ? "yes" : "NO") << '\n';
  }
  for (const auto& row : r["rows"]) {
    os << '\n' << scalar(row["class"]["label"]) << ", l = " << scalar(row["l"]) << '\n'
       << "  " << scalar(row["g_expression"]) << " = " << braces(row["g_subset"]) << '\n'
       << "  " << scalar(row["c_expression"]) << " = " << braces(row["c_subset"]) << '\n';
  }
}

void text_ec_verify(std::ostringstream& os, const Json& r) {
  os << "curves enumerated  " << scalar(r["total_curves"]) << "  (p <= " << scalar(r["p_max"]) << ")\n"
     << "all buckets agree  " << scalar(r["all_agree"]) << "\n\n";
  os << std::left << std::setw(6) << "p" << std::setw(6) << "a" << std::setw(6) << "N" << std::setw(8) << "curves"
     << std::setw(8) << "cyclic" << std::setw(12) << "all cyclic" << std::setw(11) << "criterion" << "agrees\n";
  for (const auto& prime : r["primes"]) {
    for (const auto& b : prime["buckets"]) {
      os << std::setw(6) << scalar(prime["p"]) << std::setw(6) << scalar(b["a"]) << std::setw(6)
         << scalar(b["point_count"]) << std::setw(8) << scalar(b["curves"]) << std::setw(8)
         << scalar(b["cyclic_curves"]) << std::setw(12) << scalar(b["all_cyclic"]) << std::setw(11)
         << scalar(b["criterion_cyclic"]) << scalar(b["agrees"]) << '\n';
    }
  }
}

std::string render_text(const ReportEnvelope& env) {
  std::ostringstream os;
  const Json& r = env.results;
  if (!r.empty()) {
    if (env.command == "analyze") text_analyze(os, r);
    else if (env.command == "extend") text_extend(os, r);
    else if (env.command == "sets") text_sets(os, r);
    else if (env.command == "table") text_table(os, r);
    else if (env.command == "ec-verify") text_ec_verify(os, r);
    else os << r.dump(2) << '\n';
  }
  os << "status        " << to_string(env.status);
  if (!env.reason.empty()) os << ": " << env.reason;
  os << '\n';
  return os.str();
}

std::string render_csv(const ReportEnvelope& env) {
  std::ostringstream os;
  const Json& r = env.results;
  if (env.status == Status::error || r.empty()) {
    csv_row(os, {"status", "reason"});
    csv_row(os, {std::string(to_string(env.status)), env.reason});
    return os.str();
  }
  if (env.command == "analyze") {
    csv_row(os, {"class", "N", "factorization", "f_prime_1", "cyclic", "l", "v_l", "case", "l_cyclic", "omega"});
    const std::vector<std::string> head = {scalar(r["class"]["label"]), scalar(r["point_count"]),
                                           scalar(r["factorization"]["text"]), scalar(r["derivative_at_one"]),
                                           scalar(r["cyclic"])};
    if (r["local"].empty()) {
      auto row = head;
      row.insert(row.end(), 5, "");
      csv_row(os, row);
    }
    for (const auto& loc : r["local"]) {
      auto row = head;
      for (const char* key : {"l", "v_N1", "case", "l_cyclic", "omega"}) row.push_back(scalar(loc[key]));
      csv_row(os, row);
    }
  } else if (env.command == "extend") {
    csv_row(os, {"class", "n", "base", "coefficients", "point_count", "central", "a_n"});
    csv_row(os, {scalar(r["class"]["label"]), scalar(r["n"]), scalar(r["base"]), joined(r["coefficients"], ";"),
                 scalar(r["point_count"]), scalar(r["central"]), scalar(r["a_n"])});
  } else if (env.command == "sets") {
    csv_row(os, {"class", "l", "n", "in_g", "in_c", "in_thm_g", "in_thm_c"});
    auto contains = [](const Json& list, unsigned long n) {
      for (const auto& v : list) {
        if (v.get<unsigned long>() == n) return true;
      }
      return false;
    };
    const Json& t = r["theorem"];
    const unsigned long n_max = r["n_max"].get<unsigned long>();
    for (unsigned long n = 1; n <= n_max; ++n) {
      csv_row(os, {scalar(r["class"]["label"]), scalar(r["l"]), std::to_string(n),
                   contains(r["g_members"], n) ? "1" : "0", contains(r["c_members"], n) ? "1" : "0",
                   t.is_null() ? "" : (contains(t["g_subset"], n) ? "1" : "0"),
                   t.is_null() ? "" : (contains(t["c_subset"], n) ? "1" : "0")});
    }
  } else if (env.command == "table") {
    csv_row(os, {"class", "N", "factorization", "l", "omega", "g_expression", "c_expression", "g_subset", "c_subset",
                 "g_containment_ok", "c_containment_ok"});
    for (const auto& row : r["rows"]) {
      csv_row(os, {scalar(row["class"]["label"]), scalar(row["point_count"]), scalar(row["factorization"]["text"]),
                   scalar(row["l"]), scalar(row["omega"]), scalar(row["g_expression"]), scalar(row["c_expression"]),
                   joined(row["g_subset"], ";"), joined(row["c_subset"], ";"), scalar(row["g_containment_ok"]),
                   scalar(row["c_containment_ok"])});
    }
  } else if (env.command == "ec-verify") {
    csv_row(os, {"p", "a", "point_count", "curves", "cyclic_curves", "all_cyclic", "criterion_cyclic", "agrees"});
    for (const auto& prime : r["primes"]) {
      for (const auto& b : prime["buckets"]) {
        csv_row(os, {scalar(prime["p"]), scalar(b["a"]), scalar(b["point_count"]), scalar(b["curves"]),
                     scalar(b["cyclic_curves"]), scalar(b["all_cyclic"]), scalar(b["criterion_cyclic"]),
                     scalar(b["agrees"])});
      }
    }
  }
  return os.str();
}

}  // namespace

std::string render(const ReportEnvelope& env, Format format) {
  switch (format) {
    case Format::json: return render_json(env);
    case Format::csv: return render_csv(env);
    case Format::text: return render_text(env);
  }
  return render_text(env);
}

}  // namespace wcav
