#pragma once

// Structured command output: one envelope per invocation, rendered as JSON,
// plain text or CSV.

#include <string>
#include <string_view>

#include <json.hpp>

namespace wcav {

using Json = nlohmann::ordered_json;

enum class Status { ok, not_applicable, unknown, error };

std::string_view to_string(Status s);
Status status_from_string(std::string_view s);

/// 0 for ok, 2 for not_applicable / unknown, 1 for error.
int exit_code(Status s);

struct ReportEnvelope {
  std::string command;
  Json inputs = Json::object();
  Json results = Json::object();
  Status status = Status::ok;
  std::string reason;  // required when status != ok

  bool operator==(const ReportEnvelope&) const = default;
};

Json to_json(const ReportEnvelope& env);
/// Throws std::invalid_argument on a malformed envelope.
ReportEnvelope envelope_from_json(const Json& j);

std::string render_json(const ReportEnvelope& env);
ReportEnvelope parse_json(std::string_view text);

enum class Format { text, json, csv };
Format format_from_string(std::string_view s);

/// Renders in the requested format; text and CSV layouts depend on the command.
std::string render(const ReportEnvelope& env, Format format);

}  // namespace wcav
