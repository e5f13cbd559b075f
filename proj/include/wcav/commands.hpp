#pragma once

// The CLI subcommands as pure functions returning report envelopes.

#include <cstdint>
#include <string>
#include <vector>

#include "wcav/integer.hpp"
#include "wcav/report.hpp"

namespace wcav {

struct CommandOptions {
  FactorOptions factor = FactorOptions::from_env();
  unsigned long n_max = 100;
  unsigned long n_max_cap = 5000;
  std::uint64_t seed = 0;
  unsigned threads = 0;
  std::uint32_t ec_cap = 200;
};

struct ClassArgs {
  std::string a;
  std::string q;
  unsigned long g = 1;
};

ReportEnvelope cmd_analyze(const ClassArgs& cls, const std::vector<std::string>& primes,
                           const CommandOptions& options = {});
ReportEnvelope cmd_extend(const ClassArgs& cls, unsigned long n, const CommandOptions& options = {});
ReportEnvelope cmd_sets(const ClassArgs& cls, const std::string& l, const CommandOptions& options = {});
ReportEnvelope cmd_table(const CommandOptions& options = {});
ReportEnvelope cmd_ec_verify(std::uint32_t p_max, const CommandOptions& options = {});

/// The four example classes with their distinguished prime.
struct TableRow {
  long a;
  unsigned long q;
  unsigned long g;
  unsigned long l;
};
const std::vector<TableRow>& table_rows();

}  // namespace wcav
