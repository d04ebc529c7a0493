#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

namespace horo {

inline constexpr const char* kToolName = "horo";
inline constexpr const char* kToolVersion = "1.0.0";

// Self-describing result of one subcommand: the command and its parameters
// are echoed so a report can be regenerated from its own header, records are
// ordered deterministically, and the summary counts how many embedded checks
// passed.  Nothing time- or host-dependent is recorded.
struct ReportEnvelope {
  std::string command;
  std::vector<std::pair<std::string, std::string>> params;
  nlohmann::ordered_json records = nlohmann::ordered_json::array();
  long long verified = 0;
  long long mismatched = 0;
  long long gaps = 0;
};

nlohmann::ordered_json envelope_json(const ReportEnvelope& e);
std::string render_json(const ReportEnvelope& e);

// One tab-separated table with '#'-prefixed header lines; record fields
// become columns in order of first appearance, nested values stay JSON.
std::string render_tsv(const ReportEnvelope& e);

ReportEnvelope cmd_classify(int max_rank);
ReportEnvelope cmd_two_orbits(int max_rank);
ReportEnvelope cmd_octonion();

// Regenerates the three JSON reports and byte-compares each against
// <fixtures_dir>/{classify,two_orbits,octonion}.json.  Differences are
// printed to err as a unified diff.  Returns 0 when everything matches,
// 1 on any difference, 3 when a fixture file is missing.
int verify_all(int max_rank, const std::string& fixtures_dir, std::ostream& out,
               std::ostream& err);

}  // namespace horo
