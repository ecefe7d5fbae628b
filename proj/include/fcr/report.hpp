#pragma once

// Deterministic JSON and text reports, and the append-only counterexample database.

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "fcr/suites.hpp"
#include "fcr/verdict.hpp"

namespace fcr {

using Json = nlohmann::ordered_json;

inline constexpr const char* kReportSchema = "fcrlab.report/1";

enum class Format { Json, Text };
/// "json" or "text"; std::invalid_argument otherwise.
Format parse_format(const std::string& text);

Json verdict_json(const Verdict& v);
Json route_set_json(const RouteSet& rs);
Json suite_json(const SuiteReport& r, bool timing);

/// Catalog shape: ring count, pair count and construction errors.
Json catalog_json(const SuiteContext& ctx);

/// Top-level document for `check` and `verify-all`. Wall times only when `timing` is set.
Json run_json(const std::string& command, const SuiteContext& ctx, const std::vector<SuiteReport>& reports,
              bool timing);

/// One line per assertion with its anchor, then per-suite counts.
std::string run_text(const std::vector<SuiteReport>& reports, bool timing);

/// Compact, insertion-ordered, newline-terminated.
std::string dump(const Json& doc);

/// 64-bit FNV-1a of suite, assertion and instance, as 16 hex digits.
std::string counterexample_key(const std::string& suite, const std::string& assertion, const std::string& instance);

struct DbSummary {
  std::size_t added = 0;
  std::size_t already_present = 0;
};
/// Appends one JSON line per FAIL entry ("failure") and per authoritative false verdict carrying a
/// witness ("witness"); lines whose key is already in the file are skipped.
DbSummary append_counterexamples(const std::string& path, const std::vector<SuiteReport>& reports);

/// Environment variable naming the default database path.
inline constexpr const char* kDbEnv = "FCRLAB_DB";

}  // namespace fcr
