#pragma once

// Theorem suites over the catalog and their reports.

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "fcr/catalog.hpp"
#include "fcr/classifier.hpp"
#include "fcr/verdict.hpp"

namespace fcr {

enum class Status { Pass, Fail, Skipped };
const char* to_string(Status s);

struct SuiteEntry {
  std::string assertion;
  std::string anchor;
  /// Replayable "ring=...; mset=...[; module=...]", empty for suite-level assertions.
  std::string instance;
  Status status = Status::Pass;
  std::string detail;
  std::vector<Verdict> verdicts;
};

struct SuiteReport {
  std::string suite;
  std::string anchor;
  std::vector<SuiteEntry> entries;
  /// Deterministic counters (checks performed, instances found, ...).
  std::map<std::string, std::uint64_t> stats;
  double wall_seconds = 0;

  std::size_t count(Status s) const;
  bool passed() const { return count(Status::Fail) == 0; }
};

/// Suite ids in run order.
const std::vector<std::string>& suite_ids();
bool is_suite(const std::string& id);

/// Catalog plus one classifier per ring, shared by every suite run against it.
class SuiteContext {
 public:
  explicit SuiteContext(CatalogSpec spec, std::size_t jobs = 1);
  const CatalogSpec& spec() const noexcept { return spec_; }
  const std::vector<CatalogEntry>& catalog() const noexcept { return catalog_; }
  Classifier& classifier(std::size_t ring_index) { return *classifiers_[ring_index]; }
  std::size_t jobs() const noexcept { return jobs_; }

 private:
  CatalogSpec spec_;
  std::vector<CatalogEntry> catalog_;
  std::vector<std::unique_ptr<Classifier>> classifiers_;
  std::size_t jobs_;
};

/// Unknown ids throw std::invalid_argument. Assertion failures are entries, never exceptions.
SuiteReport run_suite(const std::string& id, SuiteContext& ctx);

}  // namespace fcr
