// Data-driven registry of identity verifications. Each entry sweeps one
// identity over a range (or to a series precision), comparing a closed form
// against an independent counting route, and reports machine-readable
// per-instance results. New verifications add one registry entry.
#pragma once

#include <functional>
#include <string>
#include <vector>

namespace coreforms::verify {

struct Options {
  long long range_lo = -1;   // -1: entry default
  long long range_hi = -1;
  long long precision = -1;  // -1: entry default
};

struct InstanceResult {
  long long n = 0;
  bool pass = false;
  bool skipped = false;
  std::string note;
};

struct Result {
  std::string id;
  std::string description;
  bool pass = false;
  long long instances = 0;
  long long failures = 0;
  long long skipped = 0;
  std::vector<InstanceResult> rows;
  std::vector<std::string> flagged;  // anomalies reported, not hidden
  std::string detail;
};

struct Entry {
  std::string id;
  std::string description;
  long long default_lo = 0;
  long long default_hi = 0;
  long long default_precision = 0;  // 0 when not precision-driven
  std::function<Result(const Options&)> run;
};

const std::vector<Entry>& registry();
const Entry* find(const std::string& id);
Result run_id(const std::string& id, const Options& opts = {});

}  // namespace coreforms::verify
