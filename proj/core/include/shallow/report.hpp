#pragma once

#include <map>
#include <optional>
#include <string>

#include "shallow/harness.hpp"

namespace shallow {

struct ReportStyle {
  bool include_witnesses = false;
  bool timings = false;
};

/// One record as a single line of JSON with a fixed key order.
std::string report_json(const GraphReport& report, const ReportStyle& style = {});
/// One record as whitespace-separated key=value tokens; witnesses follow on
/// their own "witness <key> <document>" lines when requested.
std::string report_plain(const GraphReport& report, const ReportStyle& style = {});

std::string high_girth_json(const HighGirthReport& report);
std::string high_girth_plain(const HighGirthReport& report);

/// Multi-line description of the failed items of a record, for diagnostics.
std::string describe_violations(const GraphReport& report);

/// Aggregate over records: per item, the minimum slack and violation count.
class Summary {
 public:
  void add(const GraphReport& report);
  void set_runtime_ms(double ms) { runtime_ms_ = ms; }
  int records() const { return records_; }
  int violations() const { return violations_; }
  std::string table() const;

 private:
  struct Item {
    int evaluated = 0;
    int violations = 0;
    bool informational = false;
    std::optional<Rational> min_slack;
  };
  std::map<std::string, Item> items_;
  int records_ = 0;
  int violations_ = 0;
  int witness_failures_ = 0;
  double runtime_ms_ = 0;
};

}  // namespace shallow
