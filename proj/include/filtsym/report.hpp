#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace filtsym {

struct CheckRecord {
  std::string name;
  std::string inputs;
  double measured = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

/// Outcome of a verification suite: echoed parameters, one record per
/// check (pass iff measured <= tolerance), informational values, and an
/// aggregate that passes iff every record does. Serialization is
/// deterministic: fixed field order, fixed float formatting, no
/// timestamps (wall time is reported separately on stderr by the CLI).
class Report {
 public:
  explicit Report(std::string suite) : suite_(std::move(suite)) {}

  void param(const std::string& key, const std::string& value);
  void param(const std::string& key, long long value);
  void param(const std::string& key, unsigned long long value);
  void param(const std::string& key, double value);

  CheckRecord& check(const std::string& name, double measured, double tolerance,
                     const std::string& inputs = "");

  void info(const std::string& key, const std::string& value);
  void info(const std::string& key, double value);

  bool passed() const;
  int failed_count() const;
  const std::vector<CheckRecord>& checks() const { return checks_; }
  const std::string& suite() const { return suite_; }

  void write(std::ostream& out) const;
  std::string str() const;

 private:
  std::string suite_;
  std::vector<std::pair<std::string, std::string>> params_;
  std::vector<CheckRecord> checks_;
  std::vector<std::pair<std::string, std::string>> infos_;
};

/// Fixed-format scientific notation used everywhere a report prints a
/// measured value ("%.6e" with the C locale).
std::string format_measured(double value);

}  // namespace filtsym
