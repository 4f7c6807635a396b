#include "filtsym/report.hpp"

#include <cstdio>
#include <sstream>

namespace filtsym {

std::string format_measured(double value) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.6e", value);
  return buf;
}

void Report::param(const std::string& key, const std::string& value) {
  params_.emplace_back(key, value);
}

void Report::param(const std::string& key, long long value) {
  params_.emplace_back(key, std::to_string(value));
}

void Report::param(const std::string& key, unsigned long long value) {
  params_.emplace_back(key, std::to_string(value));
}

void Report::param(const std::string& key, double value) {
  params_.emplace_back(key, format_measured(value));
}

CheckRecord& Report::check(const std::string& name, double measured,
                           double tolerance, const std::string& inputs) {
  CheckRecord rec;
  rec.name = name;
  rec.inputs = inputs;
  rec.measured = measured;
  rec.tolerance = tolerance;
  rec.pass = measured <= tolerance;
  checks_.push_back(std::move(rec));
  return checks_.back();
}

void Report::info(const std::string& key, const std::string& value) {
  infos_.emplace_back(key, value);
}

void Report::info(const std::string& key, double value) {
  infos_.emplace_back(key, format_measured(value));
}

bool Report::passed() const { return failed_count() == 0; }

int Report::failed_count() const {
  int failed = 0;
  for (const auto& rec : checks_) {
    if (!rec.pass) ++failed;
  }
  return failed;
}

void Report::write(std::ostream& out) const {
  out << "suite: " << suite_ << "\n";
  for (const auto& [key, value] : params_) {
    out << "param: " << key << "=" << value << "\n";
  }
  for (const auto& rec : checks_) {
    out << "check: " << rec.name << " status=" << (rec.pass ? "pass" : "fail")
        << " measured=" << format_measured(rec.measured)
        << " tolerance=" << format_measured(rec.tolerance);
    if (!rec.inputs.empty()) out << " inputs=\"" << rec.inputs << "\"";
    out << "\n";
  }
  for (const auto& [key, value] : infos_) {
    out << "info: " << key << "=" << value << "\n";
  }
  out << "summary: status=" << (passed() ? "pass" : "fail")
      << " checks=" << checks_.size() << " failed=" << failed_count() << "\n";
}

std::string Report::str() const {
  std::ostringstream oss;
  write(oss);
  return oss.str();
}

}  // namespace filtsym
