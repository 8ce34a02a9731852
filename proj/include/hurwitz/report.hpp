#pragma once

#include <json.hpp>
#include <optional>
#include <string>
#include <vector>

namespace hurwitz {

struct CheckRecord {
  std::string name;
  bool passed = false;
  std::optional<std::string> counterexample;
};

// Ordered list of named checks with a derived summary.
class Report {
 public:
  explicit Report(std::string command) : command_(std::move(command)) {}

  void add(CheckRecord record) { checks_.push_back(std::move(record)); }
  void add(std::string name, bool passed, std::optional<std::string> counterexample = std::nullopt);
  void append(std::vector<CheckRecord> records);

  const std::string& command() const { return command_; }
  const std::vector<CheckRecord>& checks() const { return checks_; }
  std::size_t pass_count() const;
  std::size_t fail_count() const;
  // 0 when every check passed, 1 otherwise.
  int exit_code() const { return fail_count() == 0 ? 0 : 1; }

  // {command, checks: [{name, status, counterexample?}], summary: {pass, fail}}
  nlohmann::json to_json() const;
  // One "PASS name" / "FAIL name" line per check, counterexamples indented,
  // then a summary line.
  std::string to_text() const;

 private:
  std::string command_;
  std::vector<CheckRecord> checks_;
};

}  // namespace hurwitz
