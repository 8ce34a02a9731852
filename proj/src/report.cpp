#include "hurwitz/report.hpp"

#include <algorithm>
#include <sstream>

namespace hurwitz {

void Report::add(std::string name, bool passed, std::optional<std::string> counterexample) {
  checks_.push_back({std::move(name), passed, passed ? std::nullopt : std::move(counterexample)});
}

void Report::append(std::vector<CheckRecord> records) {
  for (auto& r : records) checks_.push_back(std::move(r));
}

std::size_t Report::pass_count() const {
  return static_cast<std::size_t>(std::count_if(checks_.begin(), checks_.end(), [](const auto& c) { return c.passed; }));
}

std::size_t Report::fail_count() const { return checks_.size() - pass_count(); }

nlohmann::json Report::to_json() const {
  nlohmann::json checks = nlohmann::json::array();
  for (const auto& c : checks_) {
    nlohmann::json entry = {{"name", c.name}, {"status", c.passed ? "pass" : "fail"}};
    if (c.counterexample) entry["counterexample"] = *c.counterexample;
    checks.push_back(std::move(entry));
  }
  return {{"command", command_}, {"checks", std::move(checks)}, {"summary", {{"pass", pass_count()}, {"fail", fail_count()}}}};
}

std::string Report::to_text() const {
  std::ostringstream out;
  for (const auto& c : checks_) {
    out << (c.passed ? "PASS " : "FAIL ") << c.name << '\n';
    if (c.counterexample) out << "  counterexample: " << *c.counterexample << '\n';
  }
  out << pass_count() << " passed, " << fail_count() << " failed\n";
  return out.str();
}

}  // namespace hurwitz
