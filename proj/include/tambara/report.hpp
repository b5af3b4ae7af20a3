#pragma once

// Verification reports: named check families, each with a pass/fail status,
// the number of individual checks run and the first failing witness.

#include <functional>
#include <string>
#include <vector>

#include <json.hpp>

namespace tambara {

struct ReportItem {
  std::string name;
  bool passed = true;
  std::size_t checks = 0;
  std::string witness;

  bool operator==(const ReportItem&) const = default;
};

struct Report {
  std::string suite;
  std::vector<ReportItem> items;
  bool complete = true;

  bool passed() const {
    for (const auto& i : items)
      if (!i.passed) return false;
    return true;
  }
  std::size_t failures() const {
    std::size_t n = 0;
    for (const auto& i : items) n += !i.passed;
    return n;
  }
  std::size_t checks() const {
    std::size_t n = 0;
    for (const auto& i : items) n += i.checks;
    return n;
  }
  const ReportItem* first_failure() const {
    for (const auto& i : items)
      if (!i.passed) return &i;
    return nullptr;
  }
  void merge(const Report& other, const std::string& prefix) {
    for (auto i : other.items) {
      i.name = prefix + i.name;
      items.push_back(std::move(i));
    }
    complete = complete && other.complete;
  }

  bool operator==(const Report&) const = default;
};

inline void to_json(nlohmann::json& j, const ReportItem& i) {
  j = nlohmann::json{{"name", i.name}, {"status", i.passed ? "pass" : "fail"}, {"checks", i.checks}, {"witness", i.witness}};
}
inline void from_json(const nlohmann::json& j, ReportItem& i) {
  i.name = j.at("name").get<std::string>();
  i.passed = j.at("status").get<std::string>() == "pass";
  i.checks = j.at("checks").get<std::size_t>();
  i.witness = j.at("witness").get<std::string>();
}
inline void to_json(nlohmann::json& j, const Report& r) {
  j = nlohmann::json{{"suite", r.suite}, {"items", r.items}, {"complete", r.complete}};
}
inline void from_json(const nlohmann::json& j, Report& r) {
  r.suite = j.at("suite").get<std::string>();
  r.items = j.at("items").get<std::vector<ReportItem>>();
  r.complete = j.at("complete").get<bool>();
}

/// Accumulates checks into a report until the budget runs out.
class CheckRun {
 public:
  CheckRun(std::string suite, std::size_t budget) : budget_(budget) { report_.suite = std::move(suite); }

  bool exhausted() const { return used_ >= budget_; }

  /// Records one check; `witness` is only evaluated on failure.
  bool expect(const std::string& family, bool ok, const std::function<std::string()>& witness) {
    ReportItem& it = item(family);
    if (exhausted()) {
      report_.complete = false;
      return ok;
    }
    ++used_;
    ++it.checks;
    if (!ok && it.passed) {
      it.passed = false;
      it.witness = witness();
    }
    return ok;
  }

  /// Records an exception raised while computing a check.
  void error(const std::string& family, const std::string& what) {
    ReportItem& it = item(family);
    ++it.checks;
    if (it.passed) {
      it.passed = false;
      it.witness = "exception: " + what;
    }
  }

  ReportItem& item(const std::string& family) {
    for (auto& i : report_.items)
      if (i.name == family) return i;
    report_.items.push_back(ReportItem{family, true, 0, ""});
    return report_.items.back();
  }

  Report& report() { return report_; }
  Report finish() {
    if (exhausted()) report_.complete = false;
    return report_;
  }

 private:
  Report report_;
  std::size_t budget_;
  std::size_t used_ = 0;
};

}  // namespace tambara
