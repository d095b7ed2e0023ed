#ifndef QSET_CHECK_REPORT_HPP_
#define QSET_CHECK_REPORT_HPP_

#include <string>
#include <utility>
#include <vector>

namespace qset {

enum class CheckStatus { kPass, kFail, kSkip };

struct CheckItem {
  std::string name;
  CheckStatus status = CheckStatus::kPass;
  std::string detail;  // witness on failure, reason on skip
};

// Named pass/fail/skip results of an exhaustive check.
struct CheckReport {
  std::string subject;
  std::vector<CheckItem> items;

  void pass(std::string name, std::string detail = {}) {
    items.push_back({std::move(name), CheckStatus::kPass, std::move(detail)});
  }
  void fail(std::string name, std::string detail) {
    items.push_back({std::move(name), CheckStatus::kFail, std::move(detail)});
  }
  void skip(std::string name, std::string reason) {
    items.push_back({std::move(name), CheckStatus::kSkip, std::move(reason)});
  }
  // Records a pass or a fail depending on `ok`; `witness` is kept only on failure.
  void expect(bool ok, std::string name, std::string witness = {}) {
    if (ok) {
      pass(std::move(name));
    } else {
      fail(std::move(name), std::move(witness));
    }
  }

  bool ok() const {
    for (auto const& it : items)
      if (it.status == CheckStatus::kFail) return false;
    return true;
  }
  CheckItem const* find(std::string const& name) const {
    for (auto const& it : items)
      if (it.name == name) return &it;
    return nullptr;
  }
  std::vector<CheckItem> failures() const {
    std::vector<CheckItem> out;
    for (auto const& it : items)
      if (it.status == CheckStatus::kFail) out.push_back(it);
    return out;
  }
  void merge(CheckReport const& other) { items.insert(items.end(), other.items.begin(), other.items.end()); }
};

inline char const* to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::kPass: return "pass";
    case CheckStatus::kFail: return "fail";
    case CheckStatus::kSkip: return "skip";
  }
  return "?";
}

}  // namespace qset

#endif  // QSET_CHECK_REPORT_HPP_
