#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace homconf {

/// Outcome of an exhaustive verification: how many cases were checked and
/// a description of every case that failed.
struct CheckReport {
  std::size_t checked = 0;
  std::vector<std::string> violations;

  bool ok() const { return violations.empty(); }
  void fail(std::string what) { violations.push_back(std::move(what)); }
  void merge(const CheckReport& other) {
    checked += other.checked;
    violations.insert(violations.end(), other.violations.begin(), other.violations.end());
  }
};

}  // namespace homconf
