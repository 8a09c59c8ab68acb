#pragma once

#include <string>
#include <vector>

#include "liftlat/subset.hpp"

namespace liftlat {

/// One failed rule with a concrete witness. `witness` holds element
/// indices or subset masks depending on the rule; `detail` is the
/// human-readable rendering with element names.
struct Violation {
  std::string rule;
  std::vector<std::uint64_t> witness;
  std::string detail;
};

struct Verdict {
  std::vector<Violation> violations;
  std::string note;

  bool ok() const { return violations.empty(); }
  bool has(const std::string& rule) const {
    for (const auto& v : violations)
      if (v.rule == rule) return true;
    return false;
  }
  const Violation* find(const std::string& rule) const {
    for (const auto& v : violations)
      if (v.rule == rule) return &v;
    return nullptr;
  }
};

}  // namespace liftlat
