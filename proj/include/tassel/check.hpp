#pragma once

#include <string>

namespace tassel {

// Verdict of a witness validator: ok, or the first violated condition.
struct Check {
  bool ok = true;
  std::string violation;

  static Check pass() { return {}; }
  static Check fail(std::string why) { return {false, std::move(why)}; }
  explicit operator bool() const { return ok; }
};

}  // namespace tassel
