#pragma once

// String-keyed game parameters, as read from key=value config files and
// --set overrides.

#include <cstdint>
#include <map>
#include <string>
#include <string_view>

#include "gamelab/rational.h"

namespace gamelab {

class ParamMap {
 public:
  ParamMap() = default;

  // Accepts "key=value"; surrounding blanks are trimmed.
  void set(std::string_view assignment);
  void set(const std::string& key, const std::string& value) { values_[key] = value; }
  // Lines of key=value; blank lines and lines starting with '#' are skipped.
  void merge_text(std::string_view text);
  void merge_file(const std::string& path);

  bool has(const std::string& key) const { return values_.contains(key); }
  std::string get_string(const std::string& key, const std::string& fallback) const;
  std::int64_t get_int(const std::string& key, std::int64_t fallback) const;
  Rational get_rational(const std::string& key, const Rational& fallback) const;
  bool get_bool(const std::string& key, bool fallback) const;

  const std::map<std::string, std::string>& values() const { return values_; }

 private:
  std::map<std::string, std::string> values_;
};

}  // namespace gamelab
