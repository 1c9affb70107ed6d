#include "gamelab/params.h"

#include <charconv>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace gamelab {
namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

}  // namespace

void ParamMap::set(std::string_view assignment) {
  const auto eq = assignment.find('=');
  if (eq == std::string_view::npos) {
    throw std::invalid_argument("expected key=value, got '" + std::string(assignment) + "'");
  }
  const std::string_view key = trim(assignment.substr(0, eq));
  if (key.empty()) throw std::invalid_argument("empty key in '" + std::string(assignment) + "'");
  values_[std::string(key)] = std::string(trim(assignment.substr(eq + 1)));
}

void ParamMap::merge_text(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    const std::string_view t = trim(line);
    if (t.empty() || t.front() == '#') continue;
    set(t);
  }
}

void ParamMap::merge_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot read config file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  merge_text(buf.str());
}

std::string ParamMap::get_string(const std::string& key, const std::string& fallback) const {
  auto it = values_.find(key);
  return it == values_.end() ? fallback : it->second;
}

std::int64_t ParamMap::get_int(const std::string& key, std::int64_t fallback) const {
  auto it = values_.find(key);
  if (it == values_.end()) return fallback;
  const std::string& s = it->second;
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size()) {
    throw std::invalid_argument("parameter " + key + " must be an integer, got '" + s + "'");
  }
  return v;
}

Rational ParamMap::get_rational(const std::string& key, const Rational& fallback) const {
  auto it = values_.find(key);
  if (it == values_.end()) return fallback;
  try {
    return parse_rational(it->second);
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("parameter " + key + " must be a rational, got '" + it->second + "'");
  }
}

bool ParamMap::get_bool(const std::string& key, bool fallback) const {
  auto it = values_.find(key);
  if (it == values_.end()) return fallback;
  if (it->second == "true" || it->second == "1" || it->second == "yes") return true;
  if (it->second == "false" || it->second == "0" || it->second == "no") return false;
  throw std::invalid_argument("parameter " + key + " must be a boolean, got '" + it->second + "'");
}

}  // namespace gamelab
