#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <variant>
#include <vector>

namespace traceval {

/**
 * JSON tree with deterministic serialization: object keys are emitted in
 * sorted order, numbers through std::to_chars (17 significant digits for
 * doubles, locale independent), so identical trees serialize byte-identically.
 */
class JsonValue {
 public:
  using Object = std::map<std::string, JsonValue>;
  using Array = std::vector<JsonValue>;

  JsonValue() : value_(nullptr) {}
  JsonValue(std::nullptr_t) : value_(nullptr) {}
  JsonValue(bool b) : value_(b) {}
  JsonValue(int i) : value_(static_cast<std::int64_t>(i)) {}
  JsonValue(std::int64_t i) : value_(i) {}
  JsonValue(std::uint64_t i) : value_(i) {}
  JsonValue(double x) : value_(x) {}
  JsonValue(const char* s) : value_(std::string(s)) {}
  JsonValue(std::string s) : value_(std::move(s)) {}
  JsonValue(Object o) : value_(std::move(o)) {}
  JsonValue(Array a) : value_(std::move(a)) {}

  std::string dump() const;

 private:
  std::variant<std::nullptr_t, bool, std::int64_t, std::uint64_t, double, std::string, Object,
               Array>
      value_;
};

/** Shortest-form decimal rendering with 17 significant digits. */
std::string format_double(double x);

/** Minimal string escaping for JSON and CSV cells. */
std::string json_escape(const std::string& s);

}  // namespace traceval
