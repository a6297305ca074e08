#include "traceval/report_io.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>

namespace traceval {

std::string format_double(double x) {
  if (!std::isfinite(x)) return "null";
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), x, std::chars_format::general, 17);
  return std::string(buf, res.ptr);
}

std::string json_escape(const std::string& s) {
  std::string out;
  out.reserve(s.size() + 2);
  for (char c : s) {
    switch (c) {
      case '"':
        out += "\\\"";
        break;
      case '\\':
        out += "\\\\";
        break;
      case '\n':
        out += "\\n";
        break;
      case '\t':
        out += "\\t";
        break;
      case '\r':
        out += "\\r";
        break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof(buf), "\\u%04x", c);
          out += buf;
        } else {
          out += c;
        }
    }
  }
  return out;
}

namespace {

struct DumpVisitor {
  std::string& out;
  void operator()(std::nullptr_t) const { out += "null"; }
  void operator()(bool b) const { out += b ? "true" : "false"; }
  void operator()(std::int64_t i) const {
    char buf[32];
    auto res = std::to_chars(buf, buf + sizeof(buf), i);
    out.append(buf, res.ptr);
  }
  void operator()(std::uint64_t i) const {
    char buf[32];
    auto res = std::to_chars(buf, buf + sizeof(buf), i);
    out.append(buf, res.ptr);
  }
  void operator()(double x) const { out += format_double(x); }
  void operator()(const std::string& s) const {
    out += '"';
    out += json_escape(s);
    out += '"';
  }
  void operator()(const JsonValue::Object& object) const {
    out += '{';
    bool first = true;
    for (const auto& [key, val] : object) {
      if (!first) out += ',';
      first = false;
      out += '"';
      out += json_escape(key);
      out += "\":";
      out += val.dump();
    }
    out += '}';
  }
  void operator()(const JsonValue::Array& array) const {
    out += '[';
    bool first = true;
    for (const auto& val : array) {
      if (!first) out += ',';
      first = false;
      out += val.dump();
    }
    out += ']';
  }
};

}  // namespace

std::string JsonValue::dump() const {
  std::string out;
  std::visit(DumpVisitor{out}, value_);
  return out;
}

}  // namespace traceval
