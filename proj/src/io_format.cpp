#include "spingeo/io_format.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace spingeo {

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string to_csv(const CsvTable& table) {
  std::string out;
  for (std::size_t i = 0; i < table.header.size(); ++i) {
    if (i) out += ',';
    out += table.header[i];
  }
  out += '\n';
  for (const auto& row : table.rows) {
    if (row.size() != table.header.size())
      throw std::invalid_argument("to_csv: row width differs from header width");
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out += ',';
      if (row[i]) out += format_double(*row[i]);
    }
    out += '\n';
  }
  return out;
}

JsonValue JsonValue::object() { JsonValue v; v.kind_ = Kind::Object; return v; }
JsonValue JsonValue::array() { JsonValue v; v.kind_ = Kind::Array; return v; }
JsonValue JsonValue::number(double x) { JsonValue v; v.kind_ = Kind::Number; v.num_ = x; return v; }
JsonValue JsonValue::integer(long long x) { JsonValue v; v.kind_ = Kind::Integer; v.int_ = x; return v; }
JsonValue JsonValue::string(std::string s) { JsonValue v; v.kind_ = Kind::String; v.str_ = std::move(s); return v; }
JsonValue JsonValue::boolean(bool b) { JsonValue v; v.kind_ = Kind::Boolean; v.bool_ = b; return v; }

JsonValue& JsonValue::add(const std::string& key, JsonValue v) {
  if (kind_ != Kind::Object) throw std::logic_error("JsonValue::add on non-object");
  members_.emplace_back(key, std::move(v));
  return *this;
}

JsonValue& JsonValue::push(JsonValue v) {
  if (kind_ != Kind::Array) throw std::logic_error("JsonValue::push on non-array");
  elements_.push_back(std::move(v));
  return *this;
}

namespace {

void append_escaped(std::string& out, const std::string& s) {
  out += '"';
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      case '\r': out += "\\r"; break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof buf, "\\u%04x", c);
          out += buf;
        } else {
          out += c;
        }
    }
  }
  out += '"';
}

void append_indent(std::string& out, int indent, int depth) {
  if (indent <= 0) return;
  out += '\n';
  out.append(static_cast<std::size_t>(indent) * depth, ' ');
}

}  // namespace

void JsonValue::dump_to(std::string& out, int indent, int depth) const {
  switch (kind_) {
    case Kind::Number:
      // JSON has no nan/inf literals; we never emit them, but fall back to null.
      if (std::isfinite(num_)) out += format_double(num_);
      else out += "null";
      break;
    case Kind::Integer: out += std::to_string(int_); break;
    case Kind::String: append_escaped(out, str_); break;
    case Kind::Boolean: out += bool_ ? "true" : "false"; break;
    case Kind::Object: {
      if (members_.empty()) { out += "{}"; break; }
      out += '{';
      for (std::size_t i = 0; i < members_.size(); ++i) {
        if (i) out += ',';
        append_indent(out, indent, depth + 1);
        append_escaped(out, members_[i].first);
        out += indent > 0 ? ": " : ":";
        members_[i].second.dump_to(out, indent, depth + 1);
      }
      append_indent(out, indent, depth);
      out += '}';
      break;
    }
    case Kind::Array: {
      if (elements_.empty()) { out += "[]"; break; }
      out += '[';
      for (std::size_t i = 0; i < elements_.size(); ++i) {
        if (i) out += ',';
        append_indent(out, indent, depth + 1);
        elements_[i].dump_to(out, indent, depth + 1);
      }
      append_indent(out, indent, depth);
      out += ']';
      break;
    }
  }
}

std::string JsonValue::dump(int indent) const {
  std::string out;
  dump_to(out, indent, 0);
  out += '\n';
  return out;
}

void write_text_file(const std::string& path, const std::string& contents) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open for writing: " + path);
  f.write(contents.data(), static_cast<std::streamsize>(contents.size()));
  if (!f) throw std::runtime_error("short write: " + path);
}

}  // namespace spingeo
