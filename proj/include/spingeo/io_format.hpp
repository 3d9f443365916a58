// Deterministic text output: every float is printed with "%.17g" so repeated
// runs of the same build produce byte-identical CSV and JSON files.
#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace spingeo {

std::string format_double(double v);

// Numeric table; nullopt cells serialize as empty fields.
struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::optional<double>>> rows;
};

std::string to_csv(const CsvTable& table);

// Minimal ordered JSON tree. Keys keep insertion order; no escaping surprises
// because all keys/strings we emit are plain ASCII.
class JsonValue {
 public:
  static JsonValue object();
  static JsonValue array();
  static JsonValue number(double v);
  static JsonValue integer(long long v);
  static JsonValue string(std::string s);
  static JsonValue boolean(bool b);

  JsonValue& add(const std::string& key, JsonValue v);  // object member
  JsonValue& push(JsonValue v);                         // array element

  std::string dump(int indent = 2) const;

 private:
  enum class Kind { Object, Array, Number, Integer, String, Boolean };
  Kind kind_ = Kind::Object;
  double num_ = 0.0;
  long long int_ = 0;
  bool bool_ = false;
  std::string str_;
  std::vector<std::pair<std::string, JsonValue>> members_;
  std::vector<JsonValue> elements_;

  void dump_to(std::string& out, int indent, int depth) const;
};

void write_text_file(const std::string& path, const std::string& contents);

}  // namespace spingeo
