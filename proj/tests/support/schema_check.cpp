#include "schema_check.hpp"

#include <fstream>
#include <regex>
#include <stdexcept>

namespace nilmult::testing {

namespace {

using nlohmann::json;

bool has_type(const json& doc, const std::string& t) {
  if (t == "object") return doc.is_object();
  if (t == "array") return doc.is_array();
  if (t == "string") return doc.is_string();
  if (t == "integer") return doc.is_number_integer();
  if (t == "number") return doc.is_number();
  if (t == "boolean") return doc.is_boolean();
  if (t == "null") return doc.is_null();
  throw std::invalid_argument("unsupported schema type " + t);
}

class Checker {
 public:
  explicit Checker(const json& root) : root_(root) {}

  void check(const json& s, const json& doc, const std::string& path,
             std::vector<std::string>& errs) const {
    if (s.contains("$ref")) {
      const std::string ref = s["$ref"];
      const std::string prefix = "#/definitions/";
      if (ref.rfind(prefix, 0) != 0)
        throw std::invalid_argument("unsupported $ref " + ref);
      check(root_["definitions"][ref.substr(prefix.size())], doc, path, errs);
      return;
    }
    if (s.contains("type")) {
      bool ok = false;
      if (s["type"].is_array()) {
        for (const auto& t : s["type"]) ok = ok || has_type(doc, t);
      } else {
        ok = has_type(doc, s["type"]);
      }
      if (!ok) {
        errs.push_back(path + ": wrong type");
        return;
      }
    }
    if (s.contains("const") && doc != s["const"])
      errs.push_back(path + ": expected " + s["const"].dump());
    if (s.contains("enum")) {
      bool found = false;
      for (const auto& v : s["enum"]) found = found || v == doc;
      if (!found) errs.push_back(path + ": not in enum");
    }
    if (s.contains("minimum") && doc.is_number() &&
        doc.get<double>() < s["minimum"].get<double>())
      errs.push_back(path + ": below minimum");
    if (s.contains("pattern") && doc.is_string() &&
        !std::regex_search(doc.get<std::string>(),
                           std::regex(s["pattern"].get<std::string>())))
      errs.push_back(path + ": pattern mismatch");
    if (doc.is_object()) {
      if (s.contains("required"))
        for (const auto& k : s["required"])
          if (!doc.contains(k.get<std::string>()))
            errs.push_back(path + ": missing " + k.get<std::string>());
      const json props = s.value("properties", json::object());
      for (const auto& [k, v] : doc.items()) {
        if (props.contains(k))
          check(props[k], v, path + "/" + k, errs);
        else if (s.contains("additionalProperties") &&
                 s["additionalProperties"] == false)
          errs.push_back(path + ": unexpected property " + k);
      }
    }
    if (doc.is_array() && s.contains("items")) {
      for (std::size_t i = 0; i < doc.size(); ++i)
        check(s["items"], doc[i], path + "/" + std::to_string(i), errs);
    }
    if (s.contains("oneOf")) {
      int matches = 0;
      for (const auto& alt : s["oneOf"]) {
        std::vector<std::string> sub;
        check(alt, doc, path, sub);
        if (sub.empty()) ++matches;
      }
      if (matches != 1)
        errs.push_back(path + ": matches " + std::to_string(matches) +
                       " oneOf branches");
    }
  }

 private:
  const json& root_;
};

}  // namespace

std::vector<std::string> schema_errors(const json& schema, const json& doc) {
  std::vector<std::string> errs;
  Checker(schema).check(schema, doc, "", errs);
  return errs;
}

json load_result_schema() {
  std::ifstream in(NILMULT_SCHEMA_PATH);
  if (!in) throw std::runtime_error("cannot open " NILMULT_SCHEMA_PATH);
  return json::parse(in);
}

}  // namespace nilmult::testing
