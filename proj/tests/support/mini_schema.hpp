#ifndef STALLINGS_TESTS_MINI_SCHEMA_HPP
#define STALLINGS_TESTS_MINI_SCHEMA_HPP

#include <fstream>
#include <regex>
#include <string>

#include <json.hpp>

namespace stallings::test {

// Validates the subset of JSON Schema the shipped schemas use: type
// (string or list), required, properties, items, enum, pattern, oneOf.
inline bool schema_matches(const nlohmann::json& schema, const nlohmann::json& value,
                           std::string* why) {
  using nlohmann::json;

  auto fail = [&](const std::string& message) {
    if (why) *why = message;
    return false;
  };

  if (schema.contains("type")) {
    auto type_ok = [&](const std::string& t) {
      if (t == "object") return value.is_object();
      if (t == "array") return value.is_array();
      if (t == "string") return value.is_string();
      if (t == "integer") return value.is_number_integer() || value.is_number_unsigned();
      if (t == "number") return value.is_number();
      if (t == "boolean") return value.is_boolean();
      if (t == "null") return value.is_null();
      return false;
    };
    const json& t = schema["type"];
    bool ok = false;
    if (t.is_string()) {
      ok = type_ok(t.get<std::string>());
    } else {
      for (const json& alt : t) ok = ok || type_ok(alt.get<std::string>());
    }
    if (!ok) return fail("type mismatch: " + value.dump());
  }

  if (schema.contains("enum")) {
    bool ok = false;
    for (const nlohmann::json& alt : schema["enum"]) ok = ok || (alt == value);
    if (!ok) return fail("enum mismatch: " + value.dump());
  }

  if (schema.contains("pattern") && value.is_string()) {
    std::regex re(schema["pattern"].get<std::string>());
    if (!std::regex_search(value.get<std::string>(), re)) {
      return fail("pattern mismatch: " + value.dump());
    }
  }

  if (schema.contains("required")) {
    for (const nlohmann::json& key : schema["required"]) {
      if (!value.contains(key.get<std::string>())) {
        return fail("missing required key " + key.get<std::string>());
      }
    }
  }

  if (schema.contains("properties") && value.is_object()) {
    for (const auto& [key, sub] : schema["properties"].items()) {
      if (value.contains(key) && !schema_matches(sub, value.at(key), why)) {
        if (why) *why = "at ." + key + ": " + *why;
        return false;
      }
    }
  }

  if (schema.contains("items") && value.is_array()) {
    for (const nlohmann::json& element : value) {
      if (!schema_matches(schema["items"], element, why)) return false;
    }
  }

  if (schema.contains("oneOf")) {
    int matches = 0;
    for (const nlohmann::json& alt : schema["oneOf"]) {
      std::string ignored;
      matches += schema_matches(alt, value, &ignored);
    }
    if (matches != 1) return fail("oneOf matched " + std::to_string(matches) + " branches");
  }

  return true;
}

inline nlohmann::json load_schema(const std::string& path) {
  std::ifstream in(path);
  nlohmann::json schema;
  in >> schema;
  return schema;
}

}  // namespace stallings::test

#endif
