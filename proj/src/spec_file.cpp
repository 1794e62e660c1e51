#include "boundsyn/spec_file.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

namespace boundsyn {

namespace {

std::vector<std::string> string_array(const nlohmann::json& doc, const char* key, bool required) {
  if (!doc.contains(key)) {
    if (required) throw SpecError(std::string("missing key \"") + key + "\"");
    return {};
  }
  const auto& value = doc.at(key);
  if (!value.is_array()) throw SpecError(std::string("\"") + key + "\" must be an array of strings");
  std::vector<std::string> result;
  for (const auto& item : value) {
    if (!item.is_string()) throw SpecError(std::string("\"") + key + "\" must be an array of strings");
    result.push_back(item.get<std::string>());
  }
  return result;
}

std::vector<ltl::Formula> parse_formulas(const std::vector<std::string>& texts, const char* key) {
  std::vector<ltl::Formula> result;
  for (const auto& text : texts) {
    try {
      result.push_back(ltl::parse(text));
    } catch (const ltl::ParseError& e) {
      throw SpecError(std::string("in \"") + key + "\" formula \"" + text + "\": " + e.what());
    }
  }
  return result;
}

}  // namespace

Specification parse_specification(std::string_view json_text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw SpecError(std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object()) throw SpecError("specification must be a JSON object");

  Specification spec;
  if (!doc.contains("semantics") || !doc.at("semantics").is_string()) {
    throw SpecError("missing string key \"semantics\"");
  }
  const auto semantics = doc.at("semantics").get<std::string>();
  if (semantics == "mealy") spec.semantics = Semantics::Mealy;
  else if (semantics == "moore") spec.semantics = Semantics::Moore;
  else throw SpecError("\"semantics\" must be \"mealy\" or \"moore\"");

  spec.inputs = string_array(doc, "inputs", true);
  spec.outputs = string_array(doc, "outputs", true);
  spec.assumptions = parse_formulas(string_array(doc, "assumptions", false), "assumptions");
  spec.guarantees = parse_formulas(string_array(doc, "guarantees", true), "guarantees");

  std::set<std::string> declared;
  for (const auto& list : {spec.inputs, spec.outputs}) {
    for (const auto& name : list) {
      try {
        (void)ltl::Formula::atom(name);  // validates the identifier
      } catch (const Error& e) {
        throw SpecError(e.what());
      }
      if (!declared.insert(name).second) throw SpecError("atom \"" + name + "\" declared twice");
    }
  }
  if (declared.size() > static_cast<std::size_t>(kMaxAtoms)) throw SpecError("too many atoms");
  for (const auto& f : spec.assumptions) {
    for (const auto& a : f.atoms()) {
      if (!declared.count(a)) throw SpecError("undeclared atom \"" + a + "\"");
    }
  }
  for (const auto& f : spec.guarantees) {
    for (const auto& a : f.atoms()) {
      if (!declared.count(a)) throw SpecError("undeclared atom \"" + a + "\"");
    }
  }
  return spec;
}

Specification load_specification(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw SpecError("cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_specification(buffer.str());
}

}  // namespace boundsyn
