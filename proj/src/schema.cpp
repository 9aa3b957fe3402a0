#include "dstkit/schema.hpp"

#include <fstream>
#include <set>

#include <json.hpp>

namespace dstkit {

const SlotSpec* Schema::find_slot(const SlotName& name) const {
  for (const auto& d : domains) {
    if (d.name != name.domain) continue;
    for (const auto& s : d.slots) {
      if (s.slot == name.slot) return &s;
    }
  }
  return nullptr;
}

ValueType Schema::value_type_of(const SlotName& name) const {
  const SlotSpec* spec = find_slot(name);
  return spec ? spec->value_type : ValueType::kFreeText;
}

void Schema::validate() const {
  for (const auto& d : domains) {
    if (d.name.empty()) throw ContractError("schema: empty domain name");
    std::set<std::string> seen;
    for (const auto& s : d.slots) {
      if (s.slot.empty()) throw ContractError("schema: empty slot name in " + d.name);
      if (!seen.insert(s.slot).second) {
        throw ContractError("schema: duplicate slot " + d.name + "-" + s.slot);
      }
      if ((s.value_type == ValueType::kCategorical || s.value_type == ValueType::kOption) &&
          s.categorical_values.empty()) {
        throw ContractError("schema: categorical slot " + d.name + "-" + s.slot +
                            " lists no values");
      }
    }
  }
}

ValueType value_type_from_string(const std::string& s) {
  if (s == "free_text") return ValueType::kFreeText;
  if (s == "categorical") return ValueType::kCategorical;
  if (s == "time") return ValueType::kTime;
  if (s == "integer") return ValueType::kInteger;
  if (s == "option") return ValueType::kOption;
  throw ContractError("unknown value_type: " + s);
}

std::string value_type_to_string(ValueType t) {
  switch (t) {
    case ValueType::kFreeText: return "free_text";
    case ValueType::kCategorical: return "categorical";
    case ValueType::kTime: return "time";
    case ValueType::kInteger: return "integer";
    case ValueType::kOption: return "option";
  }
  return "free_text";
}

Schema load_schema(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ContractError("cannot open schema file: " + path);
  nlohmann::json j = nlohmann::json::parse(in, nullptr, false);
  if (j.is_discarded() || !j.is_object() || !j.contains("domains")) {
    throw ContractError("malformed schema file: " + path);
  }

  Schema schema;
  for (const auto& dj : j.at("domains")) {
    DomainSpec d;
    d.name = dj.at("name").get<std::string>();
    for (const auto& sj : dj.at("slots")) {
      SlotSpec s;
      s.slot = sj.at("slot").get<std::string>();
      s.value_type = value_type_from_string(sj.value("value_type", "free_text"));
      if (sj.contains("categorical_values")) {
        s.categorical_values = sj.at("categorical_values").get<std::vector<std::string>>();
      }
      d.slots.push_back(std::move(s));
    }
    schema.domains.push_back(std::move(d));
  }
  schema.validate();
  return schema;
}

void save_schema(const Schema& schema, const std::string& path) {
  nlohmann::ordered_json j;
  j["domains"] = nlohmann::ordered_json::array();
  for (const auto& d : schema.domains) {
    nlohmann::ordered_json dj;
    dj["name"] = d.name;
    dj["slots"] = nlohmann::ordered_json::array();
    for (const auto& s : d.slots) {
      nlohmann::ordered_json sj;
      sj["slot"] = s.slot;
      sj["value_type"] = value_type_to_string(s.value_type);
      if (!s.categorical_values.empty()) sj["categorical_values"] = s.categorical_values;
      dj["slots"].push_back(std::move(sj));
    }
    j["domains"].push_back(std::move(dj));
  }
  std::ofstream out(path);
  if (!out) throw ContractError("cannot write schema file: " + path);
  out << j.dump(2) << "\n";
}

}  // namespace dstkit
