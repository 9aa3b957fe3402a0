#pragma once

#include <string>
#include <vector>

#include "dstkit/state.hpp"

namespace dstkit {

struct SlotSpec {
  std::string slot;
  ValueType value_type = ValueType::kFreeText;
  std::vector<std::string> categorical_values;  // for kCategorical / kOption
};

struct DomainSpec {
  std::string name;
  std::vector<SlotSpec> slots;
};

// The domain/slot guideline block rendered into prompts, and the source of
// value types for normalization.
struct Schema {
  std::vector<DomainSpec> domains;

  const SlotSpec* find_slot(const SlotName& name) const;
  ValueType value_type_of(const SlotName& name) const;  // kFreeText if unknown
  // Checks: non-empty names, unique slots per domain, categorical lists non-empty.
  void validate() const;
};

ValueType value_type_from_string(const std::string& s);
std::string value_type_to_string(ValueType t);

Schema load_schema(const std::string& path);
void save_schema(const Schema& schema, const std::string& path);

}  // namespace dstkit
