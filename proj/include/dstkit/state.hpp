#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "dstkit/errors.hpp"

namespace dstkit {

// User indifference token ("I don't mind").
inline constexpr const char* kDontCare = "dontcare";
// Sentinel value marking a slot removal in serialized state changes.
inline constexpr const char* kDeleteSentinel = "[DELETE]";

enum class ValueType { kFreeText, kCategorical, kTime, kInteger, kOption };

// A slot identifier, rendered canonically as "domain-slot" (lowercase, the
// first hyphen separates domain from slot; slots may contain spaces).
struct SlotName {
  std::string domain;
  std::string slot;

  std::string rendered() const { return domain + "-" + slot; }

  static std::optional<SlotName> try_parse(std::string_view rendered);
  static SlotName parse(std::string_view rendered);  // throws ContractError

  auto operator<=>(const SlotName&) const = default;
};

using SlotValue = std::string;

// Lowercase, trim, collapse whitespace; map "don't care"/"do not care"/"any"
// to the dontcare token; zero-pad h:mm-shaped values to hh:mm (shape-driven,
// so call sites without schema access normalize identically). Total: anything
// unrecognized passes through after the basic cleanup.
SlotValue normalize_value(std::string_view raw, ValueType value_type);

// The accumulated set of slot-value pairs through some turn.
struct DialogueState {
  std::map<SlotName, SlotValue> pairs;

  bool has(const SlotName& s) const { return pairs.count(s) > 0; }
  const SlotValue* find(const SlotName& s) const;
  bool empty() const { return pairs.empty(); }
  std::size_t size() const { return pairs.size(); }

  bool operator==(const DialogueState&) const = default;
};

// Additions and removals transforming one state into the next.
struct StateChange {
  std::map<SlotName, SlotValue> additions;
  std::set<SlotName> removals;

  bool empty() const { return additions.empty() && removals.empty(); }
  // Additions and removals must be disjoint by slot name.
  bool valid() const;
  // Slot names touched by this change (additions and removals).
  std::set<SlotName> touched_slots() const;

  bool operator==(const StateChange&) const = default;
};

// state minus removals, overwritten by additions. Removing an absent slot is
// a no-op.
DialogueState apply_delta(const DialogueState& state, const StateChange& delta);

// Inverse of apply_delta: apply_delta(prev, diff_states(prev, curr)) == curr.
StateChange diff_states(const DialogueState& prev, const DialogueState& curr);

// 1 iff additions and removals match exactly.
int jga_delta(const StateChange& pred, const StateChange& gold);

// 1 iff the pair sets match exactly.
int jga_state(const DialogueState& pred, const DialogueState& gold);

// F1 over signed pairs: each addition counts as (+, slot, value), each
// removal as (-, slot). Returns 1 when both changes are empty.
double state_overlap(const StateChange& a, const StateChange& b);

// Canonical JSON text: {"domain-slot": "value", ...}, keys sorted.
std::string serialize_state(const DialogueState& state);
// Canonical JSON text of a change; removals carry the "[DELETE]" sentinel.
std::string serialize_delta(const StateChange& delta);

// Parse the canonical object encodings back. Values are normalized on the way
// in. Throws ContractError on non-object input.
DialogueState parse_state(std::string_view json_text);
StateChange parse_delta(std::string_view json_text);

// One scoring/retrieval unit: the previous state, the latest exchange, and
// (capability-gated) the gold state change.
class TurnInstance {
 public:
  std::string dialogue_id;
  int turn_index = 0;
  DialogueState prev_state;
  std::string system_utterance;
  std::string user_utterance;

  TurnInstance() = default;
  TurnInstance(std::string dialogue_id, int turn_index, DialogueState prev_state,
               std::string system_utterance, std::string user_utterance,
               StateChange gold_delta)
      : dialogue_id(std::move(dialogue_id)),
        turn_index(turn_index),
        prev_state(std::move(prev_state)),
        system_utterance(std::move(system_utterance)),
        user_utterance(std::move(user_utterance)),
        gold_delta_(std::move(gold_delta)) {}

  std::string query_id() const { return dialogue_id + ":" + std::to_string(turn_index); }

  // Throws PracticalModeViolation on a gold-restricted copy.
  const StateChange& gold() const {
    if (!gold_accessible_) throw PracticalModeViolation();
    return gold_delta_;
  }
  bool gold_accessible() const { return gold_accessible_; }

  // Copy handed to practical-mode selectors: any gold access throws.
  TurnInstance without_gold() const {
    TurnInstance t = *this;
    t.gold_delta_ = StateChange{};
    t.gold_accessible_ = false;
    return t;
  }

 private:
  StateChange gold_delta_;
  bool gold_accessible_ = true;
};

}  // namespace dstkit
