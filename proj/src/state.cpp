#include "dstkit/state.hpp"

#include <algorithm>
#include <cctype>

#include <json.hpp>

namespace dstkit {

std::optional<SlotName> SlotName::try_parse(std::string_view rendered) {
  auto pos = rendered.find('-');
  if (pos == std::string_view::npos || pos == 0 || pos + 1 >= rendered.size()) {
    return std::nullopt;
  }
  return SlotName{std::string(rendered.substr(0, pos)),
                  std::string(rendered.substr(pos + 1))};
}

SlotName SlotName::parse(std::string_view rendered) {
  auto s = try_parse(rendered);
  if (!s) throw ContractError("not a domain-slot name: " + std::string(rendered));
  return *s;
}

namespace {

std::string clean_text(std::string_view raw) {
  std::string out;
  out.reserve(raw.size());
  bool pending_space = false;
  for (char ch : raw) {
    unsigned char c = static_cast<unsigned char>(ch);
    if (std::isspace(c)) {
      pending_space = !out.empty();
      continue;
    }
    if (pending_space) {
      out.push_back(' ');
      pending_space = false;
    }
    out.push_back(static_cast<char>(std::tolower(c)));
  }
  return out;
}

bool all_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) {
    return std::isdigit(c) != 0;
  });
}

// h:mm or hh:mm -> zero-padded hh:mm; anything else untouched.
std::string pad_time_shape(std::string s) {
  auto colon = s.find(':');
  if (colon == std::string::npos) return s;
  std::string_view hours(s.data(), colon);
  std::string_view minutes(s.data() + colon + 1, s.size() - colon - 1);
  if (minutes.size() != 2 || !all_digits(minutes)) return s;
  if (hours.size() == 1 && all_digits(hours)) return "0" + s;
  return s;
}

}  // namespace

SlotValue normalize_value(std::string_view raw, ValueType /*value_type*/) {
  std::string s = clean_text(raw);
  if (s == "don't care" || s == "do not care" || s == "any" || s == kDontCare) {
    return kDontCare;
  }
  return pad_time_shape(std::move(s));
}

const SlotValue* DialogueState::find(const SlotName& s) const {
  auto it = pairs.find(s);
  return it == pairs.end() ? nullptr : &it->second;
}

bool StateChange::valid() const {
  for (const auto& s : removals) {
    if (additions.count(s)) return false;
  }
  return true;
}

std::set<SlotName> StateChange::touched_slots() const {
  std::set<SlotName> out = removals;
  for (const auto& [s, _] : additions) out.insert(s);
  return out;
}

DialogueState apply_delta(const DialogueState& state, const StateChange& delta) {
  DialogueState out = state;
  for (const auto& s : delta.removals) out.pairs.erase(s);
  for (const auto& [s, v] : delta.additions) out.pairs[s] = v;
  return out;
}

StateChange diff_states(const DialogueState& prev, const DialogueState& curr) {
  StateChange delta;
  for (const auto& [s, v] : curr.pairs) {
    const SlotValue* old = prev.find(s);
    if (!old || *old != v) delta.additions[s] = v;
  }
  for (const auto& [s, _] : prev.pairs) {
    if (!curr.has(s)) delta.removals.insert(s);
  }
  return delta;
}

int jga_delta(const StateChange& pred, const StateChange& gold) {
  return pred.additions == gold.additions && pred.removals == gold.removals ? 1 : 0;
}

int jga_state(const DialogueState& pred, const DialogueState& gold) {
  return pred.pairs == gold.pairs ? 1 : 0;
}

double state_overlap(const StateChange& a, const StateChange& b) {
  std::size_t size_a = a.additions.size() + a.removals.size();
  std::size_t size_b = b.additions.size() + b.removals.size();
  if (size_a == 0 && size_b == 0) return 1.0;
  if (size_a == 0 || size_b == 0) return 0.0;

  std::size_t common = 0;
  for (const auto& [s, v] : a.additions) {
    auto it = b.additions.find(s);
    if (it != b.additions.end() && it->second == v) ++common;
  }
  for (const auto& s : a.removals) {
    if (b.removals.count(s)) ++common;
  }
  return 2.0 * static_cast<double>(common) / static_cast<double>(size_a + size_b);
}

namespace {

std::string quote(const std::string& s) { return nlohmann::json(s).dump(); }

std::string render_object(const std::map<std::string, std::string>& kv) {
  if (kv.empty()) return "{}";
  std::string out = "{";
  bool first = true;
  for (const auto& [k, v] : kv) {
    if (!first) out += ", ";
    first = false;
    out += quote(k) + ": " + quote(v);
  }
  out += "}";
  return out;
}

}  // namespace

std::string serialize_state(const DialogueState& state) {
  std::map<std::string, std::string> kv;
  for (const auto& [s, v] : state.pairs) kv[s.rendered()] = v;
  return render_object(kv);
}

std::string serialize_delta(const StateChange& delta) {
  std::map<std::string, std::string> kv;
  for (const auto& [s, v] : delta.additions) kv[s.rendered()] = v;
  for (const auto& s : delta.removals) kv[s.rendered()] = kDeleteSentinel;
  return render_object(kv);
}

namespace {

nlohmann::json parse_object(std::string_view json_text, const char* what) {
  nlohmann::json j = nlohmann::json::parse(json_text, nullptr, false);
  if (j.is_discarded() || !j.is_object()) {
    throw ContractError(std::string("not a JSON object encoding a ") + what);
  }
  return j;
}

std::string value_to_string(const nlohmann::json& v) {
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

}  // namespace

DialogueState parse_state(std::string_view json_text) {
  DialogueState out;
  for (const auto& [k, v] : parse_object(json_text, "dialogue state").items()) {
    auto slot = SlotName::try_parse(k);
    if (!slot || !v.is_primitive() || v.is_null()) continue;
    out.pairs[*slot] = normalize_value(value_to_string(v), ValueType::kFreeText);
  }
  return out;
}

StateChange parse_delta(std::string_view json_text) {
  StateChange out;
  for (const auto& [k, v] : parse_object(json_text, "state change").items()) {
    auto slot = SlotName::try_parse(k);
    if (!slot || !v.is_primitive() || v.is_null()) continue;
    std::string raw = value_to_string(v);
    if (raw == kDeleteSentinel) {
      out.removals.insert(*slot);
      out.additions.erase(*slot);
    } else if (!out.removals.count(*slot)) {
      out.additions[*slot] = normalize_value(raw, ValueType::kFreeText);
    }
  }
  return out;
}

}  // namespace dstkit
