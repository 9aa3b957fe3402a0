#include "dstkit/corpus.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <set>

#include <json.hpp>

#include "dstkit/rng.hpp"

namespace dstkit {

TextView text_view_from_string(const std::string& s) {
  if (s == "delta_only") return TextView::kDeltaOnly;
  if (s == "delta_slots_only") return TextView::kDeltaSlotsOnly;
  if (s == "utterance_plus_delta_slots") return TextView::kUtterancePlusDeltaSlots;
  if (s == "context") return TextView::kContext;
  throw ContractError("unknown text view: " + s);
}

std::string text_view_to_string(TextView v) {
  switch (v) {
    case TextView::kDeltaOnly: return "delta_only";
    case TextView::kDeltaSlotsOnly: return "delta_slots_only";
    case TextView::kUtterancePlusDeltaSlots: return "utterance_plus_delta_slots";
    case TextView::kContext: return "context";
  }
  return "context";
}

namespace {

DialogueState state_from_json(const nlohmann::json& j) {
  DialogueState out;
  for (const auto& [k, v] : j.items()) {
    auto slot = SlotName::try_parse(k);
    if (!slot) throw ContractError("bad slot name: " + k);
    std::string raw = v.is_string() ? v.get<std::string>() : v.dump();
    out.pairs[*slot] = normalize_value(raw, ValueType::kFreeText);
  }
  return out;
}

bool blank(const std::string& s) {
  return std::all_of(s.begin(), s.end(),
                     [](unsigned char c) { return std::isspace(c) != 0; });
}

}  // namespace

std::vector<DialogueRecord> load_corpus(const std::string& path, CorpusFormat format) {
  if (format != CorpusFormat::kCanonicalJsonl) {
    throw ContractError("unsupported corpus format");
  }
  std::ifstream in(path);
  if (!in) throw ContractError("cannot open corpus file: " + path);

  std::vector<DialogueRecord> out;
  std::set<std::string> seen_ids;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (blank(line)) continue;
    nlohmann::json j = nlohmann::json::parse(line, nullptr, false);
    if (j.is_discarded() || !j.is_object() || !j.contains("dialogue_id") ||
        !j.contains("turns") || !j.at("turns").is_array()) {
      throw MalformedLineError(line_no, line, "expected {dialogue_id, turns: [...]}");
    }
    DialogueRecord d;
    try {
      d.dialogue_id = j.at("dialogue_id").get<std::string>();
      for (const auto& tj : j.at("turns")) {
        DialogueRecord::Turn t;
        t.system_utterance = tj.value("system", "");
        t.user_utterance = tj.at("user").get<std::string>();
        t.cumulative_state = state_from_json(tj.at("state"));
        d.turns.push_back(std::move(t));
      }
    } catch (const nlohmann::json::exception& e) {
      throw MalformedLineError(line_no, line, e.what());
    } catch (const ContractError& e) {
      throw MalformedLineError(line_no, line, e.what());
    }
    if (!seen_ids.insert(d.dialogue_id).second) {
      throw DuplicateDialogueIdError(d.dialogue_id);
    }
    out.push_back(std::move(d));
  }
  return out;
}

void save_corpus(const std::vector<DialogueRecord>& dialogues, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw ContractError("cannot write corpus file: " + path);
  for (const auto& d : dialogues) {
    nlohmann::ordered_json j;
    j["dialogue_id"] = d.dialogue_id;
    j["turns"] = nlohmann::ordered_json::array();
    for (const auto& t : d.turns) {
      nlohmann::ordered_json tj;
      tj["system"] = t.system_utterance;
      tj["user"] = t.user_utterance;
      nlohmann::ordered_json state = nlohmann::ordered_json::object();
      for (const auto& [s, v] : t.cumulative_state.pairs) state[s.rendered()] = v;
      tj["state"] = std::move(state);
      j["turns"].push_back(std::move(tj));
    }
    out << j.dump() << "\n";
  }
}

std::vector<TurnInstance> to_turn_instances(const DialogueRecord& d) {
  std::vector<TurnInstance> out;
  DialogueState prev;
  for (std::size_t t = 0; t < d.turns.size(); ++t) {
    const auto& turn = d.turns[t];
    out.emplace_back(d.dialogue_id, static_cast<int>(t), prev, turn.system_utterance,
                     turn.user_utterance, diff_states(prev, turn.cumulative_state));
    prev = turn.cumulative_state;
  }
  return out;
}

namespace {

std::string sorted_slot_names(const StateChange& delta) {
  std::string out;
  for (const auto& s : delta.touched_slots()) {  // std::set: already sorted
    if (!out.empty()) out += " ";
    out += s.rendered();
  }
  return out;
}

}  // namespace

std::string render_view(const TurnInstance& inst, TextView view) {
  switch (view) {
    case TextView::kDeltaOnly:
      return serialize_delta(inst.gold());
    case TextView::kDeltaSlotsOnly:
      return sorted_slot_names(inst.gold());
    case TextView::kUtterancePlusDeltaSlots:
      return inst.system_utterance + "\n" + inst.user_utterance + "\n" +
             sorted_slot_names(inst.gold());
    case TextView::kContext:
      return serialize_state(inst.prev_state) + "\n" + inst.system_utterance + "\n" +
             inst.user_utterance;
  }
  throw ContractError("unknown text view");
}

CorpusSplit sample_split(const std::vector<DialogueRecord>& dialogues, double fraction,
                         std::uint64_t seed) {
  if (!(fraction > 0.0) || fraction > 1.0) {
    throw ContractError("split fraction must be in (0, 1]");
  }
  CorpusSplit split;
  split.fraction = fraction;
  split.seed = seed;

  std::size_t n = dialogues.size();
  auto take = static_cast<std::size_t>(
      std::ceil(fraction * static_cast<double>(n)) + 1e-9);
  take = std::min(take, n);

  auto picked = sample_without_replacement(n, take, seed_for(seed, "corpus_split"));
  std::sort(picked.begin(), picked.end());  // keep corpus order within the split
  for (std::size_t i : picked) {
    const auto& d = dialogues[i];
    split.dialogue_ids.push_back(d.dialogue_id);
    for (std::size_t t = 0; t < d.turns.size(); ++t) {
      split.instance_ids.push_back(d.dialogue_id + ":" + std::to_string(t));
    }
  }
  return split;
}

TurnCorpus::TurnCorpus(const std::vector<DialogueRecord>& dialogues) {
  for (const auto& d : dialogues) {
    auto insts = to_turn_instances(d);
    instances_.insert(instances_.end(), insts.begin(), insts.end());
  }
  reindex();
}

TurnCorpus::TurnCorpus(std::vector<TurnInstance> instances)
    : instances_(std::move(instances)) {
  reindex();
}

void TurnCorpus::reindex() {
  by_id_.clear();
  for (std::size_t i = 0; i < instances_.size(); ++i) {
    by_id_[instances_[i].query_id()] = i;
  }
}

const TurnInstance* TurnCorpus::find(const std::string& instance_id) const {
  auto it = by_id_.find(instance_id);
  return it == by_id_.end() ? nullptr : &instances_[it->second];
}

const TurnInstance& TurnCorpus::at(const std::string& instance_id) const {
  const TurnInstance* p = find(instance_id);
  if (!p) throw ContractError("unknown instance id: " + instance_id);
  return *p;
}

std::vector<TurnInstance> TurnCorpus::candidates_excluding(
    const std::string& dialogue_id) const {
  std::vector<TurnInstance> out;
  out.reserve(instances_.size());
  for (const auto& inst : instances_) {
    if (inst.dialogue_id != dialogue_id) out.push_back(inst);
  }
  return out;
}

}  // namespace dstkit
