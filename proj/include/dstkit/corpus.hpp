#pragma once

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "dstkit/state.hpp"

namespace dstkit {

// One stored dialogue: utterances plus the cumulative state after each turn.
struct DialogueRecord {
  std::string dialogue_id;
  struct Turn {
    std::string system_utterance;  // may be empty on the first turn
    std::string user_utterance;
    DialogueState cumulative_state;
  };
  std::vector<Turn> turns;
};

// The text rendered for a turn when it is indexed, embedded, or queried.
enum class TextView {
  kDeltaOnly,                // canonical serialization of the gold change
  kDeltaSlotsOnly,           // sorted slot names of the gold change
  kUtterancePlusDeltaSlots,  // system + user utterances + gold change slots
  kContext,                  // serialized previous state + both utterances
};

TextView text_view_from_string(const std::string& s);
std::string text_view_to_string(TextView v);

struct CorpusSplit {
  double fraction = 1.0;
  std::uint64_t seed = 0;
  std::vector<std::string> dialogue_ids;
  std::vector<std::string> instance_ids;
};

enum class CorpusFormat { kCanonicalJsonl };

// Load the canonical JSONL corpus (one dialogue object per line). Values are
// normalized on load; on-disk dialogue order is preserved. Throws
// MalformedLineError / DuplicateDialogueIdError.
std::vector<DialogueRecord> load_corpus(const std::string& path,
                                        CorpusFormat format = CorpusFormat::kCanonicalJsonl);

void save_corpus(const std::vector<DialogueRecord>& dialogues, const std::string& path);

// State-change decomposition: instance t carries prev_state = cumulative state
// of turn t-1 (empty at t=0) and gold = the diff to turn t's state.
std::vector<TurnInstance> to_turn_instances(const DialogueRecord& d);

std::string render_view(const TurnInstance& inst, TextView view);

// Samples ceil(fraction * |dialogues|) whole dialogues without replacement.
CorpusSplit sample_split(const std::vector<DialogueRecord>& dialogues, double fraction,
                         std::uint64_t seed);

// Flat, indexed view over a corpus: every turn instance, addressable by id.
class TurnCorpus {
 public:
  TurnCorpus() = default;
  explicit TurnCorpus(const std::vector<DialogueRecord>& dialogues);
  explicit TurnCorpus(std::vector<TurnInstance> instances);

  const std::vector<TurnInstance>& instances() const { return instances_; }
  const TurnInstance* find(const std::string& instance_id) const;
  const TurnInstance& at(const std::string& instance_id) const;  // throws
  std::size_t size() const { return instances_.size(); }

  // Instances from other dialogues, in corpus order: the candidate set for a
  // query (own-dialogue turns and the query itself never appear).
  std::vector<TurnInstance> candidates_excluding(const std::string& dialogue_id) const;

 private:
  std::vector<TurnInstance> instances_;
  std::unordered_map<std::string, std::size_t> by_id_;
  void reindex();
};

}  // namespace dstkit
