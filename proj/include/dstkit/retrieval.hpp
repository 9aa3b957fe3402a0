#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <unordered_map>
#include <vector>

#include "dstkit/corpus.hpp"
#include "dstkit/embedder.hpp"
#include "dstkit/state.hpp"

namespace dstkit {

// Okapi BM25 over an inverted index. Tokenization: lowercase, split on every
// non-alphanumeric run. idf(t) = ln((N - df + 0.5)/(df + 0.5) + 1).
class Bm25Index {
 public:
  static constexpr double kDefaultK1 = 1.2;
  static constexpr double kDefaultB = 0.75;

  Bm25Index() = default;

  double k1() const { return k1_; }
  double b() const { return b_; }
  int doc_count() const { return static_cast<int>(doc_ids_.size()); }
  double avg_doc_length() const { return avg_doc_length_; }

  // Score of one document for a query (0 when nothing matches).
  double score(const std::string& doc_id, const std::string& query_text) const;

  void save(const std::string& path) const;
  static Bm25Index load(const std::string& path);

  static std::vector<std::string> tokenize(const std::string& text);

 private:
  friend Bm25Index build_bm25(const std::vector<std::pair<std::string, std::string>>&,
                              double, double);
  friend std::vector<struct ScoredCandidate> bm25_topk(const Bm25Index&,
                                                       const std::string&, std::size_t);

  double k1_ = kDefaultK1;
  double b_ = kDefaultB;
  double avg_doc_length_ = 0.0;
  std::vector<std::string> doc_ids_;                      // ascending
  std::unordered_map<std::string, std::size_t> doc_pos_;  // id -> index
  std::vector<double> doc_lengths_;
  // term -> postings (doc index, term frequency), ascending doc index
  std::map<std::string, std::vector<std::pair<std::size_t, int>>> postings_;
};

Bm25Index build_bm25(const std::vector<std::pair<std::string, std::string>>& docs,
                     double k1 = Bm25Index::kDefaultK1, double b = Bm25Index::kDefaultB);

// Fixed-dimension vector store with exhaustive cosine search.
class EmbeddingStore {
 public:
  EmbeddingStore() = default;

  void add(const std::string& id, std::vector<double> vector);  // DIMENSION_MISMATCH
  const std::vector<double>* find(const std::string& id) const;
  const std::vector<double>& at(const std::string& id) const;  // throws
  int dimension() const { return dimension_; }
  std::size_t size() const { return ids_.size(); }
  const std::vector<std::string>& ids() const { return ids_; }

  static EmbeddingStore load_jsonl(const std::string& path);
  void save_jsonl(const std::string& path) const;

  // Store of every instance's view text embedded with `embedder`.
  static EmbeddingStore from_corpus(const std::vector<TurnInstance>& instances,
                                    TextView view, const TextEmbedder& embedder);

 private:
  int dimension_ = 0;
  std::vector<std::string> ids_;  // insertion order
  std::unordered_map<std::string, std::vector<double>> vectors_;
};

// Cosine similarity; zero vectors score 0 by convention.
double cosine_similarity(const std::vector<double>& a, const std::vector<double>& b);

struct ScoredCandidate {
  std::string example_id;
  double bm25_score = 0.0;
  double dense_score = 0.0;
  double hybrid_score = 0.0;
  // Membership in the respective retriever's top-N list (rank-based
  // aggregators only consider list members; scores exist for everyone).
  bool in_bm25_list = true;
  bool in_dense_list = true;
};

enum class AggregationMethod { kMultiplication, kWeightedSum, kRrf, kUnionTopK };

struct AggregatorConfig {
  AggregationMethod method = AggregationMethod::kMultiplication;
  double alpha = 0.5;       // weighted-sum weight on the BM25 side
  double rrf_offset = 0.0;  // 0 = plain 1/rank; 60 = the common smoothed variant
};

AggregationMethod aggregation_method_from_string(const std::string& s);

// Top-n by BM25 score, descending; ties by ascending id; zero scores excluded.
std::vector<ScoredCandidate> bm25_topk(const Bm25Index& index, const std::string& query_text,
                                       std::size_t n);

// Top-n by cosine similarity, descending; ties by ascending id.
std::vector<ScoredCandidate> dense_topk(const EmbeddingStore& store,
                                        const std::vector<double>& query_vector,
                                        std::size_t n);

// (x - mean)/std with population std; all zeros when degenerate (std == 0 or
// fewer than two values).
std::vector<double> zscore(const std::vector<double>& scores);

// Re-score candidates with the configured method. Output is sorted by
// hybrid_score descending (ties by ascending id), except UNION_TOPK whose
// output order is the interleave order itself.
std::vector<ScoredCandidate> aggregate(std::vector<ScoredCandidate> cands,
                                       const AggregatorConfig& cfg);

// Everything construct_pool needs, built once per candidate corpus: the BM25
// index over utterance+delta-slot views and the store of delta-only
// embeddings.
struct PoolContext {
  TurnCorpus corpus;
  Bm25Index bm25;        // over kUtterancePlusDeltaSlots views
  EmbeddingStore dense;  // over kDeltaOnly views
  const TextEmbedder* embedder = nullptr;
};

PoolContext make_pool_context(std::vector<TurnInstance> candidates,
                              const TextEmbedder& embedder);

struct PoolResult {
  std::vector<ScoredCandidate> pool;  // descending hybrid score, size <= N
  bool underfull = false;             // union smaller than N
};

// Top-N from BM25 (utterance+delta-slots view) and dense (delta-only view),
// unioned, re-scored with z-scored multiplication, top-N retained. Candidates
// from the query's own dialogue are excluded.
PoolResult construct_pool(const TurnInstance& query, const PoolContext& ctx, std::size_t n);

}  // namespace dstkit
