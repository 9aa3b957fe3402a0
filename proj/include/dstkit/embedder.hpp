#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace dstkit {

// Frozen base text encoder. The projection retriever trains on top of these
// vectors; the encoder itself is never trained here.
class TextEmbedder {
 public:
  virtual ~TextEmbedder() = default;
  virtual std::vector<double> embed(const std::string& text) const = 0;
  virtual int dimension() const = 0;
};

// Signed feature hashing over lowercase alphanumeric tokens, L2-normalized.
// Deterministic and corpus-independent, so every stage can recompute the same
// vector for the same text.
class HashingEmbedder : public TextEmbedder {
 public:
  explicit HashingEmbedder(int dimension, std::uint64_t seed = 0);

  std::vector<double> embed(const std::string& text) const override;
  int dimension() const override { return dimension_; }

 private:
  int dimension_;
  std::uint64_t seed_;
};

// "hash:<dim>" -> HashingEmbedder; anything else is rejected here (file- and
// URL-backed embeddings go through EmbeddingStore / HttpEmbedder instead).
std::unique_ptr<TextEmbedder> make_hash_embedder(const std::string& spec);

}  // namespace dstkit
