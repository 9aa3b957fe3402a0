#include "dstkit/embedder.hpp"

#include <cctype>
#include <cmath>

#include "dstkit/errors.hpp"
#include "dstkit/rng.hpp"

namespace dstkit {

HashingEmbedder::HashingEmbedder(int dimension, std::uint64_t seed)
    : dimension_(dimension), seed_(seed) {
  if (dimension <= 0) throw ContractError("embedder dimension must be positive");
}

std::vector<double> HashingEmbedder::embed(const std::string& text) const {
  std::vector<double> v(static_cast<std::size_t>(dimension_), 0.0);
  std::string token;
  auto flush = [&] {
    if (token.empty()) return;
    std::uint64_t h = mix64(stable_hash64(token) ^ seed_);
    std::size_t bucket = h % static_cast<std::uint64_t>(dimension_);
    double sign = (h >> 63) ? -1.0 : 1.0;
    v[bucket] += sign;
    token.clear();
  };
  for (char ch : text) {
    unsigned char c = static_cast<unsigned char>(ch);
    if (std::isalnum(c)) {
      token.push_back(static_cast<char>(std::tolower(c)));
    } else {
      flush();
    }
  }
  flush();

  double norm_sq = 0.0;
  for (double x : v) norm_sq += x * x;
  if (norm_sq > 0.0) {
    double inv = 1.0 / std::sqrt(norm_sq);
    for (double& x : v) x *= inv;
  }
  return v;
}

std::unique_ptr<TextEmbedder> make_hash_embedder(const std::string& spec) {
  const std::string prefix = "hash:";
  if (spec.rfind(prefix, 0) != 0) {
    throw ContractError("not a hash embedder spec: " + spec);
  }
  int dim = 0;
  try {
    dim = std::stoi(spec.substr(prefix.size()));
  } catch (...) {
    throw ContractError("bad hash embedder dimension in: " + spec);
  }
  return std::make_unique<HashingEmbedder>(dim);
}

}  // namespace dstkit
