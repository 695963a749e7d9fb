#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qdig/backends.hpp"
#include "qdig/domain.hpp"

namespace qdig {

struct CandidateSet {
  std::vector<Instruction> candidates;  // length b
  double mean_pairwise_similarity = 0.0;
  int set_index = 0;
};

// One mutation request targeting a single style for the whole batch.
// Validates the backend's reply: exactly b non-empty texts, no padding.
std::vector<std::string> mutate_batch(const Instruction& parent,
                                      std::optional<int> parent_style,
                                      const AttackStyle& target_style,
                                      const std::string& image_ref, int b,
                                      TextGenerator& mutator,
                                      std::uint64_t seed = 0);

// Mean cosine over all unordered pairs, b(b-1)/2 of them. Embeddings are
// L2-normalized on receipt; a zero-norm embedding is an error naming the
// offending text, never silently skipped.
double mean_pairwise_cosine(const std::vector<std::string>& texts,
                            Embedder& embedder);

// Rejection sampling: the set with minimal mean pairwise similarity wins;
// ties go to the lowest set_index.
const CandidateSet& select_most_diverse_set(
    const std::vector<CandidateSet>& sets);

}  // namespace qdig
