#pragma once

#include "dqd/questions.hpp"

#include <cstdint>
#include <set>
#include <vector>

namespace dqd {

// Duplicate links are undirected for pair construction: (a,b) and (b,a)
// collapse to one positive. Only links with both endpoints in the store
// survive. Returned sorted by (q1, q2) with q1 < q2.
std::vector<QuestionPair> collect_positives(const QuestionStore& store,
                                            const std::vector<DuplicateLink>& links);

// One positive per resolvable duplicate link; for each positive,
// negatives_per_positive partners drawn uniformly without replacement
// from questions not duplicate-linked to the anchor. Output interleaves
// each positive with its negatives. Deterministic under seed.
std::vector<QuestionPair> build_pairs(const QuestionStore& store,
                                      const std::vector<DuplicateLink>& links,
                                      int negatives_per_positive, std::uint64_t seed);

struct DatasetSplit {
  std::vector<QuestionPair> train;
  std::vector<QuestionPair> dev;
  std::vector<QuestionPair> test;
  int negatives_per_positive_eval = 100;
};

struct SplitSpec {
  int dev_positives = 0;
  int test_positives = 0;
  int train_negatives_per_positive = 1;
  int eval_negatives_per_positive = 100;
  std::uint64_t seed = 0;
};

// Shuffles the positives, carves off dev/test, drops train pairs that
// touch any question used by a dev/test positive, then samples negatives
// per split. No question-id pair appears in two splits.
DatasetSplit split_dataset(const QuestionStore& store, const std::vector<DuplicateLink>& links,
                           const SplitSpec& spec);

// Seed-deterministic subsample for limited-label experiments: keeps
// round(fraction * positives) positives plus the negatives anchored to
// them. fraction in (0, 1].
std::vector<QuestionPair> subsample_pairs(const std::vector<QuestionPair>& pairs, double fraction,
                                          std::uint64_t seed);

std::size_t count_positives(const std::vector<QuestionPair>& pairs);

}  // namespace dqd
