#include "dqd/pairs.hpp"

#include "dqd/rng.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>

namespace dqd {

namespace {

using PairKey = std::pair<QuestionId, QuestionId>;

PairKey key_of(const QuestionId& a, const QuestionId& b) {
  return a < b ? PairKey{a, b} : PairKey{b, a};
}

using Adjacency = std::map<QuestionId, std::set<QuestionId>>;

Adjacency duplicate_adjacency(const QuestionStore& store, const std::vector<DuplicateLink>& links) {
  Adjacency adj;
  for (const DuplicateLink& link : links) {
    if (link.kind != LinkKind::duplicate) continue;
    if (!store.contains(link.src_id) || !store.contains(link.dst_id)) continue;
    adj[link.src_id].insert(link.dst_id);
    adj[link.dst_id].insert(link.src_id);
  }
  return adj;
}

class NegativeSampler {
 public:
  NegativeSampler(const QuestionStore& store, Adjacency adjacency)
      : ids_(store.ids()), adjacency_(std::move(adjacency)) {}

  // Questions that may never appear in a sampled pair (train pool
  // excludes questions held out for dev/test positives).
  void exclude(std::set<QuestionId> excluded) { excluded_ = std::move(excluded); }

  void mark_used(const QuestionId& a, const QuestionId& b) { used_.insert(key_of(a, b)); }

  std::vector<QuestionId> sample(const QuestionId& anchor, int count, Rng& rng) {
    if (count <= 0) return {};
    const std::set<QuestionId> empty;
    auto adj_it = adjacency_.find(anchor);
    const std::set<QuestionId>& linked = adj_it == adjacency_.end() ? empty : adj_it->second;

    auto eligible = [&](const QuestionId& candidate) {
      return candidate != anchor && !linked.count(candidate) && !excluded_.count(candidate) &&
             !used_.count(key_of(anchor, candidate));
    };

    std::vector<QuestionId> picked;
    picked.reserve(count);
    // Rejection sampling first; it is uniform over the eligible set and
    // cheap when the pool dwarfs the request.
    std::size_t attempts = 0;
    const std::size_t max_attempts = 64 + 16 * static_cast<std::size_t>(count);
    while (picked.size() < static_cast<std::size_t>(count) && attempts < max_attempts) {
      ++attempts;
      const QuestionId& candidate = ids_[uniform_index(rng, ids_.size())];
      if (!eligible(candidate)) continue;
      picked.push_back(candidate);
      used_.insert(key_of(anchor, candidate));
    }
    if (picked.size() == static_cast<std::size_t>(count)) return picked;

    // Dense fallback: enumerate what is left and draw exactly.
    std::vector<QuestionId> pool;
    for (const QuestionId& candidate : ids_) {
      if (eligible(candidate)) pool.push_back(candidate);
    }
    const std::size_t missing = count - picked.size();
    if (pool.size() < missing) {
      std::ostringstream msg;
      msg << "cannot sample " << count << " negatives for " << anchor.str() << ": only "
          << pool.size() + picked.size() << " eligible questions";
      throw ConfigError(msg.str());
    }
    for (std::size_t i : sample_indices(rng, pool.size(), missing)) {
      picked.push_back(pool[i]);
      used_.insert(key_of(anchor, pool[i]));
    }
    return picked;
  }

 private:
  std::vector<QuestionId> ids_;
  Adjacency adjacency_;
  std::set<QuestionId> excluded_;
  std::set<PairKey> used_;
};

void append_with_negatives(std::vector<QuestionPair>& out, const QuestionPair& positive,
                           NegativeSampler& sampler, int ratio, Rng& rng) {
  out.push_back(positive);
  for (const QuestionId& partner : sampler.sample(positive.q1, ratio, rng)) {
    out.push_back({positive.q1, partner, PairLabel::non_duplicate});
  }
}

}  // namespace

std::vector<QuestionPair> collect_positives(const QuestionStore& store,
                                            const std::vector<DuplicateLink>& links) {
  std::set<PairKey> seen;
  for (const DuplicateLink& link : links) {
    if (link.kind != LinkKind::duplicate) continue;
    if (link.src_id == link.dst_id) continue;
    if (!store.contains(link.src_id) || !store.contains(link.dst_id)) continue;
    seen.insert(key_of(link.src_id, link.dst_id));
  }
  std::vector<QuestionPair> positives;
  positives.reserve(seen.size());
  for (const PairKey& key : seen) {
    positives.push_back({key.first, key.second, PairLabel::duplicate});
  }
  return positives;
}

std::vector<QuestionPair> build_pairs(const QuestionStore& store,
                                      const std::vector<DuplicateLink>& links,
                                      int negatives_per_positive, std::uint64_t seed) {
  if (negatives_per_positive < 0) throw ConfigError("negatives_per_positive must be >= 0");
  const std::vector<QuestionPair> positives = collect_positives(store, links);
  NegativeSampler sampler(store, duplicate_adjacency(store, links));
  for (const QuestionPair& p : positives) sampler.mark_used(p.q1, p.q2);

  Rng rng(derive_seed(seed, "build_pairs"));
  std::vector<QuestionPair> pairs;
  pairs.reserve(positives.size() * (1 + negatives_per_positive));
  for (const QuestionPair& p : positives) {
    append_with_negatives(pairs, p, sampler, negatives_per_positive, rng);
  }
  return pairs;
}

DatasetSplit split_dataset(const QuestionStore& store, const std::vector<DuplicateLink>& links,
                           const SplitSpec& spec) {
  if (spec.dev_positives < 0 || spec.test_positives < 0) {
    throw ConfigError("split sizes must be non-negative");
  }
  std::vector<QuestionPair> positives = collect_positives(store, links);
  const std::size_t need = static_cast<std::size_t>(spec.dev_positives) + spec.test_positives;
  if (positives.size() < need) {
    std::ostringstream msg;
    msg << "need " << need << " positives for dev+test but only " << positives.size()
        << " are available";
    throw ConfigError(msg.str());
  }

  Rng shuffle_rng(derive_seed(spec.seed, "split_dataset"));
  shuffle(shuffle_rng, positives);

  DatasetSplit split;
  split.negatives_per_positive_eval = spec.eval_negatives_per_positive;

  std::vector<QuestionPair> test_pos(positives.begin(), positives.begin() + spec.test_positives);
  std::vector<QuestionPair> dev_pos(positives.begin() + spec.test_positives,
                                    positives.begin() + need);
  std::set<QuestionId> held_out;
  for (const QuestionPair& p : test_pos) {
    held_out.insert(p.q1);
    held_out.insert(p.q2);
  }
  for (const QuestionPair& p : dev_pos) {
    held_out.insert(p.q1);
    held_out.insert(p.q2);
  }
  std::vector<QuestionPair> train_pos;
  for (auto it = positives.begin() + need; it != positives.end(); ++it) {
    if (!held_out.count(it->q1) && !held_out.count(it->q2)) train_pos.push_back(*it);
  }

  NegativeSampler sampler(store, duplicate_adjacency(store, links));
  for (const QuestionPair& p : positives) sampler.mark_used(p.q1, p.q2);

  Rng neg_rng(derive_seed(spec.seed, "split_negatives"));
  for (const QuestionPair& p : test_pos) {
    append_with_negatives(split.test, p, sampler, spec.eval_negatives_per_positive, neg_rng);
  }
  for (const QuestionPair& p : dev_pos) {
    append_with_negatives(split.dev, p, sampler, spec.eval_negatives_per_positive, neg_rng);
  }
  sampler.exclude(held_out);
  for (const QuestionPair& p : train_pos) {
    append_with_negatives(split.train, p, sampler, spec.train_negatives_per_positive, neg_rng);
  }
  return split;
}

std::vector<QuestionPair> subsample_pairs(const std::vector<QuestionPair>& pairs, double fraction,
                                          std::uint64_t seed) {
  if (!(fraction > 0.0) || fraction > 1.0) throw ConfigError("label fraction must be in (0, 1]");
  if (fraction == 1.0) return pairs;

  std::vector<std::size_t> pos_idx;
  std::vector<std::size_t> neg_idx;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    (pairs[i].label == PairLabel::duplicate ? pos_idx : neg_idx).push_back(i);
  }
  if (pos_idx.empty()) throw ConfigError("cannot subsample: no positive pairs");

  const std::size_t keep_pos = std::max<std::size_t>(
      1, static_cast<std::size_t>(std::llround(fraction * static_cast<double>(pos_idx.size()))));
  Rng rng(derive_seed(seed, "subsample_pairs"));
  std::vector<bool> selected(pairs.size(), false);
  std::set<QuestionId> anchors;
  for (std::size_t i : sample_indices(rng, pos_idx.size(), keep_pos)) {
    selected[pos_idx[i]] = true;
    anchors.insert(pairs[pos_idx[i]].q1);
  }

  // Negatives ride with their anchor positive when the dataset was built
  // by our sampler; otherwise fall back to an independent subsample.
  std::size_t anchored = 0;
  for (std::size_t i : neg_idx) {
    if (anchors.count(pairs[i].q1)) {
      selected[i] = true;
      ++anchored;
    }
  }
  if (anchored == 0 && !neg_idx.empty()) {
    const std::size_t keep_neg = std::max<std::size_t>(
        1, static_cast<std::size_t>(std::llround(fraction * static_cast<double>(neg_idx.size()))));
    for (std::size_t i : sample_indices(rng, neg_idx.size(), keep_neg)) selected[neg_idx[i]] = true;
  }

  std::vector<QuestionPair> out;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    if (selected[i]) out.push_back(pairs[i]);
  }
  return out;
}

std::size_t count_positives(const std::vector<QuestionPair>& pairs) {
  return static_cast<std::size_t>(
      std::count_if(pairs.begin(), pairs.end(),
                    [](const QuestionPair& p) { return p.label == PairLabel::duplicate; }));
}

}  // namespace dqd
