#pragma once

#include "dqd/questions.hpp"
#include "dqd/text.hpp"

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace dqd {

// One question flattened into a contiguous paragraph: the title (with a
// terminal '.' appended when it lacks end punctuation) followed by the
// body. Sentences partition the text.
struct UnsupervisedDoc {
  QuestionId question_id;
  std::string domain;  // provenance, survives merging
  std::string text;
  std::vector<std::string> sentences;
};

std::vector<UnsupervisedDoc> build_unsupervised_corpus(
    const QuestionStore& store, const SentenceSplitterConfig& splitter = {});

// Weighted round-robin interleave of per-domain corpora. Every doc of a
// positively weighted domain appears exactly once; weight 0 drops the
// domain, as does naming it in exclude_domain. Empty result is an error.
std::vector<UnsupervisedDoc> merge_domains(
    const std::vector<std::pair<std::string, std::vector<UnsupervisedDoc>>>& corpora,
    const std::vector<double>& weights = {}, const std::string& exclude_domain = "");

// Uniform subsample without replacement, original order preserved.
// Requires 0 < n <= corpus size.
std::vector<UnsupervisedDoc> sample_unsupervised(const std::vector<UnsupervisedDoc>& corpus,
                                                 std::size_t n, std::uint64_t seed);

}  // namespace dqd
