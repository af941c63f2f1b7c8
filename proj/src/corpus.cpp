#include "dqd/corpus.hpp"

#include "dqd/rng.hpp"

#include <algorithm>
#include <sstream>

namespace dqd {

std::vector<UnsupervisedDoc> build_unsupervised_corpus(const QuestionStore& store,
                                                       const SentenceSplitterConfig& splitter) {
  std::vector<UnsupervisedDoc> docs;
  docs.reserve(store.size());
  for (const auto& [id, question] : store) {
    UnsupervisedDoc doc;
    doc.question_id = id;
    doc.domain = id.domain;
    doc.text = question.title;
    const char last = doc.text.empty() ? '\0' : doc.text.back();
    if (last != '.' && last != '!' && last != '?') doc.text.push_back('.');
    if (!question.body.empty()) {
      doc.text.push_back(' ');
      doc.text += question.body;
    }
    doc.text = collapse_whitespace(doc.text);
    doc.sentences = split_sentences(doc.text, splitter);
    docs.push_back(std::move(doc));
  }
  return docs;
}

std::vector<UnsupervisedDoc> merge_domains(
    const std::vector<std::pair<std::string, std::vector<UnsupervisedDoc>>>& corpora,
    const std::vector<double>& weights, const std::string& exclude_domain) {
  if (!weights.empty() && weights.size() != corpora.size()) {
    throw ConfigError("merge_domains: weights count does not match corpora count");
  }
  for (double w : weights) {
    if (w < 0.0) throw ConfigError("merge_domains: weights must be non-negative");
  }

  struct Source {
    const std::vector<UnsupervisedDoc>* docs;
    std::string domain;
    double weight;
    std::size_t next = 0;
    double credit = 0.0;
  };
  std::vector<Source> sources;
  for (std::size_t i = 0; i < corpora.size(); ++i) {
    const double w = weights.empty() ? 1.0 : weights[i];
    if (w == 0.0 || corpora[i].first == exclude_domain) continue;
    sources.push_back({&corpora[i].second, corpora[i].first, w});
  }

  std::vector<UnsupervisedDoc> merged;
  bool any_left = true;
  while (any_left) {
    any_left = false;
    for (Source& s : sources) {
      if (s.next >= s.docs->size()) continue;
      s.credit += s.weight;
      while (s.credit >= 1.0 && s.next < s.docs->size()) {
        UnsupervisedDoc doc = (*s.docs)[s.next++];
        doc.domain = s.domain;
        merged.push_back(std::move(doc));
        s.credit -= 1.0;
      }
      if (s.next < s.docs->size()) any_left = true;
    }
  }
  if (merged.empty()) throw ConfigError("merge_domains: merged corpus is empty");
  return merged;
}

std::vector<UnsupervisedDoc> sample_unsupervised(const std::vector<UnsupervisedDoc>& corpus,
                                                 std::size_t n, std::uint64_t seed) {
  if (n == 0) throw ConfigError("sample_unsupervised: n must be positive");
  if (n > corpus.size()) {
    std::ostringstream msg;
    msg << "sample_unsupervised: requested " << n << " docs from a corpus of " << corpus.size();
    throw ConfigError(msg.str());
  }
  Rng rng(derive_seed(seed, "sample_unsupervised"));
  std::vector<std::size_t> picked = sample_indices(rng, corpus.size(), n);
  std::sort(picked.begin(), picked.end());
  std::vector<UnsupervisedDoc> out;
  out.reserve(n);
  for (std::size_t i : picked) out.push_back(corpus[i]);
  return out;
}

}  // namespace dqd
