#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace dqd {

struct IngestError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Questions are keyed by (domain, post id); post ids repeat across domains.
struct QuestionId {
  std::string domain;
  std::int64_t post_id = 0;

  auto operator<=>(const QuestionId&) const = default;
  std::string str() const { return domain + "/" + std::to_string(post_id); }
};

struct Question {
  QuestionId id;
  std::string title;  // non-empty, HTML-free
  std::string body;   // may be empty, HTML-free
  std::int64_t token_count = 0;  // filled once a tokenizer exists
};

enum class LinkKind { duplicate, related, other };

struct DuplicateLink {
  QuestionId src_id;
  QuestionId dst_id;
  LinkKind kind = LinkKind::other;
};

enum class PairLabel : std::int8_t { non_duplicate = 0, duplicate = 1 };

struct QuestionPair {
  QuestionId q1;
  QuestionId q2;
  PairLabel label = PairLabel::non_duplicate;
};

// Ordered container so iteration order (and thus every seeded draw over
// the store) is independent of insertion order.
class QuestionStore {
 public:
  void add(Question q) {
    auto [it, inserted] = questions_.emplace(q.id, std::move(q));
    if (!inserted) throw IngestError("duplicate question id " + it->first.str());
  }

  bool contains(const QuestionId& id) const { return questions_.count(id) != 0; }

  const Question& get(const QuestionId& id) const {
    auto it = questions_.find(id);
    if (it == questions_.end()) throw ConfigError("unknown question id " + id.str());
    return it->second;
  }

  Question& get_mutable(const QuestionId& id) {
    auto it = questions_.find(id);
    if (it == questions_.end()) throw ConfigError("unknown question id " + id.str());
    return it->second;
  }

  std::size_t size() const { return questions_.size(); }
  bool empty() const { return questions_.empty(); }

  std::vector<QuestionId> ids() const {
    std::vector<QuestionId> out;
    out.reserve(questions_.size());
    for (const auto& [id, q] : questions_) out.push_back(id);
    return out;
  }

  auto begin() const { return questions_.begin(); }
  auto end() const { return questions_.end(); }

 private:
  std::map<QuestionId, Question> questions_;
};

}  // namespace dqd
