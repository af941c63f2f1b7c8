#include "dqd/io.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>

namespace dqd {

namespace {

using nlohmann::json;

json id_to_json(const QuestionId& id) {
  return json{{"domain", id.domain}, {"post_id", id.post_id}};
}

QuestionId id_from_json(const json& j) {
  return {j.at("domain").get<std::string>(), j.at("post_id").get<std::int64_t>()};
}

std::ofstream open_out(const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IngestError("cannot write " + path);
  return out;
}

std::ifstream open_in(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IngestError("cannot open " + path);
  return in;
}

}  // namespace

void write_questions_jsonl(const std::string& path, const QuestionStore& store) {
  auto out = open_out(path);
  for (const auto& [id, q] : store) {
    json j{{"id", id_to_json(id)},
           {"title", q.title},
           {"body", q.body},
           {"token_count", q.token_count}};
    out << j.dump() << '\n';
  }
}

QuestionStore read_questions_jsonl(const std::vector<std::string>& paths) {
  QuestionStore store;
  for (const std::string& path : paths) {
    auto in = open_in(path);
    std::string line;
    while (std::getline(in, line)) {
      if (line.empty()) continue;
      const json j = json::parse(line);
      Question q;
      q.id = id_from_json(j.at("id"));
      q.title = j.at("title").get<std::string>();
      q.body = j.at("body").get<std::string>();
      q.token_count = j.value("token_count", std::int64_t{0});
      if (!store.contains(q.id)) store.add(std::move(q));
    }
  }
  return store;
}

void write_pairs_jsonl(const std::string& path, const std::vector<QuestionPair>& pairs) {
  auto out = open_out(path);
  for (const QuestionPair& p : pairs) {
    json j{{"q1", id_to_json(p.q1)},
           {"q2", id_to_json(p.q2)},
           {"label", p.label == PairLabel::duplicate ? "duplicate" : "non_duplicate"}};
    out << j.dump() << '\n';
  }
}

std::vector<QuestionPair> read_pairs_jsonl(const std::string& path) {
  auto in = open_in(path);
  std::vector<QuestionPair> pairs;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const json j = json::parse(line);
    QuestionPair p;
    p.q1 = id_from_json(j.at("q1"));
    p.q2 = id_from_json(j.at("q2"));
    const std::string label = j.at("label").get<std::string>();
    if (label == "duplicate") {
      p.label = PairLabel::duplicate;
    } else if (label == "non_duplicate") {
      p.label = PairLabel::non_duplicate;
    } else {
      throw IngestError("bad pair label '" + label + "' in " + path);
    }
    pairs.push_back(std::move(p));
  }
  return pairs;
}

void write_unsup_jsonl(const std::string& path, const std::vector<UnsupervisedDoc>& docs) {
  auto out = open_out(path);
  for (const UnsupervisedDoc& d : docs) {
    json j{{"question_id", id_to_json(d.question_id)},
           {"domain", d.domain},
           {"text", d.text},
           {"sentences", d.sentences}};
    out << j.dump() << '\n';
  }
}

std::vector<UnsupervisedDoc> read_unsup_jsonl(const std::string& path) {
  auto in = open_in(path);
  std::vector<UnsupervisedDoc> docs;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const json j = json::parse(line);
    UnsupervisedDoc d;
    d.question_id = id_from_json(j.at("question_id"));
    d.domain = j.at("domain").get<std::string>();
    d.text = j.at("text").get<std::string>();
    d.sentences = j.at("sentences").get<std::vector<std::string>>();
    docs.push_back(std::move(d));
  }
  return docs;
}

std::string read_text_file(const std::string& path) {
  auto in = open_in(path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_text_file(const std::string& path, const std::string& content) {
  auto out = open_out(path);
  out << content;
}

}  // namespace dqd
