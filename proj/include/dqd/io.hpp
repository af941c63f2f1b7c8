#pragma once

#include "dqd/corpus.hpp"
#include "dqd/pairs.hpp"
#include "dqd/questions.hpp"

#include <string>
#include <vector>

namespace dqd {

// Line-delimited JSON, UTF-8, one record per line. Key order is
// alphabetical, so identical data serializes to identical bytes.

void write_questions_jsonl(const std::string& path, const QuestionStore& store);
QuestionStore read_questions_jsonl(const std::vector<std::string>& paths);

void write_pairs_jsonl(const std::string& path, const std::vector<QuestionPair>& pairs);
std::vector<QuestionPair> read_pairs_jsonl(const std::string& path);

void write_unsup_jsonl(const std::string& path, const std::vector<UnsupervisedDoc>& docs);
std::vector<UnsupervisedDoc> read_unsup_jsonl(const std::string& path);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

}  // namespace dqd
