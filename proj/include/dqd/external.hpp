#pragma once

#include "dqd/questions.hpp"
#include "dqd/stackexchange.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace dqd {

// Column layout of a delimited pair file: (id1, text1, id2, text2, label).
struct ExternalSchema {
  char delimiter = '\t';
  int col_id1 = 0;
  int col_text1 = 1;
  int col_id2 = 2;
  int col_text2 = 3;
  int col_label = 4;
  bool has_header = false;
  std::string domain = "external";
};

struct ExternalDataset {
  QuestionStore questions;  // title-only; bodies stay empty
  std::vector<QuestionPair> pairs;
  ParseStats stats;
};

// Reads a tab-separated pair dataset (Quora-style). Labels "1"/"0" map to
// duplicate/non_duplicate. Malformed rows are skipped and counted, with
// the same tolerance rule as the XML parsers.
ExternalDataset ingest_external_pairs(std::istream& stream, const ExternalSchema& schema = {},
                                      const ParseOptions& options = {});

ExternalDataset ingest_external_pairs_file(const std::string& path,
                                           const ExternalSchema& schema = {},
                                           const ParseOptions& options = {});

}  // namespace dqd
