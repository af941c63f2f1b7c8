#include "dqd/external.hpp"

#include "dqd/text.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <sstream>

namespace dqd {

namespace {

std::vector<std::string> split_columns(const std::string& line, char delimiter) {
  std::vector<std::string> cols;
  std::string current;
  for (char c : line) {
    if (c == delimiter) {
      cols.push_back(std::move(current));
      current.clear();
    } else if (c != '\r') {
      current.push_back(c);
    }
  }
  cols.push_back(std::move(current));
  return cols;
}

bool parse_id(const std::string& s, std::int64_t& out) {
  const char* first = s.data();
  const char* last = first + s.size();
  auto [ptr, ec] = std::from_chars(first, last, out);
  return ec == std::errc{} && ptr == last;
}

}  // namespace

ExternalDataset ingest_external_pairs(std::istream& stream, const ExternalSchema& schema,
                                      const ParseOptions& options) {
  if (!stream) throw IngestError("unreadable external pair stream");
  ExternalDataset dataset;
  const int max_col =
      std::max({schema.col_id1, schema.col_text1, schema.col_id2, schema.col_text2, schema.col_label});

  std::string line;
  bool first_line = true;
  while (std::getline(stream, line)) {
    if (first_line && schema.has_header) {
      first_line = false;
      continue;
    }
    first_line = false;
    if (line.empty()) continue;
    ++dataset.stats.rows_total;

    const std::vector<std::string> cols = split_columns(line, schema.delimiter);
    if (static_cast<int>(cols.size()) <= max_col) {
      ++dataset.stats.rows_malformed;
      continue;
    }
    std::int64_t id1 = 0;
    std::int64_t id2 = 0;
    const std::string& label_text = cols[schema.col_label];
    const std::string title1 = collapse_whitespace(decode_entities(cols[schema.col_text1]));
    const std::string title2 = collapse_whitespace(decode_entities(cols[schema.col_text2]));
    const bool label_ok = label_text == "0" || label_text == "1";
    if (!parse_id(cols[schema.col_id1], id1) || !parse_id(cols[schema.col_id2], id2) ||
        !label_ok || title1.empty() || title2.empty() || id1 == id2) {
      ++dataset.stats.rows_malformed;
      continue;
    }

    const QuestionId qid1{schema.domain, id1};
    const QuestionId qid2{schema.domain, id2};
    if (!dataset.questions.contains(qid1)) dataset.questions.add({qid1, title1, "", 0});
    if (!dataset.questions.contains(qid2)) dataset.questions.add({qid2, title2, "", 0});
    dataset.pairs.push_back(
        {qid1, qid2, label_text == "1" ? PairLabel::duplicate : PairLabel::non_duplicate});
  }

  if (dataset.stats.rows_total > 0 &&
      dataset.stats.malformed_fraction() > options.malformed_row_tolerance) {
    std::ostringstream msg;
    msg << "external pairs: " << dataset.stats.rows_malformed << " of " << dataset.stats.rows_total
        << " rows malformed, above tolerance " << options.malformed_row_tolerance;
    throw IngestError(msg.str());
  }
  return dataset;
}

ExternalDataset ingest_external_pairs_file(const std::string& path, const ExternalSchema& schema,
                                           const ParseOptions& options) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IngestError("cannot open " + path);
  return ingest_external_pairs(in, schema, options);
}

}  // namespace dqd
