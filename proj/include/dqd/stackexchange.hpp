#pragma once

#include "dqd/questions.hpp"

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace dqd {

enum class PostType { question, answer, other };

struct RawPost {
  std::int64_t post_id = 0;
  PostType post_type = PostType::other;
  std::string title;      // raw attribute text, entities decoded
  std::string body_html;  // still contains markup
  std::string domain;
};

struct ParseStats {
  std::size_t rows_total = 0;
  std::size_t rows_malformed = 0;
  std::size_t self_links_skipped = 0;

  double malformed_fraction() const {
    return rows_total == 0 ? 0.0 : static_cast<double>(rows_malformed) / rows_total;
  }
};

struct ParseOptions {
  // Above this malformed-row fraction the dump is considered broken.
  double malformed_row_tolerance = 0.01;
};

// Parses a Posts.xml-style document (<row Id=".." PostTypeId=".."
// Title=".." Body=".."/>). Rows with missing or unparsable required
// attributes are skipped and counted. Throws IngestError when the stream
// is unreadable or the malformed fraction exceeds the tolerance.
std::vector<RawPost> parse_posts_xml(std::istream& stream, const std::string& domain,
                                     ParseStats& stats, const ParseOptions& options = {});

std::vector<RawPost> parse_posts_xml_file(const std::string& path, const std::string& domain,
                                          ParseStats& stats, const ParseOptions& options = {});

// PostLinks.xml rows (PostId, RelatedPostId, LinkTypeId). LinkTypeId 3 is
// a duplicate mark, 1 a related mark. Self links are skipped and counted.
std::vector<DuplicateLink> parse_postlinks_xml(std::istream& stream, const std::string& domain,
                                               ParseStats& stats, const ParseOptions& options = {});

std::vector<DuplicateLink> parse_postlinks_xml_file(const std::string& path,
                                                    const std::string& domain, ParseStats& stats,
                                                    const ParseOptions& options = {});

// Question rows become Questions: title entity-decoded and collapsed,
// body stripped of HTML. Questions whose title is empty after cleanup are
// counted as malformed and dropped.
QuestionStore posts_to_questions(const std::vector<RawPost>& posts, ParseStats& stats);

}  // namespace dqd
