#include "dqd/stackexchange.hpp"

#include "dqd/text.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <map>
#include <optional>
#include <sstream>

namespace dqd {

namespace {

using AttrMap = std::map<std::string, std::string, std::less<>>;

// Scans one <row .../> element starting after "<row". Returns false on a
// structurally broken element (unterminated tag or attribute).
bool parse_attributes(std::istream& in, AttrMap& attrs) {
  attrs.clear();
  char c;
  std::string name;
  while (in.get(c)) {
    if (c == '>') return true;
    if (c == '/' ) {
      if (in.get(c) && c == '>') return true;
      return false;
    }
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    // attribute name
    name.clear();
    name.push_back(c);
    while (in.get(c) && c != '=' && !std::isspace(static_cast<unsigned char>(c))) name.push_back(c);
    while (c != '=' && in.get(c)) {
      if (!std::isspace(static_cast<unsigned char>(c))) break;
    }
    if (c != '=') return false;
    while (in.get(c) && std::isspace(static_cast<unsigned char>(c))) {
    }
    if (c != '"' && c != '\'') return false;
    const char quote = c;
    std::string value;
    while (in.get(c) && c != quote) value.push_back(c);
    if (c != quote) return false;
    attrs[name] = std::move(value);
  }
  return false;
}

std::optional<std::int64_t> parse_int(const AttrMap& attrs, std::string_view key) {
  auto it = attrs.find(key);
  if (it == attrs.end()) return std::nullopt;
  std::int64_t value = 0;
  const char* first = it->second.data();
  const char* last = first + it->second.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last) return std::nullopt;
  return value;
}

// Advances the stream to just past the next "<row" token; false at EOF.
bool seek_row(std::istream& in) {
  char c;
  while (in.get(c)) {
    if (c != '<') continue;
    std::string tag;
    while (in.get(c) && (std::isalnum(static_cast<unsigned char>(c)) || c == '?' || c == '!' || c == '/')) {
      tag.push_back(c);
      if (tag.size() > 8) break;
    }
    if (!in) return false;
    in.unget();
    if (tag == "row") return true;
  }
  return false;
}

void check_tolerance(const ParseStats& stats, const ParseOptions& options, const char* what) {
  if (stats.rows_total > 0 && stats.malformed_fraction() > options.malformed_row_tolerance) {
    std::ostringstream msg;
    msg << what << ": " << stats.rows_malformed << " of " << stats.rows_total
        << " rows malformed, above tolerance " << options.malformed_row_tolerance;
    throw IngestError(msg.str());
  }
}

std::ifstream open_or_throw(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IngestError("cannot open " + path);
  return in;
}

}  // namespace

std::vector<RawPost> parse_posts_xml(std::istream& stream, const std::string& domain,
                                     ParseStats& stats, const ParseOptions& options) {
  if (!stream) throw IngestError("unreadable posts stream");
  std::vector<RawPost> posts;
  AttrMap attrs;
  while (seek_row(stream)) {
    ++stats.rows_total;
    if (!parse_attributes(stream, attrs)) {
      ++stats.rows_malformed;
      continue;
    }
    const auto id = parse_int(attrs, "Id");
    const auto type = parse_int(attrs, "PostTypeId");
    if (!id || !type || *id <= 0) {
      ++stats.rows_malformed;
      continue;
    }
    RawPost post;
    post.post_id = *id;
    post.post_type = *type == 1 ? PostType::question : (*type == 2 ? PostType::answer : PostType::other);
    post.domain = domain;
    if (auto it = attrs.find("Title"); it != attrs.end()) post.title = decode_entities(it->second);
    if (auto it = attrs.find("Body"); it != attrs.end()) post.body_html = decode_entities(it->second);
    posts.push_back(std::move(post));
  }
  check_tolerance(stats, options, "Posts.xml");
  return posts;
}

std::vector<RawPost> parse_posts_xml_file(const std::string& path, const std::string& domain,
                                          ParseStats& stats, const ParseOptions& options) {
  auto in = open_or_throw(path);
  return parse_posts_xml(in, domain, stats, options);
}

std::vector<DuplicateLink> parse_postlinks_xml(std::istream& stream, const std::string& domain,
                                               ParseStats& stats, const ParseOptions& options) {
  if (!stream) throw IngestError("unreadable postlinks stream");
  std::vector<DuplicateLink> links;
  AttrMap attrs;
  while (seek_row(stream)) {
    ++stats.rows_total;
    if (!parse_attributes(stream, attrs)) {
      ++stats.rows_malformed;
      continue;
    }
    const auto post_id = parse_int(attrs, "PostId");
    const auto related = parse_int(attrs, "RelatedPostId");
    const auto kind = parse_int(attrs, "LinkTypeId");
    if (!post_id || !related || !kind) {
      ++stats.rows_malformed;
      continue;
    }
    if (*post_id == *related) {
      ++stats.self_links_skipped;
      continue;
    }
    DuplicateLink link;
    link.src_id = {domain, *post_id};
    link.dst_id = {domain, *related};
    link.kind = *kind == 3 ? LinkKind::duplicate : (*kind == 1 ? LinkKind::related : LinkKind::other);
    links.push_back(std::move(link));
  }
  check_tolerance(stats, options, "PostLinks.xml");
  return links;
}

std::vector<DuplicateLink> parse_postlinks_xml_file(const std::string& path,
                                                    const std::string& domain, ParseStats& stats,
                                                    const ParseOptions& options) {
  auto in = open_or_throw(path);
  return parse_postlinks_xml(in, domain, stats, options);
}

QuestionStore posts_to_questions(const std::vector<RawPost>& posts, ParseStats& stats) {
  QuestionStore store;
  for (const RawPost& post : posts) {
    if (post.post_type != PostType::question) continue;
    Question q;
    q.id = {post.domain, post.post_id};
    q.title = collapse_whitespace(post.title);
    q.body = strip_html(post.body_html);
    if (q.title.empty()) {
      ++stats.rows_malformed;
      continue;
    }
    store.add(std::move(q));
  }
  return store;
}

}  // namespace dqd
