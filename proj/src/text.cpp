#include "dqd/text.hpp"

#include <algorithm>
#include <cctype>
#include <cstdint>

namespace dqd {

namespace {

bool is_space(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v';
}

bool is_ascii_punct(char c) {
  return std::ispunct(static_cast<unsigned char>(c)) != 0;
}

}  // namespace

void append_utf8(std::string& out, std::uint32_t cp) {
  if (cp < 0x80) {
    out.push_back(static_cast<char>(cp));
  } else if (cp < 0x800) {
    out.push_back(static_cast<char>(0xc0 | (cp >> 6)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3f)));
  } else if (cp < 0x10000) {
    out.push_back(static_cast<char>(0xe0 | (cp >> 12)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3f)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3f)));
  } else {
    out.push_back(static_cast<char>(0xf0 | (cp >> 18)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3f)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3f)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3f)));
  }
}

std::string decode_entities(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  std::size_t i = 0;
  while (i < text.size()) {
    if (text[i] != '&') {
      out.push_back(text[i++]);
      continue;
    }
    const std::size_t semi = text.find(';', i + 1);
    if (semi == std::string_view::npos || semi - i > 12) {
      out.push_back(text[i++]);
      continue;
    }
    const std::string_view body = text.substr(i + 1, semi - i - 1);
    if (body == "amp") {
      out.push_back('&');
    } else if (body == "lt") {
      out.push_back('<');
    } else if (body == "gt") {
      out.push_back('>');
    } else if (body == "quot") {
      out.push_back('"');
    } else if (body == "apos") {
      out.push_back('\'');
    } else if (body == "nbsp") {
      out.push_back(' ');
    } else if (!body.empty() && body[0] == '#') {
      std::uint32_t cp = 0;
      bool ok = body.size() > 1;
      if (body.size() > 2 && (body[1] == 'x' || body[1] == 'X')) {
        for (std::size_t k = 2; k < body.size(); ++k) {
          const char c = body[k];
          std::uint32_t d;
          if (c >= '0' && c <= '9') d = c - '0';
          else if (c >= 'a' && c <= 'f') d = 10 + (c - 'a');
          else if (c >= 'A' && c <= 'F') d = 10 + (c - 'A');
          else { ok = false; break; }
          cp = cp * 16 + d;
        }
      } else {
        for (std::size_t k = 1; k < body.size(); ++k) {
          if (body[k] < '0' || body[k] > '9') { ok = false; break; }
          cp = cp * 10 + static_cast<std::uint32_t>(body[k] - '0');
        }
      }
      if (ok && cp > 0 && cp <= 0x10ffff) {
        append_utf8(out, cp);
      } else {
        out.push_back(text[i]);
        ++i;
        continue;
      }
    } else {
      out.push_back(text[i++]);
      continue;
    }
    i = semi + 1;
  }
  return out;
}

std::string collapse_whitespace(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  bool pending_space = false;
  for (char c : text) {
    if (is_space(c)) {
      pending_space = !out.empty();
    } else {
      if (pending_space) out.push_back(' ');
      pending_space = false;
      out.push_back(c);
    }
  }
  return out;
}

std::string strip_html(std::string_view html) {
  std::string flat;
  flat.reserve(html.size());
  std::size_t i = 0;
  while (i < html.size()) {
    if (html[i] == '<') {
      if (html.compare(i, 4, "<!--") == 0) {
        const std::size_t end = html.find("-->", i + 4);
        i = end == std::string_view::npos ? html.size() : end + 3;
        flat.push_back(' ');
        continue;
      }
      // Skip to the closing '>', honoring quoted attribute values.
      std::size_t j = i + 1;
      char quote = 0;
      while (j < html.size()) {
        const char c = html[j];
        if (quote != 0) {
          if (c == quote) quote = 0;
        } else if (c == '"' || c == '\'') {
          quote = c;
        } else if (c == '>') {
          break;
        }
        ++j;
      }
      i = j < html.size() ? j + 1 : html.size();
      flat.push_back(' ');
    } else {
      flat.push_back(html[i++]);
    }
  }
  return collapse_whitespace(decode_entities(flat));
}

std::vector<std::string> split_sentences(std::string_view text, const SentenceSplitterConfig& config) {
  std::vector<std::string> sentences;
  const std::string collapsed = collapse_whitespace(text);
  if (collapsed.empty()) return sentences;

  auto is_guarded = [&](std::size_t dot) {
    // Word immediately before the terminator, letters and inner dots only.
    std::size_t start = dot;
    while (start > 0 && !is_space(collapsed[start - 1])) --start;
    std::string word = collapsed.substr(start, dot - start);
    std::transform(word.begin(), word.end(), word.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return std::find(config.abbreviations.begin(), config.abbreviations.end(), word) !=
           config.abbreviations.end();
  };

  std::size_t begin = 0;
  for (std::size_t i = 0; i < collapsed.size(); ++i) {
    const char c = collapsed[i];
    if (c != '.' && c != '!' && c != '?') continue;
    // Let a run of terminators ("?!", "...") close together.
    std::size_t end = i;
    while (end + 1 < collapsed.size() &&
           (collapsed[end + 1] == '.' || collapsed[end + 1] == '!' || collapsed[end + 1] == '?')) {
      ++end;
    }
    if (end + 1 >= collapsed.size()) {
      i = end;
      continue;  // trailing terminator; the tail flush below picks it up
    }
    if (!is_space(collapsed[end + 1])) {
      i = end;
      continue;
    }
    std::size_t next = end + 1;
    while (next < collapsed.size() && is_space(collapsed[next])) ++next;
    if (next >= collapsed.size()) {
      i = end;
      continue;
    }
    const unsigned char nc = static_cast<unsigned char>(collapsed[next]);
    const bool opens_token = std::isupper(nc) || std::isdigit(nc) || nc == '"' || nc == '\'' ||
                             nc == '(' || nc == '[' || nc >= 0x80;
    if (!opens_token) {
      i = end;
      continue;
    }
    if (c == '.' && end == i && is_guarded(i)) continue;
    sentences.push_back(collapsed.substr(begin, end + 1 - begin));
    begin = next;
    i = end;
  }
  if (begin < collapsed.size()) sentences.push_back(collapsed.substr(begin));
  return sentences;
}

std::vector<std::string> split_words(std::string_view text) {
  std::vector<std::string> words;
  std::string current;
  for (char c : text) {
    if (is_space(c)) {
      if (!current.empty()) {
        words.push_back(current);
        current.clear();
      }
    } else if (is_ascii_punct(c)) {
      if (!current.empty()) {
        words.push_back(current);
        current.clear();
      }
      words.emplace_back(1, c);
    } else {
      current.push_back(c);
    }
  }
  if (!current.empty()) words.push_back(current);
  return words;
}

}  // namespace dqd
