#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace dqd {

// Removes tags, decodes entities, keeps code-block content as literal
// text, and collapses runs of whitespace to single spaces. Best-effort on
// malformed markup; never throws.
std::string strip_html(std::string_view html);

// Decodes the named entities (&amp; &lt; &gt; &quot; &apos; &nbsp;) and
// numeric forms (&#38; &#x26;). Unknown entities pass through verbatim.
std::string decode_entities(std::string_view text);

std::string collapse_whitespace(std::string_view text);

// Encodes one code point as UTF-8 and appends it to out.
void append_utf8(std::string& out, std::uint32_t code_point);

struct SentenceSplitterConfig {
  // Words that end with '.' without closing a sentence.
  std::vector<std::string> abbreviations = {"e.g", "i.e", "etc", "cf",  "vs", "mr",
                                            "mrs", "dr",  "st",  "no",  "fig", "eq",
                                            "al",  "inc", "ltd", "approx"};
};

// Rule-based splitting: a sentence ends at . ! ? followed by whitespace
// and an uppercase letter, digit, or opening quote/bracket, unless the
// token before the period is a guarded abbreviation. The returned pieces
// concatenate back to the input modulo whitespace.
std::vector<std::string> split_sentences(std::string_view text,
                                         const SentenceSplitterConfig& config = {});

// Whitespace split with every ASCII punctuation character emitted as its
// own token. Case is preserved. Non-ASCII bytes are word characters.
std::vector<std::string> split_words(std::string_view text);

}  // namespace dqd
