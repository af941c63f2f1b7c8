#include "dqd/tokenizer.hpp"

#include "dqd/text.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace dqd {

namespace {

constexpr std::string_view kContinuation = "##";

// Byte offsets of each UTF-8 code point start, plus the end offset.
std::vector<std::size_t> utf8_boundaries(std::string_view word) {
  std::vector<std::size_t> starts;
  std::size_t i = 0;
  while (i < word.size()) {
    starts.push_back(i);
    const unsigned char c = static_cast<unsigned char>(word[i]);
    std::size_t len = 1;
    if ((c & 0xf8) == 0xf0) len = 4;
    else if ((c & 0xf0) == 0xe0) len = 3;
    else if ((c & 0xe0) == 0xc0) len = 2;
    i += len;
    if (i > word.size()) i = word.size();
  }
  starts.push_back(word.size());
  return starts;
}

std::vector<std::string> word_to_symbols(std::string_view word) {
  const std::vector<std::size_t> b = utf8_boundaries(word);
  std::vector<std::string> symbols;
  symbols.reserve(b.size() - 1);
  for (std::size_t k = 0; k + 1 < b.size(); ++k) {
    std::string sym;
    if (k > 0) sym = kContinuation;
    sym.append(word.substr(b[k], b[k + 1] - b[k]));
    symbols.push_back(std::move(sym));
  }
  return symbols;
}

std::string merge_symbols(const std::string& left, const std::string& right) {
  // The right side always carries the "##" prefix inside a word.
  std::string_view tail = right;
  if (tail.substr(0, 2) == kContinuation) tail.remove_prefix(2);
  return left + std::string(tail);
}

using SymbolPair = std::pair<std::string, std::string>;

struct TrainerState {
  std::vector<std::vector<std::string>> words;
  std::vector<std::int64_t> counts;
  std::map<SymbolPair, std::int64_t> pair_counts;
  std::map<SymbolPair, std::set<std::size_t>> pair_words;

  void index_word(std::size_t idx, std::int64_t sign) {
    const auto& syms = words[idx];
    for (std::size_t i = 0; i + 1 < syms.size(); ++i) {
      SymbolPair p{syms[i], syms[i + 1]};
      auto it = pair_counts.emplace(p, 0).first;
      it->second += sign * counts[idx];
      if (sign > 0) {
        pair_words[p].insert(idx);
      } else if (it->second <= 0) {
        pair_counts.erase(it);
        auto wit = pair_words.find(p);
        if (wit != pair_words.end()) {
          wit->second.erase(idx);
          if (wit->second.empty()) pair_words.erase(wit);
        }
      } else {
        auto wit = pair_words.find(p);
        if (wit != pair_words.end()) wit->second.erase(idx);
      }
    }
  }

  void apply_merge(const SymbolPair& pair, const std::string& merged) {
    const auto wit = pair_words.find(pair);
    if (wit == pair_words.end()) return;
    const std::vector<std::size_t> affected(wit->second.begin(), wit->second.end());
    for (std::size_t idx : affected) {
      index_word(idx, -1);
      auto& syms = words[idx];
      std::vector<std::string> out;
      out.reserve(syms.size());
      std::size_t i = 0;
      while (i < syms.size()) {
        if (i + 1 < syms.size() && syms[i] == pair.first && syms[i + 1] == pair.second) {
          out.push_back(merged);
          i += 2;
        } else {
          out.push_back(syms[i]);
          ++i;
        }
      }
      syms = std::move(out);
      index_word(idx, +1);
    }
    pair_words.erase(pair);
    pair_counts.erase(pair);
  }
};

}  // namespace

Tokenizer Tokenizer::from_tokens(std::vector<std::string> tokens) {
  Tokenizer t;
  t.vocab_.tokens = std::move(tokens);
  for (std::size_t i = 0; i < t.vocab_.tokens.size(); ++i) {
    auto [it, inserted] = t.vocab_.ids.emplace(t.vocab_.tokens[i], static_cast<TokenId>(i));
    if (!inserted) throw IngestError("vocab contains duplicate token '" + t.vocab_.tokens[i] + "'");
  }
  auto id_of = [&](std::string_view name) {
    auto it = t.vocab_.ids.find(name);
    if (it == t.vocab_.ids.end()) {
      throw IngestError("vocab is missing special token " + std::string(name));
    }
    return it->second;
  };
  t.vocab_.pad_id = id_of(kPadToken);
  t.vocab_.unk_id = id_of(kUnkToken);
  t.vocab_.cls_id = id_of(kClsToken);
  t.vocab_.sep_id = id_of(kSepToken);
  t.vocab_.mask_id = id_of(kMaskToken);
  return t;
}

Tokenizer::TrainResult Tokenizer::train(const std::vector<std::string>& corpus_lines,
                                        int vocab_size, int min_frequency) {
  const std::vector<std::string_view> specials = {kPadToken, kUnkToken, kClsToken, kSepToken,
                                                  kMaskToken};
  if (min_frequency < 1) throw ConfigError("min_frequency must be >= 1");

  // Word frequency table, keys sorted for deterministic processing.
  std::map<std::string, std::int64_t> word_freq;
  for (const std::string& line : corpus_lines) {
    for (std::string& w : split_words(line)) word_freq[std::move(w)] += 1;
  }

  TrainerState state;
  std::set<std::string> alphabet;
  for (const auto& [word, count] : word_freq) {
    state.words.push_back(word_to_symbols(word));
    state.counts.push_back(count);
    for (const std::string& sym : state.words.back()) alphabet.insert(sym);
  }
  for (std::size_t idx = 0; idx < state.words.size(); ++idx) state.index_word(idx, +1);

  std::vector<std::string> tokens(specials.begin(), specials.end());
  for (const std::string& sym : alphabet) tokens.push_back(sym);
  if (static_cast<int>(tokens.size()) > vocab_size) {
    std::ostringstream msg;
    msg << "vocab_size " << vocab_size << " is below specials + alphabet (" << tokens.size() << ")";
    throw ConfigError(msg.str());
  }

  std::set<std::string> have(tokens.begin(), tokens.end());
  while (static_cast<int>(tokens.size()) < vocab_size) {
    const SymbolPair* best = nullptr;
    std::int64_t best_count = 0;
    for (const auto& [pair, count] : state.pair_counts) {
      if (count < min_frequency || count <= best_count) continue;
      const std::string merged = merge_symbols(pair.first, pair.second);
      // Reject degenerate products that would collide with the "##" marker.
      if (merged.empty() || merged == kContinuation) continue;
      best = &pair;
      best_count = count;
    }
    if (best == nullptr) break;
    const SymbolPair pair = *best;
    const std::string merged = merge_symbols(pair.first, pair.second);
    state.apply_merge(pair, merged);
    if (have.insert(merged).second) tokens.push_back(merged);
  }

  TrainResult result;
  result.undersized = static_cast<int>(tokens.size()) < vocab_size;
  result.tokenizer = from_tokens(std::move(tokens));
  return result;
}

std::vector<TokenId> Tokenizer::encode_word(std::string_view word) const {
  const std::vector<std::size_t> b = utf8_boundaries(word);
  const std::size_t n_chars = b.size() - 1;
  std::vector<TokenId> out;
  std::size_t k = 0;
  std::string candidate;
  while (k < n_chars) {
    TokenId matched = -1;
    std::size_t matched_end = k;
    for (std::size_t end = n_chars; end > k; --end) {
      candidate.clear();
      if (k > 0) candidate = kContinuation;
      candidate.append(word.substr(b[k], b[end] - b[k]));
      const auto it = vocab_.ids.find(candidate);
      if (it != vocab_.ids.end()) {
        matched = it->second;
        matched_end = end;
        break;
      }
    }
    if (matched < 0) {
      out.push_back(vocab_.unk_id);
      ++k;
    } else {
      out.push_back(matched);
      k = matched_end;
    }
  }
  return out;
}

std::vector<TokenId> Tokenizer::encode(std::string_view text) const {
  std::vector<TokenId> out;
  for (const std::string& word : split_words(text)) {
    const std::vector<TokenId> pieces = encode_word(word);
    out.insert(out.end(), pieces.begin(), pieces.end());
  }
  return out;
}

TokenSequence Tokenizer::pack(std::vector<TokenId> a, std::vector<TokenId> b, bool has_b,
                              int max_seq_len) const {
  if (max_seq_len < 5) throw ConfigError("max_seq_len must be >= 5");
  const std::size_t budget = static_cast<std::size_t>(max_seq_len) - (has_b ? 3 : 2);
  // Trim the longer side first; ties trim b, so equal overflow alternates.
  while (a.size() + b.size() > budget) {
    if (a.size() > b.size()) {
      a.pop_back();
    } else if (!b.empty()) {
      b.pop_back();
    } else {
      a.pop_back();
    }
  }

  TokenSequence seq;
  seq.ids.reserve(max_seq_len);
  seq.ids.push_back(vocab_.cls_id);
  seq.ids.insert(seq.ids.end(), a.begin(), a.end());
  seq.ids.push_back(vocab_.sep_id);
  const std::size_t segment_boundary = seq.ids.size();
  if (has_b) {
    seq.ids.insert(seq.ids.end(), b.begin(), b.end());
    seq.ids.push_back(vocab_.sep_id);
  }
  seq.length = static_cast<int>(seq.ids.size());
  seq.ids.resize(max_seq_len, vocab_.pad_id);
  seq.segment_ids.assign(max_seq_len, 0);
  for (std::size_t i = segment_boundary; i < static_cast<std::size_t>(seq.length); ++i) {
    seq.segment_ids[i] = 1;
  }
  seq.attention_mask.assign(max_seq_len, 0);
  std::fill(seq.attention_mask.begin(), seq.attention_mask.begin() + seq.length, 1);
  return seq;
}

TokenSequence Tokenizer::encode_pair(std::string_view text_a, std::string_view text_b,
                                     int max_seq_len) const {
  return pack(encode(text_a), encode(text_b), /*has_b=*/true, max_seq_len);
}

TokenSequence Tokenizer::encode_single(std::string_view text, int max_seq_len) const {
  return pack(encode(text), {}, /*has_b=*/false, max_seq_len);
}

std::string Tokenizer::decode(const std::vector<TokenId>& ids) const {
  std::string out;
  for (TokenId id : ids) {
    if (id < 0 || id >= vocab_.size()) {
      throw ConfigError("decode: unknown token id " + std::to_string(id));
    }
    const std::string& token = vocab_.tokens[id];
    std::string_view piece = token;
    const bool continuation = piece.substr(0, 2) == kContinuation && piece.size() > 2;
    if (continuation) {
      piece.remove_prefix(2);
    } else if (!out.empty()) {
      out.push_back(' ');
    }
    out.append(piece);
  }
  return out;
}

void Tokenizer::save(const std::string& path) const {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IngestError("cannot write " + path);
  out << "#! dqd-vocab v1\n";
  out << "#! specials " << kPadToken << ' ' << kUnkToken << ' ' << kClsToken << ' ' << kSepToken
      << ' ' << kMaskToken << '\n';
  for (const std::string& token : vocab_.tokens) out << token << '\n';
}

Tokenizer Tokenizer::load(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IngestError("cannot open " + path);
  std::string line;
  std::vector<std::string> tokens;
  bool saw_version = false;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.rfind("#!", 0) == 0) {
      if (line.rfind("#! dqd-vocab", 0) == 0) saw_version = true;
      continue;
    }
    if (line.empty()) continue;
    tokens.push_back(line);
  }
  if (!saw_version) throw IngestError("not a vocab file (missing #! dqd-vocab header): " + path);
  return from_tokens(std::move(tokens));
}

}  // namespace dqd
