#pragma once

#include "dqd/questions.hpp"
#include "dqd/types.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace dqd {

inline constexpr std::string_view kPadToken = "[PAD]";
inline constexpr std::string_view kUnkToken = "[UNK]";
inline constexpr std::string_view kClsToken = "[CLS]";
inline constexpr std::string_view kSepToken = "[SEP]";
inline constexpr std::string_view kMaskToken = "[MASK]";

struct Vocab {
  std::vector<std::string> tokens;                    // id -> piece
  std::map<std::string, TokenId, std::less<>> ids;    // piece -> id
  TokenId pad_id = 0;
  TokenId unk_id = 1;
  TokenId cls_id = 2;
  TokenId sep_id = 3;
  TokenId mask_id = 4;

  TokenId size() const { return static_cast<TokenId>(tokens.size()); }
  bool is_special(TokenId id) const {
    return id == pad_id || id == unk_id || id == cls_id || id == sep_id || id == mask_id;
  }
};

// Packed [CLS] A [SEP] (B [SEP]) layout, padded to a fixed length.
// Segment ids are 0 through the first [SEP] and 1 after it; padding is
// segment 0. attention_mask is 1 exactly on non-[PAD] positions.
struct TokenSequence {
  std::vector<TokenId> ids;
  std::vector<std::int8_t> segment_ids;
  std::vector<std::int8_t> attention_mask;
  int length = 0;  // non-pad prefix length
};

// Merge-trained subword tokenizer emitting WordPiece-style "##"
// continuation pieces. Case-preserving. A trained instance is immutable
// and safe for concurrent encoding.
class Tokenizer {
 public:
  struct TrainResult {
    Tokenizer tokenizer;
    bool undersized = false;  // corpus could not support vocab_size pieces
  };

  // Deterministic merge training: highest pair count wins, ties break
  // lexicographically. vocab_size counts specials + characters + merges.
  static TrainResult train(const std::vector<std::string>& corpus_lines, int vocab_size,
                           int min_frequency = 2);

  static Tokenizer load(const std::string& path);
  void save(const std::string& path) const;

  const Vocab& vocab() const { return vocab_; }

  // Greedy longest-match segmentation after whitespace/punctuation
  // pre-splitting; characters with no matching piece become [UNK].
  std::vector<TokenId> encode(std::string_view text) const;

  TokenSequence encode_pair(std::string_view text_a, std::string_view text_b,
                            int max_seq_len) const;

  // [CLS] text [SEP] with all-zero segments (no second sentence).
  TokenSequence encode_single(std::string_view text, int max_seq_len) const;

  std::string decode(const std::vector<TokenId>& ids) const;

  std::int64_t count_tokens(std::string_view text) const {
    return static_cast<std::int64_t>(encode(text).size());
  }

 private:
  static Tokenizer from_tokens(std::vector<std::string> tokens);
  std::vector<TokenId> encode_word(std::string_view word) const;
  TokenSequence pack(std::vector<TokenId> a, std::vector<TokenId> b, bool has_b,
                     int max_seq_len) const;

  Vocab vocab_;
};

}  // namespace dqd
