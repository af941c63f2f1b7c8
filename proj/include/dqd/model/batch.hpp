#pragma once

#include "dqd/questions.hpp"
#include "dqd/tokenizer.hpp"
#include "dqd/types.hpp"

#include <span>
#include <vector>

namespace dqd {

// A padded batch of token sequences, all of one length.
struct TokenBatch {
  IntMat ids;       // B x S
  IntMat segments;  // B x S, values in {0,1}
  IntMat mask;      // B x S, 1 on non-pad positions

  int batch_size() const { return static_cast<int>(ids.rows()); }
  int seq_len() const { return static_cast<int>(ids.cols()); }

  static TokenBatch from_sequences(std::span<const TokenSequence> seqs) {
    if (seqs.empty()) throw ConfigError("empty token batch");
    const std::size_t len = seqs.front().ids.size();
    TokenBatch batch;
    batch.ids.resize(seqs.size(), len);
    batch.segments.resize(seqs.size(), len);
    batch.mask.resize(seqs.size(), len);
    for (std::size_t b = 0; b < seqs.size(); ++b) {
      const TokenSequence& seq = seqs[b];
      if (seq.ids.size() != len || seq.segment_ids.size() != len ||
          seq.attention_mask.size() != len) {
        throw ConfigError("token batch requires equal padded lengths");
      }
      for (std::size_t s = 0; s < len; ++s) {
        batch.ids(b, s) = seq.ids[s];
        batch.segments(b, s) = seq.segment_ids[s];
        batch.mask(b, s) = seq.attention_mask[s];
      }
    }
    return batch;
  }
};

// Inputs for one self-supervised step. mlm_labels holds the original
// token id at masked positions and kIgnoreLabel elsewhere; nsp_labels is
// empty when the next-sentence objective is disabled.
inline constexpr std::int32_t kIgnoreLabel = -1;

struct MaskedBatch {
  TokenBatch tokens;
  IntMat mlm_labels;  // B x S
  std::vector<int> nsp_labels;  // size B or empty; 1 = is_next
};

}  // namespace dqd
