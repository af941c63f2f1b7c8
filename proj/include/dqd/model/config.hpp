#pragma once

#include "dqd/questions.hpp"

#include <json.hpp>

namespace dqd {

struct ModelConfig {
  int vocab_size = 0;
  int max_seq_len = 128;
  int hidden_dim = 128;
  int num_layers = 4;
  int num_heads = 4;
  int ffn_dim = 512;
  double dropout_rate = 0.1;
  double layer_norm_epsilon = 1e-12;

  int head_dim() const { return hidden_dim / num_heads; }

  void validate() const {
    if (vocab_size < 5) throw ConfigError("vocab_size must cover the special tokens");
    if (max_seq_len < 5) throw ConfigError("max_seq_len must be >= 5");
    if (hidden_dim <= 0 || num_heads <= 0 || hidden_dim % num_heads != 0) {
      throw ConfigError("hidden_dim must be a positive multiple of num_heads");
    }
    if (num_layers < 1) throw ConfigError("num_layers must be >= 1");
    if (ffn_dim <= 0) throw ConfigError("ffn_dim must be positive");
    if (!(dropout_rate >= 0.0) || dropout_rate >= 1.0) {
      throw ConfigError("dropout_rate must be in [0, 1)");
    }
    if (!(layer_norm_epsilon > 0.0)) throw ConfigError("layer_norm_epsilon must be positive");
  }

  bool operator==(const ModelConfig&) const = default;
};

inline void to_json(nlohmann::json& j, const ModelConfig& c) {
  j = nlohmann::json{{"vocab_size", c.vocab_size},
                     {"max_seq_len", c.max_seq_len},
                     {"hidden_dim", c.hidden_dim},
                     {"num_layers", c.num_layers},
                     {"num_heads", c.num_heads},
                     {"ffn_dim", c.ffn_dim},
                     {"dropout_rate", c.dropout_rate},
                     {"layer_norm_epsilon", c.layer_norm_epsilon}};
}

inline void from_json(const nlohmann::json& j, ModelConfig& c) {
  j.at("vocab_size").get_to(c.vocab_size);
  j.at("max_seq_len").get_to(c.max_seq_len);
  j.at("hidden_dim").get_to(c.hidden_dim);
  j.at("num_layers").get_to(c.num_layers);
  j.at("num_heads").get_to(c.num_heads);
  j.at("ffn_dim").get_to(c.ffn_dim);
  j.at("dropout_rate").get_to(c.dropout_rate);
  j.at("layer_norm_epsilon").get_to(c.layer_norm_epsilon);
}

}  // namespace dqd
