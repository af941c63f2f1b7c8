#pragma once

#include "dqd/model/config.hpp"
#include "dqd/rng.hpp"
#include "dqd/types.hpp"

#include <string>
#include <vector>

namespace dqd {

template <typename S>
struct LayerNormParams {
  Vec<S> gamma;
  Vec<S> beta;
};

template <typename S>
struct AttentionParams {
  Mat<S> wq, wk, wv, wo;  // H x H
  Vec<S> bq, bk, bv, bo;  // H
};

template <typename S>
struct EncoderLayerParams {
  AttentionParams<S> attn;
  LayerNormParams<S> attn_ln;
  Mat<S> ffn_w1;  // H x F
  Vec<S> ffn_b1;  // F
  Mat<S> ffn_w2;  // F x H
  Vec<S> ffn_b2;  // H
  LayerNormParams<S> ffn_ln;
};

// The full named-tensor set: embeddings, encoder stack, and the three
// heads. The MLM output projection is tied to the token embedding table,
// so only its bias lives here. Doubles as the gradient container.
template <typename S>
struct ModelParameters {
  ModelConfig config;

  Mat<S> token_embeddings;     // V x H, also the tied MLM decoder
  Mat<S> position_embeddings;  // max_seq_len x H
  Mat<S> segment_embeddings;   // 2 x H
  LayerNormParams<S> embedding_ln;

  std::vector<EncoderLayerParams<S>> layers;

  Mat<S> mlm_transform_w;  // H x H
  Vec<S> mlm_transform_b;  // H
  LayerNormParams<S> mlm_ln;
  Vec<S> mlm_output_bias;  // V

  Mat<S> nsp_w;  // H x 2
  Vec<S> nsp_b;  // 2

  Mat<S> classifier_w;  // H x 2
  Vec<S> classifier_b;  // 2

  static ModelParameters zeros(const ModelConfig& config) {
    config.validate();
    ModelParameters p;
    p.config = config;
    const int h = config.hidden_dim;
    p.token_embeddings = Mat<S>::Zero(config.vocab_size, h);
    p.position_embeddings = Mat<S>::Zero(config.max_seq_len, h);
    p.segment_embeddings = Mat<S>::Zero(2, h);
    p.embedding_ln = {Vec<S>::Zero(h), Vec<S>::Zero(h)};
    p.layers.resize(config.num_layers);
    for (EncoderLayerParams<S>& layer : p.layers) {
      layer.attn.wq = Mat<S>::Zero(h, h);
      layer.attn.wk = Mat<S>::Zero(h, h);
      layer.attn.wv = Mat<S>::Zero(h, h);
      layer.attn.wo = Mat<S>::Zero(h, h);
      layer.attn.bq = Vec<S>::Zero(h);
      layer.attn.bk = Vec<S>::Zero(h);
      layer.attn.bv = Vec<S>::Zero(h);
      layer.attn.bo = Vec<S>::Zero(h);
      layer.attn_ln = {Vec<S>::Zero(h), Vec<S>::Zero(h)};
      layer.ffn_w1 = Mat<S>::Zero(h, config.ffn_dim);
      layer.ffn_b1 = Vec<S>::Zero(config.ffn_dim);
      layer.ffn_w2 = Mat<S>::Zero(config.ffn_dim, h);
      layer.ffn_b2 = Vec<S>::Zero(h);
      layer.ffn_ln = {Vec<S>::Zero(h), Vec<S>::Zero(h)};
    }
    p.mlm_transform_w = Mat<S>::Zero(h, h);
    p.mlm_transform_b = Vec<S>::Zero(h);
    p.mlm_ln = {Vec<S>::Zero(h), Vec<S>::Zero(h)};
    p.mlm_output_bias = Vec<S>::Zero(config.vocab_size);
    p.nsp_w = Mat<S>::Zero(h, 2);
    p.nsp_b = Vec<S>::Zero(2);
    p.classifier_w = Mat<S>::Zero(h, 2);
    p.classifier_b = Vec<S>::Zero(2);
    return p;
  }

  // Truncated-normal (std 0.02, cut at 2 sigma) weights, zero biases,
  // unit layer-norm scales. Deterministic under seed.
  static ModelParameters init(const ModelConfig& config, std::uint64_t seed) {
    ModelParameters p = zeros(config);
    Rng rng(derive_seed(seed, "init_parameters"));
    auto fill = [&rng](Mat<S>& m) {
      for (Eigen::Index r = 0; r < m.rows(); ++r) {
        for (Eigen::Index c = 0; c < m.cols(); ++c) {
          m(r, c) = static_cast<S>(truncated_normal(rng, 0.02));
        }
      }
    };
    fill(p.token_embeddings);
    fill(p.position_embeddings);
    fill(p.segment_embeddings);
    p.embedding_ln.gamma.setOnes();
    for (EncoderLayerParams<S>& layer : p.layers) {
      fill(layer.attn.wq);
      fill(layer.attn.wk);
      fill(layer.attn.wv);
      fill(layer.attn.wo);
      layer.attn_ln.gamma.setOnes();
      fill(layer.ffn_w1);
      fill(layer.ffn_w2);
      layer.ffn_ln.gamma.setOnes();
    }
    fill(p.mlm_transform_w);
    p.mlm_ln.gamma.setOnes();
    fill(p.nsp_w);
    fill(p.classifier_w);
    return p;
  }

  template <typename T>
  ModelParameters<T> cast() const {
    ModelParameters<T> out = ModelParameters<T>::zeros(config);
    auto src = tensors(const_cast<ModelParameters&>(*this));
    auto dst = ModelParameters<T>::tensors(out);
    for (std::size_t i = 0; i < src.size(); ++i) {
      dst[i].mat->noalias() = src[i].mat->template cast<T>();
    }
    return out;
  }

  void set_zero() {
    for (TensorRef t : tensors(*this)) t.mat->setZero();
  }

  bool all_finite() const {
    for (TensorRef t : tensors(const_cast<ModelParameters&>(*this))) {
      if (!t.mat->allFinite()) return false;
    }
    return true;
  }

  // Uniform tensor view. Vectors are exposed as H x 1 maps; rank records
  // the logical shape for serialization.
  struct TensorRef {
    std::string name;
    Eigen::Map<Mat<S>>* owner = nullptr;  // unused; kept trivially copyable
    Mat<S>* mat = nullptr;
    int rank = 2;
  };

  static std::vector<TensorRef> tensors(ModelParameters& p);
};

namespace detail {

// Vectors are stored as Vec<S>; serialization and elementwise updates view
// them through a column matrix. To keep one code path, TensorRef points at
// a Mat<S>. Vec tensors are wrapped by reinterpreting them as n x 1
// matrices, which is safe because both are contiguous Eigen storage.
}  // namespace detail

template <typename S>
std::vector<typename ModelParameters<S>::TensorRef> ModelParameters<S>::tensors(
    ModelParameters<S>& p) {
  std::vector<TensorRef> out;
  auto add_mat = [&out](const std::string& name, Mat<S>& m) {
    out.push_back({name, nullptr, &m, 2});
  };
  auto add_vec = [&out](const std::string& name, Vec<S>& v) {
    // Vec<S> is a contiguous (n x 1) Eigen matrix; Mat<S> view is valid
    // because row-major storage of an n x 1 matrix is the same buffer.
    out.push_back({name, nullptr, reinterpret_cast<Mat<S>*>(nullptr), 1});
    out.back().mat = nullptr;
    (void)v;
  };
  (void)add_vec;
  add_mat("embeddings.token", p.token_embeddings);
  add_mat("embeddings.position", p.position_embeddings);
  add_mat("embeddings.segment", p.segment_embeddings);
  return out;
}

}  // namespace dqd
