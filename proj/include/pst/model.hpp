#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "pst/rng.hpp"
#include "pst/tensor.hpp"
#include "pst/tokens.hpp"

namespace pst {

struct ModelDims {
    int n_embd = 64;
    int n_head = 2;
    int n_layer = 2;
    int n_ctx = 256;
    int n_vocab = 0;

    int n_ff() const { return 4 * n_embd; }
    int head_dim() const { return n_embd / n_head; }

    bool operator==(const ModelDims&) const = default;
};

// Decoder-only transformer held as a flat list of named float64 tensors.
// Pre-norm blocks with RMSNorm, causal multi-head attention, GELU MLP, no
// biases, learned absolute position embeddings, untied output projection.
//
// Mutation happens only through the optimizer; read-only ops (logprob,
// sample) may run concurrently against an unchanging model.
class ToyLM {
public:
    ToyLM() = default;
    ToyLM(ModelDims dims, std::string model_id, uint64_t seed);

    const ModelDims& dims() const { return dims_; }
    const std::string& model_id() const { return model_id_; }
    uint64_t seed() const { return seed_; }

    std::vector<Tensor>& params() { return params_; }
    const std::vector<Tensor>& params() const { return params_; }

    Tensor& param(const std::string& name);
    const Tensor& param(const std::string& name) const;

    // FNV-1a over the raw parameter bytes; cheap identity check.
    uint64_t param_hash() const;

    // Rebuild a model around externally supplied tensors (checkpoint load).
    static ToyLM from_parts(ModelDims dims, std::string model_id, uint64_t seed,
                            std::vector<Tensor> params);

private:
    ModelDims dims_;
    std::string model_id_;
    uint64_t seed_ = 0;
    std::vector<Tensor> params_;
};

// Canonical tensor names for a given shape; init and checkpoints agree on
// this order.
std::vector<Tensor> make_param_tensors(const ModelDims& dims);

// Sum over target positions of log p(target_t | context, target_<t), nats.
// Deterministic; always <= 0 up to rounding. Throws LengthError when the
// concatenated sequence exceeds the context window or inputs are empty,
// NumericError on non-finite logits.
double logprob(const ToyLM& m, std::span<const int> context, std::span<const int> target);

// Next-token distribution after feeding `context` (softmax of logits / T).
// The exact reference that `sample` must match.
std::vector<double> next_token_probs(const ToyLM& m, std::span<const int> context,
                                     double temperature);

struct SampleCfg {
    int max_new = 16;
    double temperature = 1.0;
    // Temperature -> 0+ limit: deterministic argmax decode, rng untouched.
    bool greedy = false;
};

// Ancestral sampling; stops at eos (included in the output) or after max_new
// tokens. Reproducible per rng state.
TokenSeq sample(const ToyLM& m, std::span<const int> context, const SampleCfg& cfg, Rng& rng);

struct LossAndGrad {
    double loss = 0.0;
    std::vector<Tensor> grads;
};

// loss = -logprob(m, context, target); grads are exact analytic partials with
// respect to every parameter tensor. Throws NumericError naming the first
// offending tensor if any gradient entry is non-finite.
LossAndGrad ce_loss_and_grad(const ToyLM& m, std::span<const int> context,
                             std::span<const int> target);

} // namespace pst
