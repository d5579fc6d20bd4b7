#pragma once

#include <cstdint>
#include <vector>

#include "pst/tensor.hpp"

namespace pst {

struct AdamWConfig {
    double lr = 1e-3;
    double beta1 = 0.9;
    double beta2 = 0.999;
    double eps = 1e-8;
    double weight_decay = 0.01;
    double clip_norm = 1.0; // <= 0 disables clipping
};

struct StepResult {
    bool applied = false;
    double grad_norm = 0.0;    // global norm before clipping
    double applied_norm = 0.0; // global norm of the gradient fed to the moments
    std::string skipped_tensor;
};

// AdamW with decoupled weight decay, global-norm clipping and a non-finite
// skip guard. `scale` multiplies the adaptive update term (an effective
// per-step learning-rate factor), so the applied delta is linear in `scale`
// while the moment accumulators always see the raw clipped gradient. Decay is
// applied unscaled: step(scale=0) moves parameters by the decay term alone.
class AdamW {
public:
    AdamW() = default;
    AdamW(const AdamWConfig& cfg, const std::vector<Tensor>& params);

    // Clips `grads` in place when clipping is enabled. Skips the whole step
    // (parameters and state untouched, applied=false) if any gradient entry
    // is non-finite. The step counter increments only on applied steps.
    StepResult step(std::vector<Tensor>& params, std::vector<Tensor>& grads, double scale = 1.0);

    const AdamWConfig& config() const { return cfg_; }
    void set_lr(double lr) { cfg_.lr = lr; }
    void set_clip_norm(double c) { cfg_.clip_norm = c; }
    void set_weight_decay(double wd) { cfg_.weight_decay = wd; }

    int64_t step_count() const { return step_count_; }

    std::vector<Tensor>& moment1() { return m_; }
    std::vector<Tensor>& moment2() { return v_; }
    const std::vector<Tensor>& moment1() const { return m_; }
    const std::vector<Tensor>& moment2() const { return v_; }

    static AdamW from_parts(const AdamWConfig& cfg, std::vector<Tensor> m,
                            std::vector<Tensor> v, int64_t step_count);

private:
    AdamWConfig cfg_;
    std::vector<Tensor> m_;
    std::vector<Tensor> v_;
    int64_t step_count_ = 0;
};

// Scales all tensors so the global norm is at most `clip_norm`; returns the
// norm before clipping. clip_norm <= 0 is a no-op.
double clip_global_norm(std::vector<Tensor>& grads, double clip_norm);

// Cosine annealing from base_lr to ~0 across total_epochs; epoch counts from 0.
double cosine_lr(double base_lr, int epoch, int total_epochs);

} // namespace pst
