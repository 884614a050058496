// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "timeomni/autodiff.hpp"
#include "timeomni/backbone.hpp"
#include "timeomni/checkpoint.hpp"
#include "timeomni/dataset.hpp"
#include "timeomni/model.hpp"

namespace timeomni {

// ---- losses -----------------------------------------------------------------------

/// Mean of -log softmax(logits[i])[targets[i]] over rows with mask[i] set
/// (every row when mask is empty). Throws EmptyMask if no row is selected.
ad::Var cross_entropy_loss(ad::Var logits, std::span<const TokenId> targets, std::span<const bool> mask = {});

/// Mean squared error against a constant target. Throws LengthMismatch.
ad::Var mse_loss(ad::Var pred, std::span<const double> target);

// ---- configuration ------------------------------------------------------------------

enum class Adapter { Dora, Full };

struct TrainConfig {
    double lr = 2e-5;
    std::size_t epochs = 10;
    double warmup_frac = 0.05;
    std::size_t batch_understand = 6;
    std::size_t batch_generate = 1;
    std::uint64_t seed = 0;
    double lambda_text = 1.0;
    double lambda_series = 1.0;
    double clip_norm = 1.0;  // 0 disables clipping
    double beta1 = 0.9;
    double beta2 = 0.999;
    double adam_eps = 1e-8;
    Adapter adapter = Adapter::Dora;
    std::size_t dora_rank = 8;
    double dora_alpha = 32.0;

    void validate() const;
};

/// Linear warmup over the first ceil(warmup_frac * total) steps, cosine decay to zero after.
double lr_at(std::size_t step, std::size_t total_steps, double lr, double warmup_frac);
double lr_at(std::size_t step, std::size_t total_steps, const TrainConfig& cfg);

// ---- optimiser ------------------------------------------------------------------------

struct AdamMoments {
    Tensor m;
    Tensor v;
    std::size_t steps = 0;
};

/// Moments keyed by parameter name. Parameters that never received a
/// gradient have no entry and are never moved.
struct OptimizerState {
    std::map<std::string, AdamMoments> moments;
};

/// Global L2 norm over gradients of trainable parameters that received one.
double grad_norm(const ParameterStore& store);
/// Rescales gradients so the global norm is at most max_norm. Returns the norm before clipping.
double clip_grad_norm(ParameterStore& store, double max_norm);
/// One Adam update of every trainable parameter holding a gradient.
void adam_update(ParameterStore& store, OptimizerState& state, double lr, const TrainConfig& cfg);

// ---- model setup -------------------------------------------------------------------------

/// build_model followed by the adapter selected in `train`.
Model build_trainable_model(const ModelConfig& model_cfg, const TrainConfig& train);

// ---- joint schedule ---------------------------------------------------------------------

struct JointBatch {
    std::vector<const TaskInstance*> understand;
    std::vector<const TaskInstance*> generate;
};

/// Understanding and generation pools cycled independently. Each pool is
/// reshuffled once per pass with a generator seeded by (seed, pool, pass), so
/// the batch at any step is a pure function of the step number.
class JointSchedule {
public:
    JointSchedule(const Dataset& data, const TrainConfig& cfg);

    std::size_t steps_per_epoch() const { return steps_per_epoch_; }
    std::size_t total_steps() const { return steps_per_epoch_ * epochs_; }
    /// Batch for a 1-based step.
    JointBatch batch(std::size_t step) const;

private:
    std::vector<const TaskInstance*> pick(const std::vector<const TaskInstance*>& pool, std::size_t batch,
                                          std::size_t step, std::uint32_t tag) const;

    std::vector<const TaskInstance*> understand_;
    std::vector<const TaskInstance*> generate_;
    std::size_t batch_u_, batch_g_, epochs_, steps_per_epoch_;
    std::uint64_t seed_;
};

struct StepLosses {
    double loss_u = 0.0;  // mean over the understanding batch; 0 when empty
    double loss_g = 0.0;  // mean over the generation batch; 0 when empty
};

/// One optimiser step on lambda_text * mean(loss_u) + lambda_series * mean(loss_g)
/// with learning rate lr_at(step, total_steps). Throws NonFiniteLoss.
StepLosses joint_step(Model& model, const JointBatch& batch, OptimizerState& opt, std::size_t step,
                      std::size_t total_steps, const TrainConfig& cfg, std::size_t last_good_step = 0);

// ---- training loop ---------------------------------------------------------------------

struct StepLog {
    std::size_t step = 0;
    double lr = 0.0;
    double loss_u = 0.0;
    double loss_g = 0.0;
};

struct TrainState {
    Model model;
    OptimizerState opt;
    std::size_t step = 0;  // completed steps
};

struct TrainOptions {
    std::optional<std::filesystem::path> checkpoint_out;
    std::optional<std::filesystem::path> loss_csv;
    std::string config_echo;         // stored verbatim in checkpoint metadata
    std::size_t stop_after = 0;      // stop once this many steps are complete (0 = run to the end)
    std::function<void(const StepLog&)> on_step;
};

/// Runs the remaining steps of the schedule on `state`. Appends to the loss
/// CSV when resuming (state.step > 0), otherwise rewrites it.
std::vector<StepLog> train(const Dataset& data, TrainState& state, const TrainConfig& cfg,
                           const TrainOptions& opts = {});

/// Parameters, Adam moments, step counter and config echo.
Checkpoint make_training_checkpoint(const TrainState& state, const std::string& config_echo);
/// Rebuilds the model from configs and restores parameters and optimiser state.
TrainState restore_training_state(const Checkpoint& ckpt, const ModelConfig& model_cfg, const TrainConfig& train);

std::string format_loss_row(const StepLog& s);
inline constexpr const char* kLossCsvHeader = "step,lr,loss_u,loss_g";

}  // namespace timeomni
