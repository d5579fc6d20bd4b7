#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "pst/model.hpp"
#include "pst/optimizer.hpp"
#include "pst/rng.hpp"
#include "pst/tasks.hpp"
#include "pst/tokens.hpp"

namespace pst {

struct Permutation {
    std::vector<int> order; // order[i] = model index acting at position i

    int size() const { return static_cast<int>(order.size()); }
    bool is_valid() const;
};

// Uniform over all n! orders (Fisher-Yates). Throws ConfigError for n < 2.
Permutation sample_permutation(int n, Rng& rng);

enum class FinalRule { plain_ce, weighted };
enum class WeightMode { pmi_sigmoid, constant_one };

struct PstConfig {
    double tau = 3.0;
    int epochs = 5;
    double temperature = 0.7; // training-time sampling temperature
    int max_new = 16;         // max response tokens per position
    uint64_t seed = 0;        // master seed for all derived streams
    FinalRule final_rule = FinalRule::plain_ce;
    AdamWConfig optim;        // per-model optimizer settings, incl. clip norm
    bool cosine_schedule = true;

    int grpo_group = 4;
    double grpo_adv_eps = 1e-8;
};

// One peer: model plus its own optimizer (and, through the schedule, its own
// scheduler state).
struct TrainableModel {
    ToyLM model;
    AdamW opt;

    TrainableModel() = default;
    TrainableModel(ToyLM m, const AdamWConfig& cfg) : model(std::move(m)), opt(cfg, model.params()) {}
};

// Conditioning context for the response after `responses`:
// x ++ sep ++ y_1 ++ sep ++ ... ++ y_k ++ sep. Every response slot is
// announced by a separator; the same assembly feeds generation and both PMI
// terms.
std::vector<int> assemble_context(const TokenSeq& x, std::span<const TokenSeq> responses);

// Responses y_1..y_N sampled in permutation order, each conditioned on the
// prompt and all previous responses. y_N is the designated aggregate. Throws
// LengthError when a context stops fitting any window (the caller aborts the
// round; nothing is truncated silently).
std::vector<TokenSeq> sequential_generate(const std::vector<TrainableModel>& peers,
                                          const Permutation& pi, const TokenSeq& x,
                                          const PstConfig& cfg, Rng& rng);

// r = log p(y_N | x, y_i) - log p(y_N | x), both terms under the same model.
// A content-empty y_i scores 0 by convention (the conditioning collapses).
// Throws ConfigError when y_N is empty.
double pmi_score(const ToyLM& model, const TokenSeq& x, const TokenSeq& y_i,
                 const TokenSeq& y_n);

// alpha = sigmoid(-r / tau), strictly decreasing in r, 0.5 at r = 0.
// Saturates smoothly; tau = +inf gives exactly 0.5.
double update_weight(double r, double tau);

struct RoundRecord {
    int epoch = 0;
    int prompt_index = 0;
    TokenSeq prompt;
    std::vector<int> permutation;
    std::vector<std::string> model_ids; // acting order, model_ids[i] acts at position i
    std::vector<TokenSeq> responses;
    std::vector<double> scores;  // r_i; NaN when PMI is not computed (constant-one mode)
    std::vector<double> weights; // sigma(-r_i/tau) as recorded; 1.0 in constant-one mode
    std::vector<double> applied_scales; // the factor each update actually used
    std::vector<double> losses;  // raw CE per position
    std::vector<bool> skipped;   // optimizer skip flags
    bool degenerate = false;     // every response was content-empty
    bool aborted = false;        // context overflow; no updates were applied
};

// One full round: generate all responses, score every position, then update
// in position order i=1..N. Scores are computed before any parameter moves.
// Under FinalRule::plain_ce the final position trains with plain CE
// (applied scale 1) while its r/alpha are still recorded.
RoundRecord pst_round(std::vector<TrainableModel>& peers, const Permutation& pi,
                      const TokenSeq& x, const PstConfig& cfg, WeightMode mode,
                      Rng& gen_rng);

struct EpochSummary {
    int epoch = 0;
    std::string model_id;
    double mean_alpha = 0.0;
    double mean_r = 0.0;
    double mean_loss = 0.0;
    int skipped_steps = 0;
};

struct TrainMetrics {
    std::vector<RoundRecord> rounds;
    std::vector<EpochSummary> summaries;
};

// Algorithm loop: one fresh permutation per epoch, one round per prompt.
TrainMetrics train_pst(std::vector<TrainableModel>& peers, const std::vector<Problem>& dataset,
                       const Vocabulary& vocab, const PstConfig& cfg);

// Ablation arm: the identical pipeline with the weight fixed at 1.
TrainMetrics train_self(std::vector<TrainableModel>& peers, const std::vector<Problem>& dataset,
                        const Vocabulary& vocab, const PstConfig& cfg);

struct SftMetrics {
    std::vector<double> epoch_mean_loss;
    int skipped_steps = 0;
};

// Plain CE on (prompt, gold) pairs, same optimizer settings, no peers.
SftMetrics train_sft(TrainableModel& peer, const std::vector<Problem>& dataset,
                     const Vocabulary& vocab, const PstConfig& cfg);

struct GrpoMetrics {
    std::vector<double> epoch_mean_reward;
    std::vector<double> epoch_mean_loss;
    int skipped_steps = 0;
    int zero_variance_groups = 0;
};

// Group-sampled completions with binary exact-match reward and group-
// normalized advantages (population std). A zero-variance group applies no
// update.
GrpoMetrics train_grpo(TrainableModel& peer, const std::vector<Problem>& dataset,
                       const Vocabulary& vocab, const PstConfig& cfg);

// Group advantage vector (r - mean) / (population std + eps); all zeros for a
// zero-variance group.
std::vector<double> grpo_advantages(const std::vector<double>& rewards, double eps);

// JSON Lines serialization of round records (schema_version 1, fields exactly
// as the record) and the epoch summary CSV
// (epoch,model_id,mean_alpha,mean_r,mean_loss,skipped_steps).
void save_rounds_jsonl(const std::vector<RoundRecord>& rounds, const std::string& path);
std::vector<RoundRecord> load_rounds_jsonl(const std::string& path);
void save_epoch_summary_csv(const std::vector<EpochSummary>& summaries, const std::string& path);

} // namespace pst
