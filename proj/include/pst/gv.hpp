#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "pst/model.hpp"
#include "pst/tasks.hpp"

namespace pst {

// N x N generator/verifier matrix: rows are generators, columns verifiers.
struct GVMatrix {
    std::vector<std::string> model_ids;
    std::vector<double> values; // row-major
    int k = 1;
    std::string dataset_id;
    std::string stage; // "initial" | "finetuned"
    uint64_t seed = 0;

    int size() const { return static_cast<int>(model_ids.size()); }
    double at(int g, int v) const { return values[static_cast<size_t>(g) * model_ids.size() + v]; }
    double& at(int g, int v) { return values[static_cast<size_t>(g) * model_ids.size() + v]; }
};

// Sequence-level verifier score: sum of token log-probabilities of the fixed
// response y given the prompt context. Deterministic forward pass, no
// sampling, no updates. Equals logprob on the assembled context.
double verifier_score(const ToyLM& verifier, const Problem& x, const TokenSeq& y,
                      const Vocabulary& vocab);

// Scores a batch of responses for one prompt; element i equals the single
// call on responses[i] exactly.
std::vector<double> verifier_score_batch(const ToyLM& verifier, const Problem& x,
                                         const std::vector<TokenSeq>& responses,
                                         const Vocabulary& vocab);

// k candidates from the generator in generative mode, one rng stream.
std::vector<TokenSeq> sample_candidates(const ToyLM& generator, const Problem& x, int k,
                                        const DecodeCfg& decode, const Vocabulary& vocab,
                                        Rng& rng);

// Argmax index; ties break toward the lowest candidate index.
int select_best(const std::vector<double>& scores);

// Indicator that the best-scored candidate extracts to the gold answer.
int gv_value_candidates(const std::vector<TokenSeq>& candidates,
                        const std::vector<double>& scores, long long gold,
                        const Vocabulary& vocab);

// Full GV-Value for one (generator, verifier, prompt) triple.
int gv_value(const ToyLM& generator, const ToyLM& verifier, const Problem& x, int k,
             const DecodeCfg& decode, const Vocabulary& vocab, Rng& rng);

struct GvComputation {
    GVMatrix value; // mean best-of-k exact-match indicator
    GVMatrix gap;   // value minus the generator's greedy accuracy (row constant)
    std::vector<double> greedy_accuracy; // per generator
    // candidates[g][p] holds the k candidates for generator g on prompt p;
    // shared across all verifier columns so columns stay comparable.
    std::vector<std::vector<std::vector<TokenSeq>>> candidates;
};

// Candidates are sampled once per (generator, prompt) from a seed derived per
// pair, then scored by every verifier.
GvComputation gv_matrices(const std::vector<const ToyLM*>& models,
                          const std::vector<Problem>& dataset, const Vocabulary& vocab,
                          int k, const DecodeCfg& decode, uint64_t seed,
                          const std::string& dataset_id, const std::string& stage);

struct RowwiseMaxReport {
    std::vector<double> before_max;
    std::vector<double> after_max;
    std::vector<int> before_argmax;
    std::vector<int> after_argmax;
    std::vector<bool> before_off_diagonal; // row max occurs off the diagonal
    double before_sum = 0.0;
    double after_sum = 0.0;
    double percent_change = 0.0; // (before - after) / before * 100
    bool undefined = false;      // before_sum == 0
};

// Requires matching shape and dataset id; throws ConfigError otherwise.
RowwiseMaxReport rowwise_max_report(const GVMatrix& before, const GVMatrix& after);

// CSV with a model-id header row and row labels, plus a JSON sidecar
// (k, dataset id, stage, seed) next to it at <path>.json.
void save_gv_csv(const GVMatrix& m, const std::string& path);
GVMatrix load_gv_csv(const std::string& path);
void save_rowwise_report_csv(const RowwiseMaxReport& r, const std::vector<std::string>& model_ids,
                             const std::string& path);

} // namespace pst
