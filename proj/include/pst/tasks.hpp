#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "pst/model.hpp"
#include "pst/rng.hpp"
#include "pst/tokens.hpp"
#include "pst/vocab.hpp"

namespace pst {

enum class Tier {
    single_op = 1,  // a ∘ b
    two_op = 2,     // (a ∘ b) ∘ c, explicit parentheses
    linear_system = 3,  // x+y=s, x-y=d, ask for x or y
};

Tier tier_from_int(int t);

struct Problem {
    std::string prompt; // rendered as "Question: <problem>"
    long long answer = 0;
    Tier tier = Tier::single_op;
};

// Deterministic per seed. Operands stay small, answers are exact integers
// (division only appears when it divides evenly), duplicates are removed.
// Throws ConfigError when n exceeds the number of distinct problems the tier
// can produce.
std::vector<Problem> gen_dataset(int n, Tier tier, uint64_t seed);

// Number of distinct problems a tier can generate; the exhaustion bound.
long long tier_universe_size(Tier tier);

// Last standalone integer in the text: a maximal digit run with an optional
// immediately preceding sign, delimited by non-digits or boundaries. Matching
// is by integer value, so "042" equals 42.
std::optional<long long> extract_answer(const std::string& text);
std::optional<long long> extract_answer(const TokenSeq& response, const Vocabulary& vocab);

// Prompt template shared by training, evaluation and verification: bos, the
// prompt characters, then a separator announcing the answer slot.
std::vector<int> prompt_context(const Problem& p, const Vocabulary& vocab);
// Gold answer rendered as digits followed by eos.
std::vector<int> gold_target(const Problem& p, const Vocabulary& vocab);

struct DecodeCfg {
    double temperature = 0.7;
    int max_new = 8;
};

struct EvalReport {
    std::string model_id;
    double mean_accuracy = 0.0;
    double std_accuracy = 0.0; // population formula; exactly 0 for a single run
    int runs = 0;
    std::vector<uint64_t> seeds;
    DecodeCfg decode;
    std::vector<double> per_run_accuracy;
};

// One sampled response per problem per run, exact match through
// extract_answer, mean and ±1 std across runs.
EvalReport evaluate(const ToyLM& model, const std::vector<Problem>& dataset,
                    const Vocabulary& vocab, const DecodeCfg& decode, int runs,
                    const std::vector<uint64_t>& seeds);

// Same protocol with an injectable sampler; lets tests drive oracle stubs.
using ResponseSampler = std::function<TokenSeq(const Problem&, Rng&)>;
EvalReport evaluate_with_sampler(const ResponseSampler& sampler, const std::string& model_id,
                                 const std::vector<Problem>& dataset, const Vocabulary& vocab,
                                 const DecodeCfg& decode, int runs,
                                 const std::vector<uint64_t>& seeds);

// Fraction of problems whose greedy decode extracts the gold answer.
double greedy_accuracy(const ToyLM& model, const std::vector<Problem>& dataset,
                       const Vocabulary& vocab, int max_new);

// Dataset JSON Lines: {"prompt":..., "answer":..., "tier":..., "seed":...}.
void save_dataset_jsonl(const std::vector<Problem>& dataset, uint64_t seed,
                        const std::string& path);
std::vector<Problem> load_dataset_jsonl(const std::string& path);

} // namespace pst
