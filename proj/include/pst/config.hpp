#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "pst/engine.hpp"

namespace pst {

struct ModelSpec {
    int count = 3;
    int embed = 64;
    int heads = 2;
    std::vector<int> layers = {2, 2, 2}; // one entry per model, or one shared
    int context = 256;
    std::vector<uint64_t> seeds;         // defaults to 1..count
    double init_std = 0.02;
};

struct DatasetSpec {
    int tier = 1;
    int size = 200;
    uint64_t seed = 7;
};

struct EvalSpec {
    int runs = 10;
    double temperature = 0.7;
    int max_new = 8;
    int k = 4; // candidates per prompt for GV matrices
};

struct ExperimentConfig {
    ModelSpec models;
    PstConfig pst;
    DatasetSpec dataset;
    EvalSpec eval;
    std::string method = "pst"; // pst | self | sft | grpo
    std::string out_dir;
    uint64_t master_seed = 1;

    // Derives per-purpose streams and resolves defaulted fields (model seeds,
    // pst.seed from master). Throws ConfigError on inconsistencies.
    void finalize();
};

// Minimal TOML-style file: [section] headers, key = value lines, # comments.
// Values: integers, floats, booleans, "strings", [int, lists]. Unknown
// sections or keys are rejected with the offending name.
ExperimentConfig parse_config_file(const std::string& path);
ExperimentConfig parse_config_text(const std::string& text);

// Applies one "section.key=value" override; same schema as the file parser.
void apply_override(ExperimentConfig& cfg, const std::string& dotted_key,
                    const std::string& value);

// Resolved config echoed in the same format the parser accepts.
std::string render_config(const ExperimentConfig& cfg);

// Expands models.layers/seeds to one entry per model and validates counts.
std::vector<ModelDims> resolve_model_dims(const ModelSpec& spec, int vocab_size);
std::vector<uint64_t> resolve_model_seeds(const ModelSpec& spec);

} // namespace pst
