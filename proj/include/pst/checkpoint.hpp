#pragma once

#include <cstdint>
#include <string>

#include "pst/model.hpp"
#include "pst/optimizer.hpp"

namespace pst {

// Binary model+optimizer snapshot.
//
// Layout (all integers little-endian):
//   magic "PSTCKPT1", u32 version,
//   i32 n_embd, n_head, n_layer, n_ctx, n_vocab,
//   u64 vocab_hash, u64 model_seed, string model_id,
//   f64 lr, beta1, beta2, eps, weight_decay, clip_norm, i64 step_count,
//   u32 tensor_count, directory entries (string name, u32 rank, i64 dims[],
//   u64 payload_offset, u64 payload_bytes), raw f64 payload, u32 crc32 over
//   every preceding byte.
//
// Tensors are stored in three groups sharing the directory: "param/<name>",
// "adam_m/<name>", "adam_v/<name>". Round-trips are bit-exact.

struct Checkpoint {
    ToyLM model;
    AdamW optimizer;
    uint64_t vocab_hash = 0;
};

void save_checkpoint(const ToyLM& model, const AdamW& optimizer, uint64_t vocab_hash,
                     const std::string& path);

// Throws CheckpointError on bad magic/version, truncation, checksum failure
// or (when expected_vocab_hash != 0) a vocabulary hash mismatch naming both
// hashes. Never returns a partially loaded model.
Checkpoint load_checkpoint(const std::string& path, uint64_t expected_vocab_hash = 0);

// CRC-32 (IEEE 802.3 polynomial), used by checkpoints and artifact manifests.
uint32_t crc32(const void* data, size_t len, uint32_t seed = 0);
uint32_t crc32_file(const std::string& path);

} // namespace pst
