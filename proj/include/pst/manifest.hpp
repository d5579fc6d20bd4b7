#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace pst {

inline constexpr const char* kToolVersion = "pstlab 0.1.0";

// manifest.json in the output directory: tool version, the command line, the
// resolved config, the master seed and a CRC32 per artifact. Contains nothing
// volatile (no timestamps), so identical runs produce identical manifests and
// identical artifact bytes.
void write_manifest(const std::string& out_dir, const std::string& command,
                    const std::string& resolved_config, uint64_t master_seed,
                    const std::vector<std::string>& artifact_paths);

} // namespace pst
