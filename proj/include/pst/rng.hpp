#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <string_view>

namespace pst {

inline uint64_t splitmix64(uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

inline uint64_t fnv1a64(std::string_view s) {
    uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

inline uint64_t fnv1a64_bytes(const void* data, size_t len) {
    uint64_t h = 0xcbf29ce484222325ULL;
    const auto* p = static_cast<const unsigned char*>(data);
    for (size_t i = 0; i < len; ++i) {
        h ^= p[i];
        h *= 0x100000001b3ULL;
    }
    return h;
}

// Deterministic stream of uniforms/normals on top of mt19937_64. The
// distributions are hand-rolled because the std ones are not pinned down by
// the standard and we need byte-stable artifacts across toolchains.
class Rng {
public:
    explicit Rng(uint64_t seed) : engine_(seed) {}

    // Uniform in [0, 1) with 53 bits of mantissa.
    double uniform() {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

    // Uniform integer in [0, n). Rejection sampling, unbiased.
    uint64_t uniform_int(uint64_t n) {
        if (n == 0) return 0;
        const uint64_t limit = UINT64_MAX - UINT64_MAX % n;
        uint64_t x;
        do {
            x = engine_();
        } while (x >= limit);
        return x % n;
    }

    // Box-Muller, one value per call (spare discarded to keep the stream simple).
    double normal(double mu = 0.0, double sigma = 1.0) {
        double u1 = uniform();
        double u2 = uniform();
        if (u1 <= 0.0) u1 = 0x1.0p-53;
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double theta = 6.283185307179586 * u2;
        return mu + sigma * r * std::cos(theta);
    }

    uint64_t next_u64() { return engine_(); }

private:
    std::mt19937_64 engine_;
};

// All randomness in the artifact derives from one master seed through
// purpose-tagged streams, so each sub-experiment is independently
// reproducible: derive_seed(master, "eval_run", run) never collides with
// derive_seed(master, "pst_gen", epoch, prompt).
inline uint64_t derive_seed(uint64_t master, std::string_view purpose,
                            uint64_t a = 0, uint64_t b = 0) {
    uint64_t x = splitmix64(master ^ fnv1a64(purpose));
    x = splitmix64(x ^ a);
    x = splitmix64(x ^ (b + 0x632be59bd9b4e019ULL));
    return x;
}

inline Rng derive_rng(uint64_t master, std::string_view purpose,
                      uint64_t a = 0, uint64_t b = 0) {
    return Rng(derive_seed(master, purpose, a, b));
}

} // namespace pst
