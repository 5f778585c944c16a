#pragma once

#include <cmath>
#include <cstdint>

namespace ptgauss {

// Fixed, documented generators so estimates reproduce bit-for-bit on any
// platform with IEEE doubles. std::normal_distribution is implementation
// defined and would break that contract.

inline constexpr const char* kRngDescription =
    "xoshiro256++ 1.0 seeded via SplitMix64; normals by Box-Muller (trig form)";

inline uint64_t splitmix64(uint64_t& state) {
    uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

// Independent stream seed for shard `index` of stream family `tag`.
inline uint64_t shard_seed(uint64_t master, uint64_t tag, uint64_t index) {
    uint64_t s = master ^ (0x9E3779B97F4A7C15ULL * (tag + 1)) ^ (0xD1B54A32D192ED03ULL * (index + 1));
    return splitmix64(s);
}

class Xoshiro256pp {
  public:
    explicit Xoshiro256pp(uint64_t seed) {
        uint64_t sm = seed;
        for (auto& word : state_) word = splitmix64(sm);
    }

    uint64_t operator()() {
        const uint64_t result = rotl(state_[0] + state_[3], 23) + state_[0];
        const uint64_t t = state_[1] << 17;
        state_[2] ^= state_[0];
        state_[3] ^= state_[1];
        state_[1] ^= state_[2];
        state_[0] ^= state_[3];
        state_[2] ^= t;
        state_[3] = rotl(state_[3], 45);
        return result;
    }

    // Uniform on (0, 1]; never 0 so log() is safe.
    double next_open_unit() {
        return (static_cast<double>((*this)() >> 11) + 1.0) * 0x1.0p-53;
    }

    // One standard-normal pair per two uniforms.
    void next_normal_pair(double& z1, double& z2) {
        const double u1 = next_open_unit();
        const double u2 = next_open_unit();
        const double rad = std::sqrt(-2.0 * std::log(u1));
        const double ang = 6.283185307179586476925286766559 * u2;
        z1 = rad * std::cos(ang);
        z2 = rad * std::sin(ang);
    }

  private:
    static uint64_t rotl(uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }
    uint64_t state_[4];
};

} // namespace ptgauss
