#pragma once

#include <array>
#include <cmath>
#include <cstdint>

namespace gcx {

// Philox4x32-10 keyed by (seed, stream) with the counter split into
// (sample index, block index). Every sample owns an unbounded deterministic
// stream of blocks, so the draw for sample i is independent of thread layout
// and of how many values other samples consumed.
namespace philox {

constexpr std::uint32_t kWeyl0 = 0x9E3779B9u;
constexpr std::uint32_t kWeyl1 = 0xBB67AE85u;
constexpr std::uint32_t kMult0 = 0xD2511F53u;
constexpr std::uint32_t kMult1 = 0xCD9E8D57u;

inline void round_once(std::array<std::uint32_t, 4>& ctr, std::array<std::uint32_t, 2>& key) {
    std::uint64_t prod0 = static_cast<std::uint64_t>(kMult0) * ctr[0];
    std::uint64_t prod1 = static_cast<std::uint64_t>(kMult1) * ctr[2];
    std::array<std::uint32_t, 4> next;
    next[0] = static_cast<std::uint32_t>(prod1 >> 32) ^ ctr[1] ^ key[0];
    next[1] = static_cast<std::uint32_t>(prod1);
    next[2] = static_cast<std::uint32_t>(prod0 >> 32) ^ ctr[3] ^ key[1];
    next[3] = static_cast<std::uint32_t>(prod0);
    ctr = next;
    key[0] += kWeyl0;
    key[1] += kWeyl1;
}

inline std::array<std::uint32_t, 4> block(std::uint64_t seed, std::uint64_t stream,
                                          std::uint64_t sample, std::uint32_t block_index) {
    std::array<std::uint32_t, 4> ctr = {
        block_index,
        static_cast<std::uint32_t>(stream),
        static_cast<std::uint32_t>(sample),
        static_cast<std::uint32_t>(sample >> 32),
    };
    std::array<std::uint32_t, 2> key = {static_cast<std::uint32_t>(seed),
                                        static_cast<std::uint32_t>(seed >> 32)};
    for (int r = 0; r < 10; ++r) round_once(ctr, key);
    return ctr;
}

} // namespace philox

class CounterRng {
public:
    CounterRng(std::uint64_t seed, std::uint64_t stream, std::uint64_t sample)
        : seed_(seed), stream_(stream), sample_(sample) {}

    std::uint32_t next_u32() {
        if (pos_ == 4) {
            buffer_ = philox::block(seed_, stream_, sample_, block_index_++);
            pos_ = 0;
        }
        return buffer_[pos_++];
    }

    std::uint64_t next_u64() {
        std::uint64_t hi = next_u32();
        return (hi << 32) | next_u32();
    }

    // uniform in (0, 1]
    double next_unit() {
        return (static_cast<double>(next_u64() >> 11) + 1.0) * 0x1p-53;
    }

    // uniform in [-1, 1)
    double next_symmetric() { return 2.0 * (static_cast<double>(next_u64() >> 11) * 0x1p-53) - 1.0; }

    double next_gaussian() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        double u1 = next_unit();
        double u2 = next_unit();
        double radius = std::sqrt(-2.0 * std::log(u1));
        double angle = 6.28318530717958647692 * u2;
        spare_ = radius * std::sin(angle);
        have_spare_ = true;
        return radius * std::cos(angle);
    }

private:
    std::uint64_t seed_;
    std::uint64_t stream_;
    std::uint64_t sample_;
    std::uint32_t block_index_ = 0;
    std::array<std::uint32_t, 4> buffer_{};
    int pos_ = 4;
    double spare_ = 0.0;
    bool have_spare_ = false;
};

} // namespace gcx
