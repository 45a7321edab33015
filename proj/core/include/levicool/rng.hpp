#ifndef LEVICOOL_RNG_HPP
#define LEVICOOL_RNG_HPP

#include <array>
#include <cstdint>

namespace levicool {

// Philox4x32-10 keyed counter block cipher. Stateless: output is a pure
// function of (key, counter), which is what makes trajectory streams
// independent of thread scheduling.
std::array<std::uint32_t, 4> philox4x32(const std::array<std::uint32_t, 4>& counter,
                                        const std::array<std::uint32_t, 2>& key);

// One Gaussian/uniform stream. The key holds the ensemble master seed, the
// high counter words hold the stream (trajectory) index, and the low words
// count draws, so two Rng objects with the same (seed, stream) always
// produce the same sequence, bit for bit, on any platform.
class Rng {
public:
    Rng(std::uint64_t master_seed, std::uint64_t stream);

    std::uint32_t next_u32();
    std::uint64_t next_u64();

    double uniform();      // [0, 1), 53-bit
    double uniform_pos();  // (0, 1]

    // standard normal via Box-Muller; draws pairs, caches the second value
    double gaussian();

private:
    void refill();

    std::array<std::uint32_t, 2> key_;
    std::array<std::uint32_t, 4> counter_;
    std::array<std::uint32_t, 4> block_{};
    int block_pos_ = 4;  // empty
    double spare_ = 0.0;
    bool has_spare_ = false;
};

} // namespace levicool

#endif
