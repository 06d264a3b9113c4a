#pragma once

#include <array>
#include <cstdint>
#include <limits>

namespace fw {

// Philox4x32-10 block function (Salmon et al. counter-based generator).
std::array<std::uint32_t, 4> philox4x32(std::array<std::uint32_t, 4> ctr, std::array<std::uint32_t, 2> key);

// Random bit generator over one Philox stream. The counter holds
// (block, index lo, index hi, stream); the key is the 64-bit seed.
// Each (seed, stream, index) triple owns 2^32 blocks of output.
class PhiloxEngine {
public:
    using result_type = std::uint32_t;

    PhiloxEngine(std::uint64_t seed, std::uint32_t stream, std::uint64_t index);

    static constexpr result_type min() { return 0; }
    static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }
    result_type operator()();

    // uniform on the open interval (0,1) with 53 random bits
    double uniform();

private:
    std::array<std::uint32_t, 4> ctr_;
    std::array<std::uint32_t, 2> key_;
    std::array<std::uint32_t, 4> buf_{};
    int pos_ = 4;
};

}  // namespace fw
