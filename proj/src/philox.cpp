#include "fracwright/philox.hpp"

namespace fw {

namespace {

constexpr std::uint32_t kM0 = 0xD2511F53u, kM1 = 0xCD9E8D57u;
constexpr std::uint32_t kW0 = 0x9E3779B9u, kW1 = 0xBB67AE85u;

}  // namespace

std::array<std::uint32_t, 4> philox4x32(std::array<std::uint32_t, 4> c, std::array<std::uint32_t, 2> k) {
    for (int round = 0; round < 10; ++round) {
        std::uint64_t p0 = std::uint64_t(kM0) * c[0];
        std::uint64_t p1 = std::uint64_t(kM1) * c[2];
        auto hi0 = std::uint32_t(p0 >> 32), lo0 = std::uint32_t(p0);
        auto hi1 = std::uint32_t(p1 >> 32), lo1 = std::uint32_t(p1);
        c = {hi1 ^ c[1] ^ k[0], lo1, hi0 ^ c[3] ^ k[1], lo0};
        k[0] += kW0;
        k[1] += kW1;
    }
    return c;
}

PhiloxEngine::PhiloxEngine(std::uint64_t seed, std::uint32_t stream, std::uint64_t index)
    : ctr_{0u, std::uint32_t(index), std::uint32_t(index >> 32), stream},
      key_{std::uint32_t(seed), std::uint32_t(seed >> 32)} {}

PhiloxEngine::result_type PhiloxEngine::operator()() {
    if (pos_ == 4) {
        buf_ = philox4x32(ctr_, key_);
        ++ctr_[0];
        pos_ = 0;
    }
    return buf_[pos_++];
}

double PhiloxEngine::uniform() {
    std::uint64_t hi = (*this)(), lo = (*this)();
    std::uint64_t bits = ((hi << 32) | lo) >> 11;
    return (double(bits) + 0.5) * 0x1p-53;
}

}  // namespace fw
