#include "niafs/rng.hpp"

#include <cmath>
#include <numbers>

#include "niafs/errors.hpp"

namespace niafs {

namespace {

inline std::uint64_t splitmix64_fin(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// Absorb one 64-bit word into the running identity hash.
inline std::uint64_t mix(std::uint64_t h, std::uint64_t v) {
    return splitmix64_fin(h + 0x9e3779b97f4a7c15ULL + v);
}

inline std::uint64_t rotl(std::uint64_t x, int k) {
    return (x << k) | (x >> (64 - k));
}

} // namespace

RngStream::RngStream(std::uint64_t master_seed) : master_seed_(master_seed) {
    seed_state();
}

RngStream::RngStream(std::uint64_t master_seed, std::vector<std::uint64_t> path)
    : master_seed_(master_seed), path_(std::move(path)) {
    seed_state();
}

void RngStream::seed_state() {
    std::uint64_t h = mix(0x6e69616673726e67ULL, master_seed_);
    for (std::uint64_t label : path_) h = mix(h, label);
    // Expand the identity hash into the engine state with a splitmix64
    // sequence; all-zero state is unreachable this way.
    std::uint64_t s = h;
    for (auto& w : state_) {
        s += 0x9e3779b97f4a7c15ULL;
        w = splitmix64_fin(s);
    }
}

RngStream RngStream::derive(std::uint64_t label) const {
    std::vector<std::uint64_t> child_path = path_;
    child_path.push_back(label);
    return RngStream(master_seed_, std::move(child_path));
}

std::uint64_t RngStream::next_u64() {
    // xoshiro256++
    const std::uint64_t result = rotl(state_[0] + state_[3], 23) + state_[0];
    const std::uint64_t t = state_[1] << 17;
    state_[2] ^= state_[0];
    state_[3] ^= state_[1];
    state_[1] ^= state_[2];
    state_[0] ^= state_[3];
    state_[2] ^= t;
    state_[3] = rotl(state_[3], 45);
    return result;
}

double RngStream::uniform() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double RngStream::uniform(double lo, double hi) {
    return lo + (hi - lo) * uniform();
}

std::size_t RngStream::index(std::size_t n) {
    if (n == 0) throw ValidationError("RngStream::index: n must be >= 1");
    // Bounded multiply-shift; bias is negligible for our n.
    return static_cast<std::size_t>(uniform() * static_cast<double>(n)) % n;
}

double RngStream::normal() {
    double u1 = uniform();
    double u2 = uniform();
    // Guard log(0); 2^-53 shifts the distribution immeasurably.
    if (u1 <= 0.0) u1 = 0x1.0p-53;
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

} // namespace niafs
