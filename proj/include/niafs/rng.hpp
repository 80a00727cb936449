#pragma once

#include <cstdint>
#include <vector>

namespace niafs {

// Splittable deterministic random stream. A stream is identified by
// (master_seed, path); derive(label) appends the label to the path and
// returns a statistically independent child. Two streams with equal
// identity produce identical draw sequences, which is what makes grid
// runs reproducible under any scheduling.
//
// Internally: the identity is hashed (splitmix64 finalizer chain) into a
// 256-bit xoshiro256++ state. Draw helpers consume a fixed number of
// engine outputs so sequences are stable across call sites.
class RngStream {
public:
    explicit RngStream(std::uint64_t master_seed);

    RngStream derive(std::uint64_t label) const;

    std::uint64_t master_seed() const { return master_seed_; }
    const std::vector<std::uint64_t>& path() const { return path_; }

    std::uint64_t next_u64();

    // Uniform on [0, 1), 53-bit resolution.
    double uniform();
    // Uniform on [lo, hi).
    double uniform(double lo, double hi);
    // Uniform integer on [0, n), n >= 1.
    std::size_t index(std::size_t n);
    // Standard normal via Box-Muller; consumes exactly two uniforms.
    double normal();

    // Fisher-Yates shuffle, deterministic for a given stream state.
    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) {
            std::size_t j = index(i);
            std::swap(v[i - 1], v[j]);
        }
    }

private:
    RngStream(std::uint64_t master_seed, std::vector<std::uint64_t> path);
    void seed_state();

    std::uint64_t master_seed_;
    std::vector<std::uint64_t> path_;
    std::uint64_t state_[4];
};

// Stream-derivation labels used where two components must agree on the
// same child stream (see feature_selection: the exhaustive oracle and
// the wrapper fitness share kFitnessStream).
inline constexpr std::uint64_t kOptimizerStream = 0;
inline constexpr std::uint64_t kFitnessStream = 1;

} // namespace niafs
