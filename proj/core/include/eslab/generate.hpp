#ifndef ESLAB_GENERATE_HPP
#define ESLAB_GENERATE_HPP

#include <cstdint>
#include <string>

#include "eslab/structure.hpp"

namespace eslab {

// SplitMix64 (Steele, Lea, Flood 2014). Fixed here so that ports in other
// languages reproduce the exact structures from (seed, params):
//   state += 0x9E3779B97F4A7C15
//   z = state; z = (z ^ z>>30) * 0xBF58476D1CE4E5B9
//   z = (z ^ z>>27) * 0x94D049BB133111EB; output z ^ z>>31
// below(n) maps an output to [0,n) by the multiply-shift floor(out*n / 2^64);
// unit() keeps the top 53 bits. split() seeds an independent substream with
// the next output.
struct SplitMix64 {
    std::uint64_t state = 0;

    std::uint64_t next() {
        state += 0x9E3779B97F4A7C15ull;
        std::uint64_t z = state;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }
    std::uint64_t below(std::uint64_t n) {
        return static_cast<std::uint64_t>(
            (static_cast<unsigned __int128>(next()) * n) >> 64);
    }
    double unit() { return (next() >> 11) * 0x1.0p-53; }
    SplitMix64 split() { return SplitMix64{next()}; }
};

enum class GenKind { random, forest, simple };

struct GenParams {
    std::size_t num_events = 0;
    std::uint64_t seed = 0;
    GenKind kind = GenKind::random;
    std::size_t degree_cap = 3;
    double conflict_density = 0.25;
};

// Deterministic in the parameters; rejection-resamples until the degree cap
// holds and throws GenerationFailed once the retry budget runs out.
EventStructure gen_random(const GenParams& p);
// Every event has at most one lower cover.
EventStructure gen_forest(const GenParams& p);
// Graded, no three-cover events, every 3-clique holds a minimal conflict,
// degree at most 3.
EventStructure gen_simple(const GenParams& p);

EventStructure generate(const GenParams& p);

// EMPTY, SINGLE, CHAIN3, ANTI3, CONF2, FORK, TWIN2 or S.
EventStructure fixture(const std::string& name);

inline const char* const fixture_names[] = {"EMPTY", "SINGLE", "CHAIN3",
                                            "ANTI3", "CONF2",  "FORK",
                                            "TWIN2", "S"};

} // namespace eslab

#endif
