#pragma once

#include <cstdint>
#include <random>

namespace polarmin {

// All randomness in the library flows through named substreams derived from a
// master seed.  A consumer (a sketch probe, a simulation path, a repetition)
// owns the substream identified by its indices, so results never depend on
// how work is scheduled across workers.

enum class Stream : std::uint64_t {
    leaders = 1,        // leader-set sampling, indexed by repetition
    probe_node = 2,     // node-space sketch probes
    probe_edge = 3,     // edge-space sketch probes
    probe_diag = 4,     // diagonal-space sketch probes
    baseline_random = 5,
    baseline_links = 6, // random leader picks in degree/centrality baselines
    sim_path = 7,       // one Euler-Maruyama path
    graphgen = 8,
    power_iter = 9,
    generic = 10,
};

// splitmix64 finalizer: avalanche a word so that related (seed, stream, index)
// triples land on unrelated substreams.
inline std::uint64_t mix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

inline std::uint64_t substream_seed(std::uint64_t master, Stream stream,
                                    std::uint64_t a = 0, std::uint64_t b = 0) {
    std::uint64_t h = mix64(master);
    h = mix64(h ^ static_cast<std::uint64_t>(stream));
    h = mix64(h ^ a);
    h = mix64(h ^ b);
    return h;
}

inline std::mt19937_64 substream_rng(std::uint64_t master, Stream stream,
                                     std::uint64_t a = 0, std::uint64_t b = 0) {
    return std::mt19937_64(substream_seed(master, stream, a, b));
}

// Uniform integer in [0, n) by 128-bit multiply; avoids the distribution
// objects whose output sequences differ between standard libraries.
inline std::uint64_t bounded(std::mt19937_64& rng, std::uint64_t n) {
    return static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(rng()) * n) >> 64);
}

}  // namespace polarmin
